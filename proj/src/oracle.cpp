#include "burnhoch/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "burnhoch/matrix.hpp"

namespace burnhoch::oracle {

using grp::Elem;
using grp::ElemSet;
using la::Scalar;

namespace {

ElemSet bit(Elem x) { return ElemSet{1} << x; }

ElemSet left_translate(const grp::FiniteGroup& g, Elem h, ElemSet s) {
  ElemSet out = 0;
  for (Elem x = 0; x < g.order(); ++x)
    if ((s >> x) & 1U) out |= bit(g.mul(h, x));
  return out;
}

ElemSet conjugate_set(const grp::FiniteGroup& g, Elem y, ElemSet s) {
  ElemSet out = 0;
  for (Elem x = 0; x < g.order(); ++x)
    if ((s >> x) & 1U) out |= bit(g.mul(g.mul(y, x), g.inv(y)));
  return out;
}

std::vector<Elem> class_reps(const grp::FiniteGroup& g) {
  std::vector<bool> seen(g.order(), false);
  std::vector<Elem> reps;
  for (Elem x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    reps.push_back(x);
    for (Elem y = 0; y < g.order(); ++y) seen[g.mul(g.mul(y, x), g.inv(y))] = true;
  }
  return reps;
}

// one cyclic subgroup per conjugacy class, as masks
std::vector<ElemSet> cyclic_class_reps(const grp::FiniteGroup& g) {
  std::set<ElemSet> all;
  for (Elem x = 0; x < g.order(); ++x) all.insert(g.cyclic_mask(x));
  std::vector<ElemSet> reps;
  std::set<ElemSet> covered;
  for (ElemSet c : all) {
    if (covered.count(c)) continue;
    reps.push_back(c);
    for (Elem y = 0; y < g.order(); ++y) covered.insert(conjugate_set(g, y, c));
  }
  return reps;
}

std::size_t popcount(ElemSet s) { return static_cast<std::size_t>(__builtin_popcountll(s)); }

std::size_t power(std::size_t base, std::size_t e) {
  std::size_t out = 1;
  while (e-- > 0) out *= base;
  return out;
}

std::vector<std::size_t> digits(std::size_t index, std::size_t base, std::size_t len) {
  std::vector<std::size_t> out(len);
  for (std::size_t i = 0; i < len; ++i) {
    out[i] = index % base;
    index /= base;
  }
  return out;
}

std::size_t undigits(const std::vector<std::size_t>& d, std::size_t base) {
  std::size_t out = 0;
  for (std::size_t i = d.size(); i-- > 0;) out = out * base + d[i];
  return out;
}

std::vector<std::size_t> homology_dims(const std::vector<std::size_t>& dims, const std::vector<std::size_t>& ranks,
                                       std::size_t n) {
  // ranks[q] = rank of d_q: C_q -> C_{q-1}, ranks[0] = 0
  std::vector<std::size_t> out;
  for (std::size_t q = 0; q < n; ++q) out.push_back(dims[q] - ranks[q] - ranks[q + 1]);
  return out;
}

}  // namespace

std::vector<std::vector<long>> marks_by_counting(const grp::FiniteGroup& g) {
  const auto lat = grp::subgroups(g);
  const std::size_t r = lat.classes.size();
  std::vector<std::vector<long>> out(r, std::vector<long>(r, 0));
  for (std::size_t j = 0; j < r; ++j) {
    const auto& k = lat.representative(j);
    std::set<ElemSet> cosets;
    for (Elem x = 0; x < g.order(); ++x) cosets.insert(left_translate(g, x, k.mask));
    for (std::size_t i = 0; i < r; ++i) {
      const auto& h = lat.representative(i);
      for (ElemSet s : cosets)
        out[i][j] += std::all_of(h.elements.begin(), h.elements.end(),
                                 [&](Elem y) { return left_translate(g, y, s) == s; });
    }
  }
  return out;
}

std::size_t conjugacy_class_count(const grp::FiniteGroup& g) { return class_reps(g).size(); }

std::size_t cyclic_subgroup_class_count(const grp::FiniteGroup& g) { return cyclic_class_reps(g).size(); }

std::size_t permutation_character_rank(const grp::FiniteGroup& g) {
  const auto reps = class_reps(g);
  std::vector<std::vector<la::Rational>> rows;
  for (ElemSet c : cyclic_class_reps(g)) {
    std::vector<la::Rational> row;
    for (Elem x : reps) {
      long fixed = 0;
      for (Elem y = 0; y < g.order(); ++y) fixed += (c >> g.mul(g.mul(g.inv(y), x), y)) & 1U;
      row.emplace_back(fixed, static_cast<long>(popcount(c)));
    }
    rows.push_back(std::move(row));
  }
  return la::rank(la::Matrix::from_rows(rows));
}

std::size_t generator_orbit_count(const grp::FiniteGroup& g) {
  std::size_t total = 0;
  for (ElemSet c : cyclic_class_reps(g)) {
    std::set<Elem> gens;
    for (Elem x = 0; x < g.order(); ++x)
      if (g.cyclic_mask(x) == c) gens.insert(x);
    std::set<Elem> seen;
    for (Elem x : gens) {
      if (seen.count(x)) continue;
      ++total;
      for (Elem y = 0; y < g.order(); ++y)
        if (conjugate_set(g, y, c) == c) seen.insert(g.mul(g.mul(y, x), g.inv(y)));
    }
  }
  return total;
}

std::vector<std::size_t> bar_homology(const grp::FiniteGroup& g, const std::vector<Elem>& z, std::size_t n) {
  const std::size_t m = z.size();
  std::map<Elem, std::size_t> local;
  for (std::size_t i = 0; i < m; ++i) local[z[i]] = i;
  auto prod = [&](std::size_t a, std::size_t b) { return local.at(g.mul(z[a], z[b])); };

  std::vector<std::size_t> dims, ranks{0};
  for (std::size_t q = 0; q <= n; ++q) dims.push_back(power(m, q));
  for (std::size_t q = 1; q <= n; ++q) {
    la::Matrix d(la::Field::rational(), dims[q - 1], dims[q]);
    for (std::size_t col = 0; col < dims[q]; ++col) {
      const auto t = digits(col, m, q);
      std::vector<std::size_t> first(t.begin() + 1, t.end());
      d.add(undigits(first, m), col, Scalar(1));
      for (std::size_t i = 0; i + 1 < q; ++i) {
        std::vector<std::size_t> merged;
        for (std::size_t k = 0; k < q; ++k) {
          if (k == i) {
            merged.push_back(prod(t[i], t[i + 1]));
            ++k;
          } else {
            merged.push_back(t[k]);
          }
        }
        d.add(undigits(merged, m), col, Scalar((i + 1) % 2 == 0 ? 1 : -1));
      }
      std::vector<std::size_t> last(t.begin(), t.end() - 1);
      d.add(undigits(last, m), col, Scalar(q % 2 == 0 ? 1 : -1));
    }
    ranks.push_back(la::rank(d));
  }
  ranks.push_back(0);
  return homology_dims(dims, ranks, n);
}

std::vector<std::vector<std::size_t>> centralizer_homology(const grp::FiniteGroup& g, std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& cls : g.classes()) {
    const Elem c = cls.front();
    std::vector<Elem> z;
    for (Elem y = 0; y < g.order(); ++y)
      if (g.mul(y, c) == g.mul(c, y)) z.push_back(y);
    out.push_back(bar_homology(g, z, n));
  }
  return out;
}

std::vector<std::size_t> hochschild_unnormalized(const cyclic::AlgebraPresentation& a, std::size_t n) {
  const std::size_t m = a.dim;
  std::vector<std::size_t> dims, ranks{0};
  for (std::size_t q = 0; q <= n; ++q) dims.push_back(power(m, q + 1));
  for (std::size_t q = 1; q <= n; ++q) {
    la::Matrix d(a.field, dims[q - 1], dims[q]);
    for (std::size_t col = 0; col < dims[q]; ++col) {
      const auto t = digits(col, m, q + 1);
      for (std::size_t i = 0; i < q; ++i) {
        for (const auto& [k, c] : a.mul[t[i]][t[i + 1]]) {
          std::vector<std::size_t> face(t.begin(), t.begin() + static_cast<long>(i));
          face.push_back(k);
          face.insert(face.end(), t.begin() + static_cast<long>(i) + 2, t.end());
          d.add(undigits(face, m), col, i % 2 == 0 ? c : -c);
        }
      }
      for (const auto& [k, c] : a.mul[t[q]][t[0]]) {
        std::vector<std::size_t> face{k};
        face.insert(face.end(), t.begin() + 1, t.end() - 1);
        d.add(undigits(face, m), col, q % 2 == 0 ? c : -c);
      }
    }
    ranks.push_back(la::rank(d));
  }
  ranks.push_back(0);
  return homology_dims(dims, ranks, n);
}

nlohmann::json group_fixture(const grp::FiniteGroup& g) {
  nlohmann::json j;
  j["order"] = g.order();
  j["con"] = conjugacy_class_count(g);
  j["cyclic_classes"] = cyclic_subgroup_class_count(g);
  j["k0_dim"] = permutation_character_rank(g);
  j["generator_orbits"] = generator_orbit_count(g);
  j["marks"] = marks_by_counting(g);
  j["centralizer_homology"] = centralizer_homology(g, 3);
  if (g.order() <= 4) j["hh"] = hochschild_unnormalized(cyclic::group_algebra(g, la::Field::rational()), 3);
  return j;
}

nlohmann::json regenerate() {
  nlohmann::json j;
  for (const auto& desc : grp::default_catalog()) {
    const auto g = grp::build_group(desc);
    j["groups"][g.name()] = group_fixture(g);
  }
  for (const char* name : {"Q", "Q(zeta_3)", "Q(zeta_4)"})
    j["algebras"][name]["hh"] = hochschild_unnormalized(cyclic::parse_algebra(name), 4);
  return j;
}

}  // namespace burnhoch::oracle
