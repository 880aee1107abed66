#include "burnhoch/rep.hpp"

#include <algorithm>
#include <numeric>

#include "burnhoch/error.hpp"

namespace burnhoch::rep {

using grp::Elem;
using grp::ElemSet;
using la::Matrix;
using la::Scalar;

namespace {

long moebius(long n) {
  long mu = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  return n > 1 ? -mu : mu;
}

long euler_phi(long n) {
  long r = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    r -= r / p;
  }
  if (n > 1) r -= r / n;
  return r;
}

// sum of zeta_d^{jk} over j prime to d
Rational ramanujan_sum(long d, long k) {
  const long g = std::gcd(d, k % d);
  const long n = d / g;
  return Rational(moebius(n) * euler_phi(d) / euler_phi(n));
}

Elem cyclic_generator(const grp::FiniteGroup& c) {
  for (Elem x = 0; x < c.order(); ++x)
    if (c.elem_order(x) == c.order()) return x;
  fail(ErrorKind::domain, "group is not cyclic");
}

// exponent k with x = gen^k
std::vector<std::size_t> discrete_logs(const grp::FiniteGroup& c, Elem gen) {
  std::vector<std::size_t> log(c.order());
  Elem x = 0;
  for (std::size_t k = 0; k < c.order(); ++k) {
    log[x] = k;
    x = c.mul(x, gen);
  }
  return log;
}

std::vector<std::size_t> units_mod(std::size_t m) {
  std::vector<std::size_t> u;
  for (std::size_t t = 0; t < std::max<std::size_t>(m, 1); ++t)
    if (std::gcd(t, m) == 1) u.push_back(m == 1 ? 0 : t);
  if (m == 1) u = {0};
  return u;
}

Scalar root_of_unity(std::size_t m) {
  if (m == 1) return Scalar(1);
  if (m == 2) return Scalar(-1);
  return Scalar::generator(la::cyclotomic_field(static_cast<unsigned>(m)));
}

ClassFunction express_in(const Matrix& basis, const ClassFunction& f) {
  const auto x = la::solve(basis, Matrix::from_columns(la::Field::rational(), f.size(), {to_vec(f)}));
  if (!x) fail(ErrorKind::validation, "class function is not in the span of the basis");
  ClassFunction out;
  for (std::size_t r = 0; r < x->rows(); ++r) out.push_back(x->at(r, 0).rational());
  return out;
}

Matrix basis_matrix(const std::vector<ClassFunction>& basis, std::size_t nclasses) {
  std::vector<la::Vec> cols;
  for (const auto& f : basis) cols.push_back(to_vec(f));
  return Matrix::from_columns(la::Field::rational(), nclasses, cols);
}

}  // namespace

la::Vec to_vec(const ClassFunction& f) { return la::Vec(f.begin(), f.end()); }

ClassFunction from_vec(const la::Vec& v) {
  ClassFunction out;
  out.reserve(v.size());
  for (const auto& s : v) {
    if (!s.is_rational()) fail(ErrorKind::domain, "class function value is not rational");
    out.push_back(s.rational());
  }
  return out;
}

Rational inner_product(const grp::FiniteGroup& g, const ClassFunction& a, const ClassFunction& b) {
  Rational s = 0;
  for (Elem x = 0; x < g.order(); ++x) s += a[g.class_of(x)] * b[g.class_of(g.inv(x))];
  return s / static_cast<long>(g.order());
}

ClassFunction pointwise(const ClassFunction& a, const ClassFunction& b) {
  if (a.size() != b.size()) fail(ErrorKind::validation, "class function length mismatch");
  ClassFunction out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

ClassFunction permutation_character(const grp::FiniteGroup& g, const grp::SubgroupRec& k) {
  ClassFunction out(g.classes().size());
  for (std::size_t c = 0; c < out.size(); ++c) {
    const Elem x = g.classes()[c].front();
    std::size_t count = 0;
    for (Elem y = 0; y < g.order(); ++y)
      if (k.contains(g.conj(g.inv(y), x))) ++count;
    out[c] = Rational(static_cast<long>(count), static_cast<long>(k.order()));
    out[c].canonicalize();
  }
  return out;
}

ClassFunction induce(const grp::FiniteGroup& g, const grp::Embedded& h, const ClassFunction& f) {
  if (f.size() != h.group.classes().size()) fail(ErrorKind::validation, "induce: dimension mismatch");
  ClassFunction out(g.classes().size());
  for (std::size_t c = 0; c < out.size(); ++c) {
    const Elem x = g.classes()[c].front();
    Rational s = 0;
    for (Elem y = 0; y < g.order(); ++y) {
      const auto local = h.local(g.conj(g.inv(y), x));
      if (local) s += f[h.group.class_of(*local)];
    }
    out[c] = s / static_cast<long>(h.group.order());
  }
  return out;
}

ClassFunction restrict(const grp::FiniteGroup& g, const grp::Embedded& h, const ClassFunction& f) {
  if (f.size() != g.classes().size()) fail(ErrorKind::validation, "restrict: dimension mismatch");
  ClassFunction out(h.group.classes().size());
  for (std::size_t c = 0; c < out.size(); ++c) out[c] = f[g.class_of(h.to_parent[h.group.classes()[c].front()])];
  return out;
}

ClassFunctionSpace k0_cyclic(const grp::FiniteGroup& c) {
  const Elem gen = cyclic_generator(c);
  const auto log = discrete_logs(c, gen);
  const auto lat = grp::subgroups(c);
  const long m = static_cast<long>(c.order());
  ClassFunctionSpace space;
  space.group = c;
  space.provenance = ClassFunctionSpace::Provenance::cyclic_characters;
  for (const auto& kernel : lat.subgroups) {
    // the Q-irreducible with kernel D factors through C/D, cyclic of order d
    const long d = m / static_cast<long>(kernel.order());
    ClassFunction chi(c.classes().size());
    for (Elem x = 0; x < c.order(); ++x) chi[c.class_of(x)] = ramanujan_sum(d, static_cast<long>(log[x]));
    space.basis.push_back(std::move(chi));
    space.labels.push_back("rho[ker=" + burnside::subgroup_label(kernel, c.order()) + "]");
  }
  space.k0 = la::Subspace::span(basis_matrix(space.basis, c.classes().size()));
  return space;
}

std::vector<Rational> to_subgroup_map(const grp::FiniteGroup& c, const ClassFunction& f) {
  std::vector<Rational> out;
  for (const auto& d : grp::subgroups(c).subgroups) out.push_back(f[c.class_of(*d.generator)]);
  return out;
}

ClassFunctionSpace k0_group(const grp::FiniteGroup& g) {
  const auto lat = grp::subgroups(g);
  ClassFunctionSpace space;
  space.group = g;
  space.provenance = ClassFunctionSpace::Provenance::induced_span;
  for (std::size_t cls : lat.cyclic_classes) {
    const auto& c = lat.representative(cls);
    const auto emb = grp::subgroup_as_group(g, c);
    const auto kc = k0_cyclic(emb.group);
    for (std::size_t i = 0; i < kc.basis.size(); ++i) {
      space.basis.push_back(induce(g, emb, kc.basis[i]));
      space.labels.push_back("Ind[" + burnside::subgroup_label(c, g.order()) + "]" + kc.labels[i]);
    }
  }
  space.k0 = la::Subspace::span(basis_matrix(space.basis, g.classes().size()));
  return space;
}

la::Subspace rational_class_functions(const grp::FiniteGroup& g) {
  const std::size_t k = g.classes().size();
  std::vector<std::size_t> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (std::size_t t : units_mod(g.order())) {
    for (Elem x = 0; x < g.order(); ++x) {
      const std::size_t a = find(g.class_of(x)), b = find(g.class_of(g.pow(x, static_cast<long>(t))));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<la::Vec> cols;
  for (std::size_t root = 0; root < k; ++root) {
    if (find(root) != root) continue;
    la::Vec v(k, Scalar(0));
    for (std::size_t c = 0; c < k; ++c)
      if (find(c) == root) v[c] = Scalar(1);
    cols.push_back(std::move(v));
  }
  return la::Subspace::span(la::Field::rational(), k, cols);
}

std::size_t rational_class_count(const grp::FiniteGroup& g) { return rational_class_functions(g).dim(); }

ClassFunction twist(const grp::FiniteGroup& c, const ClassFunction& f, std::size_t t) {
  ClassFunction out(f.size());
  for (Elem x = 0; x < c.order(); ++x) out[c.class_of(x)] = f[c.class_of(c.pow(x, static_cast<long>(t)))];
  return out;
}

burnside::MackeyModule rep_mackey(const grp::FiniteGroup& c) {
  cyclic_generator(c);
  const auto lat = grp::subgroups(c);
  burnside::MackeyModule m;
  m.name = "k0";
  m.ambient = c;
  m.subgroups = lat.subgroups;
  const std::size_t n = m.subgroups.size();
  std::vector<grp::Embedded> emb;
  std::vector<ClassFunctionSpace> k0;
  std::vector<Matrix> bases;
  for (std::size_t e = 0; e < n; ++e) {
    emb.push_back(grp::subgroup_as_group(c, m.subgroups[e]));
    k0.push_back(k0_cyclic(emb[e].group));
    bases.push_back(basis_matrix(k0[e].basis, emb[e].group.classes().size()));
    m.dims.push_back(k0[e].basis.size());
    m.labels.push_back(k0[e].labels);
  }
  auto columns = [](const std::vector<ClassFunction>& cols) {
    Matrix out(la::Field::rational(), cols.empty() ? 0 : cols.front().size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < cols[j].size(); ++i)
        if (sgn(cols[j][i]) != 0) out.set(i, j, Scalar(cols[j][i]));
    return out;
  };
  for (std::size_t d = 0; d < n; ++d)
    for (std::size_t e = 0; e < n; ++e) {
      if (d == e || !m.is_subgroup(d, e)) continue;
      std::vector<Elem> local;
      for (Elem x : m.subgroups[d].elements) local.push_back(*emb[e].local(x));
      const auto sub = grp::make_subgroup(emb[e].group, local);
      const auto inner = grp::subgroup_as_group(emb[e].group, sub);
      std::vector<ClassFunction> ind_cols, res_cols;
      for (const auto& chi : k0[d].basis) ind_cols.push_back(express_in(bases[e], induce(emb[e].group, inner, chi)));
      for (const auto& chi : k0[e].basis) res_cols.push_back(express_in(bases[d], restrict(emb[e].group, inner, chi)));
      Matrix ind = columns(ind_cols), res = columns(res_cols);
      if (ind.rows() != m.dims[e]) ind = Matrix(la::Field::rational(), m.dims[e], m.dims[d]);
      m.ind.emplace(std::make_pair(d, e), ind);
      m.res.emplace(std::make_pair(d, e), res);
    }
  for (std::size_t e = 0; e < n; ++e) {
    const auto& ge = emb[e].group;
    for (std::size_t f = 0; f < n; ++f) {
      if (!m.is_subgroup(f, e)) continue;
      std::vector<Elem> local;
      for (Elem x : m.subgroups[f].elements) local.push_back(*emb[e].local(x));
      const auto perm = permutation_character(ge, grp::make_subgroup(ge, local));
      std::vector<ClassFunction> cols;
      for (const auto& chi : k0[e].basis) cols.push_back(express_in(bases[e], pointwise(perm, chi)));
      m.action.emplace(std::make_pair(e, f), columns(cols));
    }
  }
  return m;
}

ArtinDefectDims artin_defect_k0(const grp::FiniteGroup& h) {
  const la::Subspace ambient = rational_class_functions(h);
  const auto lat = grp::subgroups(h);
  std::vector<la::Vec> induced;
  for (const auto& k : lat.subgroups) {
    if (k.order() == h.order()) continue;
    const auto emb = grp::subgroup_as_group(h, k);
    for (const auto& chi : k0_group(emb.group).basis) induced.push_back(to_vec(induce(h, emb, chi)));
  }
  const auto span = la::Subspace::span(la::Field::rational(), h.classes().size(), induced);
  if (!ambient.contains(span)) fail(ErrorKind::validation, "induced characters are not rational class functions");
  return {ambient.dim(), span.dim()};
}

GaloisAction galois_orbits(const la::FieldPtr& field, const grp::FiniteGroup& c) {
  cyclic_generator(c);
  std::size_t d = 1;
  if (!field->is_rational()) {
    if (!field->cyclotomic_index()) fail(ErrorKind::capability, "galois_orbits supports Q and cyclotomic fields only");
    d = *field->cyclotomic_index();
  }
  GaloisAction out;
  out.field = field;
  out.m = c.order();
  const std::size_t m = out.m;
  const std::size_t l = std::lcm(d, m);
  // s in (Z/l)^x acts on Q(zeta_l); it fixes F = Q(zeta_d) iff it fixes
  // zeta_l^{l/d}. Gamma is the image of those s modulo m.
  const Scalar zl = root_of_unity(l);
  const Scalar zd = zl.pow(static_cast<unsigned>(l / d));
  std::vector<char> in_gamma(std::max<std::size_t>(m, 1), 0);
  for (std::size_t s : units_mod(l)) {
    if (!(zl.pow(static_cast<unsigned>(s * (l / d))) == zd)) continue;
    in_gamma[m == 1 ? 0 : s % m] = 1;
  }
  for (std::size_t t = 0; t < in_gamma.size(); ++t)
    if (in_gamma[t]) out.gamma.push_back(m == 1 ? 1 : t);
  std::vector<char> seen(c.order(), 0);
  for (Elem x = 0; x < c.order(); ++x) {
    if (seen[x]) continue;
    std::vector<Elem> orbit;
    for (std::size_t t : out.gamma) {
      const Elem y = c.pow(x, static_cast<long>(t));
      if (!seen[y]) {
        seen[y] = 1;
        orbit.push_back(y);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.orbits.push_back(std::move(orbit));
  }
  return out;
}

GroupRingElem group_ring_mul(const grp::FiniteGroup& g, const GroupRingElem& a, const GroupRingElem& b) {
  GroupRingElem out(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    if (sgn(a[x]) == 0) continue;
    for (Elem y = 0; y < g.order(); ++y)
      if (sgn(b[y]) != 0) out[g.mul(x, y)] += a[x] * b[y];
  }
  return out;
}

std::vector<CentralIdempotent> central_idempotents(const grp::FiniteGroup& c) {
  const Elem gen = cyclic_generator(c);
  const auto log = discrete_logs(c, gen);
  const std::size_t m = c.order();
  const Scalar zeta = root_of_unity(m);
  const auto lat = grp::subgroups(c);
  std::vector<CentralIdempotent> out;
  for (const auto& kernel : lat.subgroups) {
    // psi_j(gen^k) = zeta^{jk} has kernel of order gcd(j, m); take the
    // orbit of j = |kernel| under the units.
    const std::size_t j0 = kernel.order() % m;
    std::vector<char> in_orbit(m, 0);
    for (std::size_t t : units_mod(m)) in_orbit[(j0 * t) % m] = 1;
    std::vector<Scalar> coeff(m, Scalar(0));
    for (std::size_t j = 0; j < m; ++j) {
      if (!in_orbit[j]) continue;
      // e_psi = 1/m sum_x psi(x^-1) x
      for (Elem x = 0; x < m; ++x) {
        const std::size_t k = (m - log[x]) % m;
        coeff[x] += zeta.pow(static_cast<unsigned>((j * k) % m));
      }
    }
    GroupRingElem e(m);
    for (Elem x = 0; x < m; ++x) {
      if (!coeff[x].is_rational()) fail(ErrorKind::validation, "orbit sum of idempotents is not rational");
      e[x] = coeff[x].rational() / static_cast<long>(m);
    }
    out.push_back({kernel, std::move(e)});
  }
  return out;
}

}  // namespace burnhoch::rep
