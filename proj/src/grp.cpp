#include "burnhoch/grp.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "burnhoch/error.hpp"

namespace burnhoch::grp {

namespace {

using Perm = std::vector<std::size_t>;

Perm compose(const Perm& a, const Perm& b) {  // (a*b)(x) = a(b(x))
  Perm r(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) r[x] = a[b[x]];
  return r;
}

bool is_permutation(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  for (std::size_t v : p) {
    if (v >= p.size() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

std::vector<Elem> mask_elements(ElemSet mask) {
  std::vector<Elem> out;
  for (Elem e = 0; mask != 0; ++e, mask >>= 1U)
    if (mask & 1U) out.push_back(e);
  return out;
}

ElemSet bit(Elem e) { return ElemSet{1} << e; }

}  // namespace

// ---------------------------------------------------------------------------
// Descriptors

GroupDescriptor GroupDescriptor::cyclic(std::size_t n) {
  GroupDescriptor d;
  d.kind = Kind::cyclic;
  d.n = n;
  d.name = "C" + std::to_string(n);
  return d;
}

GroupDescriptor GroupDescriptor::perm(std::string name, std::size_t degree,
                                      std::vector<std::vector<std::size_t>> gens) {
  GroupDescriptor d;
  d.kind = Kind::perm;
  d.degree = degree;
  d.gens = std::move(gens);
  d.name = std::move(name);
  return d;
}

GroupDescriptor GroupDescriptor::from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object() || !j.contains("kind")) fail(ErrorKind::parse, "group descriptor needs a \"kind\"");
    const std::string kind = j.at("kind").get<std::string>();
    GroupDescriptor d;
    if (kind == "cyclic") {
      d = cyclic(j.at("n").get<std::size_t>());
    } else if (kind == "perm") {
      d.kind = Kind::perm;
      d.degree = j.at("degree").get<std::size_t>();
      d.gens = j.at("gens").get<std::vector<std::vector<std::size_t>>>();
    } else if (kind == "table") {
      d.kind = Kind::table;
      d.table = j.at("table").get<std::vector<std::vector<std::size_t>>>();
    } else {
      fail(ErrorKind::parse, "unknown group kind \"" + kind + "\"");
    }
    if (j.contains("name")) d.name = j.at("name").get<std::string>();
    return d;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::parse, std::string("malformed group descriptor: ") + e.what());
  }
}

GroupDescriptor GroupDescriptor::parse(const std::string& text) {
  if (!text.empty() && text.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      fail(ErrorKind::parse, std::string("group descriptor is not valid JSON: ") + e.what());
    }
    return from_json(j);
  }
  if (text.rfind("cyclic:", 0) == 0) {
    try {
      const long n = std::stol(text.substr(7));
      if (n < 1) fail(ErrorKind::parse, "cyclic order must be positive");
      return cyclic(static_cast<std::size_t>(n));
    } catch (const std::logic_error&) {
      fail(ErrorKind::parse, "bad cyclic descriptor \"" + text + "\"");
    }
  }
  return catalog_group(text);
}

nlohmann::json GroupDescriptor::to_json() const {
  nlohmann::json j;
  switch (kind) {
    case Kind::cyclic:
      j = {{"kind", "cyclic"}, {"n", n}};
      break;
    case Kind::perm:
      j = {{"kind", "perm"}, {"degree", degree}, {"gens", gens}};
      break;
    case Kind::table:
      j = {{"kind", "table"}, {"table", table}};
      break;
  }
  if (!name.empty()) j["name"] = name;
  return j;
}

std::vector<GroupDescriptor> default_catalog() {
  std::vector<GroupDescriptor> out;
  for (std::size_t n = 1; n <= 8; ++n) out.push_back(GroupDescriptor::cyclic(n));
  out.push_back(GroupDescriptor::cyclic(12));
  for (const char* name : {"V4", "S3", "D4", "Q8", "A4"}) out.push_back(catalog_group(name));
  return out;
}

GroupDescriptor catalog_group(const std::string& name) {
  if (name == "V4") return GroupDescriptor::perm("V4", 4, {{1, 0, 3, 2}, {2, 3, 0, 1}});
  if (name == "S3") return GroupDescriptor::perm("S3", 3, {{1, 0, 2}, {1, 2, 0}});
  if (name == "D4") return GroupDescriptor::perm("D4", 4, {{1, 2, 3, 0}, {0, 3, 2, 1}});
  // left multiplication by i and j on (1, i, j, k, -1, -i, -j, -k)
  if (name == "Q8")
    return GroupDescriptor::perm("Q8", 8, {{1, 4, 3, 6, 5, 0, 7, 2}, {2, 7, 4, 1, 6, 3, 0, 5}});
  if (name == "A4") return GroupDescriptor::perm("A4", 4, {{1, 2, 0, 3}, {0, 2, 3, 1}});
  if (name.size() > 1 && name[0] == 'C') {
    try {
      const long n = std::stol(name.substr(1));
      if (n >= 1) return GroupDescriptor::cyclic(static_cast<std::size_t>(n));
    } catch (const std::logic_error&) {
    }
  }
  fail(ErrorKind::parse, "unknown group \"" + name + "\"");
}

// ---------------------------------------------------------------------------
// FiniteGroup

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<Elem>> table, std::string name) {
  const std::size_t n = table.size();
  if (n == 0) fail(ErrorKind::validation, "empty multiplication table");
  if (n > 64) fail(ErrorKind::capability, "group order " + std::to_string(n) + " exceeds 64");
  for (const auto& row : table) {
    if (row.size() != n) fail(ErrorKind::validation, "multiplication table is not square");
    if (!is_permutation(row)) fail(ErrorKind::validation, "table row is not a permutation");
  }
  for (std::size_t c = 0; c < n; ++c) {
    Perm col(n);
    for (std::size_t r = 0; r < n; ++r) col[r] = table[r][c];
    if (!is_permutation(col)) fail(ErrorKind::validation, "table column is not a permutation");
  }
  for (Elem a = 0; a < n; ++a)
    if (table[0][a] != a || table[a][0] != a) fail(ErrorKind::validation, "element 0 is not the identity");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          fail(ErrorKind::validation, "multiplication table is not associative");

  FiniteGroup g;
  g.classes_.clear();
  g.name_ = std::move(name);
  g.table_ = std::move(table);
  g.inverse_.assign(n, 0);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (g.table_[a][b] == 0) g.inverse_[a] = b;
  g.orders_.assign(n, 1);
  for (Elem a = 0; a < n; ++a) {
    Elem x = a;
    while (x != 0) {
      x = g.table_[x][a];
      ++g.orders_[a];
    }
  }
  g.class_index_.assign(n, n);
  for (Elem a = 0; a < n; ++a) {
    if (g.class_index_[a] != n) continue;
    std::set<Elem> cls;
    for (Elem x = 0; x < n; ++x) cls.insert(g.conj(x, a));
    for (Elem c : cls) g.class_index_[c] = g.classes_.size();
    g.classes_.emplace_back(cls.begin(), cls.end());
  }
  return g;
}

Elem FiniteGroup::pow(Elem a, long k) const {
  const long ord = static_cast<long>(orders_[a]);
  k %= ord;
  if (k < 0) k += ord;
  Elem r = 0;
  for (long i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

bool FiniteGroup::is_abelian() const {
  for (Elem a = 0; a < order(); ++a)
    for (Elem b = a + 1; b < order(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

ElemSet FiniteGroup::generated(ElemSet generators) const {
  const std::vector<Elem> gens = mask_elements(generators);
  ElemSet seen = 1;
  std::vector<Elem> frontier{0};
  while (!frontier.empty()) {
    std::vector<Elem> next;
    for (Elem a : frontier)
      for (Elem s : gens) {
        const Elem p = mul(a, s);
        if (seen & bit(p)) continue;
        seen |= bit(p);
        next.push_back(p);
      }
    frontier = std::move(next);
  }
  return seen;
}

ElemSet FiniteGroup::cyclic_mask(Elem g) const { return generated(bit(g)); }

FiniteGroup build_group(const GroupDescriptor& desc, std::size_t bound) {
  using Kind = GroupDescriptor::Kind;
  switch (desc.kind) {
    case Kind::cyclic: {
      if (desc.n == 0) fail(ErrorKind::validation, "cyclic group of order 0");
      if (desc.n > bound)
        fail(ErrorKind::validation, "cyclic group of order " + std::to_string(desc.n) + " exceeds bound");
      std::vector<std::vector<Elem>> t(desc.n, std::vector<Elem>(desc.n));
      for (Elem a = 0; a < desc.n; ++a)
        for (Elem b = 0; b < desc.n; ++b) t[a][b] = (a + b) % desc.n;
      return FiniteGroup::from_table(std::move(t), desc.name.empty() ? "C" + std::to_string(desc.n) : desc.name);
    }
    case Kind::perm: {
      for (const auto& gen : desc.gens)
        if (gen.size() != desc.degree || !is_permutation(gen))
          fail(ErrorKind::validation, "generator is not a permutation of the stated degree");
      Perm id(desc.degree);
      std::iota(id.begin(), id.end(), 0);
      std::vector<Perm> elems{id};
      std::map<Perm, Elem> index{{id, 0}};
      for (std::size_t i = 0; i < elems.size(); ++i) {
        for (const auto& gen : desc.gens) {
          Perm p = compose(elems[i], gen);
          if (index.count(p) != 0) continue;
          if (elems.size() >= bound)
            fail(ErrorKind::validation, "generator closure exceeds bound " + std::to_string(bound));
          index.emplace(p, elems.size());
          elems.push_back(std::move(p));
        }
      }
      const std::size_t n = elems.size();
      std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
      for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) t[a][b] = index.at(compose(elems[a], elems[b]));
      return FiniteGroup::from_table(std::move(t), desc.name);
    }
    case Kind::table:
      if (desc.table.size() > bound)
        fail(ErrorKind::validation, "table order exceeds bound " + std::to_string(bound));
      return FiniteGroup::from_table(desc.table, desc.name);
  }
  fail(ErrorKind::validation, "unknown descriptor kind");
}

// ---------------------------------------------------------------------------
// Subgroups

SubgroupRec subgroup_from_mask(const FiniteGroup& g, ElemSet mask) {
  SubgroupRec h;
  h.mask = mask;
  h.elements = mask_elements(mask);
  h.cyclic = false;
  for (Elem e : h.elements) {
    if (g.elem_order(e) == h.elements.size()) {
      h.cyclic = true;
      h.generator = e;
      break;
    }
  }
  return h;
}

SubgroupRec make_subgroup(const FiniteGroup& g, const std::vector<Elem>& elements) {
  ElemSet mask = 0;
  for (Elem e : elements) {
    if (e >= g.order()) fail(ErrorKind::validation, "subgroup element out of range");
    mask |= bit(e);
  }
  if (!(mask & 1U)) fail(ErrorKind::validation, "subgroup does not contain the identity");
  for (Elem a : elements) {
    if (!(mask & bit(g.inv(a)))) fail(ErrorKind::validation, "subgroup is not closed under inverses");
    for (Elem b : elements)
      if (!(mask & bit(g.mul(a, b)))) fail(ErrorKind::validation, "subgroup is not closed under products");
  }
  return subgroup_from_mask(g, mask);
}

SubgroupRec conjugate(const FiniteGroup& g, const SubgroupRec& h, Elem x) {
  ElemSet mask = 0;
  for (Elem e : h.elements) mask |= bit(g.conj(x, e));
  return subgroup_from_mask(g, mask);
}

std::size_t SubgroupLattice::class_of_subgroup(const SubgroupRec& h) const {
  for (std::size_t i = 0; i < subgroups.size(); ++i)
    if (subgroups[i].mask == h.mask) return class_of[i];
  fail(ErrorKind::validation, "not a subgroup of this lattice");
}

SubgroupLattice subgroups(const FiniteGroup& g, std::size_t bound) {
  if (g.order() > bound)
    fail(ErrorKind::capability, "subgroup enumeration capped at order " + std::to_string(bound));
  // Every subgroup is a join of cyclic subgroups; close the cyclic ones under
  // pairwise joins.
  std::set<ElemSet> found;
  for (Elem e = 0; e < g.order(); ++e) found.insert(g.cyclic_mask(e));
  std::vector<ElemSet> all(found.begin(), found.end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const ElemSet u = all[i] | all[j];
      if (u == all[i] || u == all[j]) continue;
      const ElemSet join = g.generated(u);
      if (found.insert(join).second) all.push_back(join);
    }
  }

  std::vector<SubgroupRec> recs;
  for (ElemSet m : all) recs.push_back(subgroup_from_mask(g, m));
  auto lex_less = [](const SubgroupRec& a, const SubgroupRec& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements < b.elements;
  };
  std::sort(recs.begin(), recs.end(), lex_less);

  // Conjugacy classes; members sorted lexicographically so the first is the
  // canonical representative.
  std::map<ElemSet, std::size_t> pos;
  for (std::size_t i = 0; i < recs.size(); ++i) pos[recs[i].mask] = i;
  std::vector<char> done(recs.size(), 0);
  std::vector<std::vector<std::size_t>> raw_classes;
  for (std::size_t i = 0; i < recs.size(); ++i) {
    if (done[i]) continue;
    std::set<std::size_t> cls;
    for (Elem x = 0; x < g.order(); ++x) cls.insert(pos.at(conjugate(g, recs[i], x).mask));
    for (std::size_t c : cls) done[c] = 1;
    raw_classes.emplace_back(cls.begin(), cls.end());
  }

  SubgroupLattice lat;
  lat.class_of.resize(recs.size());
  for (const auto& cls : raw_classes) {
    std::vector<std::size_t> members;
    for (std::size_t idx : cls) {
      lat.class_of[lat.subgroups.size()] = lat.classes.size();
      members.push_back(lat.subgroups.size());
      lat.subgroups.push_back(recs[idx]);
    }
    if (lat.subgroups[members.front()].cyclic) lat.cyclic_classes.push_back(lat.classes.size());
    lat.classes.push_back(std::move(members));
  }
  return lat;
}

SubgroupRec centralizer(const FiniteGroup& g, const SubgroupRec& h) {
  ElemSet mask = 0;
  for (Elem x = 0; x < g.order(); ++x) {
    bool commutes = true;
    for (Elem e : h.elements) commutes = commutes && g.mul(x, e) == g.mul(e, x);
    if (commutes) mask |= bit(x);
  }
  return subgroup_from_mask(g, mask);
}

SubgroupRec normalizer(const FiniteGroup& g, const SubgroupRec& h) {
  ElemSet mask = 0;
  for (Elem x = 0; x < g.order(); ++x)
    if (conjugate(g, h, x).mask == h.mask) mask |= bit(x);
  return subgroup_from_mask(g, mask);
}

SubgroupRec element_centralizer(const FiniteGroup& g, Elem x) {
  return centralizer(g, subgroup_from_mask(g, g.cyclic_mask(x)));
}

std::optional<Elem> Embedded::local(Elem parent) const {
  auto it = std::lower_bound(to_parent.begin(), to_parent.end(), parent);
  if (it == to_parent.end() || *it != parent) return std::nullopt;
  return static_cast<Elem>(it - to_parent.begin());
}

Embedded subgroup_as_group(const FiniteGroup& g, const SubgroupRec& h) {
  const std::vector<Elem>& el = h.elements;
  std::vector<std::vector<Elem>> t(el.size(), std::vector<Elem>(el.size()));
  for (std::size_t a = 0; a < el.size(); ++a)
    for (std::size_t b = 0; b < el.size(); ++b) {
      const Elem p = g.mul(el[a], el[b]);
      auto it = std::lower_bound(el.begin(), el.end(), p);
      if (it == el.end() || *it != p) fail(ErrorKind::validation, "subgroup is not closed");
      t[a][b] = static_cast<Elem>(it - el.begin());
    }
  return Embedded{FiniteGroup::from_table(std::move(t)), el};
}

WeylData weyl(const FiniteGroup& g, const SubgroupRec& h) {
  make_subgroup(g, h.elements);
  const SubgroupRec z = centralizer(g, h);
  const SubgroupRec n = normalizer(g, h);
  ElemSet hz_mask = 0;
  for (Elem a : h.elements)
    for (Elem b : z.elements) hz_mask |= bit(g.mul(a, b));
  const SubgroupRec hz = make_subgroup(g, mask_elements(hz_mask));
  if (n.order() % hz.order() != 0) fail(ErrorKind::validation, "|N| not divisible by |HZ|");

  // Cosets x.HZ in N, each labelled by its least element.
  std::vector<Elem> reps;
  std::vector<std::size_t> coset_of(g.order(), g.order());
  for (Elem x : n.elements) {
    if (coset_of[x] != g.order()) continue;
    for (Elem y : hz.elements) coset_of[g.mul(x, y)] = reps.size();
    reps.push_back(x);
  }
  std::vector<std::vector<Elem>> t(reps.size(), std::vector<Elem>(reps.size()));
  for (std::size_t a = 0; a < reps.size(); ++a)
    for (std::size_t b = 0; b < reps.size(); ++b) t[a][b] = coset_of[g.mul(reps[a], reps[b])];

  WeylData w{z, n, hz, FiniteGroup::from_table(std::move(t), "W"), reps, {}};
  if (h.cyclic) {
    const Elem gen = *h.generator;
    for (Elem x : reps) {
      Automorphism aut{0, {}};
      const Elem image = g.conj(x, gen);
      for (std::size_t t_exp = 0; t_exp < h.order(); ++t_exp)
        if (g.pow(gen, static_cast<long>(t_exp)) == image) aut.exponent = t_exp;
      for (Elem e : h.elements) aut.map.emplace_back(e, g.conj(x, e));
      if (h.order() == 1) aut.exponent = 1;
      w.action.push_back(std::move(aut));
    }
  }
  return w;
}

}  // namespace burnhoch::grp
