#include "burnhoch/burnside.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "burnhoch/error.hpp"

namespace burnhoch::burnside {

using grp::Elem;
using grp::ElemSet;
using la::Matrix;
using la::Scalar;

namespace {

ElemSet bit(Elem e) { return ElemSet{1} << e; }

Scalar q(const Rational& r) { return Scalar(r); }

std::vector<Rational> column_rationals(const la::Vec& v) {
  std::vector<Rational> out;
  out.reserve(v.size());
  for (const auto& s : v) out.push_back(s.rational());
  return out;
}

la::Vec to_vec(const std::vector<Rational>& v) { return la::Vec(v.begin(), v.end()); }

// Left cosets xK as bitmasks, in order of least element.
std::vector<ElemSet> left_cosets(const grp::FiniteGroup& g, const grp::SubgroupRec& k) {
  std::vector<ElemSet> cosets;
  ElemSet covered = 0;
  for (Elem x = 0; x < g.order(); ++x) {
    if (covered & bit(x)) continue;
    ElemSet c = 0;
    for (Elem y : k.elements) c |= bit(g.mul(x, y));
    covered |= c;
    cosets.push_back(c);
  }
  return cosets;
}

}  // namespace

std::string subgroup_label(const grp::SubgroupRec& h, std::size_t ambient_order) {
  if (h.order() == 1) return "e";
  if (h.order() == ambient_order) return h.cyclic ? "C" : "G";
  return (h.cyclic ? "C" : "H") + std::to_string(h.order());
}

TableOfMarks table_of_marks(const grp::FiniteGroup& g) {
  grp::SubgroupLattice lat = grp::subgroups(g);
  const std::size_t n = lat.classes.size();
  Matrix marks(la::Field::rational(), n, n);
  // gK is fixed by H iff g^-1 H g <= K; count such g and divide by |K|.
  for (std::size_t i = 0; i < n; ++i) {
    const auto& h = lat.representative(i);
    for (std::size_t j = 0; j < n; ++j) {
      const auto& k = lat.representative(j);
      std::size_t count = 0;
      for (Elem x = 0; x < g.order(); ++x) {
        const ElemSet conj = grp::conjugate(g, h, g.inv(x)).mask;
        if ((conj & k.mask) == conj) ++count;
      }
      if (count != 0) marks.set(i, j, Scalar(static_cast<long>(count / k.order())));
    }
  }
  std::vector<std::string> labels;
  std::map<std::string, int> seen;
  for (std::size_t i = 0; i < n; ++i) {
    std::string base = subgroup_label(lat.representative(i), g.order());
    std::size_t dup = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (subgroup_label(lat.representative(j), g.order()) == base) ++dup;
    if (dup > 1) base += static_cast<char>('a' + seen[base]++);
    labels.push_back(base);
  }
  return TableOfMarks{g, std::move(lat), std::move(marks), std::move(labels)};
}

// ---------------------------------------------------------------------------
// BurnsideRing

BurnsideRing::BurnsideRing(TableOfMarks t) : table_(std::move(t)), inverse_marks_(la::inverse(table_.marks)) {}

RingPtr BurnsideRing::make(const grp::FiniteGroup& g) {
  return RingPtr(new BurnsideRing(table_of_marks(g)));
}

std::vector<Rational> BurnsideRing::marks_of(const std::vector<Rational>& coeffs) const {
  return column_rationals(table_.marks.apply(to_vec(coeffs)));
}

std::vector<Rational> BurnsideRing::coeffs_of(const std::vector<Rational>& marks) const {
  return column_rationals(inverse_marks_.apply(to_vec(marks)));
}

BurnsideElem::BurnsideElem(RingPtr ring, std::vector<Rational> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != ring_->rank()) fail(ErrorKind::validation, "Burnside coefficient vector has wrong length");
  for (auto& c : coeffs_) c.canonicalize();
}

BurnsideElem BurnsideElem::zero(RingPtr ring) {
  const std::size_t n = ring->rank();
  return BurnsideElem(std::move(ring), std::vector<Rational>(n));
}

BurnsideElem BurnsideElem::one(RingPtr ring) {
  const std::size_t n = ring->rank();
  return basis(std::move(ring), n - 1);
}

BurnsideElem BurnsideElem::basis(RingPtr ring, std::size_t cls) {
  std::vector<Rational> c(ring->rank());
  c.at(cls) = 1;
  return BurnsideElem(std::move(ring), std::move(c));
}

BurnsideElem BurnsideElem::from_marks(RingPtr ring, const std::vector<Rational>& marks) {
  auto c = ring->coeffs_of(marks);
  return BurnsideElem(std::move(ring), std::move(c));
}

void BurnsideElem::check_ring(const BurnsideElem& o) const {
  if (ring_ != o.ring_) fail(ErrorKind::domain, "Burnside elements belong to different ambient groups");
}

BurnsideElem BurnsideElem::operator+(const BurnsideElem& o) const {
  check_ring(o);
  auto c = coeffs_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coeffs_[i];
  return BurnsideElem(ring_, std::move(c));
}

BurnsideElem BurnsideElem::operator-(const BurnsideElem& o) const {
  check_ring(o);
  auto c = coeffs_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.coeffs_[i];
  return BurnsideElem(ring_, std::move(c));
}

BurnsideElem BurnsideElem::operator*(const BurnsideElem& o) const {
  check_ring(o);
  auto a = marks();
  const auto b = o.marks();
  for (std::size_t i = 0; i < a.size(); ++i) a[i] *= b[i];
  return from_marks(ring_, a);
}

BurnsideElem BurnsideElem::scaled(const Rational& s) const {
  auto c = coeffs_;
  for (auto& v : c) v *= s;
  return BurnsideElem(ring_, std::move(c));
}

bool BurnsideElem::operator==(const BurnsideElem& o) const {
  return ring_ == o.ring_ && coeffs_ == o.coeffs_;
}

std::string BurnsideElem::str() const {
  const auto& lat = ring_->lattice();
  const std::string top = lat.representative(lat.classes.size() - 1).cyclic ? "C" : "G";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    const Rational mag = abs(c);
    if (first)
      out << (sgn(c) < 0 ? "-" : "");
    else
      out << (sgn(c) < 0 ? " - " : " + ");
    first = false;
    if (mag != 1) out << mag.get_str();
    out << "[" << top << "/" << ring_->table().labels[i] << "]";
  }
  return first ? "0" : out.str();
}

BurnsideElem theta(const RingPtr& ring) {
  const auto& lat = ring->lattice();
  const auto& top = lat.representative(lat.classes.size() - 1);
  if (!top.cyclic) fail(ErrorKind::domain, "theta is only defined for cyclic groups");
  std::vector<Rational> delta(ring->rank());
  delta.back() = 1;
  return BurnsideElem::from_marks(ring, delta);
}

Inclusion include(const RingPtr& ambient, const grp::SubgroupRec& d) {
  auto emb = grp::subgroup_as_group(ambient->group(), d);
  return Inclusion{BurnsideRing::make(emb.group), ambient, std::move(emb.to_parent)};
}

BurnsideElem induce(const Inclusion& inc, const BurnsideElem& x) {
  if (x.ring() != inc.sub) fail(ErrorKind::domain, "induce: element is not in A(D)");
  std::vector<Rational> out(inc.ambient->rank());
  const auto& sub_lat = inc.sub->lattice();
  for (std::size_t c = 0; c < sub_lat.classes.size(); ++c) {
    if (sgn(x.coeffs()[c]) == 0) continue;
    std::vector<Elem> parent;
    for (Elem e : sub_lat.representative(c).elements) parent.push_back(inc.to_parent[e]);
    std::sort(parent.begin(), parent.end());
    const auto h = grp::subgroup_from_mask(inc.ambient->group(), [&] {
      ElemSet m = 0;
      for (Elem e : parent) m |= bit(e);
      return m;
    }());
    out[inc.ambient->lattice().class_of_subgroup(h)] += x.coeffs()[c];
  }
  return BurnsideElem(inc.ambient, std::move(out));
}

BurnsideElem restrict(const Inclusion& inc, const BurnsideElem& y) {
  if (y.ring() != inc.ambient) fail(ErrorKind::domain, "restrict: element is not in A(G)");
  const auto& g = inc.ambient->group();
  const auto& glat = inc.ambient->lattice();
  const auto& d_group = inc.sub->group();
  std::vector<Rational> out(inc.sub->rank());
  for (std::size_t k = 0; k < glat.classes.size(); ++k) {
    if (sgn(y.coeffs()[k]) == 0) continue;
    const auto cosets = left_cosets(g, glat.representative(k));
    std::vector<char> done(cosets.size(), 0);
    for (std::size_t i = 0; i < cosets.size(); ++i) {
      if (done[i]) continue;
      ElemSet stab = 0;
      for (std::size_t local = 0; local < inc.to_parent.size(); ++local) {
        ElemSet moved = 0;
        for (Elem x = 0; x < g.order(); ++x)
          if (cosets[i] & bit(x)) moved |= bit(g.mul(inc.to_parent[local], x));
        if (moved == cosets[i]) stab |= bit(local);
        for (std::size_t j = 0; j < cosets.size(); ++j)
          if (cosets[j] == moved) done[j] = 1;
      }
      const auto s = grp::subgroup_from_mask(d_group, stab);
      out[inc.sub->lattice().class_of_subgroup(s)] += y.coeffs()[k];
    }
  }
  return BurnsideElem(inc.sub, std::move(out));
}

// ---------------------------------------------------------------------------
// MackeyModule

std::size_t MackeyModule::index_of(const grp::SubgroupRec& h) const {
  for (std::size_t i = 0; i < subgroups.size(); ++i)
    if (subgroups[i].mask == h.mask) return i;
  fail(ErrorKind::validation, "subgroup not in Mackey module");
}

bool MackeyModule::is_subgroup(std::size_t d, std::size_t e) const {
  return (subgroups[d].mask & subgroups[e].mask) == subgroups[d].mask;
}

Matrix MackeyModule::ind_matrix(std::size_t d, std::size_t e) const {
  if (d == e) return Matrix::identity(la::Field::rational(), dims[d]);
  auto it = ind.find({d, e});
  if (it == ind.end())
    fail(ErrorKind::incomplete_mackey, "missing induction " + std::to_string(d) + " -> " + std::to_string(e));
  return it->second;
}

Matrix MackeyModule::res_matrix(std::size_t e, std::size_t d) const {
  if (d == e) return Matrix::identity(la::Field::rational(), dims[d]);
  auto it = res.find({d, e});
  if (it == res.end())
    fail(ErrorKind::incomplete_mackey, "missing restriction " + std::to_string(e) + " -> " + std::to_string(d));
  return it->second;
}

RingPtr MackeyModule::ring(std::size_t e) const {
  return BurnsideRing::make(grp::subgroup_as_group(ambient, subgroups[e]).group);
}

Matrix MackeyModule::action_matrix(std::size_t e, const BurnsideElem& x) const {
  const auto emb = grp::subgroup_as_group(ambient, subgroups[e]);
  const auto& lat = x.ring()->lattice();
  if (x.ring()->group().order() != emb.group.order())
    fail(ErrorKind::domain, "Burnside element does not belong to this subgroup");
  Matrix out(la::Field::rational(), dims[e], dims[e]);
  for (std::size_t c = 0; c < lat.classes.size(); ++c) {
    if (sgn(x.coeffs()[c]) == 0) continue;
    ElemSet mask = 0;
    for (Elem l : lat.representative(c).elements) mask |= bit(emb.to_parent[l]);
    const std::size_t f = index_of(grp::subgroup_from_mask(ambient, mask));
    auto it = action.find({e, f});
    if (it == action.end()) fail(ErrorKind::incomplete_mackey, "missing Burnside action matrix");
    out = out + it->second.scaled(q(x.coeffs()[c]));
  }
  return out;
}

namespace {

nlohmann::json matrix_json(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : m.dense()) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& v : row) r.push_back(v.str());
    rows.push_back(r);
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

Matrix matrix_from_json(const nlohmann::json& j) {
  Matrix m(la::Field::rational(), j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
  const auto& e = j.at("entries");
  if (e.size() != m.rows()) fail(ErrorKind::parse, "matrix row count mismatch");
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (e[r].size() != m.cols()) fail(ErrorKind::parse, "matrix column count mismatch");
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Rational v;
      if (v.set_str(e[r][c].get<std::string>(), 10) != 0) fail(ErrorKind::parse, "bad rational entry");
      m.set(r, c, Scalar(v));
    }
  }
  return m;
}

using MatrixMap = std::map<std::pair<std::size_t, std::size_t>, Matrix>;

nlohmann::json map_json(const MatrixMap& mm, const char* a, const char* b) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [key, m] : mm) out.push_back({{a, key.first}, {b, key.second}, {"matrix", matrix_json(m)}});
  return out;
}

MatrixMap map_from_json(const nlohmann::json& j, const char* a, const char* b) {
  MatrixMap out;
  for (const auto& e : j) out.emplace(std::make_pair(e.at(a).get<std::size_t>(), e.at(b).get<std::size_t>()),
                                      matrix_from_json(e.at("matrix")));
  return out;
}

}  // namespace

nlohmann::json MackeyModule::to_json() const {
  nlohmann::json subs = nlohmann::json::array();
  for (const auto& h : subgroups) subs.push_back(h.elements);
  return {{"name", name},
          {"ambient", {{"kind", "table"}, {"table", ambient.table()}}},
          {"subgroups", subs},
          {"dims", dims},
          {"labels", labels},
          {"ind", map_json(ind, "from", "to")},
          {"res", map_json(res, "to", "from")},
          {"action", map_json(action, "subgroup", "set")}};
}

MackeyModule MackeyModule::from_json(const nlohmann::json& j) {
  try {
    MackeyModule m{
        j.at("name").get<std::string>(),
        grp::build_group(grp::GroupDescriptor::from_json(j.at("ambient"))),
        {},
        j.at("dims").get<std::vector<std::size_t>>(),
        j.at("labels").get<std::vector<std::vector<std::string>>>(),
        map_from_json(j.at("ind"), "from", "to"),
        map_from_json(j.at("res"), "to", "from"),
        map_from_json(j.at("action"), "subgroup", "set")};
    for (const auto& s : j.at("subgroups")) m.subgroups.push_back(grp::make_subgroup(m.ambient, s.get<std::vector<Elem>>()));
    if (m.dims.size() != m.subgroups.size()) fail(ErrorKind::parse, "dims/subgroups length mismatch");
    return m;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::parse, std::string("malformed Mackey module: ") + e.what());
  }
}

MackeyCheck check_mackey_axioms(const MackeyModule& m) {
  MackeyCheck out;
  const auto& g = m.ambient;
  if (!g.is_abelian()) fail(ErrorKind::capability, "Mackey checks implemented for abelian ambients only");
  const std::size_t n = m.subgroups.size();
  auto label = [&](std::size_t i) { return std::to_string(m.subgroups[i].order()) + "#" + std::to_string(i); };

  for (std::size_t d = 0; d < n; ++d)
    for (std::size_t e = 0; e < n; ++e)
      for (std::size_t f = 0; f < n; ++f) {
        if (!m.is_subgroup(d, e) || !m.is_subgroup(e, f)) continue;
        if (m.ind_matrix(e, f) * m.ind_matrix(d, e) != m.ind_matrix(d, f)) {
          out.functorial = false;
          out.failures.push_back("ind not functorial on " + label(d) + " <= " + label(e) + " <= " + label(f));
        }
        if (m.res_matrix(e, d) * m.res_matrix(f, e) != m.res_matrix(f, d)) {
          out.functorial = false;
          out.failures.push_back("res not functorial on " + label(d) + " <= " + label(e) + " <= " + label(f));
        }
      }

  // res^E_F ind^E_D = sum over F\E/D of ind^F_{F n D} res^D_{F n D}; the
  // conjugations are trivial in an abelian ambient group.
  for (std::size_t e = 0; e < n; ++e)
    for (std::size_t d = 0; d < n; ++d)
      for (std::size_t f = 0; f < n; ++f) {
        if (!m.is_subgroup(d, e) || !m.is_subgroup(f, e)) continue;
        const auto& ee = m.subgroups[e];
        ElemSet seen = 0;
        std::size_t double_cosets = 0;
        for (Elem x : ee.elements) {
          if (seen & bit(x)) continue;
          ++double_cosets;
          for (Elem a : m.subgroups[f].elements)
            for (Elem b : m.subgroups[d].elements) seen |= bit(g.mul(g.mul(a, x), b));
        }
        const auto fd = grp::subgroup_from_mask(g, m.subgroups[f].mask & m.subgroups[d].mask);
        const std::size_t i = m.index_of(fd);
        const Matrix lhs = m.res_matrix(e, f) * m.ind_matrix(d, e);
        const Matrix term = m.ind_matrix(i, f) * m.res_matrix(d, i);
        if (lhs != term.scaled(Scalar(static_cast<long>(double_cosets)))) {
          out.double_coset = false;
          out.failures.push_back("double coset formula fails for D=" + label(d) + " F=" + label(f) + " E=" + label(e));
        }
      }

  for (std::size_t e = 0; e < n; ++e) {
    auto it = m.action.find({e, e});
    if (it == m.action.end() || it->second != Matrix::identity(la::Field::rational(), m.dims[e])) {
      out.unit_action = false;
      out.failures.push_back("[E/E] does not act as the identity on " + label(e));
    }
  }
  return out;
}

MackeyModule burnside_mackey(const grp::FiniteGroup& c) {
  if (!c.is_abelian()) fail(ErrorKind::domain, "built-in Mackey modules live on abelian groups");
  const auto lat = grp::subgroups(c);
  MackeyModule m;
  m.name = "burnside";
  m.ambient = c;
  m.subgroups = lat.subgroups;
  const std::size_t n = m.subgroups.size();
  std::vector<RingPtr> rings;
  for (std::size_t e = 0; e < n; ++e) {
    rings.push_back(m.ring(e));
    m.dims.push_back(rings[e]->rank());
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < rings[e]->rank(); ++k) {
      std::vector<Elem> parent;
      const auto emb = grp::subgroup_as_group(c, m.subgroups[e]);
      ElemSet mask = 0;
      for (Elem l : rings[e]->lattice().representative(k).elements) mask |= bit(emb.to_parent[l]);
      labels.push_back("[" + subgroup_label(m.subgroups[e], c.order()) + "/" +
                       subgroup_label(grp::subgroup_from_mask(c, mask), c.order()) + "]");
    }
    m.labels.push_back(std::move(labels));
  }
  auto to_matrix = [](const std::vector<BurnsideElem>& cols, std::size_t rows) {
    Matrix out(la::Field::rational(), rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < rows; ++i)
        if (sgn(cols[j].coeffs()[i]) != 0) out.set(i, j, q(cols[j].coeffs()[i]));
    return out;
  };
  for (std::size_t d = 0; d < n; ++d)
    for (std::size_t e = 0; e < n; ++e) {
      if (d == e || !m.is_subgroup(d, e)) continue;
      // D as a subgroup of E, in E's local indexing
      const auto emb_e = grp::subgroup_as_group(c, m.subgroups[e]);
      std::vector<Elem> local;
      for (Elem x : m.subgroups[d].elements) local.push_back(*emb_e.local(x));
      const Inclusion inc{rings[d], rings[e], grp::subgroup_as_group(emb_e.group, grp::make_subgroup(emb_e.group, local)).to_parent};
      std::vector<BurnsideElem> ind_cols, res_cols;
      for (std::size_t k = 0; k < rings[d]->rank(); ++k) ind_cols.push_back(induce(inc, BurnsideElem::basis(rings[d], k)));
      for (std::size_t k = 0; k < rings[e]->rank(); ++k) res_cols.push_back(restrict(inc, BurnsideElem::basis(rings[e], k)));
      m.ind.emplace(std::make_pair(d, e), to_matrix(ind_cols, rings[e]->rank()));
      m.res.emplace(std::make_pair(d, e), to_matrix(res_cols, rings[d]->rank()));
    }
  for (std::size_t e = 0; e < n; ++e) {
    const auto emb = grp::subgroup_as_group(c, m.subgroups[e]);
    for (std::size_t k = 0; k < rings[e]->rank(); ++k) {
      ElemSet mask = 0;
      for (Elem l : rings[e]->lattice().representative(k).elements) mask |= bit(emb.to_parent[l]);
      const std::size_t f = m.index_of(grp::subgroup_from_mask(c, mask));
      const BurnsideElem s = BurnsideElem::basis(rings[e], k);
      std::vector<BurnsideElem> cols;
      for (std::size_t j = 0; j < rings[e]->rank(); ++j) cols.push_back(s * BurnsideElem::basis(rings[e], j));
      m.action.emplace(std::make_pair(e, f), to_matrix(cols, rings[e]->rank()));
    }
  }
  return m;
}

// ---------------------------------------------------------------------------
// Artin defects

la::Subspace artin_defect_space(const MackeyModule& m, std::size_t c) {
  Matrix stacked(la::Field::rational(), m.dims[c], 0);
  for (std::size_t d = 0; d < m.subgroups.size(); ++d) {
    if (d == c || !m.is_subgroup(d, c)) continue;
    stacked = stacked.hstack(m.ind_matrix(d, c));
  }
  return la::cokernel(stacked);
}

la::Subspace theta_image(const MackeyModule& m, std::size_t c) {
  if (!m.subgroups[c].cyclic) fail(ErrorKind::domain, "theta_image needs a cyclic subgroup");
  const RingPtr r = m.ring(c);
  return la::image(m.action_matrix(c, theta(r)));
}

DefectReport artin_defect(const MackeyModule& m, std::size_t c) {
  Matrix stacked(la::Field::rational(), m.dims[c], 0);
  for (std::size_t d = 0; d < m.subgroups.size(); ++d) {
    if (d == c || !m.is_subgroup(d, c)) continue;
    stacked = stacked.hstack(m.ind_matrix(d, c));
  }
  DefectReport rep;
  rep.label = m.name + ":" + subgroup_label(m.subgroups[c], m.ambient.order()) + "(order " +
              std::to_string(m.subgroups[c].order()) + ")";
  rep.defect = la::cokernel(stacked);
  rep.theta_image = theta_image(m, c);
  rep.defect_dim = rep.defect.dim();
  rep.theta_dim = rep.theta_image.dim();
  const Matrix proj = la::cokernel_projection(stacked);
  rep.canonical_rank = la::rank(proj * rep.theta_image.basis());
  rep.isomorphic = rep.theta_dim == rep.defect_dim && rep.canonical_rank == rep.defect_dim;
  return rep;
}

}  // namespace burnhoch::burnside
