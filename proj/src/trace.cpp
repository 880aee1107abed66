#include "burnhoch/trace.hpp"

#include "burnhoch/burnside.hpp"
#include "burnhoch/cyclic.hpp"
#include "burnhoch/error.hpp"

namespace burnhoch::trace {

using grp::Elem;
using la::Matrix;
using la::Scalar;

namespace {

bool is_cyclic(const grp::FiniteGroup& g) {
  for (Elem x = 0; x < g.order(); ++x)
    if (g.elem_order(x) == g.order()) return true;
  return false;
}

GroupRingElem lift(const grp::Embedded& h, const GroupRingElem& local, std::size_t order) {
  GroupRingElem out(order);
  for (Elem x = 0; x < local.size(); ++x) out[h.to_parent[x]] = local[x];
  return out;
}

Matrix column_matrix(const std::vector<std::vector<Rational>>& cols, std::size_t rows) {
  Matrix m(la::Field::rational(), rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i)
      if (sgn(cols[j][i]) != 0) m.set(i, j, Scalar(cols[j][i]));
  return m;
}

std::string kernel_label(const grp::SubgroupRec& d, std::size_t order) {
  return "ker=" + burnside::subgroup_label(d, order);
}

// dim of V / span{(w - 1) v} for a W-stable V given by the columns of `basis`
std::size_t coinvariant_dim(const Matrix& basis, const std::vector<Matrix>& actions) {
  const auto v = la::Subspace::span(basis);
  std::vector<la::Vec> moved;
  for (const auto& w : actions) {
    const Matrix d = (w - Matrix::identity(la::Field::rational(), w.rows())) * basis;
    for (std::size_t c = 0; c < d.cols(); ++c) moved.push_back(d.dense_column(c));
  }
  const auto m = la::Subspace::span(la::Field::rational(), basis.rows(), moved);
  if (!v.contains(m)) fail(ErrorKind::validation, "subspace is not stable under the Weyl action");
  return v.dim() - m.dim();
}

// permutation matrix of c -> c^t on the elements of a cyclic group
Matrix power_map(const grp::FiniteGroup& c, std::size_t t) {
  Matrix m(la::Field::rational(), c.order(), c.order());
  for (Elem x = 0; x < c.order(); ++x) m.set(c.pow(x, static_cast<long>(t)), x, Scalar(1));
  return m;
}

}  // namespace

void Verdict::expect(bool cond, const std::string& what) {
  ++checked;
  if (!cond) {
    ok = false;
    failures.push_back(what);
  }
}

std::vector<GroupRingElem> matrix_mul(const grp::FiniteGroup& g, std::size_t n, const std::vector<GroupRingElem>& a,
                                      const std::vector<GroupRingElem>& b) {
  std::vector<GroupRingElem> out(n * n, GroupRingElem(g.order()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const auto p = rep::group_ring_mul(g, a[i * n + k], b[k * n + j]);
        for (Elem x = 0; x < g.order(); ++x) out[i * n + j][x] += p[x];
      }
  return out;
}

ProjectiveIdem make_projective(const grp::FiniteGroup& g, std::size_t n, std::vector<GroupRingElem> entries,
                               std::string label) {
  if (entries.size() != n * n) fail(ErrorKind::validation, "projective: expected n*n entries");
  for (const auto& e : entries)
    if (e.size() != g.order()) fail(ErrorKind::validation, "projective: entry is not an element of QG");
  if (matrix_mul(g, n, entries, entries) != entries) fail(ErrorKind::validation, "projective: matrix is not idempotent");
  return {n, std::move(entries), std::move(label)};
}

ProjectiveIdem block_sum(const grp::FiniteGroup& g, const ProjectiveIdem& e, const ProjectiveIdem& f) {
  const std::size_t n = e.n + f.n;
  std::vector<GroupRingElem> entries(n * n, GroupRingElem(g.order()));
  for (std::size_t i = 0; i < e.n; ++i)
    for (std::size_t j = 0; j < e.n; ++j) entries[i * n + j] = e.at(i, j);
  for (std::size_t i = 0; i < f.n; ++i)
    for (std::size_t j = 0; j < f.n; ++j) entries[(i + e.n) * n + j + e.n] = f.at(i, j);
  return make_projective(g, n, std::move(entries), "diag(" + e.label + "," + f.label + ")");
}

std::vector<Rational> hs_trace(const grp::FiniteGroup& g, const ProjectiveIdem& e) {
  make_projective(g, e.n, e.entries);
  std::vector<Rational> out(g.classes().size());
  for (std::size_t i = 0; i < e.n; ++i)
    for (Elem x = 0; x < g.order(); ++x) out[g.class_of(x)] += e.at(i, i)[x];
  return out;
}

ClassFunction projective_character(const grp::FiniteGroup& g, const ProjectiveIdem& e) {
  ClassFunction chi(g.classes().size());
  for (std::size_t c = 0; c < chi.size(); ++c) {
    const Elem x = g.classes()[c].front();
    // basis vectors h at slot i of (QG)^n; x (h eps_i) e has slot i equal to x h e_ii
    for (std::size_t i = 0; i < e.n; ++i)
      for (Elem h = 0; h < g.order(); ++h) {
        GroupRingElem xh(g.order());
        xh[g.mul(x, h)] = 1;
        chi[c] += rep::group_ring_mul(g, xh, e.at(i, i))[h];
      }
  }
  return chi;
}

TraceMatrix dennis_trace_matrix(const grp::FiniteGroup& g) {
  TraceMatrix t;
  t.group = g;
  for (const auto& cls : g.classes()) t.target.push_back(cls.front() == 0 ? "[e]" : "[g" + std::to_string(cls.front()) + "]");
  if (is_cyclic(g)) {
    for (auto& ci : rep::central_idempotents(g))
      t.projectives.push_back(make_projective(g, 1, {ci.element}, "e[" + kernel_label(ci.kernel, g.order()) + "]"));
  } else {
    const auto lat = grp::subgroups(g);
    for (std::size_t cls : lat.cyclic_classes) {
      const auto& c = lat.representative(cls);
      const auto emb = grp::subgroup_as_group(g, c);
      for (auto& ci : rep::central_idempotents(emb.group))
        t.projectives.push_back(make_projective(g, 1, {lift(emb, ci.element, g.order())},
                                                "QG e[" + burnside::subgroup_label(c, g.order()) + "," +
                                                    kernel_label(ci.kernel, emb.group.order()) + "]"));
    }
  }
  std::vector<std::vector<Rational>> cols;
  for (const auto& p : t.projectives) {
    t.source.push_back(p.label);
    cols.push_back(hs_trace(g, p));
  }
  t.matrix = column_matrix(cols, g.classes().size());
  t.rank = la::rank(t.matrix);
  t.k0_dim = rep::k0_group(g).dim();
  return t;
}

Verdict character_crosscheck(const TraceMatrix& t) {
  Verdict v;
  const auto& g = t.group;
  const auto k0 = rep::k0_group(g);
  for (std::size_t j = 0; j < t.projectives.size(); ++j) {
    const auto chi = projective_character(g, t.projectives[j]);
    for (std::size_t c = 0; c < g.classes().size(); ++c) {
      const Elem x = g.classes()[c].front();
      const Rational want = chi[g.class_of(g.inv(x))] * static_cast<long>(g.classes()[c].size()) / static_cast<long>(g.order());
      v.expect(t.matrix.at(c, j).rational() == want, t.source[j] + " at " + t.target[c]);
    }
    v.expect(k0.k0.contains(rep::to_vec(chi)), t.source[j] + ": character outside K_0(QG) (x) Q");
  }
  return v;
}

Matrix hh0_action(const burnside::BurnsideElem& x) {
  const auto& ring = *x.ring();
  const auto& c = ring.group();
  if (!c.is_abelian()) fail(ErrorKind::domain, "hh0_action needs an abelian group");
  Matrix m(la::Field::rational(), c.order(), c.order());
  for (Elem e = 0; e < c.order(); ++e) {
    Rational s = 0;
    for (std::size_t cls = 0; cls < ring.rank(); ++cls) {
      const auto& d = ring.lattice().representative(cls);
      if (d.contains(e)) s += x.coeffs()[cls] * static_cast<long>(c.order() / d.order());
    }
    if (sgn(s) != 0) m.set(e, e, Scalar(s));
  }
  return m;
}

ThetaTraceReport theta_trace_check(const grp::FiniteGroup& c) {
  if (!is_cyclic(c)) fail(ErrorKind::domain, "theta_trace_check needs a cyclic group");
  ThetaTraceReport r;
  const auto t = dennis_trace_matrix(c);
  r.dtr = t.matrix;
  const auto k0 = rep::k0_cyclic(c);
  bool bases_match = k0.basis.size() == t.projectives.size();
  for (std::size_t i = 0; bases_match && i < k0.basis.size(); ++i)
    bases_match = projective_character(c, t.projectives[i]) == k0.basis[i];
  const auto m = rep::rep_mackey(c);
  const std::size_t top = m.subgroups.size() - 1;
  const auto ring = burnside::BurnsideRing::make(c);
  const auto th = burnside::theta(ring);
  r.theta_k0 = m.action_matrix(top, burnside::theta(m.ring(top)));
  r.theta_hh0 = hh0_action(th);
  r.commutes = bases_match && r.dtr * r.theta_k0 == r.theta_hh0 * r.dtr;
  r.theta_rank = la::rank(r.dtr * r.theta_k0);
  return r;
}

bool ChernReport::ok() const {
  return failures.empty() && k0_sum == k0_dim && hh0_sum == hh0_dim && k0_dim == cyclic_classes && square_commutes &&
         k0_assembly_rank == k0_dim && hh0_assembly_rank == hh0_dim;
}

ChernReport chern_finite_check(const grp::FiniteGroup& g) {
  ChernReport r;
  const auto lat = grp::subgroups(g);
  r.cyclic_classes = lat.cyclic_classes.size();
  r.k0_dim = rep::k0_group(g).dim();
  r.hh0_dim = g.classes().size();
  r.square_commutes = true;
  std::vector<la::Vec> k0_assembly, hh0_assembly;
  for (std::size_t cls : lat.cyclic_classes) {
    const auto& sub = lat.representative(cls);
    const auto emb = grp::subgroup_as_group(g, sub);
    const auto& c = emb.group;
    const std::string name = burnside::subgroup_label(sub, g.order());
    const auto wd = grp::weyl(g, sub);

    // theta_C on K_0(QC) (x) Q, in the character basis
    const auto m = rep::rep_mackey(c);
    const std::size_t top = m.subgroups.size() - 1;
    const auto img = burnside::theta_image(m, top);
    const auto k0 = rep::k0_cyclic(c);
    const Matrix chars = column_matrix(k0.basis, c.classes().size());
    const Matrix theta_chars = chars * img.basis();
    std::vector<Matrix> k_actions, h_actions;
    for (const auto& a : wd.action) {
      // class functions of the abelian group c are indexed by elements
      Matrix tw = power_map(c, a.exponent).transpose();
      k_actions.push_back(tw);
      h_actions.push_back(power_map(c, a.exponent));
    }
    r.k0_sum += coinvariant_dim(theta_chars, k_actions);

    const auto ring = burnside::BurnsideRing::make(c);
    const Matrix theta_hh = hh0_action(burnside::theta(ring));
    const auto hh_img = la::image(theta_hh);
    r.hh0_sum += coinvariant_dim(hh_img.basis(), h_actions);

    // the square: dtr_G o ind = ind o dtr_C on the theta image
    const auto t = dennis_trace_matrix(c);
    const auto idems = rep::central_idempotents(c);
    for (std::size_t col = 0; col < img.dim(); ++col) {
      const auto v = img.basis().dense_column(col);
      std::vector<Rational> via_g(g.classes().size()), via_c(g.classes().size());
      for (std::size_t d = 0; d < v.size(); ++d) {
        if (v[d].is_zero()) continue;
        const auto pg = make_projective(g, 1, {lift(emb, idems[d].element, g.order())});
        const auto tg = hs_trace(g, pg);
        for (std::size_t k = 0; k < tg.size(); ++k) via_g[k] += v[d].rational() * tg[k];
      }
      const auto dc = t.matrix * Matrix::from_columns(la::Field::rational(), v.size(), {v});
      for (Elem x = 0; x < c.order(); ++x) via_c[g.class_of(emb.to_parent[x])] += dc.at(x, 0).rational();
      if (via_g != via_c) {
        r.square_commutes = false;
        r.failures.push_back("trace square does not commute at " + name);
      }
    }

    for (std::size_t col = 0; col < theta_chars.cols(); ++col)
      k0_assembly.push_back(rep::to_vec(rep::induce(g, emb, rep::from_vec(theta_chars.dense_column(col)))));
    for (std::size_t col = 0; col < hh_img.dim(); ++col) {
      la::Vec v(g.classes().size(), Scalar(0));
      for (const auto& [x, s] : hh_img.basis().column(col)) v[g.class_of(emb.to_parent[x])] += s;
      hh0_assembly.push_back(std::move(v));
    }
  }
  r.k0_assembly_rank = la::Subspace::span(la::Field::rational(), g.classes().size(), k0_assembly).dim();
  r.hh0_assembly_rank = la::Subspace::span(la::Field::rational(), g.classes().size(), hh0_assembly).dim();
  return r;
}

Verdict hn_image_check(const TraceMatrix& t, std::size_t cutoff) {
  Verdict v;
  const auto a = cyclic::group_algebra(t.group, la::Field::rational());
  const auto image = cyclic::hn0_image(a, cutoff);
  for (const auto& p : t.projectives) {
    la::Vec tr(t.group.order(), Scalar(0));
    for (std::size_t i = 0; i < p.n; ++i)
      for (Elem x = 0; x < t.group.order(); ++x) tr[x] += Scalar(p.at(i, i)[x]);
    v.expect(image.contains(tr), p.label + ": trace outside the image of HN_0");
  }
  return v;
}

}  // namespace burnhoch::trace
