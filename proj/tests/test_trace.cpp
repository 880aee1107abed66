#include <numeric>

#include "burnhoch/cyclic.hpp"
#include "burnhoch/error.hpp"
#include "burnhoch/trace.hpp"
#include "doctest.h"

using namespace burnhoch;
using namespace burnhoch::trace;
using grp::Elem;

namespace {

grp::FiniteGroup cyclic_group(std::size_t n) { return grp::build_group(grp::GroupDescriptor::cyclic(n)); }
grp::FiniteGroup named(const std::string& name) { return grp::build_group(grp::catalog_group(name)); }

GroupRingElem delta(const grp::FiniteGroup& g, Elem x, Rational c = 1) {
  GroupRingElem e(g.order());
  e[x] = c;
  return e;
}

// chi(x) = sum over h of e[h^-1 x^-1 h], summed over the diagonal
ClassFunction character_oracle(const grp::FiniteGroup& g, const ProjectiveIdem& p) {
  ClassFunction chi(g.classes().size());
  for (std::size_t c = 0; c < chi.size(); ++c) {
    const Elem xi = g.inv(g.classes()[c].front());
    for (std::size_t i = 0; i < p.n; ++i)
      for (Elem h = 0; h < g.order(); ++h) chi[c] += p.at(i, i)[g.mul(g.mul(g.inv(h), xi), h)];
  }
  return chi;
}

std::size_t divisor_count(std::size_t n) {
  std::size_t k = 0;
  for (std::size_t d = 1; d <= n; ++d) k += n % d == 0;
  return k;
}

std::vector<Rational> column(const la::Matrix& m, std::size_t j) {
  std::vector<Rational> out;
  for (const auto& s : m.dense_column(j)) out.push_back(s.rational());
  return out;
}

}  // namespace

TEST_CASE("hs trace of small idempotents") {
  const auto c2 = cyclic_group(2);
  GroupRingElem half(2, Rational(1, 2));
  const auto e = make_projective(c2, 1, {half}, "e");
  CHECK(hs_trace(c2, e) == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
  const auto one = make_projective(c2, 1, {delta(c2, 0)}, "1");
  const auto d = block_sum(c2, one, e);
  CHECK(hs_trace(c2, d) == std::vector<Rational>{Rational(3, 2), Rational(1, 2)});

  CHECK_THROWS_AS(make_projective(c2, 1, {delta(c2, 1)}), Error);
  CHECK_THROWS_AS(make_projective(c2, 2, {half}), Error);
}

TEST_CASE("hs trace is additive and conjugation invariant") {
  for (const auto& desc : grp::default_catalog()) {
    const auto g = grp::build_group(desc);
    const auto t = dennis_trace_matrix(g);
    for (std::size_t i = 0; i < t.projectives.size(); ++i) {
      const auto& e = t.projectives[i];
      const auto te = hs_trace(g, e);
      for (std::size_t j = 0; j < t.projectives.size(); j += 2) {
        const auto& f = t.projectives[j];
        const auto tf = hs_trace(g, f);
        const auto sum = block_sum(g, e, f);
        auto want = te;
        for (std::size_t k = 0; k < want.size(); ++k) want[k] += tf[k];
        CHECK(hs_trace(g, sum) == want);
        // swapping the blocks is conjugation by a permutation matrix
        CHECK(hs_trace(g, block_sum(g, f, e)) == want);
      }
      for (Elem u = 0; u < g.order(); ++u) {
        const auto conj = rep::group_ring_mul(g, rep::group_ring_mul(g, delta(g, u), e.at(0, 0)), delta(g, g.inv(u)));
        CHECK(hs_trace(g, make_projective(g, 1, {conj})) == te);
      }
    }
  }
}

TEST_CASE("dennis trace of QC2") {
  const auto t = dennis_trace_matrix(cyclic_group(2));
  REQUIRE(t.projectives.size() == 2);
  CHECK(column(t.matrix, 0) == std::vector<Rational>{Rational(1, 2), Rational(-1, 2)});
  CHECK(column(t.matrix, 1) == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
  CHECK(t.rank == 2);
  CHECK(t.injective());
}

TEST_CASE("dennis trace is injective over the catalog") {
  for (const auto& desc : grp::default_catalog()) {
    const auto g = grp::build_group(desc);
    const auto t = dennis_trace_matrix(g);
    CAPTURE(g.name());
    CHECK(t.injective());
    CHECK(t.matrix.rows() == g.classes().size());
    const auto v = character_crosscheck(t);
    CHECK(v.ok);
    CHECK(v.checked > 0);
    for (const auto& p : t.projectives) CHECK(projective_character(g, p) == character_oracle(g, p));
  }
  CHECK(dennis_trace_matrix(named("S3")).rank == 3);
}

TEST_CASE("cyclic idempotents carry the rational irreducible characters") {
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto c = cyclic_group(n);
    const auto t = dennis_trace_matrix(c);
    const auto k0 = rep::k0_cyclic(c);
    REQUIRE(t.projectives.size() == k0.basis.size());
    for (std::size_t i = 0; i < k0.basis.size(); ++i) CHECK(character_oracle(c, t.projectives[i]) == k0.basis[i]);
  }
}

TEST_CASE("theta commutes with the trace") {
  const auto trivial = theta_trace_check(cyclic_group(1));
  CHECK(trivial.ok());

  const auto r2 = theta_trace_check(cyclic_group(2));
  CHECK(r2.ok());
  // theta applied to the trivial module lands on half the class of the generator
  const auto img = r2.dtr * r2.theta_k0;
  CHECK(column(img, 1) == std::vector<Rational>{Rational(0), Rational(1, 2)});

  for (std::size_t n = 1; n <= 12; ++n) {
    const auto c = cyclic_group(n);
    const auto r = theta_trace_check(c);
    CAPTURE(n);
    CHECK(r.commutes);
    CHECK(r.theta_rank == 1);
    // theta acts on HH_0 as the projection onto the generators
    for (Elem x = 0; x < n; ++x) {
      const Rational want = c.elem_order(x) == n ? 1 : 0;
      CHECK(r.theta_hh0.at(x, x).rational() == want);
    }
  }
  CHECK_THROWS_AS(theta_trace_check(named("V4")), Error);
}

TEST_CASE("chern character decomposition for finite groups") {
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto r = chern_finite_check(cyclic_group(n));
    CAPTURE(n);
    CHECK(r.ok());
    CHECK(r.k0_sum == divisor_count(n));
    CHECK(r.hh0_sum == n);
  }
  const auto s3 = chern_finite_check(named("S3"));
  CHECK(s3.ok());
  CHECK(s3.k0_sum == 3);
  CHECK(s3.hh0_sum == 3);
  const auto d4 = chern_finite_check(named("D4"));
  CHECK(d4.ok());
  CHECK(d4.k0_sum == 5);
  CHECK(d4.hh0_sum == 5);
  for (const auto& desc : grp::default_catalog()) {
    const auto r = chern_finite_check(grp::build_group(desc));
    CAPTURE(desc.name);
    CHECK(r.ok());
    CHECK(r.failures.empty());
  }
}

TEST_CASE("traces lie in the image of HN_0") {
  for (const char* name : {"C6", "S3", "V4", "D4", "Q8"}) {
    const auto t = dennis_trace_matrix(named(name));
    const auto v = hn_image_check(t);
    CAPTURE(name);
    CHECK(v.ok);
    CHECK(v.checked == t.projectives.size());
  }
  // the image is all of HH_0 for a separable algebra
  const auto g = cyclic_group(3);
  const auto image = burnhoch::cyclic::hn0_image(burnhoch::cyclic::group_algebra(g, la::Field::rational()), 1);
  CHECK(image.dim() == 3);
}
