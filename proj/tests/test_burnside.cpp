#include <random>
#include <set>

#include "burnhoch/burnside.hpp"
#include "burnhoch/error.hpp"
#include "doctest.h"

using namespace burnhoch;
using namespace burnhoch::burnside;
using grp::Elem;

namespace {

// |(G/K)^H| by listing the cosets of K and testing each against every h.
std::size_t fixed_cosets(const grp::FiniteGroup& g, const grp::SubgroupRec& h, const grp::SubgroupRec& k) {
  std::vector<std::set<Elem>> cosets;
  std::set<Elem> covered;
  for (Elem x = 0; x < g.order(); ++x) {
    if (covered.count(x)) continue;
    std::set<Elem> c;
    for (Elem y : k.elements) c.insert(g.mul(x, y));
    covered.insert(c.begin(), c.end());
    cosets.push_back(c);
  }
  std::size_t fixed = 0;
  for (const auto& c : cosets) {
    bool all = true;
    for (Elem a : h.elements) {
      std::set<Elem> moved;
      for (Elem x : c) moved.insert(g.mul(a, x));
      all = all && moved == c;
    }
    if (all) ++fixed;
  }
  return fixed;
}

RingPtr cyclic_ring(std::size_t n) { return BurnsideRing::make(grp::build_group(grp::GroupDescriptor::cyclic(n))); }

std::size_t class_of_order(const RingPtr& r, std::size_t order) {
  for (std::size_t i = 0; i < r->rank(); ++i)
    if (r->lattice().representative(i).order() == order) return i;
  FAIL("no subgroup of that order");
  return 0;
}

}  // namespace

TEST_CASE("table of marks agrees with fixed-point counting") {
  for (const auto& d : grp::default_catalog()) {
    const auto g = grp::build_group(d);
    const auto t = table_of_marks(g);
    CAPTURE(d.name);
    const std::size_t n = t.lattice.classes.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        CHECK(t.marks.at(i, j) ==
              la::Scalar(static_cast<long>(fixed_cosets(g, t.lattice.representative(i), t.lattice.representative(j)))));
    // triangular, diagonal |N_G H| / |H|
    for (std::size_t i = 0; i < n; ++i) {
      const auto& h = t.lattice.representative(i);
      CHECK(t.marks.at(i, i) == la::Scalar(static_cast<long>(grp::normalizer(g, h).order() / h.order())));
      for (std::size_t j = 0; j < i; ++j) CHECK(t.marks.at(i, j).is_zero());
    }
    CHECK(la::rank(t.marks) == n);
  }
}

TEST_CASE("table of marks examples") {
  const auto c1 = table_of_marks(grp::build_group(grp::GroupDescriptor::cyclic(1)));
  CHECK(c1.marks == la::Matrix::from_rows({{1}}));
  const auto c2 = table_of_marks(grp::build_group(grp::GroupDescriptor::cyclic(2)));
  CHECK(c2.marks == la::Matrix::from_rows({{2, 1}, {0, 1}}));
  const auto s3 = table_of_marks(grp::build_group(grp::catalog_group("S3")));
  // classes 1, C2, C3, S3; computed by the coset oracle above
  CHECK(s3.marks == la::Matrix::from_rows({{6, 3, 2, 1}, {0, 1, 0, 1}, {0, 0, 2, 1}, {0, 0, 0, 1}}));
}

TEST_CASE("theta examples") {
  const auto r1 = cyclic_ring(1);
  CHECK(theta(r1) == BurnsideElem::one(r1));

  const auto r2 = cyclic_ring(2);
  const auto t2 = theta(r2);
  CHECK(t2.coeffs() == std::vector<Rational>{Rational(-1, 2), 1});
  CHECK(t2.str() == "[C/C] - 1/2[C/e]");

  const auto r6 = cyclic_ring(6);
  const auto t6 = theta(r6);
  CHECK(t6.marks() == std::vector<Rational>{0, 0, 0, 1});
  std::size_t support = 0;
  for (const auto& c : t6.coeffs()) support += sgn(c) != 0;
  CHECK(support == 4);

  const auto s3 = BurnsideRing::make(grp::build_group(grp::catalog_group("S3")));
  CHECK_THROWS_AS(theta(s3), Error);
}

TEST_CASE("theta identities for cyclic groups up to order 12") {
  for (std::size_t n = 1; n <= 12; ++n) {
    CAPTURE(n);
    const auto ring = cyclic_ring(n);
    const auto t = theta(ring);
    CHECK(t * t == t);
    BurnsideElem sum = BurnsideElem::zero(ring);
    for (const auto& d : ring->lattice().subgroups) {
      const auto inc = include(ring, d);
      if (d.order() != n) CHECK(restrict(inc, t) == BurnsideElem::zero(inc.sub));
      sum = sum + induce(inc, theta(inc.sub)).scaled(Rational(d.order(), n));
    }
    CHECK(sum == BurnsideElem::one(ring));
  }
}

TEST_CASE("ind and res follow the mark formulas on cyclic groups") {
  for (std::size_t n : {4U, 6U, 12U}) {
    const auto ring = cyclic_ring(n);
    for (const auto& d : ring->lattice().subgroups) {
      const auto inc = include(ring, d);
      for (std::size_t k = 0; k < inc.sub->rank(); ++k) {
        const auto x = BurnsideElem::basis(inc.sub, k);
        const auto mx = x.marks();
        const auto mind = induce(inc, x).marks();
        for (std::size_t e = 0; e < ring->rank(); ++e) {
          const std::size_t eo = ring->lattice().representative(e).order();
          // subgroups of a cyclic group are determined by their order
          if (d.order() % eo == 0)
            CHECK(mind[e] == mx[class_of_order(inc.sub, eo)] * Rational(n / d.order()));
          else
            CHECK(sgn(mind[e]) == 0);
        }
      }
      for (std::size_t k = 0; k < ring->rank(); ++k) {
        const auto y = BurnsideElem::basis(ring, k);
        const auto my = y.marks();
        const auto mres = restrict(inc, y).marks();
        for (std::size_t e = 0; e < inc.sub->rank(); ++e)
          CHECK(mres[e] == my[class_of_order(ring, inc.sub->lattice().representative(e).order())]);
      }
    }
  }
}

TEST_CASE("Burnside products") {
  const auto r2 = cyclic_ring(2);
  const auto free = BurnsideElem::basis(r2, 0);
  CHECK(free * free == free.scaled(2));
  CHECK((free * free).marks() == std::vector<Rational>{4, 0});
  CHECK_THROWS_AS(free * BurnsideElem::one(cyclic_ring(3)), Error);
}

TEST_CASE("property: marks is a ring homomorphism") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> v(-4, 4);
  for (const auto& d : grp::default_catalog()) {
    const auto ring = BurnsideRing::make(grp::build_group(d));
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Rational> a(ring->rank()), b(ring->rank());
      for (auto& x : a) x = Rational(v(rng), 1 + (v(rng) + 4) % 3);
      for (auto& x : b) x = v(rng);
      const BurnsideElem x(ring, a), y(ring, b);
      const auto mx = x.marks(), my = y.marks(), mxy = (x * y).marks();
      for (std::size_t i = 0; i < mx.size(); ++i) CHECK(mxy[i] == mx[i] * my[i]);
    }
  }
}

TEST_CASE("Burnside Mackey functor") {
  for (std::size_t n : {1U, 2U, 3U, 4U, 6U, 8U, 12U}) {
    CAPTURE(n);
    const auto c = grp::build_group(grp::GroupDescriptor::cyclic(n));
    const auto m = burnside_mackey(c);
    const auto check = check_mackey_axioms(m);
    CHECK(check.ok());
    for (const auto& f : check.failures) MESSAGE(f);
    for (std::size_t i = 0; i < m.subgroups.size(); ++i) {
      const auto rep = artin_defect(m, i);
      CHECK(rep.isomorphic);
      CHECK(rep.theta_dim == rep.defect_dim);
      CHECK(rep.defect_dim == 1);
    }
  }
}

TEST_CASE("Artin defect of the Burnside functor at a prime order") {
  for (std::size_t p : {2U, 3U, 5U, 7U}) {
    const auto m = burnside_mackey(grp::build_group(grp::GroupDescriptor::cyclic(p)));
    const auto rep = artin_defect(m, m.subgroups.size() - 1);
    CHECK(rep.theta_dim == 1);
    CHECK(rep.defect_dim == 1);
    CHECK(rep.isomorphic);
  }
}

TEST_CASE("Mackey modules survive JSON and report missing pieces") {
  const auto m = burnside_mackey(grp::build_group(grp::GroupDescriptor::cyclic(6)));
  const auto back = MackeyModule::from_json(nlohmann::json::parse(m.to_json().dump()));
  CHECK(back.dims == m.dims);
  CHECK(back.ind == m.ind);
  CHECK(back.res == m.res);
  CHECK(back.action == m.action);
  CHECK(check_mackey_axioms(back).ok());

  auto broken = m;
  broken.ind.erase(broken.ind.begin());
  try {
    check_mackey_axioms(broken);
    FAIL("expected incomplete-mackey");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::incomplete_mackey);
  }

  auto wrong = m;
  auto& mat = wrong.res.begin()->second;
  mat = mat.scaled(la::Scalar(2));
  CHECK_FALSE(check_mackey_axioms(wrong).ok());
}
