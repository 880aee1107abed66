#include <algorithm>
#include <numeric>
#include <set>

#include "burnhoch/error.hpp"
#include "burnhoch/grp.hpp"
#include "doctest.h"

using namespace burnhoch;
using namespace burnhoch::grp;

namespace {

// Subgroup count by testing every subset for closure (orders <= 12).
std::size_t brute_force_subgroup_count(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::size_t count = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); mask += 2) {
    bool closed = true;
    for (Elem a = 0; a < n && closed; ++a) {
      if (!((mask >> a) & 1U)) continue;
      for (Elem b = 0; b < n && closed; ++b)
        if (((mask >> b) & 1U) && !((mask >> g.mul(a, b)) & 1U)) closed = false;
    }
    if (closed) ++count;
  }
  return count;
}

// Conjugacy classes of permutations, straight from the generators.
std::size_t perm_class_count(const GroupDescriptor& d) {
  using P = std::vector<std::size_t>;
  P id(d.degree);
  std::iota(id.begin(), id.end(), 0);
  auto mul = [](const P& a, const P& b) {
    P r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
    return r;
  };
  std::set<P> elems{id};
  bool grew = true;
  while (grew) {
    grew = false;
    for (const P& e : std::vector<P>(elems.begin(), elems.end()))
      for (const P& s : d.gens) grew |= elems.insert(mul(e, s)).second;
  }
  std::set<P> seen;
  std::size_t classes = 0;
  for (const P& e : elems) {
    if (seen.count(e)) continue;
    ++classes;
    for (const P& x : elems) {
      P xi(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) xi[x[i]] = i;
      seen.insert(mul(mul(x, e), xi));
    }
  }
  return classes;
}

}  // namespace

TEST_CASE("build_group examples") {
  const auto c6 = build_group(GroupDescriptor::cyclic(6));
  CHECK(c6.order() == 6);
  CHECK(c6.classes().size() == 6);

  const auto s3 = build_group(catalog_group("S3"));
  CHECK(s3.order() == 6);
  CHECK(s3.classes().size() == 3);
  CHECK(perm_class_count(catalog_group("S3")) == 3);

  const auto q8 = build_group(catalog_group("Q8"));
  CHECK(q8.order() == 8);
  CHECK(q8.classes().size() == 5);
  CHECK(perm_class_count(catalog_group("Q8")) == 5);
  CHECK_FALSE(q8.is_abelian());
}

TEST_CASE("build_group rejects invalid input") {
  GroupDescriptor bad;
  bad.kind = GroupDescriptor::Kind::table;
  bad.table = {{0, 1, 2}, {1, 0, 2}, {2, 2, 0}};
  CHECK_THROWS_AS(build_group(bad), Error);
  // Latin square with identity 0 that is not associative
  bad.table = {{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  try {
    build_group(bad);
    FAIL("expected validation error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::validation);
  }
  // S_7 closure exceeds the default bound of 48
  CHECK_THROWS_AS(build_group(GroupDescriptor::perm("S7", 7, {{1, 2, 3, 4, 5, 6, 0}, {1, 0, 2, 3, 4, 5, 6}})),
                  Error);
  CHECK_THROWS_AS(GroupDescriptor::parse("{\"kind\": 3"), Error);
  CHECK_THROWS_AS(GroupDescriptor::parse("{\"kind\": \"wreath\"}"), Error);
}

TEST_CASE("descriptor JSON") {
  const auto d = GroupDescriptor::parse(R"({"kind":"perm","degree":3,"gens":[[1,0,2],[1,2,0]]})");
  CHECK(build_group(d).order() == 6);
  CHECK(build_group(GroupDescriptor::parse("cyclic:5")).order() == 5);
  CHECK(GroupDescriptor::from_json(catalog_group("D4").to_json()).gens == catalog_group("D4").gens);
  const auto t = GroupDescriptor::parse(R"({"kind":"table","table":[[0,1],[1,0]]})");
  CHECK(build_group(t).order() == 2);
}

TEST_CASE("catalog invariants") {
  for (const auto& d : default_catalog()) {
    const auto g = build_group(d);
    CAPTURE(d.name);
    // class equation and |[g]| |Z(g)| = |G|
    std::size_t total = 0;
    for (const auto& cls : g.classes()) total += cls.size();
    CHECK(total == g.order());
    for (Elem x = 0; x < g.order(); ++x)
      CHECK(g.classes()[g.class_of(x)].size() * element_centralizer(g, x).order() == g.order());

    const auto lat = subgroups(g);
    std::set<ElemSet> masks;
    for (const auto& h : lat.subgroups) {
      CHECK(g.order() % h.order() == 0);
      CHECK(masks.insert(h.mask).second);
      CHECK_NOTHROW(make_subgroup(g, h.elements));
    }
    if (g.order() <= 12) CHECK(lat.subgroups.size() == brute_force_subgroup_count(g));
    std::size_t members = 0;
    for (const auto& cls : lat.classes) members += cls.size();
    CHECK(members == lat.subgroups.size());
  }
}

TEST_CASE("subgroup examples") {
  const auto c6 = subgroups(build_group(GroupDescriptor::cyclic(6)));
  CHECK(c6.subgroups.size() == 4);
  CHECK(c6.classes.size() == 4);
  CHECK(c6.cyclic_classes.size() == 4);

  const auto s3 = subgroups(build_group(catalog_group("S3")));
  CHECK(s3.subgroups.size() == 6);
  CHECK(s3.classes.size() == 4);
  CHECK(s3.cyclic_classes.size() == 3);

  const auto v4 = subgroups(build_group(catalog_group("V4")));
  CHECK(v4.subgroups.size() == 5);

  const auto d4 = subgroups(build_group(catalog_group("D4")));
  CHECK(d4.subgroups.size() == 10);
  CHECK(d4.classes.size() == 8);
  CHECK(d4.cyclic_classes.size() == 5);

  const auto a4 = build_group(catalog_group("A4"));
  CHECK(subgroups(a4).subgroups.size() == 10);

  // canonical representative is the lexicographically least conjugate
  for (const auto& cls : d4.classes)
    for (std::size_t idx : cls)
      CHECK(d4.subgroups[cls.front()].elements <= d4.subgroups[idx].elements);
}

TEST_CASE("subgroup enumeration is capped") {
  const auto c30 = build_group(GroupDescriptor::cyclic(30));
  try {
    subgroups(c30);
    FAIL("expected capability error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::capability);
  }
}

TEST_CASE("weyl examples") {
  SUBCASE("abelian ambient") {
    const auto g = build_group(GroupDescriptor::cyclic(6));
    for (const auto& h : subgroups(g).subgroups) {
      const auto w = weyl(g, h);
      CHECK(w.weyl.order() == 1);
      CHECK(w.normalizer.order() == 6);
    }
  }
  SUBCASE("S3 and C3") {
    const auto g = build_group(catalog_group("S3"));
    const auto lat = subgroups(g);
    const SubgroupRec* c3 = nullptr;
    for (const auto& h : lat.subgroups)
      if (h.order() == 3) c3 = &h;
    REQUIRE(c3 != nullptr);
    const auto w = weyl(g, *c3);
    CHECK(w.weyl.order() == 2);
    REQUIRE(w.action.size() == 2);
    CHECK(w.action[0].exponent == 1);
    CHECK(w.action[1].exponent == 2);  // inversion
    for (const auto& aut : w.action)
      for (const auto& [a, b] : aut.map) CHECK(b == g.pow(a, static_cast<long>(aut.exponent)));
  }
  SUBCASE("D4 and its center") {
    const auto g = build_group(catalog_group("D4"));
    const auto lat = subgroups(g);
    for (const auto& h : lat.subgroups) {
      if (h.order() != 2 || lat.classes[lat.class_of_subgroup(h)].size() != 1) continue;
      const auto w = weyl(g, h);
      CHECK(w.centralizer.order() == 8);
      CHECK(w.weyl.order() == 1);
    }
  }
  SUBCASE("abelian H: N/Z = W") {
    for (const auto& d : default_catalog()) {
      const auto g = build_group(d);
      for (const auto& h : subgroups(g).subgroups) {
        const auto w = weyl(g, h);
        CHECK(w.normalizer.order() % w.h_times_centralizer.order() == 0);
        if (h.cyclic) CHECK(w.weyl.order() * w.centralizer.order() == w.normalizer.order());
      }
    }
  }
  SUBCASE("non-closed input") {
    const auto g = build_group(catalog_group("S3"));
    SubgroupRec bogus;
    bogus.elements = {0, 1, 2};
    bogus.mask = 0b111;
    CHECK_THROWS_AS(weyl(g, bogus), Error);
  }
}
