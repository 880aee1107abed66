#include <fstream>

#include "burnhoch/burnside.hpp"
#include "burnhoch/error.hpp"
#include "burnhoch/harness.hpp"
#include "burnhoch/oracle.hpp"
#include "doctest.h"

using namespace burnhoch;
using nlohmann::json;

namespace {

grp::FiniteGroup named(const std::string& name) { return grp::build_group(grp::catalog_group(name)); }

harness::SuiteConfig single(const std::string& group) {
  auto cfg = harness::SuiteConfig::defaults();
  cfg.groups = {grp::GroupDescriptor::parse(group)};
  cfg.algebras = false;
  return cfg;
}

}  // namespace

TEST_CASE("oracle homology of small groups and algebras") {
  const auto c2 = grp::build_group(grp::GroupDescriptor::cyclic(2));
  CHECK(oracle::bar_homology(c2, {0, 1}, 3) == std::vector<std::size_t>{1, 0, 0});
  CHECK(oracle::bar_homology(c2, {0}, 3) == std::vector<std::size_t>{1, 0, 0});
  CHECK(oracle::hochschild_unnormalized(cyclic::parse_algebra("Q"), 3) == std::vector<std::size_t>{1, 0, 0});
  CHECK(oracle::hochschild_unnormalized(cyclic::parse_algebra("Q(zeta_3)"), 3) == std::vector<std::size_t>{2, 0, 0});
  // Q[x]/(x^2) has HH_n of dimension 1 in every positive degree over Q
  cyclic::AlgebraPresentation dual;
  dual.dim = 2;
  dual.labels = {"1", "x"};
  dual.mul = {{{{0, la::Scalar(1)}}, {{1, la::Scalar(1)}}}, {{{1, la::Scalar(1)}}, {}}};
  dual.unit = {{0, la::Scalar(1)}};
  CHECK(oracle::hochschild_unnormalized(dual, 4) == std::vector<std::size_t>{2, 1, 1, 1});
}

TEST_CASE("oracle counts on catalog groups") {
  const auto s3 = named("S3");
  CHECK(oracle::marks_by_counting(s3) ==
        std::vector<std::vector<long>>{{6, 3, 2, 1}, {0, 1, 0, 1}, {0, 0, 2, 1}, {0, 0, 0, 1}});
  CHECK(oracle::conjugacy_class_count(s3) == 3);
  CHECK(oracle::cyclic_subgroup_class_count(s3) == 3);
  CHECK(oracle::permutation_character_rank(s3) == 3);
  CHECK(oracle::generator_orbit_count(s3) == 3);
  const auto q8 = named("Q8");
  CHECK(oracle::conjugacy_class_count(q8) == 5);
  CHECK(oracle::cyclic_subgroup_class_count(q8) == 5);
  CHECK(oracle::generator_orbit_count(q8) == 5);
  CHECK(oracle::centralizer_homology(named("D4"), 3).size() == 5);
}

TEST_CASE("checked-in fixtures match the oracles") {
  const auto cfg = harness::SuiteConfig::defaults();
  std::ifstream in(cfg.data_dir + "/fixtures.json");
  REQUIRE(in);
  CHECK(json::parse(in) == oracle::regenerate());
}

TEST_CASE("single-group config holds only that group's checks") {
  const auto report = harness::run_suite(single("cyclic:4"));
  CHECK(report.verdict() == harness::Verdict::pass);
  CHECK(report.exit_code() == 0);
  REQUIRE(!report.checks.empty());
  for (const auto& c : report.checks) {
    CAPTURE(c.id);
    const bool about_c4 = c.id.find("[C4") != std::string::npos || c.id.find("[Q[C4]") != std::string::npos;
    CHECK(about_c4);
    CHECK(!c.anchor.empty());
    CHECK(!c.provenance.empty());
  }
}

TEST_CASE("report shape and determinism") {
  const auto cfg = single("S3");
  const auto a = harness::run_suite(cfg);
  auto other = cfg;
  other.jobs = 3;
  const auto b = harness::run_suite(other);
  const auto ja = a.to_json();
  for (const char* key : {"version", "config", "checks", "verdict"}) CHECK(ja.contains(key));
  for (const auto& c : ja["checks"])
    for (const char* key : {"id", "anchor", "inputs", "got", "want", "provenance", "verdict", "ms"}) CHECK(c.contains(key));
  CHECK(harness::comparable(ja) == harness::comparable(b.to_json()));
  CHECK(harness::comparable(ja).dump() == harness::comparable(b.to_json()).dump());
  CHECK(a.to_markdown().find("| burnside.marks[S3] | pass |") != std::string::npos);
}

TEST_CASE("failures and skips are reported as such") {
  auto cfg = single("S3");
  cfg.budget = 10;
  const auto r = harness::run_suite(cfg);
  bool skipped = false;
  for (const auto& c : r.checks)
    if (c.verdict == harness::Verdict::skipped) {
      skipped = true;
      CHECK(c.reason.find("capability") == 0);
    }
  CHECK(skipped);
  CHECK(r.verdict() != harness::Verdict::pass);
  CHECK(r.exit_code() != 0);
}

TEST_CASE("config validation and malformed groups") {
  auto cfg = harness::SuiteConfig::defaults();
  cfg.degree = 1;
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg.degree = 0;
  cfg.cutoff = 0;
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg.cutoff = 3;
  cfg.format = "xml";
  CHECK_THROWS_AS(cfg.validate(), Error);
  CHECK_THROWS_AS(grp::GroupDescriptor::parse("{\"kind\": \"cyclic\""), Error);
  CHECK(cfg.degree_for(8) == 4);
  CHECK(cfg.degree_for(12) == 3);
}
