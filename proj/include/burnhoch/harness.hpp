#pragma once

// The verification suite: every check is a record with inputs, computed and
// expected values, where the expected value came from, and a verdict.

#include <cstddef>
#include <string>
#include <vector>

#include "burnhoch/cyclic.hpp"
#include "burnhoch/grp.hpp"
#include "json.hpp"

namespace burnhoch::harness {

inline constexpr const char* kVersion = "0.1.0";

struct SuiteConfig {
  std::vector<grp::GroupDescriptor> groups;
  /// 0 picks 4 for |G| <= 8 and 3 otherwise.
  std::size_t degree = 0;
  std::size_t cutoff = 3;
  std::size_t budget = cyclic::kDefaultBudget;
  std::string format = "json";
  std::size_t jobs = 1;
  /// Field and small-algebra checks that do not depend on a group.
  bool algebras = true;
  /// Directory holding fixtures.json and anchors.json.
  std::string data_dir;

  static SuiteConfig defaults();
  void validate() const;
  std::size_t degree_for(std::size_t order) const;
  nlohmann::json to_json() const;
};

enum class Verdict { pass, fail, skipped };
const char* to_string(Verdict v);

struct CheckRecord {
  std::string id;
  std::string kind;
  std::string anchor;
  std::string provenance;
  nlohmann::json inputs;
  nlohmann::json got;
  nlohmann::json want;
  Verdict verdict = Verdict::fail;
  std::string reason;
  double ms = 0;

  nlohmann::json to_json() const;
};

struct SuiteReport {
  std::string version = kVersion;
  nlohmann::json config;
  std::vector<CheckRecord> checks;
  std::string timestamp;

  /// pass iff every check passed; skipped checks make it incomplete.
  Verdict verdict() const;
  nlohmann::json to_json() const;
  std::string to_markdown() const;
  /// Exit code for the CLI: 0 pass, 1 failed check, 2 skipped checks only.
  int exit_code() const;
};

/// The report without wall-clock fields, for run-to-run comparison.
nlohmann::json comparable(const nlohmann::json& report);

SuiteReport run_suite(const SuiteConfig& config);

/// Writes fixtures.json into the data directory from the brute-force oracles.
void regen_fixtures(const std::string& data_dir);

}  // namespace burnhoch::harness
