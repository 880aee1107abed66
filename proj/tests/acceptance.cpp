// One line per acceptance criterion, from a full run of the verification
// suite; exit status is nonzero when any criterion fails.

#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "burnhoch/grp.hpp"
#include "burnhoch/harness.hpp"

using namespace burnhoch;
using harness::CheckRecord;
using harness::Verdict;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> kinds;
  /// subjects that must be present, per kind
  std::map<std::string, std::set<std::string>> required;
  double limit_ms = 0;
};

std::string subject(const CheckRecord& c) {
  const auto open = c.id.find('[');
  return c.id.substr(open + 1, c.id.size() - open - 2);
}

std::set<std::string> catalog_names() {
  std::set<std::string> out;
  for (const auto& d : grp::default_catalog()) out.insert(grp::build_group(d).name());
  return out;
}

std::set<std::string> wrap(const std::set<std::string>& names) {
  std::set<std::string> out;
  for (const auto& n : names) out.insert("Q[" + n + "]");
  return out;
}

}  // namespace

int main() {
  const auto catalog = catalog_names();
  std::set<std::string> small, large, cyclic12, cyclic_catalog;
  for (const auto& d : grp::default_catalog()) {
    const auto g = grp::build_group(d);
    (g.order() <= 8 ? small : large).insert(g.name());
    if (d.kind == grp::GroupDescriptor::Kind::cyclic) cyclic_catalog.insert(g.name());
  }
  for (int n = 1; n <= 12; ++n) cyclic12.insert("C" + std::to_string(n));
  const std::set<std::string> fields{"Q", "Q(zeta_3)", "Q(zeta_4)"};
  std::size_t cyclic_classes = 0;
  for (const auto& d : grp::default_catalog())
    cyclic_classes += grp::subgroups(grp::build_group(d)).cyclic_classes.size();

  std::vector<Criterion> criteria = {
      {1, "table of marks equals fixed-point counts", {"burnside.marks"}, {{"burnside.marks", catalog}}, 5000},
      {2, "theta_C idempotent, supported at C, killed by restriction, partition of unity",
       {"burnside.theta"}, {{"burnside.theta", cyclic_catalog}}, 1000},
      {3, "theta image matches the Artin defect for A(-) and K_0(Q(-))", {"burnside.theta-vs-defect"}, {}, 0},
      {4, "theta_C K_0(QC) is a line fixed by Aut(C), |C| <= 12", {"rep.theta-line"}, {{"rep.theta-line", cyclic12}}, 0},
      {5, "Artin defect vanishes for non-cyclic groups",
       {"rep.artin-defect"}, {{"rep.artin-defect", {"V4", "S3", "D4", "Q8", "A4"}}}, 0},
      {6, "HH/HC/HP/HN dimension patterns",
       {"cyclic.hh", "cyclic.hh-blockwise", "cyclic.hh-field", "cyclic.hc-field", "cyclic.hp-field", "cyclic.hn-field"},
       {{"cyclic.hh", wrap(small)},
        {"cyclic.hh-blockwise", wrap(large)},
        {"cyclic.hc-field", fields},
        {"cyclic.hp-field", fields},
        {"cyclic.hn-field", fields}},
       300000},
      {7, "per-class HH equals centralizer homology",
       {"cyclic.decomposition"}, {{"cyclic.decomposition", {"Q[C6]", "Q[S3]", "Q[D4]"}}}, 0},
      {8, "Connes periodicity sequence exact", {"cyclic.connes"}, {{"cyclic.connes", fields}}, 0},
      {9, "Dennis trace injective, character cross-check",
       {"trace.dtr-rank", "trace.character-crosscheck"},
       {{"trace.dtr-rank", catalog}, {"trace.character-crosscheck", catalog}}, 0},
      {10, "Chern character bookkeeping and commuting square",
       {"trace.chern", "rep.k0-dim"}, {{"trace.chern", catalog}, {"rep.k0-dim", catalog}}, 0},
      {11, "b, B, t identities and grading", {"cyclic.identities", "cyclic.grading"},
       {{"cyclic.identities", fields}, {"cyclic.grading", wrap(small)}}, 0},
  };

  auto cfg = harness::SuiteConfig::defaults();
  cfg.jobs = 1;
  const auto report = harness::run_suite(cfg);

  int failed = 0;
  for (const auto& c : criteria) {
    std::size_t count = 0, bad = 0;
    double ms = 0;
    std::map<std::string, std::set<std::string>> seen;
    std::string first_bad;
    for (const auto& r : report.checks) {
      bool mine = false;
      for (const auto& k : c.kinds) mine = mine || r.kind == k;
      if (!mine) continue;
      ++count;
      ms += r.ms;
      seen[r.kind].insert(subject(r));
      if (r.verdict != Verdict::pass) {
        ++bad;
        if (first_bad.empty()) first_bad = r.id + " " + harness::to_string(r.verdict) + (r.reason.empty() ? "" : ": " + r.reason);
      }
    }
    std::string missing;
    for (const auto& [kind, subjects] : c.required)
      for (const auto& s : subjects)
        if (!seen[kind].count(s)) missing += " " + kind + "[" + s + "]";
    if (c.number == 3 && count != 2 * cyclic_classes) missing += " (expected " + std::to_string(2 * cyclic_classes) + " records)";
    const bool in_time = c.limit_ms == 0 || ms < c.limit_ms;
    const bool ok = count > 0 && bad == 0 && missing.empty() && in_time;
    failed += !ok;
    std::printf("criterion %2d: %s  %s (%zu checks, %.0f ms%s)", c.number, ok ? "PASS" : "FAIL", c.title.c_str(), count, ms,
                c.limit_ms > 0 ? (", limit " + std::to_string(static_cast<long>(c.limit_ms)) + " ms").c_str() : "");
    if (!first_bad.empty()) std::printf(" first failure: %s", first_bad.c_str());
    if (!missing.empty()) std::printf(" missing:%s", missing.c_str());
    std::printf("\n");
  }

  // a second run with different scheduling must give the same report
  auto again = cfg;
  again.jobs = 4;
  const auto second = harness::run_suite(again);
  const bool same = harness::comparable(report.to_json()).dump() == harness::comparable(second.to_json()).dump();
  failed += !same;
  std::printf("criterion 12: %s  verify --all twice gives identical reports (%zu checks, timestamps and timings excluded)\n",
              same ? "PASS" : "FAIL", report.checks.size());

  std::printf("%s: %d of 12 criteria failed\n", failed ? "FAIL" : "PASS", failed);
  return failed ? 1 : 0;
}
