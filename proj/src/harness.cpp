#include "burnhoch/harness.hpp"

#include <atomic>
#include <chrono>
#include <ctime>
#include <fstream>
#include <functional>
#include <iomanip>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "burnhoch/burnside.hpp"
#include "burnhoch/error.hpp"
#include "burnhoch/oracle.hpp"
#include "burnhoch/rep.hpp"
#include "burnhoch/trace.hpp"

#ifndef BURNHOCH_DATA_DIR
#define BURNHOCH_DATA_DIR "data"
#endif

namespace burnhoch::harness {

using nlohmann::json;

namespace {

struct Outcome {
  Outcome() = default;
  Outcome(json in, json g, json w) : inputs(std::move(in)), got(std::move(g)), want(std::move(w)) {}

  json inputs = json::object();
  json got;
  json want;
  bool extra_ok = true;
  std::string reason;
};

struct Task {
  std::string kind;
  std::string subject;
  std::function<Outcome()> run;
};

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::parse, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    fail(ErrorKind::parse, path + ": " + e.what());
  }
}

std::vector<std::size_t> field_pattern(std::size_t d, std::size_t len, bool periodic) {
  std::vector<std::size_t> out(len, 0);
  for (std::size_t i = 0; i < len; i += 2)
    if (periodic || i == 0) out[i] = d;
  return out;
}

std::vector<std::size_t> units(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t t = 1; t <= n; ++t)
    if (std::gcd(t, n) == 1) out.push_back(t % n);
  return out;
}

bool is_cyclic(const grp::FiniteGroup& g) {
  for (grp::Elem x = 0; x < g.order(); ++x)
    if (g.elem_order(x) == g.order()) return true;
  return false;
}

std::vector<std::vector<long>> integer_matrix(const la::Matrix& m) {
  std::vector<std::vector<long>> out(m.rows(), std::vector<long>(m.cols(), 0));
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (const auto& [r, s] : m.column(c)) out[r][c] = s.rational().get_num().get_si();
  return out;
}

json identity_json(const cyclic::IdentityCheck& c) { return {{"checked", c.checked}, {"failures", c.failures}}; }

std::string iso_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

// ---- checks that depend on one group ------------------------------------

Outcome theta_line(const grp::FiniteGroup& c) {
  Outcome o;
  o.inputs = {{"order", c.order()}};
  const auto m = rep::rep_mackey(c);
  const std::size_t top = m.subgroups.size() - 1;
  const auto img = burnside::theta_image(m, top);
  const auto k0 = rep::k0_cyclic(c);
  std::size_t moved = 0;
  for (std::size_t col = 0; col < img.dim(); ++col) {
    rep::ClassFunction f(c.classes().size());
    const auto v = img.basis().dense_column(col);
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t x = 0; x < f.size(); ++x) f[x] += v[i].rational() * k0.basis[i][x];
    for (std::size_t t : units(c.order()))
      if (rep::twist(c, f, t) != f) ++moved;
  }
  o.got = {{"dim", img.dim()}, {"moved_by_automorphisms", moved}};
  o.want = {{"dim", 1}, {"moved_by_automorphisms", 0}};
  return o;
}

Outcome theta_idempotent(const grp::FiniteGroup& c) {
  Outcome o;
  o.inputs = {{"order", c.order()}};
  const auto ring = burnside::BurnsideRing::make(c);
  const auto t = burnside::theta(ring);
  std::vector<la::Rational> delta(ring->rank(), 0);
  delta.back() = 1;
  bool res_zero = true;
  auto sum = burnside::BurnsideElem::zero(ring);
  for (std::size_t cls = 0; cls < ring->rank(); ++cls) {
    const auto& d = ring->lattice().representative(cls);
    const auto inc = burnside::include(ring, d);
    if (d.order() != c.order()) res_zero = res_zero && burnside::restrict(inc, t) == burnside::BurnsideElem::zero(inc.sub);
    sum = sum + burnside::induce(inc, burnside::theta(inc.sub))
                    .scaled(la::Rational(static_cast<long>(d.order()), static_cast<long>(c.order())));
  }
  o.got = {{"idempotent", t * t == t},
           {"marks_are_delta", t.marks() == delta},
           {"restrictions_vanish", res_zero},
           {"partition_of_unity", sum == burnside::BurnsideElem::one(ring)},
           {"theta", t.str()}};
  o.want = o.got;
  for (const char* key : {"idempotent", "marks_are_delta", "restrictions_vanish", "partition_of_unity"}) o.want[key] = true;
  return o;
}

Outcome theta_vs_defect(const burnside::MackeyModule& m) {
  Outcome o;
  const std::size_t top = m.subgroups.size() - 1;
  const auto r = burnside::artin_defect(m, top);
  o.inputs = {{"module", m.name}, {"order", m.ambient.order()}};
  o.got = {{"theta_dim", r.theta_dim}, {"defect_dim", r.defect_dim}, {"canonical_rank", r.canonical_rank}};
  o.want = {{"theta_dim", 1}, {"defect_dim", 1}, {"canonical_rank", 1}};
  o.extra_ok = r.isomorphic;
  return o;
}

void group_tasks(std::vector<Task>& tasks, const grp::FiniteGroup& g, const json& fx, const SuiteConfig& cfg) {
  const std::string name = g.name();
  const std::size_t order = g.order();
  const bool cyc = is_cyclic(g);
  const std::size_t n = cfg.degree_for(order);
  const std::size_t budget = cfg.budget;
  const json gin = {{"group", name}, {"order", order}};
  auto add = [&](std::string kind, std::string subject, std::function<Outcome()> f) {
    tasks.push_back({std::move(kind), std::move(subject), std::move(f)});
  };

  add("grp.class-equation", name, [g, gin] {
    Outcome o;
    o.inputs = gin;
    std::size_t total = 0;
    bool divides = true;
    for (const auto& cls : g.classes()) {
      total += cls.size();
      divides = divides && g.order() % cls.size() == 0;
    }
    o.got = {{"sum_of_class_sizes", total}, {"sizes_divide_order", divides}};
    o.want = {{"sum_of_class_sizes", g.order()}, {"sizes_divide_order", true}};
    return o;
  });
  add("grp.conjugacy-classes", name, [g, gin, fx] {
    return Outcome{gin, g.classes().size(), fx.at("con")};
  });
  add("burnside.marks", name, [g, gin, fx] {
    return Outcome{gin, integer_matrix(burnside::table_of_marks(g).marks), fx.at("marks")};
  });
  if (cyc) {
    add("burnside.theta", name, [g] { return theta_idempotent(g); });
    add("burnside.mackey-axioms", name, [g, gin] {
      Outcome o;
      o.inputs = gin;
      const auto a = burnside::check_mackey_axioms(burnside::burnside_mackey(g));
      const auto k = burnside::check_mackey_axioms(rep::rep_mackey(g));
      o.got = {{"burnside", a.failures}, {"representation", k.failures}};
      o.want = {{"burnside", json::array()}, {"representation", json::array()}};
      o.extra_ok = a.ok() && k.ok();
      return o;
    });
    if (order <= 12) add("rep.theta-line", name, [g] { return theta_line(g); });
  } else {
    add("rep.artin-defect", name, [g, gin] {
      const auto d = rep::artin_defect_k0(g);
      Outcome o;
      o.inputs = gin;
      o.got = {{"ambient_dim", d.ambient_dim}, {"induced_dim", d.induced_dim}, {"defect_dim", d.defect_dim()}};
      o.want = o.got;
      o.want["defect_dim"] = 0;
      return o;
    });
  }
  const auto lat = grp::subgroups(g);
  for (std::size_t cls : lat.cyclic_classes) {
    const auto& sub = lat.representative(cls);
    const std::string subject = name + ":" + burnside::subgroup_label(sub, order);
    const auto c = grp::subgroup_as_group(g, sub).group;
    add("burnside.theta-vs-defect", subject + ":burnside", [c] { return theta_vs_defect(burnside::burnside_mackey(c)); });
    add("burnside.theta-vs-defect", subject + ":representation", [c] { return theta_vs_defect(rep::rep_mackey(c)); });
  }
  add("rep.k0-dim", name, [g, gin, fx] {
    Outcome o;
    o.inputs = gin;
    o.got = {{"k0_dim", rep::k0_group(g).dim()}, {"cyclic_classes", grp::subgroups(g).cyclic_classes.size()}};
    o.want = {{"k0_dim", fx.at("k0_dim")}, {"cyclic_classes", fx.at("cyclic_classes")}};
    o.extra_ok = o.got["k0_dim"] == o.got["cyclic_classes"];
    return o;
  });

  const json hin = {{"group", name}, {"order", order}, {"degree", n}};
  const std::size_t con = fx.at("con").get<std::size_t>();
  if (order <= 8) {
    add("cyclic.hh", "Q[" + name + "]", [g, hin, n, con, budget] {
      const auto r = cyclic::hochschild(cyclic::group_algebra(g, la::Field::rational()), n, budget);
      return Outcome{hin, r.dims, field_pattern(con, n, false)};
    });
  } else {
    add("cyclic.hh-blockwise", "Q[" + name + "]", [g, hin, n, con, budget] {
      const auto r = cyclic::conjugacy_split_hh(g, la::Field::rational(), n, budget);
      Outcome o{hin, r.dims, field_pattern(con, n, false)};
      for (const auto& row : r.per_class) o.inputs["blocks"].push_back(row.label);
      return o;
    });
  }
  if (fx.contains("hh")) {
    add("cyclic.hh-oracle", "Q[" + name + "]", [g, gin, fx, budget] {
      const std::size_t m = fx.at("hh").size();
      Outcome o{gin, cyclic::hochschild(cyclic::group_algebra(g, la::Field::rational()), m, budget).dims, fx.at("hh")};
      o.inputs["degree"] = m;
      return o;
    });
  }
  if (order <= 8) {
    add("cyclic.decomposition", "Q[" + name + "]", [g, gin, fx, budget] {
      const auto d = cyclic::decomposition_check(g, la::Field::rational(), 3, budget);
      Outcome o;
      o.inputs = gin;
      o.inputs["degree"] = 3;
      o.got = json::array();
      for (const auto& row : d.rows) o.got.push_back(row.hh);
      o.want = fx.at("centralizer_homology");
      o.extra_ok = d.ok;
      return o;
    });
    add("cyclic.connes", "Q[" + name + "]", [g, hin, n, budget] {
      const auto r = cyclic::cyclic_homology(cyclic::group_algebra(g, la::Field::rational()), n, budget);
      Outcome o;
      o.inputs = hin;
      o.got = {{"exact", r.connes.exact}, {"spots", r.connes.spots}, {"failures", r.connes.failures}};
      o.want = {{"exact", true}, {"spots", r.connes.spots}, {"failures", json::array()}};
      o.extra_ok = r.connes.spots > 0;
      return o;
    });
    add("cyclic.identities", "Q[" + name + "]", [g, gin, budget] {
      const auto a = cyclic::group_algebra(g, la::Field::rational());
      Outcome o;
      o.inputs = gin;
      o.got["normalized"] = identity_json(cyclic::mixed_identities(cyclic::CyclicWindow::normalized(a, 3, budget)));
      if (a.dim <= 4)
        o.got["unnormalized"] = identity_json(cyclic::cyclic_identities(cyclic::CyclicWindow::unnormalized(a, 3, budget)));
      o.want = o.got;
      for (auto& [key, value] : o.want.items()) value["failures"] = json::array();
      return o;
    });
    add("cyclic.grading", "Q[" + name + "]", [g, gin, budget] {
      const auto a = cyclic::group_algebra(g, la::Field::rational());
      Outcome o;
      o.inputs = gin;
      o.got["normalized"] = identity_json(cyclic::grading_preserved(cyclic::CyclicWindow::normalized(a, 3, budget)));
      o.got["unnormalized"] = identity_json(cyclic::grading_preserved(cyclic::CyclicWindow::unnormalized(a, 2, budget)));
      o.want = o.got;
      for (auto& [key, value] : o.want.items()) value["failures"] = json::array();
      return o;
    });
  }

  add("trace.dtr-rank", name, [g, gin, fx] {
    const auto t = trace::dennis_trace_matrix(g);
    Outcome o;
    o.inputs = gin;
    o.inputs["projectives"] = t.source;
    o.got = {{"rank", t.rank}, {"k0_dim", t.k0_dim}};
    o.want = {{"rank", fx.at("k0_dim")}, {"k0_dim", fx.at("k0_dim")}};
    return o;
  });
  add("trace.character-crosscheck", name, [g, gin] {
    const auto v = trace::character_crosscheck(trace::dennis_trace_matrix(g));
    Outcome o{gin, {{"checked", v.checked}, {"failures", v.failures}}, {}};
    o.want = {{"checked", v.checked}, {"failures", json::array()}};
    o.extra_ok = v.checked > 0;
    return o;
  });
  if (order <= 12) {
    add("trace.hn-image", name, [g, gin, budget] {
      const auto t = trace::dennis_trace_matrix(g);
      const auto a = cyclic::group_algebra(g, la::Field::rational());
      const auto image = cyclic::hn0_image(a, 1, budget);
      std::vector<std::string> outside;
      for (const auto& p : t.projectives) {
        la::Vec v(g.order(), la::Scalar(0));
        for (std::size_t i = 0; i < p.n; ++i)
          for (grp::Elem x = 0; x < g.order(); ++x) v[x] += la::Scalar(p.at(i, i)[x]);
        if (!image.contains(v)) outside.push_back(p.label);
      }
      Outcome o{gin, {{"outside_image", outside}}, {{"outside_image", json::array()}}};
      o.inputs["cutoff"] = 1;
      return o;
    });
  }
  if (cyc && order <= 12) {
    add("trace.theta", name, [g, gin] {
      const auto r = trace::theta_trace_check(g);
      return Outcome{gin, {{"commutes", r.commutes}, {"theta_rank", r.theta_rank}}, {{"commutes", true}, {"theta_rank", 1}}};
    });
  }
  add("trace.chern", name, [g, gin, fx] {
    const auto r = trace::chern_finite_check(g);
    Outcome o;
    o.inputs = gin;
    o.got = {{"k0_sum", r.k0_sum},
             {"k0_dim", r.k0_dim},
             {"hh0_sum", r.hh0_sum},
             {"hh0_dim", r.hh0_dim},
             {"square_commutes", r.square_commutes},
             {"k0_assembly_rank", r.k0_assembly_rank},
             {"hh0_assembly_rank", r.hh0_assembly_rank}};
    o.want = {{"k0_sum", fx.at("cyclic_classes")},
              {"k0_dim", fx.at("k0_dim")},
              {"hh0_sum", fx.at("generator_orbits")},
              {"hh0_dim", fx.at("con")},
              {"square_commutes", true},
              {"k0_assembly_rank", fx.at("k0_dim")},
              {"hh0_assembly_rank", fx.at("con")}};
    o.extra_ok = r.ok();
    if (!r.failures.empty()) o.reason = r.failures.front();
    return o;
  });
}

// ---- checks on fields and the linear algebra layer ----------------------

Outcome exactla_selftest() {
  Outcome o;
  // Hilbert matrix: invertible, inverse has integer entries
  std::vector<std::vector<la::Rational>> h(4, std::vector<la::Rational>(4));
  for (long i = 0; i < 4; ++i)
    for (long j = 0; j < 4; ++j) h[i][j] = la::Rational(1, i + j + 1);
  const auto m = la::Matrix::from_rows(h);
  const auto inv = la::inverse(m);
  bool integral = true;
  for (std::size_t c = 0; c < inv.cols(); ++c)
    for (const auto& [r, s] : inv.column(c)) integral = integral && s.rational().get_den() == 1;
  const auto rk = la::rank_kernel(la::Matrix::from_rows({{1, 2, 3}, {2, 4, 6}}));
  const auto z = la::Scalar::generator(la::cyclotomic_field(3));
  o.got = {{"hilbert_rank", la::rank(m)},
           {"inverse_times_matrix_is_identity", inv * m == la::Matrix::identity(la::Field::rational(), 4)},
           {"inverse_integral", integral},
           {"rank_one_kernel_dim", rk.kernel.dim()},
           {"zeta3_cubed_is_one", z.pow(3).is_one()},
           {"zeta3_minimal_relation", (z * z + z + la::Scalar(1)).is_zero()}};
  o.want = {{"hilbert_rank", 4},
            {"inverse_times_matrix_is_identity", true},
            {"inverse_integral", true},
            {"rank_one_kernel_dim", 2},
            {"zeta3_cubed_is_one", true},
            {"zeta3_minimal_relation", true}};
  return o;
}

void algebra_tasks(std::vector<Task>& tasks, const SuiteConfig& cfg, const json& fixtures) {
  const std::size_t budget = cfg.budget;
  const std::size_t p = cfg.cutoff;
  auto add = [&](std::string kind, std::string subject, std::function<Outcome()> f) {
    tasks.push_back({std::move(kind), std::move(subject), std::move(f)});
  };
  add("exactla.selftest", "Q", [] { return exactla_selftest(); });

  std::set<std::size_t> covered;
  for (const auto& d : cfg.groups)
    if (d.kind == grp::GroupDescriptor::Kind::cyclic) covered.insert(d.n);
  for (std::size_t n = 1; n <= 12; ++n)
    if (!covered.count(n))
      add("rep.theta-line", "C" + std::to_string(n),
          [n] { return theta_line(grp::build_group(grp::GroupDescriptor::cyclic(n))); });

  for (std::string name : {"Q", "Q(zeta_3)", "Q(zeta_4)"}) {
    const json in = {{"algebra", name}};
    add("cyclic.hh-field", name, [name, in, budget] {
      const auto a = cyclic::parse_algebra(name);
      Outcome o{in, cyclic::hochschild(a, 4, budget).dims, field_pattern(a.dim, 4, false)};
      o.inputs["degree"] = 4;
      return o;
    });
    if (fixtures.contains("algebras") && fixtures["algebras"].contains(name)) {
      const json want = fixtures["algebras"][name]["hh"];
      add("cyclic.hh-oracle", name, [name, in, want, budget] {
        Outcome o{in, cyclic::hochschild(cyclic::parse_algebra(name), want.size(), budget).dims, want};
        o.inputs["degree"] = want.size();
        return o;
      });
    }
    add("cyclic.hc-field", name, [name, in, budget] {
      const auto a = cyclic::parse_algebra(name);
      const auto r = cyclic::cyclic_homology(a, 6, budget);
      Outcome o{in, r.hc.dims, field_pattern(a.dim, 5, true)};
      o.inputs["degree"] = 6;
      return o;
    });
    add("cyclic.hc-bicomplex", name, [name, in, budget] {
      const auto a = cyclic::parse_algebra(name);
      Outcome o{in, cyclic::hc_bicomplex(a, 5), cyclic::cyclic_homology(a, 6, budget).hc.dims};
      o.inputs["degree"] = 5;
      return o;
    });
    add("cyclic.connes", name, [name, in, budget] {
      const auto r = cyclic::cyclic_homology(cyclic::parse_algebra(name), 6, budget);
      Outcome o;
      o.inputs = in;
      o.inputs["degree"] = 6;
      o.got = {{"exact", r.connes.exact}, {"spots", r.connes.spots}, {"failures", r.connes.failures}};
      o.want = {{"exact", true}, {"spots", r.connes.spots}, {"failures", json::array()}};
      o.extra_ok = r.connes.spots > 0;
      return o;
    });
    for (bool periodic : {true, false}) {
      add(periodic ? "cyclic.hp-field" : "cyclic.hn-field", name, [name, in, p, periodic, budget] {
        const auto a = cyclic::parse_algebra(name);
        const auto r = cyclic::hp_hn(a, 3, p, budget);
        const auto& rep = periodic ? r.hp : r.hn;
        Outcome o;
        o.inputs = in;
        o.inputs["cutoff"] = p;
        o.inputs["max_degree"] = 3;
        o.got = {{"dims", rep.dims},
                 {"stabilized", rep.certificate.stabilized},
                 {"dims_at_next_cutoff", rep.certificate.dims_at_next_cutoff},
                 {"transition_ranks", rep.certificate.transition_ranks}};
        const auto pattern = field_pattern(a.dim, 4, periodic);
        o.want = {{"dims", pattern},
                  {"stabilized", true},
                  {"dims_at_next_cutoff", pattern},
                  {"transition_ranks", pattern}};
        return o;
      });
    }
    add("cyclic.identities", name, [name, in, budget] {
      const auto a = cyclic::parse_algebra(name);
      Outcome o;
      o.inputs = in;
      o.got["normalized"] = identity_json(cyclic::mixed_identities(cyclic::CyclicWindow::normalized(a, 4, budget)));
      o.got["unnormalized"] = identity_json(cyclic::cyclic_identities(cyclic::CyclicWindow::unnormalized(a, 3, budget)));
      o.want = o.got;
      for (auto& [key, value] : o.want.items()) value["failures"] = json::array();
      return o;
    });
  }
}

std::string cell(const json& j) {
  std::string s = j.dump();
  for (auto& ch : s)
    if (ch == '|') ch = '/';
  return s.size() > 80 ? s.substr(0, 77) + "..." : s;
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::skipped: return "skipped";
  }
  return "fail";
}

SuiteConfig SuiteConfig::defaults() {
  SuiteConfig c;
  c.groups = grp::default_catalog();
  c.jobs = std::max(1U, std::thread::hardware_concurrency());
  c.data_dir = BURNHOCH_DATA_DIR;
  return c;
}

void SuiteConfig::validate() const {
  if (degree != 0 && degree < 2) fail(ErrorKind::validation, "degree must be at least 2");
  if (cutoff < 1) fail(ErrorKind::validation, "cutoff must be at least 1");
  if (budget == 0) fail(ErrorKind::validation, "budget must be positive");
  if (format != "json" && format != "md") fail(ErrorKind::validation, "format must be json or md");
  if (jobs == 0) fail(ErrorKind::validation, "jobs must be positive");
}

std::size_t SuiteConfig::degree_for(std::size_t order) const {
  if (degree != 0) return degree;
  return order <= 8 ? 4 : 3;
}

json SuiteConfig::to_json() const {
  json g = json::array();
  for (const auto& d : groups) g.push_back(d.to_json());
  // jobs changes scheduling only, so it stays out of the echo
  return {{"groups", g}, {"degree", degree}, {"cutoff", cutoff}, {"budget", budget}, {"algebras", algebras}};
}

json CheckRecord::to_json() const {
  json j = {{"id", id},         {"anchor", anchor}, {"inputs", inputs},
            {"got", got},       {"want", want},     {"provenance", provenance},
            {"verdict", harness::to_string(verdict)}, {"ms", ms}};
  if (!reason.empty()) j["reason"] = reason;
  return j;
}

Verdict SuiteReport::verdict() const {
  bool skipped = false;
  for (const auto& c : checks) {
    if (c.verdict == Verdict::fail) return Verdict::fail;
    skipped = skipped || c.verdict == Verdict::skipped;
  }
  return skipped ? Verdict::skipped : Verdict::pass;
}

int SuiteReport::exit_code() const {
  switch (verdict()) {
    case Verdict::pass: return 0;
    case Verdict::fail: return 1;
    case Verdict::skipped: return 2;
  }
  return 1;
}

json SuiteReport::to_json() const {
  json c = json::array();
  for (const auto& r : checks) c.push_back(r.to_json());
  return {{"version", version},
          {"config", config},
          {"checks", c},
          {"verdict", harness::to_string(verdict())},
          {"timestamp", timestamp}};
}

std::string SuiteReport::to_markdown() const {
  std::ostringstream out;
  std::size_t passed = 0, failed = 0, skipped = 0;
  for (const auto& c : checks) {
    passed += c.verdict == Verdict::pass;
    failed += c.verdict == Verdict::fail;
    skipped += c.verdict == Verdict::skipped;
  }
  out << "# burnhoch verification report\n\n";
  out << "version " << version << ", verdict **" << harness::to_string(verdict()) << "**: " << passed << " passed, "
      << failed << " failed, " << skipped << " skipped\n\n";
  out << "| id | verdict | got | want | provenance | anchor |\n";
  out << "|---|---|---|---|---|---|\n";
  for (const auto& c : checks) {
    out << "| " << c.id << " | " << harness::to_string(c.verdict) << " | " << cell(c.got) << " | " << cell(c.want)
        << " | " << c.provenance << " | " << c.anchor << " |\n";
    if (!c.reason.empty()) out << "|  | reason: " << c.reason << " | | | | |\n";
  }
  return out.str();
}

json comparable(const json& report) {
  json j = report;
  j.erase("timestamp");
  if (j.contains("checks"))
    for (auto& c : j["checks"]) c.erase("ms");
  return j;
}

SuiteReport run_suite(const SuiteConfig& config) {
  config.validate();
  const json anchors = read_json(config.data_dir + "/anchors.json").at("kinds");
  json fixtures = json::object();
  {
    std::ifstream in(config.data_dir + "/fixtures.json");
    if (in) fixtures = json::parse(in);
  }

  std::vector<Task> tasks;
  if (config.algebras) algebra_tasks(tasks, config, fixtures);
  for (const auto& desc : config.groups) {
    const auto g = grp::build_group(desc);
    json fx;
    if (fixtures.contains("groups") && fixtures["groups"].contains(g.name()) &&
        fixtures["groups"][g.name()].at("order") == g.order()) {
      fx = fixtures["groups"][g.name()];
    } else {
      fx = oracle::group_fixture(g);
    }
    group_tasks(tasks, g, fx, config);
  }

  SuiteReport report;
  report.config = config.to_json();
  report.timestamp = iso_now();
  report.checks.resize(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const auto& t = tasks[i];
      auto& rec = report.checks[i];
      rec.kind = t.kind;
      rec.id = t.kind + "[" + t.subject + "]";
      const auto start = std::chrono::steady_clock::now();
      try {
        auto o = t.run();
        rec.inputs = std::move(o.inputs);
        rec.got = std::move(o.got);
        rec.want = std::move(o.want);
        rec.reason = o.reason;
        rec.verdict = rec.got == rec.want && o.extra_ok ? Verdict::pass : Verdict::fail;
      } catch (const Error& e) {
        rec.verdict = e.kind() == ErrorKind::capability ? Verdict::skipped : Verdict::fail;
        rec.reason = std::string(burnhoch::to_string(e.kind())) + ": " + e.what();
      } catch (const std::exception& e) {
        rec.verdict = Verdict::fail;
        rec.reason = e.what();
      }
      rec.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t k = 1; k < std::min(config.jobs, tasks.size()); ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  for (auto& rec : report.checks) {
    if (!anchors.contains(rec.kind)) fail(ErrorKind::validation, "no anchor recorded for " + rec.kind);
    rec.anchor = anchors[rec.kind].at("anchor").get<std::string>();
    rec.provenance = anchors[rec.kind].at("provenance").get<std::string>();
  }
  return report;
}

void regen_fixtures(const std::string& data_dir) {
  const std::string path = data_dir + "/fixtures.json";
  std::ofstream out(path);
  if (!out) fail(ErrorKind::parse, "cannot write " + path);
  out << oracle::regenerate().dump(1) << "\n";
}

}  // namespace burnhoch::harness
