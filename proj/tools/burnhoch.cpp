#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "burnhoch/burnside.hpp"
#include "burnhoch/cyclic.hpp"
#include "burnhoch/error.hpp"
#include "burnhoch/harness.hpp"
#include "burnhoch/rep.hpp"
#include "burnhoch/trace.hpp"

using namespace burnhoch;
using nlohmann::json;

namespace {

struct Options {
  std::vector<std::string> groups;
  std::string algebra;
  std::size_t degree = 0;
  std::size_t cutoff = 3;
  std::size_t budget = cyclic::kDefaultBudget;
  std::string format = "md";
  bool all = false;
  bool regen = false;
  std::size_t jobs = 0;
  std::string data_dir;
};

std::string tuple(const std::vector<std::size_t>& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ")";
  return out.str();
}

json matrix_json(const la::Matrix& m) {
  json rows = json::array();
  for (const auto& r : m.dense()) {
    json row = json::array();
    for (const auto& s : r) row.push_back(s.str());
    rows.push_back(row);
  }
  return rows;
}

std::string matrix_text(const la::Matrix& m) {
  std::ostringstream out;
  for (const auto& r : m.dense()) {
    out << " ";
    for (const auto& s : r) out << " " << std::setw(6) << s.str();
    out << "\n";
  }
  return out.str();
}

grp::FiniteGroup one_group(const Options& o) {
  if (o.groups.size() != 1) fail(ErrorKind::parse, "expected exactly one --group");
  return grp::build_group(grp::GroupDescriptor::parse(o.groups.front()));
}

cyclic::AlgebraPresentation algebra(const Options& o) {
  if (!o.algebra.empty()) return cyclic::parse_algebra(o.algebra);
  return cyclic::group_algebra(one_group(o), la::Field::rational());
}

std::size_t degree(const Options& o, std::size_t fallback) { return o.degree ? o.degree : fallback; }

int emit(const Options& o, const json& j, const std::string& text, bool ok = true) {
  if (o.format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
  return ok ? 0 : 1;
}

int homology(const Options& o, const cyclic::HomologyReport& r) {
  std::ostringstream t;
  t << cyclic::to_string(r.theory) << "(" << r.subject << ") = " << tuple(r.dims) << "\n";
  for (const auto& c : r.per_class) t << "  " << c.label << ": " << tuple(c.dims) << "\n";
  if (r.certificate.cutoff)
    t << "  cutoff " << *r.certificate.cutoff << ", stabilized " << (r.certificate.stabilized ? "yes" : "no")
      << ", next cutoff " << tuple(r.certificate.dims_at_next_cutoff) << "\n";
  return emit(o, r.to_json(), t.str());
}

int run_marks(const Options& o) {
  const auto t = burnside::table_of_marks(one_group(o));
  std::ostringstream text;
  text << "table of marks of " << t.group.name() << " (rows H, columns G/K)\n";
  for (std::size_t i = 0; i < t.labels.size(); ++i) text << "  " << i << ": " << t.labels[i] << "\n";
  text << matrix_text(t.marks);
  return emit(o, {{"group", t.group.name()}, {"labels", t.labels}, {"marks", matrix_json(t.marks)}}, text.str());
}

int run_theta(const Options& o) {
  const auto ring = burnside::BurnsideRing::make(one_group(o));
  const auto th = burnside::theta(ring);
  json coeffs = json::array(), marks = json::array();
  for (const auto& c : th.coeffs()) coeffs.push_back(la::rational_str(c));
  for (const auto& m : th.marks()) marks.push_back(la::rational_str(m));
  return emit(o, {{"group", ring->group().name()}, {"theta", th.str()}, {"coeffs", coeffs}, {"marks", marks}},
              "theta = " + th.str() + "\n");
}

int run_defect(const Options& o) {
  const auto g = one_group(o);
  const auto d = rep::artin_defect_k0(g);
  json j = {{"group", g.name()},
            {"k0", {{"ambient_dim", d.ambient_dim}, {"induced_dim", d.induced_dim}, {"defect_dim", d.defect_dim()}}}};
  std::ostringstream text;
  text << "Artin defect of K_0(Q" << g.name() << ") (x) Q: " << d.defect_dim() << " (ambient " << d.ambient_dim
       << ", induced " << d.induced_dim << ")\n";
  bool cyclic_group = false;
  for (grp::Elem x = 0; x < g.order(); ++x) cyclic_group = cyclic_group || g.elem_order(x) == g.order();
  if (cyclic_group) {
    for (const auto& m : {burnside::burnside_mackey(g), rep::rep_mackey(g)}) {
      const auto r = burnside::artin_defect(m, m.subgroups.size() - 1);
      j[m.name] = {{"theta_dim", r.theta_dim},
                   {"defect_dim", r.defect_dim},
                   {"canonical_rank", r.canonical_rank},
                   {"isomorphic", r.isomorphic}};
      text << m.name << ": theta image " << r.theta_dim << ", defect " << r.defect_dim << ", canonical map rank "
           << r.canonical_rank << "\n";
    }
  }
  return emit(o, j, text.str());
}

int run_hc(const Options& o) {
  const auto r = cyclic::cyclic_homology(algebra(o), degree(o, 4), o.budget);
  auto j = r.hc.to_json();
  j["connes_exact"] = r.connes.exact;
  j["connes_spots"] = r.connes.spots;
  std::ostringstream text;
  text << "HC(" << r.hc.subject << ") = " << tuple(r.hc.dims) << "\n";
  text << "  HH -> HC -> HC -> HH exact at " << r.connes.spots << " spots: " << (r.connes.exact ? "yes" : "no") << "\n";
  emit(o, j, text.str());
  return r.connes.exact ? 0 : 1;
}

int run_periodic(const Options& o, bool periodic) {
  const auto n = degree(o, 4);
  const auto r = cyclic::hp_hn(algebra(o), n - 1, o.cutoff, o.budget);
  return homology(o, periodic ? r.hp : r.hn);
}

int run_dtr(const Options& o) {
  const auto t = trace::dennis_trace_matrix(one_group(o));
  const auto v = trace::character_crosscheck(t);
  json j = {{"group", t.group.name()},
            {"source", t.source},
            {"target", t.target},
            {"matrix", matrix_json(t.matrix)},
            {"rank", t.rank},
            {"k0_dim", t.k0_dim},
            {"injective", t.injective()},
            {"character_crosscheck", {{"ok", v.ok}, {"checked", v.checked}, {"failures", v.failures}}}};
  std::ostringstream text;
  text << "dtr: K_0(Q" << t.group.name() << ") (x) Q -> HH_0, rank " << t.rank << " of " << t.k0_dim << "\n";
  for (std::size_t i = 0; i < t.source.size(); ++i) text << "  column " << i << ": " << t.source[i] << "\n";
  text << matrix_text(t.matrix);
  text << "character cross-check: " << (v.ok ? "ok" : "FAILED") << " (" << v.checked << " values)\n";
  return emit(o, j, text.str(), t.injective() && v.ok);
}

int run_chern(const Options& o) {
  const auto g = one_group(o);
  const auto r = trace::chern_finite_check(g);
  json j = {{"group", g.name()},
            {"k0_sum", r.k0_sum},
            {"k0_dim", r.k0_dim},
            {"hh0_sum", r.hh0_sum},
            {"hh0_dim", r.hh0_dim},
            {"cyclic_classes", r.cyclic_classes},
            {"square_commutes", r.square_commutes},
            {"k0_assembly_rank", r.k0_assembly_rank},
            {"hh0_assembly_rank", r.hh0_assembly_rank},
            {"failures", r.failures},
            {"ok", r.ok()}};
  std::ostringstream text;
  text << "K_0 side: " << r.k0_sum << " = " << r.k0_dim << " (cyclic classes " << r.cyclic_classes << ")\n";
  text << "HH_0 side: " << r.hh0_sum << " = " << r.hh0_dim << "\n";
  text << "square commutes: " << (r.square_commutes ? "yes" : "no") << "\n";
  return emit(o, j, text.str(), r.ok());
}

int run_verify(const Options& o) {
  auto cfg = harness::SuiteConfig::defaults();
  if (!o.data_dir.empty()) cfg.data_dir = o.data_dir;
  if (o.regen) {
    harness::regen_fixtures(cfg.data_dir);
    std::cerr << "wrote " << cfg.data_dir << "/fixtures.json\n";
    return 0;
  }
  if (!o.groups.empty() && !o.all) {
    cfg.groups.clear();
    for (const auto& g : o.groups) cfg.groups.push_back(grp::GroupDescriptor::parse(g));
    cfg.algebras = false;
  }
  cfg.degree = o.degree;
  cfg.cutoff = o.cutoff;
  cfg.budget = o.budget;
  cfg.format = o.format;
  if (o.jobs) cfg.jobs = o.jobs;
  const auto report = harness::run_suite(cfg);
  if (o.format == "json") {
    std::cout << report.to_json().dump(2) << "\n";
  } else {
    std::cout << report.to_markdown();
  }
  return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Burnside rings, Hochschild and cyclic homology, and the Dennis trace for finite groups"};
  app.require_subcommand(1);
  Options o;

  auto group_opt = [&](CLI::App* s) { s->add_option("--group", o.groups, "cyclic:n, a catalog name, or group JSON"); };
  auto algebra_opts = [&](CLI::App* s) {
    group_opt(s);
    s->add_option("--algebra", o.algebra, "Q, Q(zeta_d), zeta:d, QG:<group>, JSON text or a path");
    s->add_option("--degree", o.degree, "truncation degree N");
    s->add_option("--budget", o.budget, "largest chain module dimension");
  };
  auto common = [&](CLI::App* s) {
    s->add_option("--format", o.format, "json or md")->check(CLI::IsMember({"json", "md"}));
  };

  std::vector<std::pair<CLI::App*, std::function<int()>>> commands;
  auto sub = [&](const char* name, const char* help, std::function<int()> run) {
    auto* s = app.add_subcommand(name, help);
    common(s);
    commands.emplace_back(s, std::move(run));
    return s;
  };

  group_opt(sub("marks", "table of marks", [&] { return run_marks(o); }));
  group_opt(sub("theta", "the idempotent theta_C of a cyclic group", [&] { return run_theta(o); }));
  group_opt(sub("defect", "Artin defects", [&] { return run_defect(o); }));
  algebra_opts(sub("hh", "Hochschild homology", [&] { return homology(o, cyclic::hochschild(algebra(o), degree(o, 4), o.budget)); }));
  algebra_opts(sub("hc", "cyclic homology", [&] { return run_hc(o); }));
  for (const char* name : {"hp", "hn"}) {
    const bool periodic = std::string(name) == "hp";
    auto* s = sub(name, periodic ? "periodic cyclic homology" : "negative cyclic homology",
                  [&, periodic] { return run_periodic(o, periodic); });
    algebra_opts(s);
    s->add_option("--cutoff", o.cutoff, "column cutoff P");
  }
  {
    auto* s = sub("split-hh", "Hochschild homology of QG split by conjugacy class", [&] {
      return homology(o, cyclic::conjugacy_split_hh(one_group(o), la::Field::rational(), degree(o, 3), o.budget));
    });
    group_opt(s);
    s->add_option("--degree", o.degree, "truncation degree N");
    s->add_option("--budget", o.budget, "largest chain module dimension");
  }
  {
    auto* s = sub("group-homology", "rational homology of BG", [&] {
      return homology(o, cyclic::group_homology(one_group(o), la::Field::rational(), degree(o, 4), o.budget));
    });
    group_opt(s);
    s->add_option("--degree", o.degree, "truncation degree N");
    s->add_option("--budget", o.budget, "largest chain module dimension");
  }
  group_opt(sub("dtr", "Dennis trace K_0 -> HH_0", [&] { return run_dtr(o); }));
  group_opt(sub("chern", "Chern character bookkeeping for a finite group", [&] { return run_chern(o); }));
  {
    auto* s = sub("verify", "run the verification suite", [&] { return run_verify(o); });
    group_opt(s);
    s->add_option("--degree", o.degree, "HH/HC truncation degree N (default 4 for |G| <= 8, else 3)");
    s->add_option("--cutoff", o.cutoff, "HP/HN column cutoff P");
    s->add_option("--budget", o.budget, "largest chain module dimension");
    s->add_flag("--all", o.all, "default catalog and the field checks");
    s->add_flag("--regen-fixtures", o.regen, "rewrite fixtures.json from the brute-force oracles");
    s->add_option("--jobs", o.jobs, "worker threads");
    s->add_option("--fixtures", o.data_dir, "directory with fixtures.json and anchors.json");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    for (auto& [s, run] : commands)
      if (s->parsed()) return run();
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error (parse): " << e.what() << "\n";
    return 2;
  }
  return 2;
}
