#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "eschorb/families.hpp"
#include "eschorb/report.hpp"
#include "eschorb/scan.hpp"

using namespace eschorb;
using nlohmann::json;

namespace {

struct ParamFlags {
  std::string p, q, a, b, params;

  void attach(CLI::App* app) {
    app->add_option("--p", p, "p triple, e.g. 1,0,-1");
    app->add_option("--q", q, "q triple");
    app->add_option("--a", a, "a triple");
    app->add_option("--b", b, "b triple");
    app->add_option("--params", params, "all four at once: \"p=..;q=..;a=..;b=..\"");
  }

  TorusParams get() const {
    if (!params.empty()) {
      if (!p.empty() || !q.empty() || !a.empty() || !b.empty())
        throw Error(ErrorKind::Parse, "use either --params or --p/--q/--a/--b");
      return TorusParams::parse(params);
    }
    for (auto [name, v] : {std::pair{"--p", &p}, {"--q", &q}, {"--a", &a}, {"--b", &b}})
      if (v->empty()) throw Error(ErrorKind::Parse, std::string("missing ") + name);
    return TorusParams::make(parse_triple(p), parse_triple(q), parse_triple(a), parse_triple(b));
  }
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error(ErrorKind::OutOfRange, "cannot write " + path);
  f << text;
}

int cmd_analyze(const ParamFlags& pf, std::size_t max_degree, const std::string& format, const std::string& out) {
  if (max_degree % 2 || max_degree < 8) throw Error(ErrorKind::OutOfRange, "--max-degree must be even and >= 8");
  auto report = analyze(pf.get(), max_degree);
  emit(format == "json" ? to_json(report).dump(2) + "\n" : to_text(report), out);
  return 0;
}

int cmd_graph(const ParamFlags& pf, const std::string& out, const std::string& svg) {
  auto t = pf.get();
  require_almost_free(t);
  TorusParams eff = is_effective(t) ? t : effectivize(t).params;
  emit(export_dot(singular_graph(eff)), out);
  if (!svg.empty()) emit(export_svg(t), svg);
  return 0;
}

int cmd_scan(ScanConfig cfg, const std::string& asserts, const std::string& requires_,
             const std::string& format, const std::string& out) {
  cfg.assertions.clear();
  if (asserts != "none")
    for (const auto& a : split_list(asserts)) {
      auto parsed = parse_assertion(a);
      if (!parsed) throw Error(ErrorKind::Parse, "unknown assertion '" + a + "'");
      cfg.assertions.push_back(*parsed);
    }
  for (const auto& r : split_list(requires_)) apply_filter(cfg.filters, r);
  auto summary = run_scan(cfg);
  emit(format == "json" ? to_json(summary).dump(2) + "\n" : to_text(summary), out);
  return summary.counterexample_count == 0 ? 0 : 1;
}

json fixture_json(const FixtureReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"predicted", c.predicted}, {"computed", c.computed},
                      {"pass", c.pass}, {"gating", c.gating}});
  return {{"family", r.fixture.family}, {"case", r.fixture.family_case}, {"label", r.fixture.label},
          {"params", params_to_json(r.fixture.params)}, {"valid", r.valid},
          {"skip_reason", r.skip_reason}, {"pass", r.all_pass()}, {"checks", checks}};
}

int cmd_verify(const std::string& family, const GridFilter& filter, std::size_t max_degree,
               const std::string& format, const std::string& out, bool verbose) {
  if (!known_family(family)) throw Error(ErrorKind::Parse, "unknown family '" + family + "'");
  auto fixtures = family_grid(family, filter);
  std::ostringstream os;
  json rows = json::array();
  std::size_t pass = 0, fail = 0, skipped = 0, flagged = 0, squares = 0, squares_checked = 0;
  for (const auto& f : fixtures) {
    auto r = verify_fixture(f, max_degree);
    rows.push_back(fixture_json(r));
    std::string id = f.family + "(" + std::to_string(f.family_case) + ") " + f.label;
    if (!r.valid) {
      ++skipped;
      os << "SKIP  " << id << "  " << r.skip_reason << "\n";
      continue;
    }
    bool ok = r.all_pass();
    (ok ? pass : fail)++;
    flagged += r.flagged();
    os << (ok ? (r.flagged() ? "FLAG  " : "PASS  ") : "FAIL  ") << id;
    for (const auto& c : r.checks) {
      if (!verbose && c.pass) {
        os << "  " << c.name << "=" << c.computed;
        continue;
      }
      os << (verbose ? "\n      " : "  ") << (c.gating ? "" : "[cross-check] ") << c.name << ": predicted "
         << c.predicted << ", computed " << c.computed << (c.pass ? "" : "  <-- mismatch");
    }
    os << "\n";
    if (f.family == "smooth-sphere" && f.family_case <= 4) {
      bool positive = false, stable_ok = false;
      for (const auto& c : r.checks) {
        if (c.name == "curvature" && c.gating) positive = c.computed != "NotPositive";
        if (c.name == "stable" && c.gating) stable_ok = c.pass;
      }
      if (positive) {
        ++squares_checked;
        if (stable_ok) ++squares;
      }
    }
  }
  os << fixtures.size() << " fixtures: " << pass << " pass, " << fail << " fail, " << skipped
     << " skipped (not almost free), " << flagged << " flagged cross-checks\n";
  if (squares_checked) os << "square law: " << squares << "/" << squares_checked << " positively curved fixtures have stable order k^2\n";
  if (format == "json")
    emit(json{{"schema", kSchemaVersion}, {"kind", "verify"}, {"family", family}, {"rows", rows},
              {"summary", {{"fixtures", fixtures.size()}, {"pass", pass}, {"fail", fail},
                           {"skipped", skipped}, {"flagged", flagged}}}}.dump(2) + "\n", out);
  else
    emit(os.str(), out);
  return fail == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eschenburg 6-orbifolds: singular sets, curvature and orbifold cohomology"};
  app.require_subcommand(1);

  std::string format = "text", out;
  std::size_t max_degree = kDefaultMaxDegree;

  auto* analyze_cmd = app.add_subcommand("analyze", "full report for one parameter set");
  ParamFlags apf;
  apf.attach(analyze_cmd);
  analyze_cmd->add_option("--max-degree", max_degree, "highest cohomology degree (even, >= 8)");
  analyze_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  analyze_cmd->add_option("--out", out, "write to file instead of stdout");

  auto* graph_cmd = app.add_subcommand("graph", "singular set graph as DOT, optional triangle SVG");
  ParamFlags gpf;
  gpf.attach(graph_cmd);
  std::string svg;
  graph_cmd->add_option("--out", out, "DOT output file");
  graph_cmd->add_option("--svg", svg, "also write the triangle plot here");

  auto* scan_cmd = app.add_subcommand("scan", "enumerate a parameter box and check assertions");
  ScanConfig cfg;
  std::string asserts = "theoremA-parity,theoremA-smooth-sphere,sat-agreement", requires_;
  std::size_t scan_degree = 16;
  scan_cmd->add_option("--bound", cfg.bound, "entries range over [-B,B]");
  scan_cmd->add_flag("--raw", cfg.raw, "full box, no canonical representatives");
  scan_cmd->add_option("--assert", asserts,
                       "comma list of theoremA-parity, theoremA-smooth-sphere, sat-agreement, localization, squares; or none");
  scan_cmd->add_option("--require", requires_, "comma list of almost-free, effective, positive, sigma-nonempty, sigma-size=N");
  scan_cmd->add_option("--jobs", cfg.jobs, "worker threads");
  scan_cmd->add_option("--max-degree", scan_degree, "cohomology degree for localization/squares");
  scan_cmd->add_option("--random", cfg.random_samples, "additional random almost free samples");
  scan_cmd->add_option("--random-bound", cfg.random_bound, "box for random samples");
  scan_cmd->add_option("--seed", cfg.seed, "seed for random samples");
  scan_cmd->add_option("--keep-examples", cfg.keep_examples, "three-point examples to keep");
  scan_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  scan_cmd->add_option("--out", out, "write to file instead of stdout");

  auto* verify_cmd = app.add_subcommand("verify", "check a fixture family against its predictions");
  std::string family;
  GridFilter filter;
  std::size_t verify_degree = 12;
  bool verbose = false;
  verify_cmd->add_option("family", family, "cor-nonnegact | smooth-sphere | example-two-singular")->required();
  verify_cmd->add_option("--case", filter.case_no, "restrict to one case");
  verify_cmd->add_option("--range", filter.range, "free parameters range over [-R,R]");
  verify_cmd->add_option("--k", filter.k, "example-two-singular: k");
  verify_cmd->add_option("--l", filter.l, "example-two-singular: l");
  verify_cmd->add_option("--u", filter.u, "example-two-singular: u");
  verify_cmd->add_option("--max-degree", verify_degree, "cohomology degree for predictions");
  verify_cmd->add_flag("--verbose", verbose, "one line per check");
  verify_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  verify_cmd->add_option("--out", out, "write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(apf, max_degree, format, out);
    if (*graph_cmd) return cmd_graph(gpf, out, svg);
    if (*scan_cmd) {
      cfg.max_degree = scan_degree;
      return cmd_scan(cfg, asserts, requires_, format, out);
    }
    if (*verify_cmd) return cmd_verify(family, filter, verify_degree, format, out, verbose);
  } catch (const Error& e) {
    std::cerr << "error [" << error_kind_name(e.kind()) << "]: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
