// command-line front end: invariants / equiv / table / check
//
// stdout carries JSON lines (and the bare equiv verdict line); anything
// diagnostic goes to stderr. Exit codes are part of the interface:
//   0 ok / EQUIVALENT      3 DISTINGUISHED        4 UNKNOWN
//   1 failing checks       2 bad input            5 level mismatch

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "skein/checks.hpp"
#include "skein/convert.hpp"
#include "skein/errors.hpp"
#include "skein/moves.hpp"
#include "skein/report.hpp"
#include "skein/samples.hpp"
#include "skein/search.hpp"
#include "skein/table.hpp"

using namespace skein;

namespace {

enum ExitCode {
  kOk = 0,
  kFailedChecks = 1,
  kBadInput = 2,
  kDistinguished = 3,
  kUnknownVerdict = 4,
  kLevelMismatch = 5,
};

// a diagram argument is a built-in name, a Gauss code, or (with pd) a PD code
GaussDiagram read_diagram(const std::string& text, bool pd) {
  if (is_sample_name(text)) return sample_gauss(text);
  return pd ? pd_to_gauss(parse_pd(text)) : parse_gauss(text);
}

int cmd_invariants(bool have_gauss, const std::string& gauss_text, bool have_pd,
                   const std::string& pd_text) {
  if (have_gauss == have_pd)
    fail(Errc::bad_input, "pass the diagram through exactly one of --gauss or --pd");
  const std::string& text = have_pd ? pd_text : gauss_text;
  std::cout << report_json(build_report(text, read_diagram(text, have_pd))) << "\n";
  return kOk;
}

struct EquivArgs {
  std::string d1, d2;
  std::string moves;
  bool pd = false;
  bool want_path = false;
  SearchBounds bounds;
};

int cmd_equiv(const EquivArgs& a) {
  std::vector<MoveRule> rules = move_set(a.moves);
  GaussDiagram g1 = read_diagram(a.d1, a.pd);
  GaussDiagram g2 = read_diagram(a.d2, a.pd);
  // planar rules rewrite planar diagrams; asking for them on a virtual input
  // is a level conflict, not a silent no-op
  for (const MoveRule& r : rules)
    if (r.level == MoveLevel::planar && (!is_realizable(g1) || !is_realizable(g2)))
      fail(Errc::level_mismatch,
           "rule '" + r.name + "' works on planar diagrams; both inputs must be realizable");

  SearchOutcome out = equivalent_mod(g1, g2, rules, a.bounds);
  switch (out.verdict) {
    case Verdict::equivalent: {
      std::cout << "EQUIVALENT\n";
      if (a.want_path) {
        nlohmann::ordered_json steps = nlohmann::ordered_json::array();
        for (const MoveSite& s : out.path)
          steps.push_back({{"rule", s.rule}, {"anchor", s.anchor}});
        std::cout << nlohmann::ordered_json{{"path", std::move(steps)}}.dump() << "\n";
      }
      return kOk;
    }
    case Verdict::distinguished:
      std::cout << "DISTINGUISHED(" << out.certificate->invariant << ")\n";
      std::cerr << out.certificate->invariant << ": " << out.certificate->left << " vs "
                << out.certificate->right << "\n";
      return kDistinguished;
    case Verdict::unknown:
      break;
  }
  std::cout << "UNKNOWN\n";
  std::cerr << "bounds exhausted after " << out.stats.nodes << " diagrams (depth "
            << out.stats.depth << ")\n";
  return kUnknownVerdict;
}

int cmd_table(int max_arrows) {
  if (max_arrows < 0 || max_arrows > 8)
    fail(Errc::bad_input,
         "--max-arrows must be between 0 and 8, got " + std::to_string(max_arrows));
  SkeinCache cache;
  cache.max_arrows = max_arrows - 1;
  for_each_classical_knot(max_arrows, [&](const GaussDiagram& g) {
    std::cout << report_json(build_report(render_gauss(g), g, &cache)) << "\n";
    return true;
  });
  return kOk;
}

int cmd_check(const std::string& suite, std::uint32_t seed) {
  long long failures = 0;
  for (const CheckResult& res : run_check_suite(suite, seed)) {
    nlohmann::ordered_json j{
        {"property", res.property}, {"cases", res.cases}, {"failures", res.failures}};
    std::cout << j.dump() << "\n";
    failures += res.failures;
  }
  if (failures > 0) {
    std::cerr << failures << " failing case(s)\n";
    return kFailedChecks;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact skein and virtual-knot invariants, move searches, self-checks"};
  app.require_subcommand(1);

  auto* inv = app.add_subcommand("invariants", "report one diagram's invariants as JSON");
  std::string gauss_text, pd_text;
  auto* gopt = inv->add_option("--gauss", gauss_text, "diagram as a Gauss code or built-in name");
  auto* popt = inv->add_option("--pd", pd_text, "diagram as a PD code or built-in name");
  gopt->excludes(popt);

  auto* eq = app.add_subcommand("equiv", "decide equivalence modulo a move set");
  EquivArgs ea;
  eq->add_option("diagram1", ea.d1, "first diagram")->required();
  eq->add_option("diagram2", ea.d2, "second diagram")->required();
  eq->add_option("--moves", ea.moves,
                 "comma-separated move names joined to the Reidemeister set (default: none)");
  eq->add_flag("--pd", ea.pd, "parse both diagrams as PD codes");
  eq->add_flag("--path", ea.want_path, "emit the replayable move path when EQUIVALENT");
  eq->add_option("--crossing-cap", ea.bounds.crossing_cap,
                 "largest diagram the search may store (-1: input size + 2)");
  eq->add_option("--node-cap", ea.bounds.node_cap, "most diagrams stored across both directions");
  eq->add_option("--depth-cap", ea.bounds.depth_cap, "breadth-first depth per direction");

  auto* tab = app.add_subcommand("table", "stream the classical knot table as JSON reports");
  int max_arrows = 0;
  tab->add_option("--max-arrows", max_arrows, "largest arrow count, at most 8")->required();

  auto* chk = app.add_subcommand("check", "run a self-check suite");
  std::string suite;
  std::uint32_t seed = 0;
  chk->add_option("suite", suite, "skein, rmoves, preservation, quotients or all")->required();
  chk->add_option("--seed", seed, "seed for the randomized properties");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kBadInput;  // --help exits cleanly
  }

  try {
    if (inv->parsed())
      return cmd_invariants(gopt->count() > 0, gauss_text, popt->count() > 0, pd_text);
    if (eq->parsed()) return cmd_equiv(ea);
    if (tab->parsed()) return cmd_table(max_arrows);
    return cmd_check(suite, seed);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return e.kind() == Errc::level_mismatch ? kLevelMismatch : kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
}
