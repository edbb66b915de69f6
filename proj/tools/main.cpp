// Command-line front end: constants tables, verification suites, gap
// classification and band scans. Exit codes: 0 all checks passed, 1 at
// least one verification failure, 2 usage or precondition error.

#include <exception>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cmcgap/cli.hpp"

namespace {

void add_common(CLI::App* cmd, cmcgap::RunConfig& cfg) {
  cmd->add_option("--format", cfg.format, "Output format: text|json|csv")
      ->capture_default_str();
  cmd->add_option("--output", cfg.output_path,
                  "Write the report to a file instead of standard output");
}

}  // namespace

int main(int argc, char** argv) {
  cmcgap::RunConfig cfg;

  CLI::App app{"Pinching-constant calculator and numerical certification "
               "toolkit for curvature gap bounds"};
  app.require_subcommand(1);

  CLI::App* constants =
      app.add_subcommand("constants", "Tabulate pinching constants");
  constants->add_option("--n", cfg.n_spec, "Dimension or range a..b[:step]")
      ->required();
  constants->add_option("--H", cfg.h_spec,
                        "Mean curvature or range a..b:step")
      ->required();
  constants->add_option("--c", cfg.c, "Ambient curvature")
      ->capture_default_str();
  add_common(constants, cfg);

  CLI::App* verify =
      app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", cfg.suite,
                     "lemma1|lemma2|lemma3|envelope|band|identities|all")
      ->capture_default_str();
  CLI::Option* verify_n = verify->add_option(
      "--n", cfg.n_spec, "Restrict search dimensions (range a..b[:step])");
  verify->add_option("--samples", cfg.samples, "Multi-starts per search")
      ->capture_default_str();
  verify->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
  verify->add_option("--grid", cfg.grid, "Grid points for sweeps")
      ->capture_default_str();
  verify->add_option("--threads", cfg.threads,
                     "Worker threads (0 = hardware)")
      ->capture_default_str();
  verify->add_option("--step", cfg.descent_step,
                     "Initial descent step (halved on non-improvement)")
      ->capture_default_str();
  verify->add_option("--iters", cfg.descent_iterations,
                     "Descent iteration cap per start")
      ->capture_default_str();
  add_common(verify, cfg);

  CLI::App* classify =
      app.add_subcommand("classify", "Place (n, H, c, S) relative to the gap band");
  classify->add_option("--n", cfg.n_spec, "Dimension")->required();
  classify->add_option("--H", cfg.h_spec, "Mean curvature")->required();
  classify->add_option("--c", cfg.c, "Ambient curvature")
      ->capture_default_str();
  CLI::Option* classify_s =
      classify->add_option("--S", cfg.big_s,
                           "Squared norm of the second fundamental form")
          ->required();
  classify->add_option("--tol", cfg.classify_tol,
                       "Relative tolerance for boundary identification")
      ->capture_default_str();
  add_common(classify, cfg);

  CLI::App* scan = app.add_subcommand(
      "scan", "Sweep band inequalities and gap margins over (n, H) grids");
  scan->add_option("--n", cfg.n_spec, "Dimension range a..b[:step]")
      ->required();
  scan->add_option("--H", cfg.h_spec, "Mean curvature range a..b:step")
      ->required();
  scan->add_option("--c", cfg.c, "Ambient curvature")->capture_default_str();
  scan->add_option("--grid", cfg.grid, "Band grid points per row")
      ->capture_default_str();
  add_common(scan, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // --help exits 0, everything else is usage
  }

  if (constants->parsed()) cfg.command = "constants";
  if (verify->parsed()) {
    cfg.command = "verify";
    cfg.has_n = verify_n->count() > 0;
  }
  if (classify->parsed()) {
    cfg.command = "classify";
    cfg.has_s = classify_s->count() > 0;
  }
  if (scan->parsed()) cfg.command = "scan";

  try {
    if (!cfg.output_path.empty()) {
      std::ofstream file(cfg.output_path, std::ios::binary);
      if (!file) {
        std::cerr << "error: cannot open output file '" << cfg.output_path
                  << "'\n";
        return 2;
      }
      return cmcgap::run_command(cfg, file);
    }
    return cmcgap::run_command(cfg, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (...) {
    std::cerr << "error: unknown failure\n";
    return 2;
  }
}
