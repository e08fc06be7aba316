// leo-offload: solve, sweep and verify layer-wise satellite/ground DNN
// inference offloading.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "leo_offload/runner.hpp"

int main(int argc, char** argv) {
  using namespace leo_offload;

  CLI::App app{"Layer-wise DNN inference offloading for LEO satellites"};
  app.set_version_flag("--version", std::string(tool_version()));
  app.require_subcommand(1);

  std::string solve_config;
  std::optional<std::uint64_t> solve_seed;
  auto* solve = app.add_subcommand("solve", "Solve one scenario with ILPB");
  solve->add_option("--config", solve_config, "Scenario config file")
      ->required();
  solve->add_option("--seed", solve_seed,
                    "Seed for a [sample] scenario (overrides the config)");

  std::string sweep_config;
  SweepRunOptions sweep_opts;
  auto* sweep = app.add_subcommand(
      "sweep", "Run a paired parameter sweep and write a CSV");
  sweep->add_option("--config", sweep_config, "Sweep config file")->required();
  sweep->add_option("--out", sweep_opts.out_path, "CSV output path")
      ->required();
  sweep->add_option("--seed", sweep_opts.seed, "Overrides the config seed");
  sweep->add_flag("--log10", sweep_opts.log10,
                  "Append log10 columns for T and E");
  sweep->add_option("--jobs", sweep_opts.jobs, "Worker threads")
      ->check(CLI::Range(1U, 256U));

  VerifyOptions verify_opts;
  auto* verify_cmd = app.add_subcommand(
      "verify", "Check ILPB against the brute-force oracle and baselines");
  verify_cmd->add_option("--instances", verify_opts.instances,
                         "Number of random scenarios");
  verify_cmd->add_option("--k-min", verify_opts.k_min, "Smallest layer count");
  verify_cmd->add_option("--k-max", verify_opts.k_max, "Largest layer count");
  verify_cmd->add_option("--seed", verify_opts.seed, "Base seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfigError;
  }

  if (*solve) return run_solve(solve_config, solve_seed, std::cout, std::cerr);
  if (*sweep) return run_sweep(sweep_config, sweep_opts, std::cout, std::cerr);
  return run_verify(verify_opts, std::cout, std::cerr);
}
