#ifndef LEO_OFFLOAD_RUNNER_HPP
#define LEO_OFFLOAD_RUNNER_HPP

// Experiment harness behind the command-line tool: single solves, paired
// parameter sweeps written as CSV, and the oracle-equivalence check.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "leo_offload/config.hpp"
#include "leo_offload/scenario.hpp"
#include "leo_offload/solver.hpp"

namespace leo_offload {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitValidationError = 3;

const char* tool_version();

/// Fixed-format "%.12g" rendering used for every numeric output.
std::string render(double v);

struct ResultRow {
  double axis_value = 0.0;
  std::size_t replication = 0;
  Method method = Method::kIlpb;
  double raw_t = 0.0;  // s
  double raw_e = 0.0;  // J
  double norm_t = 0.0;
  double norm_e = 0.0;
  double z = 0.0;
  std::size_t split_index = 0;
  std::size_t nodes_explored = 0;
  std::uint64_t seed = 0;
};

ResultRow make_row(const SweepPoint& point, const Solution& sol);

/// Solves every point with ILPB, ARG and ARS. Rows come back in
/// (axis, replication, method) order regardless of `jobs`.
std::vector<ResultRow> evaluate_sweep(const std::vector<SweepPoint>& points,
                                      unsigned jobs = 1);

/// Header plus one line per row. `log10` appends log10_T and log10_E.
void write_csv(std::ostream& out, const std::vector<ResultRow>& rows,
               bool log10);

struct SummaryLine {
  double axis_value = 0.0;
  std::size_t instances = 0;
  double mean_z_ilpb = 0.0;
  double mean_z_arg = 0.0;
  double mean_z_ars = 0.0;
  double mean_t_ilpb = 0.0;
  double mean_t_arg = 0.0;
  double mean_t_ars = 0.0;
  double mean_e_ilpb = 0.0;
  double mean_e_arg = 0.0;
  double mean_e_ars = 0.0;
  /// mean Z(ILPB) / mean((Z(ARG) + Z(ARS)) / 2); NaN if the denominator is 0.
  double ratio = 0.0;
};

std::vector<SummaryLine> summarize(const std::vector<ResultRow>& rows);
void write_summary(std::ostream& out, const std::vector<SummaryLine>& lines);

struct SweepRunOptions {
  std::string out_path;
  std::optional<std::uint64_t> seed;  // overrides the config seed
  bool log10 = false;
  unsigned jobs = 1;
};

struct VerifyOptions {
  std::size_t instances = 1000;
  std::size_t k_min = 1;
  std::size_t k_max = 24;
  std::uint64_t seed = 0;
  ParameterRanges ranges;
  SolverOptions solver;
};

struct VerifyReport {
  std::size_t instances = 0;
  std::size_t equivalence_failures = 0;
  std::size_t dominance_failures = 0;
  std::optional<Scenario> counterexample;
  std::string counterexample_reason;

  bool passed() const {
    return equivalence_failures == 0 && dominance_failures == 0;
  }
};

/// Generates `instances` scenarios (layer count uniform in [k_min, k_max],
/// energy weight uniform in [0, 1] with both endpoints forced periodically)
/// and checks ILPB against brute force and both baselines.
VerifyReport verify(const VerifyOptions& options);

// Command entry points: they print to `out`/`err` and return the process
// exit code (config error 2, validation error 3, failed check 1).

int run_solve(const std::string& config_path,
              std::optional<std::uint64_t> seed, std::ostream& out,
              std::ostream& err);

int run_sweep(const std::string& config_path, const SweepRunOptions& options,
              std::ostream& out, std::ostream& err);

int run_verify(const VerifyOptions& options, std::ostream& out,
               std::ostream& err);

/// Human-readable breakdown of one solution.
void write_solution_report(std::ostream& out, const Scenario& scen,
                           const Solution& sol);

}  // namespace leo_offload

#endif  // LEO_OFFLOAD_RUNNER_HPP
