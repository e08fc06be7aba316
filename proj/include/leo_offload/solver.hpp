#ifndef LEO_OFFLOAD_SOLVER_HPP
#define LEO_OFFLOAD_SOLVER_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "leo_offload/cost.hpp"
#include "leo_offload/model.hpp"
#include "leo_offload/objective.hpp"

namespace leo_offload {

enum class Method { kIlpb, kBruteForce, kArg, kArs };

std::string to_string(Method m);

struct Solution {
  OffloadDecision decision;
  ObjectiveValue objective;
  LatencyBreakdown latency;
  EnergyBreakdown energy;
  std::size_t nodes_explored = 0;
  Method method = Method::kIlpb;
};

// Decisions whose z lies within this distance of the minimum are ties;
// ties go to the smallest split index (fewest layers on the satellite).
inline constexpr double kTieTolerance = 1e-12;

// Relative margin subtracted from the raw energy/latency of a partial
// assignment's bound so that summation-order rounding cannot push the
// bound above an attainable completion.
inline constexpr double kBoundRoundingMargin = 1e-12;

enum class BoundTest {
  kEnabled,   // prune when bound > incumbent + tie tolerance
  kDisabled,  // explore every branch
  kInverted,  // prune exactly the branches that could improve (mutation fixture)
};

struct SolverOptions {
  BoundTest bound_test = BoundTest::kEnabled;
};

/// Evaluates a decision into a full Solution record.
Solution evaluate(const OffloadDecision& h, const Scenario& scen,
                  const NormalizationBounds& bounds, Method method,
                  std::size_t nodes_explored);

/// Enumerates all K+1 prefix decisions. Independent oracle for solve_ilpb.
Solution solve_bruteforce(const Scenario& scen);

/// Depth-first branch and bound over h_1..h_K in layer order, value order
/// {1, 0}. A 0 forces every later layer to 0, so the tree has at most
/// 2K+1 nodes. The incumbent starts at +inf and is updated only at
/// complete decisions; if nothing is ever evaluated the all-ground initial
/// state is returned.
Solution solve_ilpb(const Scenario& scen, const SolverOptions& options = {});

/// Optimistic z over every feasible completion of `partial` (the decided
/// prefix h_1..h_d). Exact when the prefix fixes the whole decision.
/// Throws std::invalid_argument if the prefix is not a valid partial
/// decision for the scenario.
double lower_bound(const std::vector<int>& partial, const Scenario& scen,
                   const NormalizationBounds& bounds);

Solution baseline_arg(const Scenario& scen);
Solution baseline_ars(const Scenario& scen);

}  // namespace leo_offload

#endif  // LEO_OFFLOAD_SOLVER_HPP
