#ifndef LEO_OFFLOAD_OBJECTIVE_HPP
#define LEO_OFFLOAD_OBJECTIVE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "leo_offload/cost.hpp"
#include "leo_offload/model.hpp"

namespace leo_offload {

/// Min/max of energy and latency over the K+1 feasible decisions of one
/// scenario. `digest` identifies the cost model the bounds were taken from
/// (satellite, cloud and request; the weights do not affect the bounds).
struct NormalizationBounds {
  double e_min = 0.0;
  double e_max = 0.0;
  double t_min = 0.0;
  double t_max = 0.0;
  std::uint64_t digest = 0;
};

struct ObjectiveValue {
  double z = 0.0;
  double norm_e = 0.0;
  double norm_t = 0.0;
  double raw_e = 0.0;  // J
  double raw_t = 0.0;  // s
};

// A range narrower than this (relative to its max) is treated as
// degenerate and the corresponding term contributes 0 to z.
inline constexpr double kDegenerateRange = 1e-12;

/// Stable 64-bit FNV-1a digest of the cost-relevant scenario fields.
std::uint64_t cost_model_digest(const Scenario& scen);

NormalizationBounds normalization_bounds(const Scenario& scen);

/// Normalizes a raw (energy, latency) pair. Does not check the digest.
ObjectiveValue normalize(double raw_e, double raw_t, const Weights& weights,
                         const NormalizationBounds& bounds);

/// Weighted-sum objective of a feasible decision. Throws
/// std::invalid_argument on an infeasible decision or when `bounds` were
/// computed for a different cost model.
ObjectiveValue objective(const OffloadDecision& h, const Scenario& scen,
                         const NormalizationBounds& bounds);

enum class Constraint {
  kGammaCap,            // gamma <= gamma_max
  kCompleteness,        // every layer assigned exactly once
  kSingleTransmission,  // at most one satellite->ground hand-off
  kMonotonicity,        // h_k >= h_{k+1}
  kBinary,              // h_k in {0, 1}
};

std::string to_string(Constraint c);

struct ConstraintViolation {
  Constraint constraint;
  std::size_t layer = 0;  // 1-based; 0 when not tied to a layer
  std::string message;
};

/// Empty iff the decision satisfies every problem constraint on `scen`.
std::vector<ConstraintViolation> check_constraints(const OffloadDecision& h,
                                                   const Scenario& scen);

}  // namespace leo_offload

#endif  // LEO_OFFLOAD_OBJECTIVE_HPP
