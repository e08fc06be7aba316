#ifndef LEO_OFFLOAD_MODEL_HPP
#define LEO_OFFLOAD_MODEL_HPP

// Domain types for layer-wise DNN inference offloading between one LEO
// satellite, one ground station and one cloud data center.
//
// Canonical units throughout the library:
//   data      kilobytes (KB, decimal)
//   rate      KB per second
//   time      seconds
//   power     watts
//   energy    joules

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace leo_offload {

struct SatelliteProfile {
  double beta = 0.0;       // s/KB, onboard processing latency per unit of data
  double zeta = 0.0;       // KB/s, data processed per second at max power
  double p_max = 0.0;      // W
  double p_idle = 0.0;     // W
  double p_leak = 0.0;     // W
  double p_off = 0.0;      // W, antenna transmission power
  double rate_down = 0.0;  // KB/s, satellite -> ground station
  double t_cyc = 0.0;      // s, contact period
  double t_con = 0.0;      // s, contact duration per pass

  bool operator==(const SatelliteProfile&) const = default;
};

struct CloudSegment {
  double gamma = 0.0;       // s/KB, cloud processing latency per unit of data
  double gamma_max = 0.0;   // s/KB, cap on gamma
  double rate_gs_dc = 0.0;  // KB/s, ground station -> data center
  bool colocated = false;   // data center attached to the ground station

  bool operator==(const CloudSegment&) const = default;
};

struct InferenceRequest {
  double data_size = 0.0;     // KB, original input size D
  std::vector<double> alphas;  // per-layer input ratio relative to D

  std::size_t layers() const { return alphas.size(); }

  /// Input size of layer k (1-based) in KB.
  double layer_input(std::size_t k) const;

  bool operator==(const InferenceRequest&) const = default;
};

struct Weights {
  double mu = 0.5;      // energy weight
  double lambda = 0.5;  // latency weight

  bool operator==(const Weights&) const = default;
};

struct Scenario {
  SatelliteProfile satellite;
  CloudSegment cloud;
  InferenceRequest request;
  Weights weights;

  std::size_t layers() const { return request.layers(); }

  bool operator==(const Scenario&) const = default;
};

/// Placement vector h_1..h_K; h_k = 1 runs layer k on the satellite.
/// Entries are stored as given so that non-binary input can be reported
/// by the constraint checker instead of being silently coerced.
class OffloadDecision {
 public:
  OffloadDecision() = default;
  explicit OffloadDecision(std::vector<int> h) : h_(std::move(h)) {}

  std::size_t layers() const { return h_.size(); }
  const std::vector<int>& values() const { return h_; }

  /// h_k for 1 <= k <= K; h_0 is 1 by convention.
  int at(std::size_t k) const;

  /// Number of layers placed on the satellite.
  std::size_t split_index() const;

  bool operator==(const OffloadDecision&) const = default;

 private:
  std::vector<int> h_;
};

/// Raised by validate_scenario; field() names the offending field.
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(std::string field, const std::string& what)
      : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

inline constexpr double kWeightSumTolerance = 1e-12;

/// Returns `s` unchanged when every invariant holds; otherwise throws a
/// ValidationError for the first violation found.
const Scenario& validate_scenario(const Scenario& s);

/// Prefix decision: layers 1..split on the satellite, the rest in the cloud.
/// Throws std::out_of_range unless split <= layers.
OffloadDecision decision_from_split(std::size_t split, std::size_t layers);

/// True iff the vector is binary, non-increasing, and has at most one
/// satellite-to-ground transition (with h_0 = 1).
bool is_feasible(const OffloadDecision& h);

/// Checks is_feasible and that the decision covers exactly `layers` layers.
bool is_feasible(const OffloadDecision& h, std::size_t layers);

}  // namespace leo_offload

#endif  // LEO_OFFLOAD_MODEL_HPP
