#ifndef LEO_OFFLOAD_SCENARIO_HPP
#define LEO_OFFLOAD_SCENARIO_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "leo_offload/model.hpp"

namespace leo_offload {

struct Range {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double v) const { return v >= lo && v <= hi; }
  bool operator==(const Range&) const = default;
};

/// Sampling ranges (canonical units) plus the fixed values used for every
/// parameter that is not sampled. Defaults reproduce the Tiansuan-style
/// setup: 10-100 Mbps downlink, 8 h contact period, 6 min passes.
struct ParameterRanges {
  Range rate_down{1250.0, 12500.0};  // KB/s (10..100 Mbps)
  Range beta{0.01, 0.03};            // s/KB
  Range gamma{0.0001, 0.001};        // s/KB
  Range alpha_base{0.05, 0.9};       // alpha_k = c^k
  Range p_max{1.0, 10.0};            // W
  Range data_size{1e6, 1e9};         // KB (1..1000 GB)
  double t_cyc = 28800.0;            // s
  double t_con = 360.0;              // s

  double zeta = 1000.0;        // KB/s
  double p_idle = 1.0;         // W
  double p_leak = 0.5;         // W
  double p_off = 2.0;          // W
  double rate_gs_dc = 1e5;     // KB/s
  double gamma_max = 0.001;    // s/KB
  bool colocated = false;

  bool operator==(const ParameterRanges&) const = default;
};

inline constexpr std::size_t kDefaultLayers = 10;
inline constexpr const char* kPrngName = "mt19937_64";

/// Throws std::invalid_argument naming the first malformed range.
void validate_ranges(const ParameterRanges& ranges);

/// 64-bit Mersenne Twister with a fixed mapping to doubles, so draws are
/// identical on every platform (std::uniform_real_distribution is not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(const Range& r) { return r.lo + unit() * (r.hi - r.lo); }
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Seed of replication `index` derived from a sweep seed (splitmix64).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// alpha_k = base^k for k = 1..layers.
std::vector<double> geometric_alphas(double base, std::size_t layers);

/// Draws one scenario. Draw order is rate_down, beta, gamma, alpha_base,
/// p_max, data_size; the result has passed validate_scenario.
Scenario sample_scenario(const ParameterRanges& ranges, std::size_t layers,
                         const Weights& weights, std::uint64_t seed);

enum class SweepAxis { kDataSize, kRateDown, kWeightRatio };

std::string to_string(SweepAxis axis);
SweepAxis parse_axis(const std::string& name);

/// Axis values are canonical: KB for data_size, KB/s for rate_down and the
/// latency share lambda / (lambda + mu) for weight_ratio.
struct SweepSpec {
  SweepAxis axis = SweepAxis::kDataSize;
  std::vector<double> points;
  std::size_t replications = 1;
  std::uint64_t seed = 0;
};

struct SweepPoint {
  double axis_value = 0.0;
  std::size_t replication = 0;
  std::uint64_t seed = 0;  // seed of the replication's base draw
  Scenario scenario;
};

/// Paired design: each replication draws one base scenario, then the swept
/// field is pinned to every axis point. Ordered by axis point, then
/// replication. Throws std::invalid_argument on a malformed spec.
std::vector<SweepPoint> build_sweep(const SweepSpec& spec,
                                    const ParameterRanges& ranges,
                                    std::size_t layers,
                                    const Weights& weights);

}  // namespace leo_offload

#endif  // LEO_OFFLOAD_SCENARIO_HPP
