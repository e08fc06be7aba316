#ifndef LEO_OFFLOAD_COST_HPP
#define LEO_OFFLOAD_COST_HPP

#include <cstddef>

#include "leo_offload/model.hpp"

namespace leo_offload {

struct LatencyBreakdown {
  double t_satellite = 0.0;  // onboard processing of layers 1..s
  double t_s_to_g = 0.0;     // downlink incl. waiting for later passes
  double t_g_to_c = 0.0;     // ground station -> data center relay
  double t_cloud = 0.0;      // cloud processing of layers s+1..K
  double total = 0.0;
};

struct EnergyBreakdown {
  double e_processing = 0.0;
  double e_transmission = 0.0;
  double total = 0.0;
};

struct DownlinkLatency {
  double t_tr = 0.0;   // time on air
  double t_per = 0.0;  // whole contact periods spent waiting
  double total() const { return t_tr + t_per; }
};

// Relative slack applied before taking the ceiling of the pass count, so a
// payload that exactly fills n passes never rounds up to n + 1.
inline constexpr double kPassCeilingEpsilon = 1e-9;

// Per-layer terms. `k` is 1-based; out-of-range indices throw
// std::out_of_range. None of these validate the scenario.

double proc_latency_satellite(std::size_t k, const InferenceRequest& req,
                              const SatelliteProfile& sat);

double proc_latency_cloud(std::size_t k, const InferenceRequest& req,
                          const CloudSegment& cloud);

/// Downlink of layer k's input. The waiting term counts the extra contact
/// periods needed when the payload exceeds one pass (rate_down * t_con).
DownlinkLatency downlink_latency(std::size_t k, const InferenceRequest& req,
                                 const SatelliteProfile& sat);

/// Zero when the data center is colocated with the ground station.
double gs_to_dc_latency(std::size_t k, const InferenceRequest& req,
                        const CloudSegment& cloud);

/// Onboard processing energy, (a_k D / zeta) P_max + delta_k (P_idle + P_leak).
double proc_energy_satellite(std::size_t k, const InferenceRequest& req,
                             const SatelliteProfile& sat);

/// Antenna energy; only time on air draws P_off, waiting is free.
double offload_energy(std::size_t k, const InferenceRequest& req,
                      const SatelliteProfile& sat);

// Whole-decision totals with h_0 = 1. Throw std::invalid_argument when the
// decision is infeasible or does not match the request's layer count.

LatencyBreakdown total_latency(const OffloadDecision& h, const Scenario& scen);

EnergyBreakdown total_energy(const OffloadDecision& h, const Scenario& scen);

}  // namespace leo_offload

#endif  // LEO_OFFLOAD_COST_HPP
