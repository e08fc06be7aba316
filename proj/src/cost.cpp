#include "leo_offload/cost.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace leo_offload {

namespace {

void require_feasible(const OffloadDecision& h, const Scenario& scen) {
  if (!is_feasible(h, scen.layers())) {
    throw std::invalid_argument(
        "infeasible offloading decision for a request with " +
        std::to_string(scen.layers()) + " layers");
  }
}

}  // namespace

double proc_latency_satellite(std::size_t k, const InferenceRequest& req,
                              const SatelliteProfile& sat) {
  return req.layer_input(k) * sat.beta;
}

double proc_latency_cloud(std::size_t k, const InferenceRequest& req,
                          const CloudSegment& cloud) {
  return req.layer_input(k) * cloud.gamma;
}

DownlinkLatency downlink_latency(std::size_t k, const InferenceRequest& req,
                                 const SatelliteProfile& sat) {
  const double size = req.layer_input(k);
  const double passes_needed = size / (sat.rate_down * sat.t_con);
  const double passes =
      std::max(1.0, std::ceil(passes_needed * (1.0 - kPassCeilingEpsilon)));
  return {size / sat.rate_down, sat.t_cyc * (passes - 1.0)};
}

double gs_to_dc_latency(std::size_t k, const InferenceRequest& req,
                        const CloudSegment& cloud) {
  const double size = req.layer_input(k);
  if (cloud.colocated) return 0.0;
  return size / cloud.rate_gs_dc;
}

double proc_energy_satellite(std::size_t k, const InferenceRequest& req,
                             const SatelliteProfile& sat) {
  const double size = req.layer_input(k);
  const double busy = proc_latency_satellite(k, req, sat);
  return size / sat.zeta * sat.p_max + busy * (sat.p_idle + sat.p_leak);
}

double offload_energy(std::size_t k, const InferenceRequest& req,
                      const SatelliteProfile& sat) {
  return downlink_latency(k, req, sat).t_tr * sat.p_off;
}

LatencyBreakdown total_latency(const OffloadDecision& h,
                               const Scenario& scen) {
  require_feasible(h, scen);
  const auto& req = scen.request;
  LatencyBreakdown out;
  for (std::size_t k = 1; k <= h.layers(); ++k) {
    if (h.at(k) == 1) {
      out.t_satellite += proc_latency_satellite(k, req, scen.satellite);
    } else {
      out.t_cloud += proc_latency_cloud(k, req, scen.cloud);
    }
    if (h.at(k - 1) - h.at(k) == 1) {
      out.t_s_to_g += downlink_latency(k, req, scen.satellite).total();
      out.t_g_to_c += gs_to_dc_latency(k, req, scen.cloud);
    }
  }
  out.total = out.t_satellite + out.t_s_to_g + out.t_g_to_c + out.t_cloud;
  return out;
}

EnergyBreakdown total_energy(const OffloadDecision& h, const Scenario& scen) {
  require_feasible(h, scen);
  const auto& req = scen.request;
  EnergyBreakdown out;
  for (std::size_t k = 1; k <= h.layers(); ++k) {
    if (h.at(k) == 1) {
      out.e_processing += proc_energy_satellite(k, req, scen.satellite);
    }
    if (h.at(k - 1) - h.at(k) == 1) {
      out.e_transmission += offload_energy(k, req, scen.satellite);
    }
  }
  out.total = out.e_processing + out.e_transmission;
  return out;
}

}  // namespace leo_offload
