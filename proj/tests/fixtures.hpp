#ifndef LEO_OFFLOAD_TESTS_FIXTURES_HPP
#define LEO_OFFLOAD_TESTS_FIXTURES_HPP

// Shared test fixtures and an independent reference evaluator.
//
// The reference code below re-derives latency, energy and the objective
// straight from the model formulas over arbitrary binary vectors. It shares
// nothing with src/ beyond the plain data types, so it can serve as an
// oracle for the cost module and both solvers.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "leo_offload/model.hpp"

namespace leo_offload::testing {

/// Three-layer hand-checkable instance.
inline Scenario t1a(double mu = 0.5, double lambda = 0.5) {
  Scenario s;
  s.satellite.beta = 0.02;
  s.satellite.zeta = 100.0;
  s.satellite.p_max = 10.0;
  s.satellite.p_idle = 1.0;
  s.satellite.p_leak = 0.5;
  s.satellite.p_off = 2.0;
  s.satellite.rate_down = 100.0;
  s.satellite.t_cyc = 28800.0;
  s.satellite.t_con = 360.0;
  s.cloud.gamma = 0.001;
  s.cloud.gamma_max = 0.001;
  s.cloud.rate_gs_dc = 1000.0;
  s.cloud.colocated = false;
  s.request.data_size = 1000.0;
  s.request.alphas = {0.8, 0.4, 0.1};
  s.weights = {mu, lambda};
  return s;
}

struct RefCost {
  double t = 0.0;
  double e = 0.0;
};

/// Literal evaluation of the latency and energy sums for any binary vector
/// (feasible or not), with h_0 = 1.
inline RefCost reference_cost(const std::vector<int>& h, const Scenario& s) {
  const auto& sat = s.satellite;
  const auto& cl = s.cloud;
  const double d = s.request.data_size;
  RefCost c;
  int prev = 1;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const double size = s.request.alphas[i] * d;
    const double delta = size * sat.beta;
    const double delta_cloud = size * cl.gamma;
    const double x = size / (sat.rate_down * sat.t_con);
    // ceil with the same relative guard the library documents
    double passes = std::ceil(x - x * 1e-9);
    if (passes < 1.0) passes = 1.0;
    const double t_down = size / sat.rate_down + sat.t_cyc * (passes - 1.0);
    const double t_gc = cl.colocated ? 0.0 : size / cl.rate_gs_dc;
    const double e_sat =
        delta * (size / (sat.zeta * delta) * sat.p_max + sat.p_idle +
                 sat.p_leak);
    const double e_off = size / sat.rate_down * sat.p_off;
    const int hk = h[i];
    const int drop = prev - hk;
    c.t += hk * delta + drop * t_down + drop * t_gc + (1 - hk) * delta_cloud;
    c.e += hk * e_sat + drop * e_off;
    prev = hk;
  }
  return c;
}

/// Feasibility straight from the constraint list: binary, non-increasing,
/// at most one hand-off counted with h_0 = 1.
inline bool reference_feasible(const std::vector<int>& h) {
  int prev = 1;
  int handoffs = 0;
  for (int v : h) {
    if (v != 0 && v != 1) return false;
    if (v > prev) return false;
    handoffs += (prev - v == 1);
    prev = v;
  }
  return !h.empty() && handoffs <= 1;
}

inline std::vector<int> bits(std::uint64_t mask, std::size_t k) {
  std::vector<int> h(k);
  for (std::size_t i = 0; i < k; ++i) h[i] = (mask >> i) & 1U;
  return h;
}

struct RefOptimum {
  std::vector<int> h;
  double z = 0.0;
  double e_min = 0.0, e_max = 0.0, t_min = 0.0, t_max = 0.0;
  std::vector<std::pair<std::vector<int>, double>> all;  // feasible (h, z)
};

/// Exhaustive search over all 2^K binary vectors. Ties within 1e-12 go to
/// the vector with the fewest ones.
inline RefOptimum reference_optimum(const Scenario& s) {
  const std::size_t k = s.request.alphas.size();
  std::vector<std::pair<std::vector<int>, RefCost>> feasible;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << k); ++m) {
    auto h = bits(m, k);
    if (reference_feasible(h)) feasible.emplace_back(h, reference_cost(h, s));
  }
  RefOptimum out;
  out.e_min = out.t_min = std::numeric_limits<double>::infinity();
  out.e_max = out.t_max = -std::numeric_limits<double>::infinity();
  for (const auto& [h, c] : feasible) {
    out.e_min = std::min(out.e_min, c.e);
    out.e_max = std::max(out.e_max, c.e);
    out.t_min = std::min(out.t_min, c.t);
    out.t_max = std::max(out.t_max, c.t);
  }
  auto norm = [](double v, double lo, double hi) {
    return hi - lo <= 1e-12 * std::abs(hi) ? 0.0 : (v - lo) / (hi - lo);
  };
  double best = std::numeric_limits<double>::infinity();
  for (const auto& [h, c] : feasible) {
    const double z = s.weights.mu * norm(c.e, out.e_min, out.e_max) +
                     s.weights.lambda * norm(c.t, out.t_min, out.t_max);
    out.all.emplace_back(h, z);
    best = std::min(best, z);
  }
  std::size_t best_ones = std::numeric_limits<std::size_t>::max();
  for (const auto& [h, z] : out.all) {
    const auto ones = static_cast<std::size_t>(std::count(h.begin(), h.end(), 1));
    if (z <= best + 1e-12 && ones < best_ones) {
      best_ones = ones;
      out.h = h;
      out.z = z;
    }
  }
  return out;
}

}  // namespace leo_offload::testing

#endif  // LEO_OFFLOAD_TESTS_FIXTURES_HPP
