#include "leo_offload/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace leo_offload {

namespace {

std::string fmt_double(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

void require_positive(const std::string& field, double v) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw ValidationError(field, "must be > 0 (got " + fmt_double(v) + ")");
  }
}

}  // namespace

double InferenceRequest::layer_input(std::size_t k) const {
  if (k < 1 || k > alphas.size()) {
    throw std::out_of_range("layer index " + std::to_string(k) +
                            " outside [1, " + std::to_string(alphas.size()) +
                            "]");
  }
  return alphas[k - 1] * data_size;
}

int OffloadDecision::at(std::size_t k) const {
  if (k == 0) return 1;
  if (k > h_.size()) {
    throw std::out_of_range("decision index " + std::to_string(k) +
                            " outside [0, " + std::to_string(h_.size()) + "]");
  }
  return h_[k - 1];
}

std::size_t OffloadDecision::split_index() const {
  std::size_t n = 0;
  for (int v : h_) n += v == 1 ? 1 : 0;
  return n;
}

const Scenario& validate_scenario(const Scenario& s) {
  const auto& sat = s.satellite;
  require_positive("satellite.beta", sat.beta);
  require_positive("satellite.zeta", sat.zeta);
  require_positive("satellite.p_max", sat.p_max);
  require_positive("satellite.p_idle", sat.p_idle);
  require_positive("satellite.p_leak", sat.p_leak);
  require_positive("satellite.p_off", sat.p_off);
  require_positive("satellite.rate_down", sat.rate_down);
  require_positive("satellite.t_cyc", sat.t_cyc);
  require_positive("satellite.t_con", sat.t_con);
  if (!(sat.t_con < sat.t_cyc)) {
    throw ValidationError("satellite.t_con",
                          "contact duration must be < t_cyc (" +
                              fmt_double(sat.t_con) + " >= " +
                              fmt_double(sat.t_cyc) + ")");
  }

  const auto& cloud = s.cloud;
  require_positive("cloud.gamma", cloud.gamma);
  require_positive("cloud.gamma_max", cloud.gamma_max);
  require_positive("cloud.rate_gs_dc", cloud.rate_gs_dc);
  if (cloud.gamma > cloud.gamma_max) {
    throw ValidationError("cloud.gamma",
                          "gamma cap violated: gamma " +
                              fmt_double(cloud.gamma) + " exceeds gamma_max " +
                              fmt_double(cloud.gamma_max));
  }

  const auto& req = s.request;
  require_positive("request.data_size", req.data_size);
  if (req.alphas.empty()) {
    throw ValidationError("request.alphas", "K must be >= 1 (no layers)");
  }
  for (std::size_t k = 0; k < req.alphas.size(); ++k) {
    const double a = req.alphas[k];
    if (!(a > 0.0 && a <= 1.0)) {
      throw ValidationError("request.alphas",
                            "alpha_" + std::to_string(k + 1) +
                                " must lie in (0, 1] (got " + fmt_double(a) +
                                ")");
    }
  }

  const auto& w = s.weights;
  if (!(w.mu >= 0.0)) {
    throw ValidationError("weights.mu", "must be >= 0 (got " +
                                            fmt_double(w.mu) + ")");
  }
  if (!(w.lambda >= 0.0)) {
    throw ValidationError("weights.lambda", "must be >= 0 (got " +
                                                fmt_double(w.lambda) + ")");
  }
  if (std::abs(w.mu + w.lambda - 1.0) > kWeightSumTolerance) {
    throw ValidationError("weights", "mu + lambda must equal 1 (got " +
                                         fmt_double(w.mu + w.lambda) + ")");
  }
  return s;
}

OffloadDecision decision_from_split(std::size_t split, std::size_t layers) {
  if (split > layers) {
    throw std::out_of_range("split index " + std::to_string(split) +
                            " outside [0, " + std::to_string(layers) + "]");
  }
  std::vector<int> h(layers, 0);
  std::fill(h.begin(), h.begin() + static_cast<std::ptrdiff_t>(split), 1);
  return OffloadDecision(std::move(h));
}

bool is_feasible(const OffloadDecision& h) {
  const auto& v = h.values();
  if (v.empty()) return false;
  int prev = 1;
  int transitions = 0;
  for (int x : v) {
    if (x != 0 && x != 1) return false;
    if (x > prev) return false;
    if (prev - x == 1) ++transitions;
    prev = x;
  }
  return transitions <= 1;
}

bool is_feasible(const OffloadDecision& h, std::size_t layers) {
  return h.layers() == layers && is_feasible(h);
}

}  // namespace leo_offload
