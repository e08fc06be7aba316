#include "leo_offload/objective.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace leo_offload {

namespace {

class Fnv1a {
 public:
  void add(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      state_ ^= (v >> (8 * i)) & 0xffU;
      state_ *= 0x100000001b3ULL;
    }
  }
  void add(double v) { add(std::bit_cast<std::uint64_t>(v)); }
  std::uint64_t value() const { return state_; }

 private:
  std::uint64_t state_ = 0xcbf29ce484222325ULL;
};

double normalize_term(double raw, double lo, double hi) {
  const double range = hi - lo;
  if (range <= kDegenerateRange * std::abs(hi)) return 0.0;
  return (raw - lo) / range;
}

}  // namespace

std::uint64_t cost_model_digest(const Scenario& scen) {
  Fnv1a h;
  const auto& s = scen.satellite;
  for (double v : {s.beta, s.zeta, s.p_max, s.p_idle, s.p_leak, s.p_off,
                   s.rate_down, s.t_cyc, s.t_con}) {
    h.add(v);
  }
  const auto& c = scen.cloud;
  h.add(c.gamma);
  h.add(c.gamma_max);
  h.add(c.rate_gs_dc);
  h.add(std::uint64_t{c.colocated ? 1U : 0U});
  h.add(scen.request.data_size);
  h.add(std::uint64_t{scen.request.alphas.size()});
  for (double a : scen.request.alphas) h.add(a);
  return h.value();
}

NormalizationBounds normalization_bounds(const Scenario& scen) {
  NormalizationBounds b;
  b.e_min = b.t_min = std::numeric_limits<double>::infinity();
  b.e_max = b.t_max = -std::numeric_limits<double>::infinity();
  const std::size_t layers = scen.layers();
  for (std::size_t s = 0; s <= layers; ++s) {
    const auto h = decision_from_split(s, layers);
    const double e = total_energy(h, scen).total;
    const double t = total_latency(h, scen).total;
    b.e_min = std::min(b.e_min, e);
    b.e_max = std::max(b.e_max, e);
    b.t_min = std::min(b.t_min, t);
    b.t_max = std::max(b.t_max, t);
  }
  b.digest = cost_model_digest(scen);
  return b;
}

ObjectiveValue normalize(double raw_e, double raw_t, const Weights& weights,
                         const NormalizationBounds& bounds) {
  ObjectiveValue v;
  v.raw_e = raw_e;
  v.raw_t = raw_t;
  v.norm_e = normalize_term(raw_e, bounds.e_min, bounds.e_max);
  v.norm_t = normalize_term(raw_t, bounds.t_min, bounds.t_max);
  v.z = weights.mu * v.norm_e + weights.lambda * v.norm_t;
  return v;
}

ObjectiveValue objective(const OffloadDecision& h, const Scenario& scen,
                         const NormalizationBounds& bounds) {
  if (bounds.digest != cost_model_digest(scen)) {
    throw std::invalid_argument(
        "normalization bounds were computed for a different scenario");
  }
  const double e = total_energy(h, scen).total;
  const double t = total_latency(h, scen).total;
  return normalize(e, t, scen.weights, bounds);
}

std::string to_string(Constraint c) {
  switch (c) {
    case Constraint::kGammaCap:
      return "gamma cap";
    case Constraint::kCompleteness:
      return "completeness";
    case Constraint::kSingleTransmission:
      return "single transmission";
    case Constraint::kMonotonicity:
      return "monotonicity";
    case Constraint::kBinary:
      return "binary";
  }
  return "unknown";
}

std::vector<ConstraintViolation> check_constraints(const OffloadDecision& h,
                                                   const Scenario& scen) {
  std::vector<ConstraintViolation> out;
  if (scen.cloud.gamma > scen.cloud.gamma_max) {
    out.push_back({Constraint::kGammaCap, 0,
                   "gamma exceeds gamma_max"});
  }
  if (h.layers() != scen.layers()) {
    out.push_back({Constraint::kCompleteness, 0,
                   "decision covers " + std::to_string(h.layers()) +
                       " layers, request has " +
                       std::to_string(scen.layers())});
  }
  const auto& v = h.values();
  std::size_t transmissions = 0;
  for (std::size_t k = 1; k <= v.size(); ++k) {
    const int cur = h.at(k);
    if (cur != 0 && cur != 1) {
      out.push_back({Constraint::kBinary, k,
                     "h_" + std::to_string(k) + " = " + std::to_string(cur) +
                         " is not binary"});
    }
    if (k < v.size() && cur < h.at(k + 1)) {
      out.push_back({Constraint::kMonotonicity, k,
                     "h_" + std::to_string(k) + " < h_" +
                         std::to_string(k + 1)});
    }
    if (h.at(k - 1) - cur == 1) ++transmissions;
  }
  if (transmissions > 1) {
    out.push_back({Constraint::kSingleTransmission, 0,
                   std::to_string(transmissions) +
                       " satellite-to-ground hand-offs"});
  }
  return out;
}

}  // namespace leo_offload
