#include "leo_offload/solver.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>

namespace leo_offload {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Smallest split among `candidates` whose z is within the tie tolerance
/// of the best z. Candidates are (split, z) pairs in any order.
std::size_t pick_split(const std::vector<std::pair<std::size_t, double>>& c) {
  double best = kInf;
  for (const auto& [split, z] : c) best = std::min(best, z);
  std::size_t chosen = std::numeric_limits<std::size_t>::max();
  for (const auto& [split, z] : c) {
    if (z <= best + kTieTolerance) chosen = std::min(chosen, split);
  }
  return chosen;
}

/// If the prefix already determines the decision (it contains a 0, or
/// covers every layer), returns the split index it forces.
std::optional<std::size_t> forced_split(const std::vector<int>& partial,
                                        std::size_t layers) {
  for (std::size_t i = 0; i < partial.size(); ++i) {
    if (partial[i] == 0) return i;
  }
  if (partial.size() == layers) return layers;
  return std::nullopt;
}

class BranchAndBound {
 public:
  BranchAndBound(const Scenario& scen, const NormalizationBounds& bounds,
                 const SolverOptions& options)
      : scen_(scen), bounds_(bounds), options_(options) {}

  void run() {
    std::vector<int> prefix;
    descend(prefix);
  }

  std::size_t nodes() const { return nodes_; }
  const std::vector<std::pair<std::size_t, double>>& leaves() const {
    return leaves_;
  }

 private:
  // `prefix` is all ones here; any 0 would have made it a leaf.
  void descend(std::vector<int>& prefix) {
    ++nodes_;
    const std::size_t layers = scen_.layers();

    prefix.push_back(1);
    if (admit(lower_bound(prefix, scen_, bounds_))) {
      if (prefix.size() == layers) {
        leaf(layers);
      } else {
        descend(prefix);
      }
    }
    prefix.back() = 0;
    if (admit(lower_bound(prefix, scen_, bounds_))) {
      leaf(prefix.size() - 1);
    }
    prefix.pop_back();
  }

  void leaf(std::size_t split) {
    ++nodes_;
    const auto h = decision_from_split(split, scen_.layers());
    const double z = objective(h, scen_, bounds_).z;
    leaves_.emplace_back(split, z);
    incumbent_ = std::min(incumbent_, z);
  }

  bool admit(double bound) const {
    switch (options_.bound_test) {
      case BoundTest::kEnabled:
        return !(bound > incumbent_ + kTieTolerance);
      case BoundTest::kDisabled:
        return true;
      case BoundTest::kInverted:
        return bound > incumbent_ + kTieTolerance;
    }
    return true;
  }

  const Scenario& scen_;
  const NormalizationBounds& bounds_;
  const SolverOptions& options_;
  double incumbent_ = kInf;
  std::size_t nodes_ = 0;
  std::vector<std::pair<std::size_t, double>> leaves_;
};

}  // namespace

std::string to_string(Method m) {
  switch (m) {
    case Method::kIlpb:
      return "ILPB";
    case Method::kBruteForce:
      return "BruteForce";
    case Method::kArg:
      return "ARG";
    case Method::kArs:
      return "ARS";
  }
  return "unknown";
}

Solution evaluate(const OffloadDecision& h, const Scenario& scen,
                  const NormalizationBounds& bounds, Method method,
                  std::size_t nodes_explored) {
  Solution s;
  s.decision = h;
  s.latency = total_latency(h, scen);
  s.energy = total_energy(h, scen);
  s.objective = objective(h, scen, bounds);
  s.nodes_explored = nodes_explored;
  s.method = method;
  return s;
}

Solution solve_bruteforce(const Scenario& scen) {
  const auto bounds = normalization_bounds(scen);
  const std::size_t layers = scen.layers();
  std::vector<std::pair<std::size_t, double>> candidates;
  for (std::size_t s = 0; s <= layers; ++s) {
    candidates.emplace_back(
        s, objective(decision_from_split(s, layers), scen, bounds).z);
  }
  return evaluate(decision_from_split(pick_split(candidates), layers), scen,
                  bounds, Method::kBruteForce, layers + 1);
}

Solution solve_ilpb(const Scenario& scen, const SolverOptions& options) {
  const auto bounds = normalization_bounds(scen);
  BranchAndBound search(scen, bounds, options);
  search.run();
  const std::size_t split =
      search.leaves().empty() ? 0 : pick_split(search.leaves());
  return evaluate(decision_from_split(split, scen.layers()), scen, bounds,
                  Method::kIlpb, search.nodes());
}

double lower_bound(const std::vector<int>& partial, const Scenario& scen,
                   const NormalizationBounds& bounds) {
  const std::size_t layers = scen.layers();
  if (partial.size() > layers) {
    throw std::invalid_argument("partial assignment longer than the request");
  }
  for (std::size_t i = 0; i < partial.size(); ++i) {
    const int v = partial[i];
    if ((v != 0 && v != 1) || (i > 0 && v > partial[i - 1])) {
      throw std::invalid_argument(
          "partial assignment violates binarity or monotonicity at layer " +
          std::to_string(i + 1));
    }
  }

  if (const auto split = forced_split(partial, layers)) {
    return objective(decision_from_split(*split, layers), scen, bounds).z;
  }
  if (bounds.digest != cost_model_digest(scen)) {
    throw std::invalid_argument(
        "normalization bounds were computed for a different scenario");
  }

  // Decided layers run onboard; each undecided layer takes its cheaper
  // side (cloud energy is not charged to the satellite) and the
  // downlink/relay terms are bounded below by zero.
  const auto& req = scen.request;
  double energy = 0.0;
  double latency = 0.0;
  for (std::size_t k = 1; k <= layers; ++k) {
    const double onboard = proc_latency_satellite(k, req, scen.satellite);
    if (k <= partial.size()) {
      energy += proc_energy_satellite(k, req, scen.satellite);
      latency += onboard;
    } else {
      latency += std::min(onboard, proc_latency_cloud(k, req, scen.cloud));
    }
  }
  energy *= 1.0 - kBoundRoundingMargin;
  latency *= 1.0 - kBoundRoundingMargin;
  return normalize(energy, latency, scen.weights, bounds).z;
}

Solution baseline_arg(const Scenario& scen) {
  const auto bounds = normalization_bounds(scen);
  return evaluate(decision_from_split(0, scen.layers()), scen, bounds,
                  Method::kArg, 1);
}

Solution baseline_ars(const Scenario& scen) {
  const auto bounds = normalization_bounds(scen);
  return evaluate(decision_from_split(scen.layers(), scen.layers()), scen,
                  bounds, Method::kArs, 1);
}

}  // namespace leo_offload
