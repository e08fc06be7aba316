#include "leo_offload/scenario.hpp"

#include <cmath>
#include <stdexcept>

namespace leo_offload {

namespace {

void check_range(const std::string& name, const Range& r) {
  if (!(r.lo > 0.0) || !(r.lo <= r.hi) || !std::isfinite(r.hi)) {
    throw std::invalid_argument("range " + name +
                                " must satisfy 0 < lo <= hi < inf");
  }
}

void check_positive(const std::string& name, double v) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw std::invalid_argument("parameter " + name + " must be > 0");
  }
}

}  // namespace

void validate_ranges(const ParameterRanges& r) {
  check_range("rate_down", r.rate_down);
  check_range("beta", r.beta);
  check_range("gamma", r.gamma);
  check_range("alpha_base", r.alpha_base);
  check_range("p_max", r.p_max);
  check_range("data_size", r.data_size);
  if (r.alpha_base.hi > 1.0) {
    throw std::invalid_argument("range alpha_base must lie within (0, 1]");
  }
  if (r.gamma.hi > r.gamma_max) {
    throw std::invalid_argument("range gamma exceeds gamma_max");
  }
  check_positive("t_cyc", r.t_cyc);
  check_positive("t_con", r.t_con);
  if (!(r.t_con < r.t_cyc)) {
    throw std::invalid_argument("t_con must be shorter than t_cyc");
  }
  check_positive("zeta", r.zeta);
  check_positive("p_idle", r.p_idle);
  check_positive("p_leak", r.p_leak);
  check_positive("p_off", r.p_off);
  check_positive("rate_gs_dc", r.rate_gs_dc);
  check_positive("gamma_max", r.gamma_max);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<double> geometric_alphas(double base, std::size_t layers) {
  std::vector<double> alphas;
  alphas.reserve(layers);
  double a = 1.0;
  for (std::size_t k = 0; k < layers; ++k) {
    a *= base;
    alphas.push_back(a);
  }
  return alphas;
}

Scenario sample_scenario(const ParameterRanges& ranges, std::size_t layers,
                         const Weights& weights, std::uint64_t seed) {
  validate_ranges(ranges);
  if (layers == 0) throw std::invalid_argument("layer count must be >= 1");

  Rng rng(seed);
  Scenario s;
  s.satellite.rate_down = rng.uniform(ranges.rate_down);
  s.satellite.beta = rng.uniform(ranges.beta);
  s.cloud.gamma = rng.uniform(ranges.gamma);
  const double base = rng.uniform(ranges.alpha_base);
  s.satellite.p_max = rng.uniform(ranges.p_max);
  s.request.data_size = rng.uniform(ranges.data_size);
  s.request.alphas = geometric_alphas(base, layers);

  s.satellite.zeta = ranges.zeta;
  s.satellite.p_idle = ranges.p_idle;
  s.satellite.p_leak = ranges.p_leak;
  s.satellite.p_off = ranges.p_off;
  s.satellite.t_cyc = ranges.t_cyc;
  s.satellite.t_con = ranges.t_con;
  s.cloud.gamma_max = ranges.gamma_max;
  s.cloud.rate_gs_dc = ranges.rate_gs_dc;
  s.cloud.colocated = ranges.colocated;
  s.weights = weights;
  validate_scenario(s);
  return s;
}

std::string to_string(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::kDataSize:
      return "data_size";
    case SweepAxis::kRateDown:
      return "rate_down";
    case SweepAxis::kWeightRatio:
      return "weight_ratio";
  }
  return "unknown";
}

SweepAxis parse_axis(const std::string& name) {
  if (name == "data_size") return SweepAxis::kDataSize;
  if (name == "rate_down") return SweepAxis::kRateDown;
  if (name == "weight_ratio") return SweepAxis::kWeightRatio;
  throw std::invalid_argument("unknown sweep axis '" + name +
                              "' (expected data_size, rate_down or "
                              "weight_ratio)");
}

std::vector<SweepPoint> build_sweep(const SweepSpec& spec,
                                    const ParameterRanges& ranges,
                                    std::size_t layers,
                                    const Weights& weights) {
  if (spec.points.empty()) {
    throw std::invalid_argument("sweep needs at least one axis point");
  }
  if (spec.replications == 0) {
    throw std::invalid_argument("sweep replications must be >= 1");
  }
  if (spec.points.size() > 1) {
    const bool up = spec.points[1] > spec.points[0];
    for (std::size_t i = 1; i < spec.points.size(); ++i) {
      const bool ok = up ? spec.points[i] > spec.points[i - 1]
                         : spec.points[i] < spec.points[i - 1];
      if (!ok) {
        throw std::invalid_argument("sweep points must be strictly monotone");
      }
    }
  }
  for (double p : spec.points) {
    const bool ok = spec.axis == SweepAxis::kWeightRatio
                        ? (p >= 0.0 && p <= 1.0)
                        : (p > 0.0 && std::isfinite(p));
    if (!ok) {
      throw std::invalid_argument("sweep point outside the valid domain of " +
                                  to_string(spec.axis));
    }
  }

  std::vector<Scenario> base;
  std::vector<std::uint64_t> seeds;
  for (std::size_t r = 0; r < spec.replications; ++r) {
    seeds.push_back(derive_seed(spec.seed, r));
    base.push_back(sample_scenario(ranges, layers, weights, seeds.back()));
  }

  std::vector<SweepPoint> out;
  out.reserve(spec.points.size() * spec.replications);
  for (double p : spec.points) {
    for (std::size_t r = 0; r < spec.replications; ++r) {
      Scenario s = base[r];
      switch (spec.axis) {
        case SweepAxis::kDataSize:
          s.request.data_size = p;
          break;
        case SweepAxis::kRateDown:
          s.satellite.rate_down = p;
          break;
        case SweepAxis::kWeightRatio:
          s.weights = {1.0 - p, p};
          break;
      }
      validate_scenario(s);
      out.push_back({p, r, seeds[r], std::move(s)});
    }
  }
  return out;
}

}  // namespace leo_offload
