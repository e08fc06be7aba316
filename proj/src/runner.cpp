#include "leo_offload/runner.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "leo_offload/objective.hpp"

#ifndef LEO_OFFLOAD_VERSION
#define LEO_OFFLOAD_VERSION "0.0.0"
#endif

namespace leo_offload {

namespace {

constexpr const char* kCsvHeader =
    "axis_value,replication,method,raw_T_seconds,raw_E_joules,norm_T,norm_E,"
    "Z,split_index,nodes_explored,seed";

nlohmann::json range_json(const Range& r) { return {r.lo, r.hi}; }

nlohmann::json ranges_json(const ParameterRanges& r) {
  return {
      {"rate_down_kbps_range", range_json(r.rate_down)},
      {"beta_s_per_kb_range", range_json(r.beta)},
      {"gamma_s_per_kb_range", range_json(r.gamma)},
      {"alpha_base_range", range_json(r.alpha_base)},
      {"p_max_w_range", range_json(r.p_max)},
      {"data_size_kb_range", range_json(r.data_size)},
      {"t_cyc_s", r.t_cyc},
      {"t_con_s", r.t_con},
      {"zeta_kb_per_s", r.zeta},
      {"p_idle_w", r.p_idle},
      {"p_leak_w", r.p_leak},
      {"p_off_w", r.p_off},
      {"rate_gs_dc_kb_per_s", r.rate_gs_dc},
      {"gamma_max_s_per_kb", r.gamma_max},
      {"colocated", r.colocated},
  };
}

const char* axis_unit(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::kDataSize:
      return "KB";
    case SweepAxis::kRateDown:
      return "KB/s";
    case SweepAxis::kWeightRatio:
      return "lambda/(lambda+mu)";
  }
  return "";
}

std::string join_decision(const OffloadDecision& h) {
  std::string s;
  for (int v : h.values()) {
    if (!s.empty()) s += ' ';
    s += std::to_string(v);
  }
  return s;
}

}  // namespace

const char* tool_version() { return LEO_OFFLOAD_VERSION; }

std::string render(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

ResultRow make_row(const SweepPoint& point, const Solution& sol) {
  ResultRow r;
  r.axis_value = point.axis_value;
  r.replication = point.replication;
  r.method = sol.method;
  r.raw_t = sol.objective.raw_t;
  r.raw_e = sol.objective.raw_e;
  r.norm_t = sol.objective.norm_t;
  r.norm_e = sol.objective.norm_e;
  r.z = sol.objective.z;
  r.split_index = sol.decision.split_index();
  r.nodes_explored = sol.nodes_explored;
  r.seed = point.seed;
  return r;
}

std::vector<ResultRow> evaluate_sweep(const std::vector<SweepPoint>& points,
                                      unsigned jobs) {
  std::vector<ResultRow> rows(points.size() * 3);
  auto work = [&](std::size_t i) {
    const auto& p = points[i];
    rows[3 * i] = make_row(p, solve_ilpb(p.scenario));
    rows[3 * i + 1] = make_row(p, baseline_arg(p.scenario));
    rows[3 * i + 2] = make_row(p, baseline_ars(p.scenario));
  };
  if (jobs <= 1 || points.size() < 2) {
    for (std::size_t i = 0; i < points.size(); ++i) work(i);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned j = 0; j < jobs; ++j) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < points.size(); i = next++) work(i);
    });
  }
  for (auto& t : pool) t.join();
  return rows;
}

void write_csv(std::ostream& out, const std::vector<ResultRow>& rows,
               bool log10) {
  out << kCsvHeader;
  if (log10) out << ",log10_T,log10_E";
  out << '\n';
  for (const auto& r : rows) {
    out << render(r.axis_value) << ',' << r.replication << ','
        << to_string(r.method) << ',' << render(r.raw_t) << ','
        << render(r.raw_e) << ',' << render(r.norm_t) << ','
        << render(r.norm_e) << ',' << render(r.z) << ',' << r.split_index
        << ',' << r.nodes_explored << ',' << r.seed;
    if (log10) {
      out << ',' << render(std::log10(r.raw_t)) << ','
          << render(std::log10(r.raw_e));
    }
    out << '\n';
  }
}

std::vector<SummaryLine> summarize(const std::vector<ResultRow>& rows) {
  std::vector<SummaryLine> out;
  for (const auto& r : rows) {
    if (out.empty() || out.back().axis_value != r.axis_value) {
      out.push_back({});
      out.back().axis_value = r.axis_value;
    }
    auto& s = out.back();
    switch (r.method) {
      case Method::kIlpb:
        ++s.instances;
        s.mean_z_ilpb += r.z;
        s.mean_t_ilpb += r.raw_t;
        s.mean_e_ilpb += r.raw_e;
        break;
      case Method::kArg:
        s.mean_z_arg += r.z;
        s.mean_t_arg += r.raw_t;
        s.mean_e_arg += r.raw_e;
        break;
      case Method::kArs:
        s.mean_z_ars += r.z;
        s.mean_t_ars += r.raw_t;
        s.mean_e_ars += r.raw_e;
        break;
      case Method::kBruteForce:
        break;
    }
  }
  for (auto& s : out) {
    if (s.instances == 0) continue;
    const double n = static_cast<double>(s.instances);
    for (double* v : {&s.mean_z_ilpb, &s.mean_z_arg, &s.mean_z_ars,
                      &s.mean_t_ilpb, &s.mean_t_arg, &s.mean_t_ars,
                      &s.mean_e_ilpb, &s.mean_e_arg, &s.mean_e_ars}) {
      *v /= n;
    }
    const double denom = (s.mean_z_arg + s.mean_z_ars) / 2.0;
    s.ratio = denom > 0.0 ? s.mean_z_ilpb / denom
                          : std::numeric_limits<double>::quiet_NaN();
  }
  return out;
}

void write_summary(std::ostream& out, const std::vector<SummaryLine>& lines) {
  out << "axis_value,instances,mean_Z_ILPB,mean_Z_ARG,mean_Z_ARS,"
         "ratio_ILPB_to_baseline_avg,mean_T_ILPB,mean_T_ARG,mean_T_ARS,"
         "mean_E_ILPB,mean_E_ARG,mean_E_ARS\n";
  for (const auto& s : lines) {
    out << render(s.axis_value) << ',' << s.instances << ','
        << render(s.mean_z_ilpb) << ',' << render(s.mean_z_arg) << ','
        << render(s.mean_z_ars) << ',' << render(s.ratio) << ','
        << render(s.mean_t_ilpb) << ',' << render(s.mean_t_arg) << ','
        << render(s.mean_t_ars) << ',' << render(s.mean_e_ilpb) << ','
        << render(s.mean_e_arg) << ',' << render(s.mean_e_ars) << '\n';
  }
}

VerifyReport verify(const VerifyOptions& options) {
  if (options.k_min < 1 || options.k_min > options.k_max) {
    throw std::invalid_argument("layer range must satisfy 1 <= k_min <= k_max");
  }
  VerifyReport report;
  const std::uint64_t span = options.k_max - options.k_min + 1;
  for (std::size_t i = 0; i < options.instances; ++i) {
    Rng meta(derive_seed(options.seed, i));
    const std::size_t layers = options.k_min + meta.next() % span;
    double mu = meta.unit();
    if (i % 10 == 0) mu = 1.0;
    if (i % 10 == 1) mu = 0.0;
    const Scenario scen = sample_scenario(options.ranges, layers,
                                          {mu, 1.0 - mu}, meta.next());
    ++report.instances;

    const auto ilpb = solve_ilpb(scen, options.solver);
    const auto oracle = solve_bruteforce(scen);
    const auto arg = baseline_arg(scen);
    const auto ars = baseline_ars(scen);

    std::string reason;
    if (!(ilpb.decision == oracle.decision) ||
        std::abs(ilpb.objective.z - oracle.objective.z) > kTieTolerance) {
      ++report.equivalence_failures;
      reason = "ILPB split " + std::to_string(ilpb.decision.split_index()) +
               " (Z=" + render(ilpb.objective.z) + ") != brute force split " +
               std::to_string(oracle.decision.split_index()) +
               " (Z=" + render(oracle.objective.z) + ")";
    }
    if (ilpb.objective.z > arg.objective.z ||
        ilpb.objective.z > ars.objective.z) {
      ++report.dominance_failures;
      if (reason.empty()) {
        reason = "ILPB Z=" + render(ilpb.objective.z) +
                 " exceeds a baseline (ARG Z=" + render(arg.objective.z) +
                 ", ARS Z=" + render(ars.objective.z) + ")";
      }
    }
    if (!reason.empty() && !report.counterexample) {
      report.counterexample = scen;
      report.counterexample_reason = "instance " + std::to_string(i) + ": " +
                                     reason;
    }
  }
  return report;
}

void write_solution_report(std::ostream& out, const Scenario& scen,
                           const Solution& sol) {
  const auto& l = sol.latency;
  const auto& e = sol.energy;
  const auto& o = sol.objective;
  out << "method: " << to_string(sol.method)
      << " (nodes explored: " << sol.nodes_explored << ")\n"
      << "layers: " << scen.layers() << "\n"
      << "split_index: " << sol.decision.split_index() << "\n"
      << "decision: " << join_decision(sol.decision) << "\n"
      << "latency_s: total=" << render(l.total)
      << " satellite=" << render(l.t_satellite)
      << " s_to_g=" << render(l.t_s_to_g) << " g_to_c=" << render(l.t_g_to_c)
      << " cloud=" << render(l.t_cloud) << "\n"
      << "energy_J: total=" << render(e.total)
      << " processing=" << render(e.e_processing)
      << " transmission=" << render(e.e_transmission) << "\n"
      << "objective: Z=" << render(o.z) << " norm_E=" << render(o.norm_e)
      << " norm_T=" << render(o.norm_t) << " (mu=" << render(scen.weights.mu)
      << " lambda=" << render(scen.weights.lambda) << ")\n";
}

int run_solve(const std::string& config_path,
              std::optional<std::uint64_t> seed, std::ostream& out,
              std::ostream& err) {
  ExperimentConfig cfg;
  try {
    cfg = load_config(config_path);
    if (!cfg.scenario && !cfg.sample) {
      throw ConfigError(0, "config has no scenario: give [satellite], "
                           "[cloud] and [request], or a [sample] section");
    }
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfigError;
  }

  Scenario scen;
  try {
    if (cfg.scenario) {
      scen = validate_scenario(*cfg.scenario);
    } else {
      scen = sample_scenario(cfg.ranges, cfg.layers, cfg.weights,
                             seed.value_or(cfg.seed));
    }
  } catch (const std::invalid_argument& e) {
    err << "validation error: " << e.what() << "\n";
    return kExitValidationError;
  }

  const auto sol = solve_ilpb(scen);
  const auto arg = baseline_arg(scen);
  const auto ars = baseline_ars(scen);
  write_solution_report(out, scen, sol);
  out << "baselines: ARG Z=" << render(arg.objective.z)
      << " T=" << render(arg.latency.total) << " E=" << render(arg.energy.total)
      << " | ARS Z=" << render(ars.objective.z)
      << " T=" << render(ars.latency.total) << " E=" << render(ars.energy.total)
      << "\n";
  return kExitOk;
}

int run_sweep(const std::string& config_path, const SweepRunOptions& options,
              std::ostream& out, std::ostream& err) {
  ExperimentConfig cfg;
  try {
    cfg = load_config(config_path);
    if (!cfg.sweep) throw ConfigError(0, "config has no [sweep] section");
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfigError;
  }
  SweepSpec spec = *cfg.sweep;
  if (options.seed) spec.seed = *options.seed;

  std::vector<SweepPoint> points;
  try {
    points = build_sweep(spec, cfg.ranges, cfg.layers, cfg.weights);
  } catch (const std::invalid_argument& e) {
    err << "validation error: " << e.what() << "\n";
    return kExitValidationError;
  }

  std::ofstream csv(options.out_path, std::ios::binary);
  if (!csv) {
    err << "config error: cannot write output '" << options.out_path << "'\n";
    return kExitConfigError;
  }
  const auto rows = evaluate_sweep(points, options.jobs);
  write_csv(csv, rows, options.log10);

  nlohmann::json meta = {
      {"tool", "leo-offload"},
      {"tool_version", tool_version()},
      {"prng", kPrngName},
      {"report_scale", options.log10 ? "log10" : "raw"},
      {"config_path", config_path},
      {"sweep",
       {{"axis", to_string(spec.axis)},
        {"axis_unit", axis_unit(spec.axis)},
        {"points", spec.points},
        {"replications", spec.replications},
        {"seed", spec.seed}}},
      {"layers", cfg.layers},
      {"weights", {{"mu", cfg.weights.mu}, {"lambda", cfg.weights.lambda}}},
      {"ranges", ranges_json(cfg.ranges)},
  };
  std::ofstream side(options.out_path + ".meta.json", std::ios::binary);
  side << meta.dump(2) << '\n';

  out << "sweep " << to_string(spec.axis) << ": " << spec.points.size()
      << " points x " << spec.replications << " replications, seed "
      << spec.seed << " -> " << options.out_path << "\n";
  write_summary(out, summarize(rows));
  return kExitOk;
}

int run_verify(const VerifyOptions& options, std::ostream& out,
               std::ostream& err) {
  if (options.instances == 0) {
    err << "warning: 0 instances requested; nothing was checked\n";
    out << "verify: PASS (vacuous, 0 instances)\n";
    return kExitOk;
  }
  VerifyReport report;
  try {
    report = verify(options);
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfigError;
  }
  out << "verify: " << report.instances << " instances, layers in ["
      << options.k_min << ", " << options.k_max << "], seed " << options.seed
      << "\n"
      << "  ILPB == brute force: "
      << report.instances - report.equivalence_failures << "/"
      << report.instances << "\n"
      << "  ILPB dominates ARG and ARS: "
      << report.instances - report.dominance_failures << "/"
      << report.instances << "\n";
  if (report.passed()) {
    out << "verify: PASS\n";
    return kExitOk;
  }
  out << "verify: FAIL\n"
      << "first counterexample (" << report.counterexample_reason << "):\n"
      << serialize_scenario(*report.counterexample);
  return kExitCheckFailed;
}

}  // namespace leo_offload
