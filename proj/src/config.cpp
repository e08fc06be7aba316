#include "leo_offload/config.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <utility>

namespace leo_offload {

namespace {

struct UnitFactor {
  const char* name;
  double factor;
};

// Decimal prefixes; 1 Mbps = 125 KB/s.
constexpr UnitFactor kDataUnits[] = {
    {"B", 1e-3}, {"KB", 1.0}, {"MB", 1e3}, {"GB", 1e6}, {"TB", 1e9}};
constexpr UnitFactor kRateUnits[] = {
    {"B/s", 1e-3},  {"KB/s", 1.0},  {"MB/s", 1e3}, {"GB/s", 1e6},
    {"kbps", 0.125}, {"Mbps", 125.0}, {"Gbps", 125000.0}};
constexpr UnitFactor kTimeUnits[] = {
    {"ms", 1e-3}, {"s", 1.0}, {"min", 60.0}, {"h", 3600.0}};
constexpr UnitFactor kTimePerDataUnits[] = {
    {"ms/KB", 1e-3}, {"s/KB", 1.0}, {"s/MB", 1e-3}, {"s/GB", 1e-6}};
constexpr UnitFactor kPowerUnits[] = {{"mW", 1e-3}, {"W", 1.0}, {"kW", 1e3}};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(trim(cur));
  return out;
}

std::string dimension_hint(Dimension dim) {
  switch (dim) {
    case Dimension::kNone:
      return "no unit";
    case Dimension::kData:
      return "B, KB, MB, GB or TB";
    case Dimension::kRate:
      return "B/s, KB/s, MB/s, GB/s, kbps, Mbps or Gbps";
    case Dimension::kTime:
      return "ms, s, min or h";
    case Dimension::kTimePerData:
      return "ms/KB, s/KB, s/MB or s/GB";
    case Dimension::kPower:
      return "mW, W or kW";
  }
  return "?";
}

template <std::size_t N>
std::optional<double> lookup(const UnitFactor (&table)[N],
                             const std::string& unit) {
  for (const auto& u : table) {
    if (unit == u.name) return u.factor;
  }
  return std::nullopt;
}

std::optional<double> unit_factor(Dimension dim, const std::string& unit) {
  switch (dim) {
    case Dimension::kNone:
      return unit.empty() ? std::optional<double>(1.0) : std::nullopt;
    case Dimension::kData:
      return lookup(kDataUnits, unit);
    case Dimension::kRate:
      return lookup(kRateUnits, unit);
    case Dimension::kTime:
      return lookup(kTimeUnits, unit);
    case Dimension::kTimePerData:
      return lookup(kTimePerDataUnits, unit);
    case Dimension::kPower:
      return lookup(kPowerUnits, unit);
  }
  return std::nullopt;
}

/// Splits "<number><ws><unit>" and returns the parsed number and unit.
std::pair<double, std::string> split_number(const std::string& raw) {
  const std::string text = trim(raw);
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr == first) {
    throw ConfigError(0, "expected a number, got '" + text + "'");
  }
  return {value, trim(std::string(ptr, last))};
}

std::string unit_of(const std::string& raw) { return split_number(raw).second; }

std::uint64_t parse_unsigned(const std::string& raw) {
  const std::string text = trim(raw);
  std::uint64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ConfigError(0, "expected a non-negative integer, got '" + text + "'");
  }
  return value;
}

bool parse_bool(const std::string& raw) {
  const std::string text = trim(raw);
  if (text == "true") return true;
  if (text == "false") return false;
  throw ConfigError(0, "expected true or false, got '" + text + "'");
}

/// Comma list; items without a unit inherit the unit of the last item.
std::vector<double> parse_list(const std::string& raw, Dimension dim) {
  auto items = split(raw, ',');
  if (items.empty() || items.back().empty()) {
    throw ConfigError(0, "expected a comma-separated list");
  }
  const std::string shared = unit_of(items.back());
  std::vector<double> out;
  for (auto& item : items) {
    if (unit_of(item).empty() && !shared.empty()) item += " " + shared;
    out.push_back(parse_quantity(item, dim));
  }
  return out;
}

Range parse_range(const std::string& raw, Dimension dim) {
  const auto pos = raw.find("..");
  if (pos == std::string::npos) {
    throw ConfigError(0, "expected '<lo> .. <hi> [unit]', got '" +
                             trim(raw) + "'");
  }
  std::string lo = trim(raw.substr(0, pos));
  const std::string hi = trim(raw.substr(pos + 2));
  const std::string shared = unit_of(hi);
  if (unit_of(lo).empty() && !shared.empty()) lo += " " + shared;
  return {parse_quantity(lo, dim), parse_quantity(hi, dim)};
}

/// "a:b" as lambda:mu; returns the latency share lambda / (lambda + mu).
double parse_ratio(const std::string& raw) {
  const auto parts = split(raw, ':');
  if (parts.size() != 2) {
    throw ConfigError(0, "expected a ratio 'lambda:mu', got '" + trim(raw) +
                             "'");
  }
  const double lam = parse_quantity(parts[0], Dimension::kNone);
  const double mu = parse_quantity(parts[1], Dimension::kNone);
  if (lam < 0.0 || mu < 0.0 || !(lam + mu > 0.0)) {
    throw ConfigError(0, "ratio terms must be >= 0 and not both zero");
  }
  return lam / (lam + mu);
}

struct Entry {
  std::string value;
  std::size_t line;
};

/// One [section] worth of entries; keys are removed as they are consumed so
/// leftovers can be reported as unknown.
class Section {
 public:
  Section(std::string name, std::size_t line)
      : name_(std::move(name)), line_(line) {}

  void add(const std::string& key, Entry e) {
    const std::size_t line = e.line;
    if (!entries_.emplace(key, std::move(e)).second) {
      throw ConfigError(line, "[" + name_ + "] duplicate key '" + key + "'");
    }
  }

  bool has(const std::string& key) const { return entries_.count(key) != 0; }

  template <typename Fn>
  auto take(const std::string& key, Fn&& parse) {
    auto it = entries_.find(key);
    if (it == entries_.end()) {
      throw ConfigError(line_, "[" + name_ + "] missing required key '" +
                                   key + "'");
    }
    const Entry e = it->second;
    entries_.erase(it);
    try {
      return parse(e.value);
    } catch (const ConfigError& err) {
      throw ConfigError(e.line, "[" + name_ + "] " + key + ": " + err.what());
    } catch (const std::invalid_argument& err) {
      throw ConfigError(e.line, "[" + name_ + "] " + key + ": " + err.what());
    }
  }

  double quantity(const std::string& key, Dimension dim) {
    return take(key, [dim](const std::string& v) {
      return parse_quantity(v, dim);
    });
  }

  template <typename T, typename Fn>
  void maybe(const std::string& key, T& target, Fn&& parse) {
    if (has(key)) target = take(key, std::forward<Fn>(parse));
  }

  void maybe_quantity(const std::string& key, double& target, Dimension dim) {
    if (has(key)) target = quantity(key, dim);
  }

  void maybe_range(const std::string& key, Range& target, Dimension dim) {
    maybe(key, target,
          [dim](const std::string& v) { return parse_range(v, dim); });
  }

  void finish() const {
    if (!entries_.empty()) {
      const auto& [key, e] = *entries_.begin();
      throw ConfigError(e.line, "[" + name_ + "] unknown key '" + key + "'");
    }
  }

  std::size_t line() const { return line_; }

 private:
  std::string name_;
  std::size_t line_;
  std::map<std::string, Entry> entries_;
};

const std::set<std::string> kSections = {"satellite", "cloud",  "request",
                                         "weights",   "ranges", "sweep",
                                         "sample"};

std::map<std::string, Section> read_sections(std::istream& in) {
  std::map<std::string, Section> sections;
  Section* current = nullptr;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos
                                      ? raw
                                      : raw.substr(0, hash));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ConfigError(line_no, "unterminated section header");
      }
      const std::string name = trim(line.substr(1, line.size() - 2));
      if (kSections.count(name) == 0) {
        throw ConfigError(line_no, "unknown section [" + name + "]");
      }
      auto [it, inserted] = sections.emplace(name, Section(name, line_no));
      if (!inserted) {
        throw ConfigError(line_no, "duplicate section [" + name + "]");
      }
      current = &it->second;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(line_no, "expected 'key = value'");
    }
    if (current == nullptr) {
      throw ConfigError(line_no, "key outside of any [section]");
    }
    const std::string key = trim(line.substr(0, eq));
    if (key.empty()) throw ConfigError(line_no, "empty key");
    current->add(key, {trim(line.substr(eq + 1)), line_no});
  }
  return sections;
}

Weights read_weights(Section& sec) {
  Weights w;
  if (sec.has("ratio")) {
    if (sec.has("mu") || sec.has("lambda")) {
      throw ConfigError(sec.line(),
                        "[weights] give either ratio or mu/lambda, not both");
    }
    const double lam = sec.take("ratio", parse_ratio);
    w = {1.0 - lam, lam};
  } else {
    w.mu = sec.quantity("mu", Dimension::kNone);
    w.lambda = sec.quantity("lambda", Dimension::kNone);
  }
  return w;
}

Scenario read_scenario(std::map<std::string, Section>& sections) {
  for (const char* name : {"satellite", "cloud", "request"}) {
    if (sections.count(name) == 0) {
      throw ConfigError(0, std::string("explicit scenario needs a [") + name +
                               "] section");
    }
  }
  Scenario s;
  auto& sat = sections.at("satellite");
  s.satellite.beta = sat.quantity("beta", Dimension::kTimePerData);
  s.satellite.zeta = sat.quantity("zeta", Dimension::kRate);
  s.satellite.p_max = sat.quantity("p_max", Dimension::kPower);
  s.satellite.p_idle = sat.quantity("p_idle", Dimension::kPower);
  s.satellite.p_leak = sat.quantity("p_leak", Dimension::kPower);
  s.satellite.p_off = sat.quantity("p_off", Dimension::kPower);
  s.satellite.rate_down = sat.quantity("rate_down", Dimension::kRate);
  s.satellite.t_cyc = sat.quantity("t_cyc", Dimension::kTime);
  s.satellite.t_con = sat.quantity("t_con", Dimension::kTime);
  sat.finish();

  auto& cloud = sections.at("cloud");
  s.cloud.gamma = cloud.quantity("gamma", Dimension::kTimePerData);
  s.cloud.gamma_max = cloud.quantity("gamma_max", Dimension::kTimePerData);
  s.cloud.rate_gs_dc = cloud.quantity("rate_gs_dc", Dimension::kRate);
  cloud.maybe("colocated", s.cloud.colocated, parse_bool);
  cloud.finish();

  auto& req = sections.at("request");
  s.request.data_size = req.quantity("data_size", Dimension::kData);
  if (req.has("alphas")) {
    if (req.has("alpha_base") || req.has("layers")) {
      throw ConfigError(req.line(),
                        "[request] give either alphas or alpha_base + layers");
    }
    s.request.alphas = req.take("alphas", [](const std::string& v) {
      return parse_list(v, Dimension::kNone);
    });
  } else {
    const double base = req.quantity("alpha_base", Dimension::kNone);
    const auto layers = req.take("layers", parse_unsigned);
    s.request.alphas = geometric_alphas(base, layers);
  }
  req.finish();
  return s;
}

void read_ranges(Section& sec, ParameterRanges& r) {
  sec.maybe_range("rate_down", r.rate_down, Dimension::kRate);
  sec.maybe_range("beta", r.beta, Dimension::kTimePerData);
  sec.maybe_range("gamma", r.gamma, Dimension::kTimePerData);
  sec.maybe_range("alpha_base", r.alpha_base, Dimension::kNone);
  sec.maybe_range("p_max", r.p_max, Dimension::kPower);
  sec.maybe_range("data_size", r.data_size, Dimension::kData);
  sec.maybe_quantity("t_cyc", r.t_cyc, Dimension::kTime);
  sec.maybe_quantity("t_con", r.t_con, Dimension::kTime);
  sec.maybe_quantity("zeta", r.zeta, Dimension::kRate);
  sec.maybe_quantity("p_idle", r.p_idle, Dimension::kPower);
  sec.maybe_quantity("p_leak", r.p_leak, Dimension::kPower);
  sec.maybe_quantity("p_off", r.p_off, Dimension::kPower);
  sec.maybe_quantity("rate_gs_dc", r.rate_gs_dc, Dimension::kRate);
  sec.maybe_quantity("gamma_max", r.gamma_max, Dimension::kTimePerData);
  sec.maybe("colocated", r.colocated, parse_bool);
  sec.finish();
}

SweepSpec read_sweep(Section& sec, ExperimentConfig& cfg) {
  SweepSpec spec;
  spec.axis = sec.take("axis", [](const std::string& v) {
    return parse_axis(trim(v));
  });
  spec.points = sec.take("points", [&spec](const std::string& v) {
    switch (spec.axis) {
      case SweepAxis::kDataSize:
        return parse_list(v, Dimension::kData);
      case SweepAxis::kRateDown:
        return parse_list(v, Dimension::kRate);
      case SweepAxis::kWeightRatio:
        break;
    }
    std::vector<double> shares;
    for (const auto& item : split(v, ',')) shares.push_back(parse_ratio(item));
    return shares;
  });
  sec.maybe("replications", spec.replications, parse_unsigned);
  sec.maybe("seed", cfg.seed, parse_unsigned);
  sec.maybe("layers", cfg.layers, parse_unsigned);
  sec.finish();
  spec.seed = cfg.seed;
  return spec;
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

double parse_quantity(const std::string& text, Dimension dim) {
  const auto [value, unit] = split_number(text);
  if (dim != Dimension::kNone && unit.empty()) {
    throw ConfigError(0, "missing unit (expected " + dimension_hint(dim) +
                             ")");
  }
  const auto factor = unit_factor(dim, unit);
  if (!factor) {
    throw ConfigError(0, "unit '" + unit + "' not accepted here (expected " +
                             dimension_hint(dim) + ")");
  }
  return value * *factor;
}

ExperimentConfig parse_config(std::istream& in) {
  auto sections = read_sections(in);
  ExperimentConfig cfg;

  const bool explicit_scenario = sections.count("satellite") != 0 ||
                                 sections.count("cloud") != 0 ||
                                 sections.count("request") != 0;
  if (explicit_scenario && sections.count("sample") != 0) {
    throw ConfigError(sections.at("sample").line(),
                      "[sample] conflicts with an explicit scenario; give "
                      "exactly one input source");
  }
  if (explicit_scenario && sections.count("sweep") != 0) {
    throw ConfigError(sections.at("sweep").line(),
                      "[sweep] draws its own scenarios; remove the explicit "
                      "[satellite]/[cloud]/[request] sections");
  }

  if (auto it = sections.find("weights"); it != sections.end()) {
    cfg.weights = read_weights(it->second);
    it->second.finish();
  }
  if (auto it = sections.find("ranges"); it != sections.end()) {
    read_ranges(it->second, cfg.ranges);
  }
  if (explicit_scenario) {
    cfg.scenario = read_scenario(sections);
    cfg.scenario->weights = cfg.weights;
  }
  if (auto it = sections.find("sample"); it != sections.end()) {
    cfg.sample = true;
    it->second.maybe("layers", cfg.layers, parse_unsigned);
    it->second.maybe("seed", cfg.seed, parse_unsigned);
    it->second.finish();
  }
  if (auto it = sections.find("sweep"); it != sections.end()) {
    cfg.sweep = read_sweep(it->second, cfg);
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(0, "cannot open config file '" + path + "'");
  return parse_config(in);
}

std::string serialize_scenario(const Scenario& scen) {
  std::ostringstream os;
  const auto& s = scen.satellite;
  os << "[satellite]\n"
     << "beta = " << num(s.beta) << " s/KB\n"
     << "zeta = " << num(s.zeta) << " KB/s\n"
     << "p_max = " << num(s.p_max) << " W\n"
     << "p_idle = " << num(s.p_idle) << " W\n"
     << "p_leak = " << num(s.p_leak) << " W\n"
     << "p_off = " << num(s.p_off) << " W\n"
     << "rate_down = " << num(s.rate_down) << " KB/s\n"
     << "t_cyc = " << num(s.t_cyc) << " s\n"
     << "t_con = " << num(s.t_con) << " s\n\n";
  const auto& c = scen.cloud;
  os << "[cloud]\n"
     << "gamma = " << num(c.gamma) << " s/KB\n"
     << "gamma_max = " << num(c.gamma_max) << " s/KB\n"
     << "rate_gs_dc = " << num(c.rate_gs_dc) << " KB/s\n"
     << "colocated = " << (c.colocated ? "true" : "false") << "\n\n";
  os << "[request]\n"
     << "data_size = " << num(scen.request.data_size) << " KB\n"
     << "alphas = ";
  for (std::size_t i = 0; i < scen.request.alphas.size(); ++i) {
    os << (i ? ", " : "") << num(scen.request.alphas[i]);
  }
  os << "\n\n[weights]\n"
     << "mu = " << num(scen.weights.mu) << "\n"
     << "lambda = " << num(scen.weights.lambda) << "\n";
  return os.str();
}

}  // namespace leo_offload
