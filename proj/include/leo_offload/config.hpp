#ifndef LEO_OFFLOAD_CONFIG_HPP
#define LEO_OFFLOAD_CONFIG_HPP

// Line-oriented key/value configuration with explicit physical units.
//
//   # comment
//   [satellite]
//   rate_down = 50 Mbps
//   t_con     = 6 min
//
// Dimensional values must carry a unit suffix; values are converted to the
// library's canonical units (KB, KB/s, s, s/KB, W) at ingestion.

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "leo_offload/model.hpp"
#include "leo_offload/scenario.hpp"

namespace leo_offload {

class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ": " +
                                           what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

enum class Dimension {
  kNone,         // plain number
  kData,         // -> KB
  kRate,         // -> KB/s
  kTime,         // -> s
  kTimePerData,  // -> s/KB
  kPower,        // -> W
};

/// Parses "<number> [unit]" into canonical units. Throws ConfigError
/// (line 0) on a malformed number, a missing unit or a unit of the wrong
/// dimension.
double parse_quantity(const std::string& text, Dimension dim);

struct ExperimentConfig {
  std::optional<Scenario> scenario;  // explicit [satellite]/[cloud]/[request]
  bool sample = false;               // [sample]: draw the scenario instead
  ParameterRanges ranges;
  std::size_t layers = kDefaultLayers;
  Weights weights;
  std::uint64_t seed = 0;
  std::optional<SweepSpec> sweep;
};

ExperimentConfig parse_config(std::istream& in);
ExperimentConfig load_config(const std::string& path);

/// Config text for an explicit scenario, in canonical units with enough
/// digits to parse back to the identical scenario.
std::string serialize_scenario(const Scenario& scen);

}  // namespace leo_offload

#endif  // LEO_OFFLOAD_CONFIG_HPP
