#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mzscatter/fringe_analysis.hpp"

namespace mzscatter {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text; line is 1-based, 0 for command-line overrides.
class ParseError : public ConfigError {
 public:
  ParseError(int line, const std::string& message);
  int line() const noexcept { return line_; }

 private:
  int line_;
};

class ValidationError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

struct ConfigEntry {
  std::string value;
  int line = 0;
};

// Raw key/value pairs; keys are case-sensitive (l and L differ).
using ConfigEntries = std::map<std::string, ConfigEntry, std::less<>>;

ConfigEntries parse_config_entries(std::string_view text);

// "key=value" from the command line; replaces any earlier value of key.
void apply_override(ConfigEntries& entries, std::string_view assignment);

struct RunConfig {
  double mass = kSodiumMass;
  double v_x = 0.01;
  double k_x = 0.0;
  double l = 1e-5;
  double L = kDefaultFreeFlight;
  double omega = 0.0;
  double epsilon = 0.0;
  double delta = 0.0;
  FringeMode mode = FringeMode::quantum_mz;

  int points = kDefaultFringePoints;
  double kxl_min = 10.0;
  double kxl_max = 1000.0;
  int kxl_points = 100;
  double eps_min = -0.5;
  double eps_max = 0.5;
  int eps_points = 101;
  std::optional<double> doppler_offset;

  std::string out;

  InterferometerSetup setup() const;
  // "key = value" lines describing every resolved field.
  std::vector<std::string> describe() const;
};

// Unknown keys, bad numbers and duplicates raise ParseError; violated
// invariants raise ValidationError.
RunConfig resolve_config(const ConfigEntries& entries);
RunConfig parse_config(std::string_view text);

std::vector<std::string_view> known_config_keys();

}  // namespace mzscatter
