#include "mzscatter/run_config.hpp"

#include <array>
#include <charconv>
#include <cmath>

#include <fmt/format.h>

namespace mzscatter {

namespace {

constexpr std::array<std::string_view, 19> kKeys = {
    "mass",    "v_x",        "k_x",     "l",       "L",
    "omega",   "epsilon",    "delta",   "mode",    "points",
    "kxl_min", "kxl_max",    "kxl_points", "eps_min", "eps_max",
    "eps_points", "doppler_offset", "out", "pulse_area_offset",
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool is_known(std::string_view key) {
  for (auto k : kKeys) {
    if (k == key) return true;
  }
  return false;
}

std::pair<std::string, std::string> split_assignment(std::string_view text,
                                                     int line) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos) {
    throw ParseError(line, fmt::format("expected 'key = value', got '{}'",
                                       std::string(text)));
  }
  const std::string_view key = trim(text.substr(0, eq));
  const std::string_view value = trim(text.substr(eq + 1));
  if (key.empty()) throw ParseError(line, "missing key before '='");
  if (value.empty()) {
    throw ParseError(line, fmt::format("missing value for '{}'", key));
  }
  if (!is_known(key)) {
    throw ParseError(line, fmt::format("unknown key '{}'", key));
  }
  // The pulse-area offset has a long spelling; store it under one name.
  std::string canonical(key == "pulse_area_offset" ? "epsilon" : key);
  return {std::move(canonical), std::string(value)};
}

double to_double(const ConfigEntries& entries, std::string_view key) {
  const auto& entry = entries.find(key)->second;
  const std::string& text = entry.value;
  double value = 0.0;
  const auto [end, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() ||
      !std::isfinite(value)) {
    throw ParseError(entry.line, fmt::format("'{}' is not a finite number: '{}'",
                                             key, text));
  }
  return value;
}

int to_int(const ConfigEntries& entries, std::string_view key) {
  const auto& entry = entries.find(key)->second;
  const std::string& text = entry.value;
  int value = 0;
  const auto [end, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw ParseError(entry.line,
                     fmt::format("'{}' is not an integer: '{}'", key, text));
  }
  return value;
}

void require(bool condition, std::string_view message) {
  if (!condition) throw ValidationError(std::string(message));
}

}  // namespace

ParseError::ParseError(int line, const std::string& message)
    : ConfigError(line > 0 ? fmt::format("line {}: {}", line, message)
                           : message),
      line_(line) {}

std::vector<std::string_view> known_config_keys() {
  return {kKeys.begin(), kKeys.end()};
}

ConfigEntries parse_config_entries(std::string_view text) {
  ConfigEntries entries;
  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{}
                                        : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    auto [key, value] = split_assignment(line, line_no);
    if (const auto it = entries.find(key); it != entries.end()) {
      throw ParseError(line_no,
                       fmt::format("duplicate key '{}' (first on line {})",
                                   key, it->second.line));
    }
    entries.emplace(std::move(key), ConfigEntry{std::move(value), line_no});
  }
  return entries;
}

void apply_override(ConfigEntries& entries, std::string_view assignment) {
  auto [key, value] = split_assignment(trim(assignment), 0);
  entries[key] = ConfigEntry{std::move(value), 0};
}

RunConfig resolve_config(const ConfigEntries& entries) {
  RunConfig cfg;
  const auto has = [&](std::string_view key) {
    return entries.find(key) != entries.end();
  };
  const auto read = [&](std::string_view key, double& slot) {
    if (has(key)) slot = to_double(entries, key);
  };
  const auto read_int = [&](std::string_view key, int& slot) {
    if (has(key)) slot = to_int(entries, key);
  };

  if (has("v_x") && has("k_x")) {
    throw ValidationError("exactly one of v_x and k_x may be given");
  }
  if (has("omega") && has("epsilon")) {
    throw ValidationError("exactly one of omega and epsilon may be given");
  }

  read("mass", cfg.mass);
  read("l", cfg.l);
  read("L", cfg.L);
  read("delta", cfg.delta);
  read_int("points", cfg.points);
  read("kxl_min", cfg.kxl_min);
  read("kxl_max", cfg.kxl_max);
  read_int("kxl_points", cfg.kxl_points);
  read("eps_min", cfg.eps_min);
  read("eps_max", cfg.eps_max);
  read_int("eps_points", cfg.eps_points);
  if (has("doppler_offset")) {
    cfg.doppler_offset = to_double(entries, "doppler_offset");
  }
  if (has("out")) cfg.out = entries.find("out")->second.value;
  if (has("mode")) {
    const auto& entry = entries.find("mode")->second;
    const std::string_view text =
        entry.value == "scl" ? std::string_view("semiclassical")
                             : std::string_view(entry.value);
    const auto mode = parse_fringe_mode(text);
    if (!mode) {
      throw ParseError(entry.line,
                       fmt::format("unknown mode '{}' (expected "
                                   "semiclassical, exact, direct or mz)",
                                   entry.value));
    }
    cfg.mode = *mode;
  }

  require(cfg.mass > 0.0, "mass must be positive");
  require(cfg.l > 0.0, "l must be positive");
  require(cfg.L > 0.0, "L must be positive");

  if (has("k_x")) {
    cfg.k_x = to_double(entries, "k_x");
    require(cfg.k_x > 0.0, "k_x must be positive");
    cfg.v_x = kHbar * cfg.k_x / cfg.mass;
  } else {
    read("v_x", cfg.v_x);
    require(cfg.v_x > 0.0, "v_x must be positive");
    cfg.k_x = cfg.mass * cfg.v_x / kHbar;
  }

  if (has("omega")) {
    cfg.omega = to_double(entries, "omega");
    require(cfg.omega >= 0.0, "omega must be non-negative");
    cfg.epsilon = cfg.omega * cfg.l / cfg.v_x - kPi;
  } else {
    read("epsilon", cfg.epsilon);
    cfg.omega = (kPi + cfg.epsilon) * cfg.v_x / cfg.l;
    require(cfg.omega >= 0.0, "epsilon must be at least -pi");
  }

  require(cfg.points >= 3, "points must be at least 3");
  require(cfg.kxl_min > 0.0 && cfg.kxl_max > cfg.kxl_min,
          "k_x l sweep needs 0 < kxl_min < kxl_max");
  require(cfg.kxl_points >= 2, "kxl_points must be at least 2");
  require(cfg.eps_max > cfg.eps_min, "eps_max must exceed eps_min");
  require(cfg.eps_points >= 2, "eps_points must be at least 2");
  require(!cfg.doppler_offset || *cfg.doppler_offset > 0.0,
          "doppler_offset must be positive");
  return cfg;
}

RunConfig parse_config(std::string_view text) {
  return resolve_config(parse_config_entries(text));
}

InterferometerSetup RunConfig::setup() const {
  InterferometerSetup s;
  s.mass = mass;
  s.k_x = k_x;
  s.l = l;
  s.L = L;
  s.omega = omega;
  s.delta = delta;
  s.validate();
  return s;
}

std::vector<std::string> RunConfig::describe() const {
  const auto num = [](std::string_view key, double v) {
    return fmt::format("{} = {:.17g}", key, v);
  };
  std::vector<std::string> lines = {
      num("mass", mass),
      num("v_x", v_x),
      num("k_x", k_x),
      num("l", l),
      num("L", L),
      num("omega", omega),
      num("epsilon", epsilon),
      num("delta", delta),
      fmt::format("mode = {}", to_string(mode)),
      fmt::format("points = {}", points),
      num("kxl_min", kxl_min),
      num("kxl_max", kxl_max),
      fmt::format("kxl_points = {}", kxl_points),
      num("eps_min", eps_min),
      num("eps_max", eps_max),
      fmt::format("eps_points = {}", eps_points),
  };
  lines.push_back(doppler_offset ? num("doppler_offset", *doppler_offset)
                                 : num("doppler_offset", 2.0 * v_x / L));
  return lines;
}

}  // namespace mzscatter
