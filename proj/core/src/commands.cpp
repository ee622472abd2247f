#include "mzscatter/commands.hpp"

#include <array>
#include <cmath>

#include <fmt/format.h>

#include "mzscatter/error.hpp"
#include "mzscatter/path_expansion.hpp"

namespace mzscatter {

namespace {

CsvTable make_table(Command command, const RunConfig& cfg,
                    std::vector<std::string> header) {
  CsvTable table(std::move(header));
  table.add_metadata(fmt::format("mzscatter {}", to_string(command)));
  for (auto& line : cfg.describe()) table.add_metadata(std::move(line));
  return table;
}

std::optional<double> shift_or_note(const InterferometerSetup& setup,
                                    FringeMode mode, std::string_view where,
                                    CsvTable& table) {
  try {
    return phase_shift(setup, mode).delta_phi;
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::kAmbiguousMinimum &&
        err.kind() != ErrorKind::kNoBracket) {
      throw;
    }
    table.add_metadata(fmt::format("{}: {} ({})", where,
                                   to_string(err.kind()), err.what()));
    return std::nullopt;
  }
}

}  // namespace

std::string_view to_string(Command command) {
  switch (command) {
    case Command::fringe: return "fringe";
    case Command::shift_scan: return "shift-scan";
    case Command::epsilon_scan: return "epsilon-scan";
    case Command::doppler: return "doppler";
    case Command::paths: return "paths";
  }
  return "unknown";
}

std::optional<Command> parse_command(std::string_view name) {
  for (Command c : {Command::fringe, Command::shift_scan,
                    Command::epsilon_scan, Command::doppler,
                    Command::paths}) {
    if (name == to_string(c)) return c;
  }
  return std::nullopt;
}

CommandOutput cmd_fringe(const RunConfig& cfg) {
  CommandOutput result{
      make_table(Command::fringe, cfg,
                 {"Phi", "P_scl", "P_quantum_exact", "P_quantum_MZ",
                  "P_quantum_direct"}),
      {}};
  const InterferometerSetup setup = cfg.setup();
  constexpr std::array<FringeMode, 4> kModes = {
      FringeMode::semiclassical, FringeMode::quantum_exact,
      FringeMode::quantum_mz, FringeMode::quantum_direct};

  const int n = cfg.points;
  std::vector<CsvTable::Row> rows(n, CsvTable::Row(5));
  for (int i = 0; i < n; ++i) {
    rows[i][0] = -kPi + 2.0 * kPi * static_cast<double>(i) / (n - 1);
  }

  bool closed = false;
  for (std::size_t c = 0; c < kModes.size(); ++c) {
    std::optional<FringeModel> model;
    try {
      model.emplace(setup, kModes[c]);
    } catch (const Error& err) {
      if (err.kind() == ErrorKind::kClosedChannel) {
        closed = true;
        for (auto& row : rows) row[c + 1] = 0.0;
      } else {
        result.warnings.push_back(fmt::format(
            "{} column unavailable: {}", to_string(kModes[c]), err.what()));
      }
      continue;
    }
    for (int i = 0; i < n; ++i) {
      try {
        rows[i][c + 1] = model->probability(*rows[i][0]);
      } catch (const Error& err) {
        result.warnings.push_back(fmt::format("{} at Phi = {:.17g}: {}",
                                              to_string(kModes[c]),
                                              *rows[i][0], err.what()));
      }
    }
  }
  result.table.add_metadata(
      fmt::format("closed_channel = {}", closed ? "true" : "false"));
  for (auto& row : rows) result.table.add_row(std::move(row));
  return result;
}

CommandOutput cmd_shift_scan(const RunConfig& cfg) {
  CommandOutput result{
      make_table(Command::shift_scan, cfg,
                 {"kx_l", "delta_phi_direct", "delta_phi_exact"}),
      {}};
  std::vector<double> grid(cfg.kxl_points);
  const double lo = std::log(cfg.kxl_min);
  const double hi = std::log(cfg.kxl_max);
  for (int i = 0; i < cfg.kxl_points; ++i) {
    grid[i] = std::exp(lo + (hi - lo) * i / (cfg.kxl_points - 1));
  }
  grid.front() = cfg.kxl_min;
  grid.back() = cfg.kxl_max;

  result.table.add_metadata("sweep holds epsilon = 0 at every k_x l");
  result.table.add_metadata(fmt::format(
      "rows with kx_l < {:.17g} are reflection dominated (non-regression)",
      kReflectionRegimeKxl));
  for (const auto& row :
       shift_sweep_kxl(cfg.mass, cfg.l, cfg.L, cfg.delta, grid)) {
    if (!row.error.empty()) {
      result.table.add_metadata(
          fmt::format("kx_l = {:.17g}: {}", row.kx_l, row.error));
    }
    result.table.add_row({row.kx_l, row.delta_phi_direct, row.delta_phi_exact});
  }
  return result;
}

CommandOutput cmd_epsilon_scan(const RunConfig& cfg) {
  CommandOutput result{make_table(Command::epsilon_scan, cfg,
                                  {"epsilon", "abs_A2", "abs_A3", "delta_phi"}),
                       {}};
  const InterferometerSetup setup = cfg.setup();
  const EpsilonScan scan =
      epsilon_scan(setup, cfg.eps_min, cfg.eps_max, cfg.eps_points);
  if (scan.epsilon_o) {
    result.table.add_metadata(fmt::format("epsilon_o = {:.17g}", *scan.epsilon_o));
  } else {
    result.table.add_metadata(
        fmt::format("epsilon_o: {} (|A2| - |A3| keeps its sign)",
                    to_string(ErrorKind::kNoBracket)));
  }
  result.table.add_metadata(fmt::format("crossings = {}", scan.crossings));

  for (std::size_t i = 0; i < scan.grid.size(); ++i) {
    const double eps = scan.grid[i];
    const auto shift =
        shift_or_note(setup.with_epsilon(eps), cfg.mode,
                      fmt::format("epsilon = {:.17g}", eps), result.table);
    result.table.add_row({eps, scan.abs_a2[i], scan.abs_a3[i], shift});
  }
  return result;
}

CommandOutput cmd_doppler(const RunConfig& cfg) {
  CommandOutput result{
      make_table(Command::doppler, cfg, {"delta", "delta_phi"}), {}};
  const InterferometerSetup base = cfg.setup();
  const double offset = cfg.doppler_offset.value_or(2.0 * cfg.v_x / cfg.L);

  std::array<std::optional<double>, 3> shifts;
  const std::array<double, 3> deltas = {cfg.delta - offset, cfg.delta,
                                        cfg.delta + offset};
  for (int i = 0; i < 3; ++i) {
    InterferometerSetup setup = base;
    setup.delta = deltas[i];
    shifts[i] = shift_or_note(setup, cfg.mode,
                              fmt::format("delta = {:.17g}", deltas[i]),
                              result.table);
  }
  if (shifts[0] && shifts[1] && shifts[2] && *shifts[1] != 0.0) {
    const double worst = std::max(std::abs(*shifts[0] - *shifts[1]),
                                  std::abs(*shifts[2] - *shifts[1]));
    result.table.add_metadata(
        fmt::format("relative_spread = {:.17g}", worst / std::abs(*shifts[1])));
  }
  for (int i = 0; i < 3; ++i) result.table.add_row({deltas[i], shifts[i]});
  return result;
}

CommandOutput run_table_command(Command command, const RunConfig& cfg) {
  switch (command) {
    case Command::fringe: return cmd_fringe(cfg);
    case Command::shift_scan: return cmd_shift_scan(cfg);
    case Command::epsilon_scan: return cmd_epsilon_scan(cfg);
    case Command::doppler: return cmd_doppler(cfg);
    case Command::paths: break;
  }
  throw Error(ErrorKind::kInvalidArgument,
              fmt::format("'{}' does not produce a table", to_string(command)));
}

void write_path_listing(std::ostream& out) { dump_path_table(out); }

}  // namespace mzscatter
