#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mzscatter/csv_table.hpp"
#include "mzscatter/run_config.hpp"

namespace mzscatter {

enum class Command { fringe, shift_scan, epsilon_scan, doppler, paths };

std::string_view to_string(Command command);
std::optional<Command> parse_command(std::string_view name);

struct CommandOutput {
  CsvTable table;
  std::vector<std::string> warnings;  // destined for stderr
};

// Phi, P_scl, P_quantum_exact, P_quantum_MZ, P_quantum_direct on cfg.points
// phases in [-pi, pi]. A closed excited channel gives zero quantum columns.
CommandOutput cmd_fringe(const RunConfig& cfg);

// kx_l, delta_phi_direct, delta_phi_exact on a log-spaced k_x l grid under
// the pi-pulse condition.
CommandOutput cmd_shift_scan(const RunConfig& cfg);

// epsilon, abs_A2, abs_A3, delta_phi (in cfg.mode); epsilon_o in metadata.
CommandOutput cmd_epsilon_scan(const RunConfig& cfg);

// delta, delta_phi at cfg.delta and cfg.delta -+ the Doppler offset.
CommandOutput cmd_doppler(const RunConfig& cfg);

CommandOutput run_table_command(Command command, const RunConfig& cfg);

// Path table listing for the `paths` command.
void write_path_listing(std::ostream& out);

}  // namespace mzscatter
