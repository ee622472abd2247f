// mzscatter: fringe, phase-shift and robustness tables for the three-laser
// atom interferometer.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mzscatter/commands.hpp"
#include "mzscatter/error.hpp"
#include "mzscatter/run_config.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitPhysics = 3;
constexpr int kExitIo = 1;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw mzscatter::ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string_view points_key(mzscatter::Command command) {
  switch (command) {
    case mzscatter::Command::shift_scan: return "kxl_points";
    case mzscatter::Command::epsilon_scan: return "eps_points";
    default: return "points";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Atom-interferometer scattering tables (CSV on stdout or --out)"};
  app.set_version_flag("--version", "mzscatter 0.1.0");

  std::string command_name;
  std::string config_path;
  std::string out_path;
  std::optional<int> points;
  std::vector<std::string> overrides;

  app.add_option("command", command_name,
                 "fringe | shift-scan | epsilon-scan | doppler | paths")
      ->required()
      ->check(CLI::IsMember(
          {"fringe", "shift-scan", "epsilon-scan", "doppler", "paths"}));
  app.add_option("--config", config_path,
                 "flat 'key = value' file; defaults are used when omitted")
      ->check(CLI::ExistingFile);
  app.add_option("--out", out_path, "output CSV path (default: stdout)");
  app.add_option("--points", points,
                 "grid size for the command's primary axis");
  app.add_option("--set", overrides, "key=value override, repeatable")
      ->allow_extra_args(false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  const auto command = *mzscatter::parse_command(command_name);
  if (command == mzscatter::Command::paths) {
    mzscatter::write_path_listing(std::cout);
    return 0;
  }

  mzscatter::RunConfig cfg;
  try {
    mzscatter::ConfigEntries entries;
    if (!config_path.empty()) {
      entries = mzscatter::parse_config_entries(read_file(config_path));
    }
    if (points) {
      mzscatter::apply_override(
          entries, std::string(points_key(command)) + "=" + std::to_string(*points));
    }
    for (const auto& assignment : overrides) {
      mzscatter::apply_override(entries, assignment);
    }
    cfg = mzscatter::resolve_config(entries);
    if (!out_path.empty()) cfg.out = out_path;
  } catch (const mzscatter::ConfigError& e) {
    std::cerr << "mzscatter: config error: " << e.what() << '\n';
    return kExitConfig;
  }

  mzscatter::CommandOutput output{mzscatter::CsvTable({"empty"}), {}};
  try {
    output = mzscatter::run_table_command(command, cfg);
  } catch (const mzscatter::ConfigError& e) {
    std::cerr << "mzscatter: config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const mzscatter::Error& e) {
    std::cerr << "mzscatter: " << e.what() << '\n';
    return e.kind() == mzscatter::ErrorKind::kInvalidArgument ? kExitConfig
                                                              : kExitPhysics;
  }
  for (const auto& warning : output.warnings) {
    std::cerr << "mzscatter: warning: " << warning << '\n';
  }

  if (cfg.out.empty()) {
    output.table.write(std::cout);
    return std::cout ? 0 : kExitIo;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) {
    std::cerr << "mzscatter: cannot write '" << cfg.out << "'\n";
    return kExitIo;
  }
  output.table.write(file);
  return file ? 0 : kExitIo;
}
