#include "entneg/cli.hpp"

#include "entneg/config.hpp"
#include "entneg/csv.hpp"
#include "entneg/scenario.hpp"
#include "entneg/version.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <stdexcept>

#ifndef ENTNEG_PRESET_DIR
#define ENTNEG_PRESET_DIR "presets"
#endif

namespace entneg {

namespace {

struct ScenarioOptions {
  std::string config_path;
  std::string out_path = "-";
  std::vector<std::string> overrides;
  int workers = 0;
  bool serial = false;
};

void add_scenario_options(CLI::App* cmd, ScenarioOptions& options) {
  cmd->add_option("--config", options.config_path, "config file path")
      ->required();
  cmd->add_option("--out", options.out_path, "output CSV path ('-' = stdout)");
  cmd->add_option("--set", options.overrides,
                  "override a config key, e.g. --set V=15 or --set bath.K=80");
  cmd->add_option("--workers", options.workers,
                  "sweep worker count (default: ENTNEG_WORKERS or all cores)");
  cmd->add_flag("--serial", options.serial, "run the serial reference path");
}

int run_scenario_command(ScenarioKind kind, const ScenarioOptions& options) {
  ScenarioConfig config;
  try {
    config = parse_config_file(options.config_path, options.overrides);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  if (config.kind != kind) {
    std::cerr << "error: config declares scenario " << to_string(config.kind)
              << " but the subcommand is " << to_string(kind) << "\n";
    return 1;
  }

  ExecPolicy policy;
  policy.mode = options.serial ? Exec::serial : Exec::parallel;
  policy.workers = options.workers;

  auto progress = [](int index, int total, double x) {
    std::fprintf(stderr, "point %d/%d done (x = %g)\n", index + 1, total, x);
  };

  const auto start = std::chrono::steady_clock::now();
  ScenarioResult result;
  try {
    result = run_scenario(config, policy, progress);
    if (options.out_path == "-") {
      emit_csv(result, std::cout);
    } else {
      emit_csv(result, options.out_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;

  const RunManifest manifest{options.config_path, options.out_path,
                             to_string(config.kind), elapsed.count(), kVersion};
  std::fprintf(stderr, "entneg %s: %s -> %s (%s, %zu rows, %.2f s)\n",
               manifest.version.c_str(), manifest.config_path.c_str(),
               manifest.output_path.c_str(), manifest.scenario.c_str(),
               result.rows.size(), manifest.elapsed_seconds);
  return 0;
}

int list_presets(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) {
    std::cerr << "error: preset directory not found: " << dir << "\n";
    return 1;
  }
  std::map<std::string, std::string> presets;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() != ".cfg") continue;
    std::ifstream file(entry.path());
    std::string first_line;
    std::getline(file, first_line);
    std::string description = first_line;
    while (!description.empty() &&
           (description.front() == '#' || description.front() == ' '))
      description.erase(description.begin());
    presets[entry.path().stem().string()] = description;
  }
  if (presets.empty()) {
    std::cerr << "error: no .cfg presets in " << dir << "\n";
    return 1;
  }
  for (const auto& [name, description] : presets)
    std::printf("%-8s %s\n", name.c_str(), description.c_str());
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"entanglement negativity of a discretized resonant-level model"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  struct Entry {
    ScenarioKind kind;
    const char* name;
    const char* help;
  };
  const Entry entries[] = {
      {ScenarioKind::equilibrium_gc, "equilibrium-gc",
       "grand-canonical equilibrium negativity sweep"},
      {ScenarioKind::equilibrium_canonical, "equilibrium-canonical",
       "fixed-particle-number equilibrium negativity sweep"},
      {ScenarioKind::relaxation, "relax",
       "relaxation time series of the partial negativity"},
      {ScenarioKind::junction, "junction",
       "voltage-driven junction sweep or time series"},
  };

  std::map<std::string, ScenarioOptions> options;
  std::map<std::string, ScenarioKind> kinds;
  for (const Entry& entry : entries) {
    CLI::App* cmd = app.add_subcommand(entry.name, entry.help);
    add_scenario_options(cmd, options[entry.name]);
    kinds[entry.name] = entry.kind;
  }

  std::string preset_dir = ENTNEG_PRESET_DIR;
  CLI::App* presets =
      app.add_subcommand("presets", "list shipped figure-reproduction configs");
  presets->add_option("--dir", preset_dir, "preset directory");

  std::vector<std::string> argv_storage = args;
  std::vector<char*> argv;
  argv.reserve(argv_storage.size());
  for (std::string& arg : argv_storage) argv.push_back(arg.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (presets->parsed()) return list_presets(preset_dir);
  for (const auto& [name, kind] : kinds)
    if (app.get_subcommand(name)->parsed())
      return run_scenario_command(kind, options[name]);
  return 1;
}

}  // namespace entneg
