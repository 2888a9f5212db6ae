#pragma once

#include <string>
#include <vector>

namespace entneg {

// One record per CLI run, logged to stderr after the CSV is written so the
// data file itself stays bitwise reproducible.
struct RunManifest {
  std::string config_path;
  std::string output_path;  // "-" for stdout
  std::string scenario;
  double elapsed_seconds = 0.0;
  std::string version;
};

// Entry point behind the entneg binary; argv[0] is the program name.
// Returns 0 on success, 1 on usage/config errors, 2 on runtime failures.
int run_cli(const std::vector<std::string>& args);

}  // namespace entneg
