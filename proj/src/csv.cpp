#include "entneg/csv.hpp"

#include "entneg/config.hpp"
#include "entneg/version.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace entneg {

std::string format_sig12(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

void emit_csv(const ScenarioResult& result, std::ostream& out) {
  out << "# entneg " << kVersion << "\n";
  out << "# config:\n";
  std::istringstream echo(config_echo(result.config));
  std::string line;
  while (std::getline(echo, line))
    out << (line.empty() ? "#" : "# " + line) << "\n";

  for (std::size_t i = 0; i < result.columns.size(); ++i) {
    if (i) out << ',';
    out << result.columns[i];
  }
  out << '\n';
  for (const auto& row : result.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << format_sig12(row[i]);
    }
    out << '\n';
  }
}

void emit_csv(const ScenarioResult& result, const std::string& path) {
  std::ofstream file(path);
  if (!file)
    throw std::runtime_error("emit_csv: destination unwritable: " + path);
  emit_csv(result, file);
  if (!file)
    throw std::runtime_error("emit_csv: write failed: " + path);
}

}  // namespace entneg
