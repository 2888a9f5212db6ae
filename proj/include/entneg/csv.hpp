#pragma once

#include "entneg/scenario.hpp"

#include <iosfwd>
#include <string>

namespace entneg {

// CSV with a comment-prefixed echo of the resolved config, a header row,
// and one data row per grid point at 12 significant digits. Output is
// bitwise deterministic for a given result.
void emit_csv(const ScenarioResult& result, std::ostream& out);
void emit_csv(const ScenarioResult& result, const std::string& path);

std::string format_sig12(double value);

}  // namespace entneg
