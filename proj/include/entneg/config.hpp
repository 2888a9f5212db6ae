#pragma once

#include "entneg/scenario.hpp"

#include <string>
#include <vector>

namespace entneg {

// Parses the sectioned key=value config format ([model], [bath]/[junction],
// [sweep], [time], [output]) into a validated ScenarioConfig. Unknown keys
// and physical-invariant violations are rejected with the key path named.
// Overrides are "key=value" or "section.key=value" entries applied on top
// of the file before validation.
ScenarioConfig parse_config(const std::string& text,
                            const std::vector<std::string>& overrides = {});
ScenarioConfig parse_config_file(const std::string& path,
                                 const std::vector<std::string>& overrides = {});

// Canonical serialization of a resolved config; parse_config(config_echo(c))
// reproduces c (the echo is a fixed point of parse-then-echo).
std::string config_echo(const ScenarioConfig& config);

// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double value);

}  // namespace entneg
