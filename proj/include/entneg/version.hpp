#pragma once

namespace entneg {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace entneg
