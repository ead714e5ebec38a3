#pragma once

namespace permpat {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kVersionLine = "permpat 0.1.0";

}  // namespace permpat
