#pragma once

namespace cftgen {

inline constexpr const char* kToolName = "cftgen";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace cftgen
