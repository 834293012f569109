#pragma once

namespace pbasis {

inline constexpr const char* kToolName = "pbasis";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace pbasis
