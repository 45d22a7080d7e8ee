#pragma once

namespace advqa {

inline constexpr const char* kToolName = "advqa";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace advqa
