#pragma once

namespace lamtau {

inline constexpr const char* kToolName = "lamtau";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace lamtau
