#pragma once

namespace vinculab {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace vinculab
