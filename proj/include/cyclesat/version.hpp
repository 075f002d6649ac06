#pragma once

namespace cyclesat {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace cyclesat
