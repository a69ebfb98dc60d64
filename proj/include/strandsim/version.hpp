#pragma once

namespace strandsim {

inline constexpr const char* kVersion = "0.1.0";

} // namespace strandsim
