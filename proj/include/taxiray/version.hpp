#pragma once

namespace taxiray {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace taxiray
