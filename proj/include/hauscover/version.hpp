#pragma once

namespace hauscover {

inline constexpr const char* kVersion = "0.1.0";

} // namespace hauscover
