#pragma once

namespace qtgc {

inline constexpr const char* kVersion = "0.1.0";

} // namespace qtgc
