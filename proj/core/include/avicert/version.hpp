#pragma once

namespace avicert {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace avicert
