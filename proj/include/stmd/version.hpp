#pragma once

namespace stmd {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace stmd
