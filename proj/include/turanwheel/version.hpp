#pragma once

namespace tw {

inline constexpr const char* kToolVersion = "0.1.0";

} // namespace tw
