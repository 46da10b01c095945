#pragma once

namespace skewcert {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace skewcert
