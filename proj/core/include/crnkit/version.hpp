#pragma once

namespace crn {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace crn
