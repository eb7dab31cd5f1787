#pragma once

namespace meroc {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace meroc
