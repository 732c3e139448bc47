#pragma once

namespace pairlab {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace pairlab
