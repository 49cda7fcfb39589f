#pragma once

namespace idxf {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace idxf
