#pragma once

namespace treex {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace treex
