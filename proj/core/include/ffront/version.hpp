#pragma once

namespace ffront {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ffront
