#pragma once

namespace qbps {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace qbps
