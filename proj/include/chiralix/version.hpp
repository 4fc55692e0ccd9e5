#pragma once

namespace chiralix {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace chiralix
