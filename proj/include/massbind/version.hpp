#pragma once

#include <string_view>

namespace massbind {

inline constexpr std::string_view kToolName = "massbind";
inline constexpr std::string_view kToolVersion = "0.1.0";

} // namespace massbind
