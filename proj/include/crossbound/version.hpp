#pragma once

namespace crossbound {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace crossbound
