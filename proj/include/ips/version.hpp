#pragma once

namespace ips {

inline constexpr const char* kVersion = "1.0.0";

} // namespace ips
