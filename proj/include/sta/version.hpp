#pragma once

namespace sta {

inline constexpr const char* kEngineVersion = "0.1.0";

}  // namespace sta
