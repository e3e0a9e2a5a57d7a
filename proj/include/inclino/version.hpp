#pragma once

namespace inclino {

inline constexpr const char* kVersion = "0.1.0";

} // namespace inclino
