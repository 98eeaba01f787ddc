#pragma once

namespace casimir {

inline constexpr const char* version = "1.0.0";

}  // namespace casimir
