#pragma once

namespace corelimit {

inline constexpr const char* version = "0.1.0";

}  // namespace corelimit
