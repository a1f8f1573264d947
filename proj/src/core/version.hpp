#pragma once

namespace sphaera {

inline constexpr const char* kVersion = "0.1.0";

}
