#pragma once

namespace zmds {
inline constexpr const char* kVersion = "0.1.0";
}
