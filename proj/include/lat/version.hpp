#pragma once

namespace lat {

inline constexpr const char* kToolVersion = "lat 1.0.0";

} // namespace lat
