#pragma once

#include <string_view>

namespace ebcm {

inline constexpr std::string_view kToolName = "ebcm";
inline constexpr std::string_view kToolVersion = "1.0.0";

// Identity of the pseudo-random stream. Every release that changes this
// string invalidates byte-level reproducibility of stored CSV files.
inline constexpr std::string_view kRngId = "std::mt19937_64, doubles = (x >> 11) * 2^-53";

}  // namespace ebcm
