#pragma once

#include <cstdint>

namespace cubecover {

/// Default cap on the number of points a cube or box instance may hold
/// (2^28 membership bits, about 32 MB per point set).
inline constexpr std::uint64_t kDefaultPointCap = std::uint64_t{1} << 28;

/// Process-wide point-count cap. Initialized from the CUBECOVER_POINT_CAP
/// environment variable on first use, kDefaultPointCap otherwise.
std::uint64_t point_cap();

/// Overrides the point-count cap for this process (used by the CLI and tests).
void set_point_cap(std::uint64_t cap);

}  // namespace cubecover
