#pragma once

// Constants shared by every kernel variant. Thresholds must match exactly so
// that the variants mask the same outcomes.

namespace mqdimer::kernels::detail {

/// Measurement outcomes with probability below this contribute nothing.
inline constexpr double kMinOutcomeProbability = 1e-14;

/// Eigenvalues at or below this contribute nothing to an entropy.
inline constexpr double kTinyEigenvalue = 1e-300;

inline constexpr double kInvLn2 = 1.4426950408889634073599;

}  // namespace mqdimer::kernels::detail
