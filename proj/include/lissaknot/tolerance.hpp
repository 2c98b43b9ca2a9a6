#pragma once

namespace lissaknot {

// Numerical coincidence tolerance for position/time checks.
inline constexpr long double EQ_TOL = 1e-9L;

// Margin every crossing-sign factor must clear.  LISSAKNOT_TOL overrides it.
long double crossing_margin();

} // namespace lissaknot
