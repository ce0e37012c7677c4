#pragma once

#include <cmath>

namespace dilink {

// Integer readings of real-valued bounds. Products such as (1/6)*6 carry
// rounding noise, so values within kSnap of an integer count as that integer.
inline constexpr double kSnap = 1e-9;

// Smallest integer c with c >= x.
inline long long ceil_threshold(double x) { return static_cast<long long>(std::ceil(x - kSnap)); }

// Smallest integer c with c > x.
inline long long strictly_above(double x) { return static_cast<long long>(std::floor(x + kSnap)) + 1; }

// Largest integer c with c < x.
inline long long strictly_below(double x) { return static_cast<long long>(std::ceil(x - kSnap)) - 1; }

}  // namespace dilink
