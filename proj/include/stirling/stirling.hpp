// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "stirling/enclosure.hpp"

namespace stirling
{

/// Certified two-sided bounds on n!.
///
/// lower <= sqrt(2 pi n)(n/e)^n < n! < sqrt(2 pi n)(n/e)^n e^(1/(4n)) <= upper.
/// The lower side holds because a_n decreases to sqrt(2 pi); the upper side
/// because b_n - 1/(4n) increases to ln sqrt(2 pi).
struct FactorialBounds
{
    std::uint64_t n = 0;
    Interval approx;     //!< sqrt(2 pi n) (n/e)^n
    Dyadic lower;
    Dyadic upper;
    Interval correction; //!< e^(1/(4n))
};

// Reference constants, all derived from constant_pi.
Interval sqrt_pi(Precision p);
Interval sqrt_two_pi(Precision p);
Interval half_pi(Precision p);

/// sqrt(2 pi n)(n/e)^n evaluated as exp(ln(2 pi n)/2 + n ln n - n).
Interval stirling_approx(std::uint64_t n, Precision p);

FactorialBounds factorial_bounds(std::uint64_t n, Precision p);

/// Exact number of decimal digits of n!. Throws UndecidedError rather than
/// guess when the bounds cannot settle it.
std::uint64_t digit_count(std::uint64_t n);

/// n!/stirling_approx(n) - 1 for 1 <= n <= kExactFactorialThreshold.
Interval relative_error(std::uint64_t n, Precision p);

} // namespace stirling
