// SPDX-License-Identifier: Apache-2.0
#include "stirling/stirling.hpp"

#include <bit>
#include <string>

#include "stirling/sequences.hpp"

namespace stirling
{
namespace
{
void require_positive(std::uint64_t n, const char* what)
{
    if (n == 0)
        throw DomainError(std::string(what) + ": n must be at least 1");
}

// Digit counts below this are read off the exact factorial.
constexpr std::uint64_t kSmallDigitCount = 25;
constexpr int kDigitStartBits = 64;
constexpr int kDigitMaxBits = 1024;
} // namespace

Interval sqrt_pi(Precision p)
{
    Precision w = p.guarded();
    return round_outward(sqrt(constant_pi(w), w), p);
}

Interval sqrt_two_pi(Precision p)
{
    Precision w = p.guarded();
    return round_outward(sqrt(scale2(constant_pi(w), 1), w), p);
}

Interval half_pi(Precision p)
{
    return scale2(constant_pi(p), -1);
}

Interval stirling_approx(std::uint64_t n, Precision p)
{
    require_positive(n, "stirling_approx");
    // n ln n needs about 2 log2(n) extra bits to survive cancellation.
    Precision w(p.bits() + 24 + 2 * static_cast<int>(std::bit_width(n)));
    const Interval nn = from_integer(BigInt(n), w);
    Interval half_log = scale2(ln(mul(scale2(constant_pi(w), 1), nn, w), w), -1);
    Interval n_log_n = mul(nn, ln(nn, w), w);
    Interval exponent = add(half_log, sub(n_log_n, nn, w), w);
    return exp(exponent, p);
}

FactorialBounds factorial_bounds(std::uint64_t n, Precision p)
{
    require_positive(n, "factorial_bounds");
    FactorialBounds fb;
    fb.n = n;
    fb.approx = stirling_approx(n, p);
    fb.correction = exp(from_rational(ExactRational(BigInt(1), BigInt(4) * n), p.guarded()), p);
    fb.lower = fb.approx.lo();
    fb.upper = mul(fb.approx, fb.correction, p).hi();
    return fb;
}

std::uint64_t digit_count(std::uint64_t n)
{
    require_positive(n, "digit_count");
    if (n <= kSmallDigitCount)
        return factorial(n).decimal_digits();

    const Dyadic narrow(BigInt(1), -20);
    for (int bits = kDigitStartBits; bits <= kDigitMaxBits; bits *= 2)
    {
        Precision w(bits);
        FactorialBounds fb = factorial_bounds(n, w);
        Interval ln10 = ln(Interval(Dyadic(10)), w);
        Interval lo10 = div(ln(Interval(fb.lower), w), ln10, w);
        Interval hi10 = div(ln(Interval(fb.upper), w), ln10, w);
        BigInt floor_lo = lo10.lo().floor();
        BigInt floor_hi = hi10.hi().floor();
        if (floor_lo == floor_hi)
            return floor_lo.get_ui() + 1;
        // Both logs already pinned down: the e^(1/(4n)) band itself
        // straddles a power of ten and more bits will not help.
        if (lo10.width() < narrow && hi10.width() < narrow)
            break;
    }
    if (n <= kExactFactorialThreshold)
        return factorial(n).decimal_digits();
    throw UndecidedError("digit_count: bounds on " + std::to_string(n)
                         + "! straddle a power of ten");
}

Interval relative_error(std::uint64_t n, Precision p)
{
    require_positive(n, "relative_error");
    if (n > kExactFactorialThreshold)
        throw DomainError("relative_error: n above exact factorial threshold "
                          + std::to_string(kExactFactorialThreshold));
    Precision w = p.guarded();
    Interval ratio = div(from_integer(factorial(n).big(), w), stirling_approx(n, w), w);
    return round_outward(sub(ratio, Interval(Dyadic(1)), w), p);
}

} // namespace stirling
