// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "stirling/exact.hpp"

namespace stirling
{

/// Working precision in bits. Enclosure endpoints produced at precision p
/// carry at most p + 1 significant mantissa bits (p bits after the leading
/// one), so a result near x has endpoint spacing at most 2^-p * |x|.
class Precision
{
  public:
    explicit Precision(int bits);

    int bits() const noexcept { return bits_; }
    /// Mantissa length endpoints are rounded to.
    int significant_bits() const noexcept { return bits_ + 1; }
    /// Precision used for intermediate steps.
    Precision guarded(int extra = 16) const { return Precision(bits_ + extra); }

    friend bool operator==(Precision, Precision) = default;
    friend auto operator<=>(Precision, Precision) = default;

  private:
    int bits_;
};

enum class Rounding
{
    down, //!< toward -infinity
    up,   //!< toward +infinity
};

//---------------------------------------------------------------------------//
/*!
 * Exact binary rational mantissa * 2^exponent.
 *
 * Canonical form: the mantissa is odd, or zero with exponent zero. Sums,
 * differences and products are exact; division, square roots and
 * precision reduction take an explicit rounding direction.
 */
class Dyadic
{
  public:
    Dyadic() = default;
    Dyadic(std::int64_t v); // NOLINT: implicit from integers
    explicit Dyadic(BigInt mantissa, std::int64_t exponent = 0);

    const BigInt& mantissa() const noexcept { return mantissa_; }
    std::int64_t exponent() const noexcept { return exponent_; }
    int sign() const { return sgn(mantissa_); }
    bool is_zero() const { return sign() == 0; }

    /// floor(log2 |x|); requires x != 0.
    std::int64_t ilog2() const;
    /// Number of bits in |mantissa|.
    std::int64_t mantissa_bits() const;

    /// Round to at most `bits` significant bits in the given direction.
    Dyadic rounded(int bits, Rounding dir) const;

    BigInt floor() const;
    BigInt ceil() const;
    ExactRational to_rational() const;
    /// Nearest double, for diagnostics only.
    double to_double() const;

    /// Decimal rendering with `digits` significant digits, rounded in the
    /// given direction. Uses fixed notation for moderate magnitudes and
    /// d.ddde+N otherwise.
    std::string to_decimal(int digits, Rounding dir) const;

    friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator-(const Dyadic& a);

    friend bool operator==(const Dyadic& a, const Dyadic& b)
    {
        return a.exponent_ == b.exponent_ && a.mantissa_ == b.mantissa_;
    }
    friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

  private:
    void canonicalize();

    BigInt mantissa_{0};
    std::int64_t exponent_{0};
};

/// x * 2^shift, exact.
Dyadic ldexp(const Dyadic& x, std::int64_t shift);
/// a / b rounded to `bits` significant bits; b must be nonzero.
Dyadic divide(const Dyadic& a, const Dyadic& b, int bits, Rounding dir);
/// sqrt(a) rounded to `bits` significant bits; a must be non-negative.
Dyadic sqrt(const Dyadic& a, int bits, Rounding dir);
/// Compare a dyadic with an exact rational.
std::strong_ordering compare(const Dyadic& a, const ExactRational& q);
std::strong_ordering compare(const Dyadic& a, const BigInt& z);

//---------------------------------------------------------------------------//
/*!
 * Closed interval [lo, hi] with dyadic endpoints.
 *
 * Every operation below returns an interval containing the exact result for
 * all real operands drawn from its argument intervals.
 */
class Interval
{
  public:
    Interval() = default;
    explicit Interval(Dyadic point);
    Interval(Dyadic lo, Dyadic hi);

    const Dyadic& lo() const noexcept { return lo_; }
    const Dyadic& hi() const noexcept { return hi_; }

    Dyadic width() const { return hi_ - lo_; }
    bool is_point() const { return lo_ == hi_; }
    bool contains(const Dyadic& x) const { return lo_ <= x && x <= hi_; }
    bool contains(const ExactRational& q) const;
    bool contains(const Interval& inner) const
    {
        return lo_ <= inner.lo_ && inner.hi_ <= hi_;
    }
    bool intersects(const Interval& other) const
    {
        return lo_ <= other.hi_ && other.lo_ <= hi_;
    }
    /// Midpoint as a double, for diagnostics only.
    double mid_double() const;

    friend bool operator==(const Interval&, const Interval&) = default;

  private:
    Dyadic lo_;
    Dyadic hi_;
};

enum class TriState
{
    certainly_true,
    certainly_false,
    undecided,
};

const char* to_string(TriState t);

/// Round both endpoints outward to precision p.
Interval round_outward(const Interval& x, Precision p);

Interval from_rational(const ExactRational& q, Precision p);
Interval from_integer(const BigInt& z, Precision p);

Interval add(const Interval& x, const Interval& y, Precision p);
Interval sub(const Interval& x, const Interval& y, Precision p);
Interval mul(const Interval& x, const Interval& y, Precision p);
/// Throws DomainError when y contains zero.
Interval div(const Interval& x, const Interval& y, Precision p);
Interval neg(const Interval& x);
/// x * 2^shift, exact.
Interval scale2(const Interval& x, std::int64_t shift);

/// Throws DomainError when x.lo < 0.
Interval sqrt(const Interval& x, Precision p);

/*!
 * Half the log-ratio (1/2) ln((1+k)/(1-k)) = sum_{i>=0} k^(2i+1)/(2i+1)
 * for 0 < k < 1.
 *
 * The sum is truncated once the geometric remainder k^(2m+3)/(1-k^2) falls
 * below 2^-(bits+4) relative to k, and that remainder is then added to the
 * upper endpoint. For k > 1/3 the argument (1+k)/(1-k) is first reduced by
 * powers of two through ln, which runs the same series at |k| <= 1/5.
 */
Interval atanh_halflog(const ExactRational& k, Precision p);

/// Natural logarithm through the atanh series. Throws DomainError if
/// x.lo <= 0.
Interval ln(const Interval& x, Precision p);
Interval exp(const Interval& x, Precision p);
/// exp(r * ln x); throws DomainError if x.lo <= 0.
Interval pow_rational(const Interval& x, const ExactRational& r, Precision p);

Interval constant_e(Precision p);
Interval constant_pi(Precision p);
Interval constant_ln2(Precision p);

/// certainly_true iff x.hi < y.lo, certainly_false iff y.hi <= x.lo.
TriState certainly_lt(const Interval& x, const Interval& y);

} // namespace stirling
