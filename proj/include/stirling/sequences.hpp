// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>

#include "stirling/enclosure.hpp"

namespace stirling
{

/// Up to this n, ln(n!) is taken from the exact factorial; beyond it,
/// log-enclosures of consecutive blocks of factors are summed.
inline constexpr std::uint64_t kExactFactorialThreshold = 10000;
/// Number of factors multiplied exactly before each logarithm beyond the
/// exact threshold. Blocks start at kExactFactorialThreshold + 1.
inline constexpr std::uint64_t kLogFactorialBlock = 64;

/// Values attached to one index n of a_n = n! / (sqrt(n) n^n e^-n).
struct StirlingRow
{
    std::uint64_t n = 0;
    ExactRational k;      //!< 1/(2n+1)
    Interval a;           //!< a_n
    Interval b;           //!< b_n = ln a_n
    Interval b_diff;      //!< b_n - b_{n+1}, from its series
    ExactRational tail;   //!< 1/(4n) - 1/(4(n+1))
};

ExactRational k_of(std::uint64_t n);
ExactRational tail_of(std::uint64_t n);

/// Enclosure of ln(n!). Deterministic in (n, p): LogFactorialSweep yields
/// bit-identical intervals.
Interval log_factorial(std::uint64_t n, Precision p);

/// Precision at which b_of requests ln(n!).
Precision log_factorial_precision(Precision p);

Interval b_of(std::uint64_t n, Precision p);
/// b_n from a ln(n!) enclosure obtained at log_factorial_precision(p).
Interval b_from_log_factorial(std::uint64_t n, const Interval& log_fact, Precision p);

Interval a_of(std::uint64_t n, Precision p);
/// a_n = exp(b_n) from a b_n enclosure at precision p.guarded(8).
Interval a_from_b(const Interval& b, Precision p);
/// Precision a_of uses for its b_n.
Precision a_inner_precision(Precision p);

/// a_n / a_{n+1} = (1/e) ((n+1)/n)^((2n+1)/2)
Interval ratio_of(std::uint64_t n, Precision p);

/// b_n - b_{n+1} = sum_{i>=1} k^(2i)/(2i+1), k = 1/(2n+1), with the
/// geometric remainder k^(2m+2)/(1-k^2) added to the upper endpoint.
Interval b_diff_series(std::uint64_t n, Precision p);

/// e^(3/4)
Interval lower_bound_const(Precision p);

StirlingRow row_of(std::uint64_t n, Precision p);

//---------------------------------------------------------------------------//
/*!
 * Incremental ln(n!) over consecutive n.
 *
 * Keeps the running exact factorial up to kExactFactorialThreshold and the
 * block-sum state beyond it, so value() matches log_factorial(n, p) bit for
 * bit at O(1) amortized logarithms per step.
 */
class LogFactorialSweep
{
  public:
    LogFactorialSweep(std::uint64_t start, Precision p);

    std::uint64_t n() const noexcept { return n_; }
    const Interval& value() const noexcept { return value_; }
    void advance();

  private:
    void refresh();

    Precision prec_;
    Precision acc_prec_;
    std::uint64_t n_;
    BigInt factorial_;              // exact n! while n <= threshold
    std::optional<Interval> block_sum_; // ln(boundary!) at acc_prec_
    std::uint64_t boundary_ = 0;
    BigInt partial_;                // product of (boundary, n]
    Interval value_;
};

/// Running b_n at a fixed precision, bit-identical to b_of(n, p).
class BSweep
{
  public:
    BSweep(std::uint64_t start, Precision p);

    std::uint64_t n() const noexcept { return sweep_.n(); }
    Interval value() const;
    void advance() { sweep_.advance(); }

  private:
    Precision prec_;
    LogFactorialSweep sweep_;
};

/// Running a_n at a fixed precision, bit-identical to a_of(n, p).
class ASweep
{
  public:
    ASweep(std::uint64_t start, Precision p);

    std::uint64_t n() const noexcept { return b_.n(); }
    Interval value() const;
    void advance() { b_.advance(); }

  private:
    Precision prec_;
    BSweep b_;
};

} // namespace stirling
