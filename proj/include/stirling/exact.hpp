// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "stirling/errors.hpp"

namespace stirling
{

using BigInt = mpz_class;

/// Arbitrary-size non-negative integer.
class Natural
{
  public:
    Natural() = default;
    Natural(std::uint64_t v); // NOLINT: implicit from machine integers
    explicit Natural(BigInt v);

    const BigInt& big() const noexcept { return value_; }
    std::size_t bit_length() const;
    std::size_t decimal_digits() const;
    std::string to_string() const { return value_.get_str(); }

    friend Natural operator*(const Natural& a, const Natural& b)
    {
        return Natural(BigInt(a.value_ * b.value_));
    }
    friend bool operator==(const Natural& a, const Natural& b)
    {
        return a.value_ == b.value_;
    }
    friend std::strong_ordering operator<=>(const Natural& a,
                                            const Natural& b);

  private:
    BigInt value_{0};
};

/// Exact rational, always stored reduced with a positive denominator.
class ExactRational
{
  public:
    ExactRational() = default;
    ExactRational(std::int64_t v); // NOLINT: implicit from integers
    explicit ExactRational(BigInt integer);
    ExactRational(BigInt num, BigInt den);

    const BigInt& num() const noexcept { return num_; }
    const BigInt& den() const noexcept { return den_; }
    int sign() const { return sgn(num_); }
    bool is_integer() const { return den_ == 1; }

    /// "num/den"
    std::string to_string() const;

    friend ExactRational operator+(const ExactRational& a,
                                   const ExactRational& b);
    friend ExactRational operator-(const ExactRational& a,
                                   const ExactRational& b);
    friend ExactRational operator*(const ExactRational& a,
                                   const ExactRational& b);
    friend ExactRational operator/(const ExactRational& a,
                                   const ExactRational& b);
    friend ExactRational operator-(const ExactRational& a);

    friend bool operator==(const ExactRational& a, const ExactRational& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const ExactRational& a,
                                            const ExactRational& b);

  private:
    struct Reduced
    {
    };
    ExactRational(BigInt num, BigInt den, Reduced) noexcept
        : num_(std::move(num)), den_(std::move(den))
    {
    }

    BigInt num_{0};
    BigInt den_{1};
};

ExactRational rational_sub(const ExactRational& a, const ExactRational& b);

/// Product of the integers in [lo, hi], split recursively so both halves
/// carry operands of similar size. Empty range gives 1.
BigInt range_product(std::uint64_t lo, std::uint64_t hi);

/// n! = 1*2*...*n, with 0! = 1.
Natural factorial(std::uint64_t n);
/// (2n)!! = 2*4*...*(2n), with n = 0 giving 1.
Natural double_fact_even(std::uint64_t n);
/// (2n-1)!! = 1*3*...*(2n-1), with n = 0 giving 1.
Natural double_fact_odd(std::uint64_t n);

} // namespace stirling
