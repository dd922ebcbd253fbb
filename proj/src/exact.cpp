// SPDX-License-Identifier: Apache-2.0
#include "stirling/exact.hpp"

#include <utility>

namespace stirling
{
namespace
{
// Below this many factors the tree falls back to a plain loop.
constexpr std::uint64_t kLeafSize = 16;

// Product of first, first + step, ..., first + (count - 1) * step.
BigInt progression_product(std::uint64_t first,
                           std::uint64_t count,
                           std::uint64_t step)
{
    if (count == 0)
        return 1;
    if (count <= kLeafSize)
    {
        BigInt acc = 1;
        for (std::uint64_t i = 0; i < count; ++i)
        {
            mpz_mul_ui(acc.get_mpz_t(), acc.get_mpz_t(), first + i * step);
        }
        return acc;
    }
    std::uint64_t half = count / 2;
    BigInt left = progression_product(first, half, step);
    BigInt right = progression_product(first + half * step, count - half, step);
    return BigInt(left * right);
}

std::strong_ordering from_cmp(int c)
{
    if (c < 0)
        return std::strong_ordering::less;
    if (c > 0)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}
} // namespace

//---------------------------------------------------------------------------//
// Natural

Natural::Natural(std::uint64_t v)
{
    mpz_set_ui(value_.get_mpz_t(), v);
}

Natural::Natural(BigInt v) : value_(std::move(v))
{
    if (sgn(value_) < 0)
        throw DomainError("Natural: negative value " + value_.get_str());
}

std::size_t Natural::bit_length() const
{
    return sgn(value_) == 0 ? 0 : mpz_sizeinbase(value_.get_mpz_t(), 2);
}

std::size_t Natural::decimal_digits() const
{
    // mpz_sizeinbase may overshoot by one for base 10.
    return value_.get_str().size();
}

std::strong_ordering operator<=>(const Natural& a, const Natural& b)
{
    return from_cmp(cmp(a.value_, b.value_));
}

//---------------------------------------------------------------------------//
// ExactRational

ExactRational::ExactRational(std::int64_t v)
{
    mpz_set_si(num_.get_mpz_t(), v);
}

ExactRational::ExactRational(BigInt integer) : num_(std::move(integer)) {}

ExactRational::ExactRational(BigInt num, BigInt den)
    : num_(std::move(num)), den_(std::move(den))
{
    if (sgn(den_) == 0)
        throw DomainError("ExactRational: zero denominator");
    if (sgn(den_) < 0)
    {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g;
    mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    if (sgn(num_) == 0)
    {
        den_ = 1;
    }
    else if (g != 1)
    {
        mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

std::string ExactRational::to_string() const
{
    return num_.get_str() + "/" + den_.get_str();
}

ExactRational operator+(const ExactRational& a, const ExactRational& b)
{
    if (a.den_ == b.den_)
        return {BigInt(a.num_ + b.num_), a.den_};
    return {BigInt(a.num_ * b.den_ + b.num_ * a.den_), BigInt(a.den_ * b.den_)};
}

ExactRational operator-(const ExactRational& a, const ExactRational& b)
{
    if (a.den_ == b.den_)
        return {BigInt(a.num_ - b.num_), a.den_};
    return {BigInt(a.num_ * b.den_ - b.num_ * a.den_), BigInt(a.den_ * b.den_)};
}

ExactRational operator*(const ExactRational& a, const ExactRational& b)
{
    // Both operands are reduced, so only the cross gcds can be nontrivial.
    BigInt g1;
    BigInt g2;
    mpz_gcd(g1.get_mpz_t(), a.num_.get_mpz_t(), b.den_.get_mpz_t());
    mpz_gcd(g2.get_mpz_t(), b.num_.get_mpz_t(), a.den_.get_mpz_t());
    BigInt num = (a.num_ / g1) * (b.num_ / g2);
    BigInt den = (a.den_ / g2) * (b.den_ / g1);
    return {std::move(num), std::move(den), ExactRational::Reduced{}};
}

ExactRational operator/(const ExactRational& a, const ExactRational& b)
{
    if (sgn(b.num_) == 0)
        throw DomainError("ExactRational: division by zero");
    return {BigInt(a.num_ * b.den_), BigInt(a.den_ * b.num_)};
}

ExactRational operator-(const ExactRational& a)
{
    return {BigInt(-a.num_), a.den_, ExactRational::Reduced{}};
}

std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b)
{
    return from_cmp(cmp(BigInt(a.num_ * b.den_), BigInt(b.num_ * a.den_)));
}

ExactRational rational_sub(const ExactRational& a, const ExactRational& b)
{
    return a - b;
}

//---------------------------------------------------------------------------//
// Combinatorial products

BigInt range_product(std::uint64_t lo, std::uint64_t hi)
{
    if (lo > hi)
        return 1;
    return progression_product(lo, hi - lo + 1, 1);
}

Natural factorial(std::uint64_t n)
{
    return Natural(range_product(2, n));
}

Natural double_fact_even(std::uint64_t n)
{
    return Natural(progression_product(2, n, 2));
}

Natural double_fact_odd(std::uint64_t n)
{
    return Natural(progression_product(1, n, 2));
}

} // namespace stirling
