// SPDX-License-Identifier: Apache-2.0
#include "stirling/wallis.hpp"

#include <string>

namespace stirling
{
namespace
{
void require_positive(std::uint64_t n, const char* what)
{
    if (n == 0)
        throw DomainError(std::string(what) + ": n must be at least 1");
}
} // namespace

ExactRational wallis_partial(std::uint64_t n)
{
    require_positive(n, "wallis_partial");
    const BigInt even = double_fact_even(n).big();
    const BigInt odd = double_fact_odd(n).big();
    return {BigInt(even * even), BigInt(odd * odd * (BigInt(2) * n + 1))};
}

ExactRational lemma_ratio_squared(std::uint64_t n)
{
    require_positive(n, "lemma_ratio_squared");
    const BigInt f = factorial(n).big();
    const BigInt f2 = factorial(2 * n).big();
    BigInt num;
    mpz_mul_2exp(num.get_mpz_t(), BigInt(f * f * f * f).get_mpz_t(),
                 static_cast<mp_bitcnt_t>(4 * n));
    return {std::move(num), BigInt(f2 * f2 * (BigInt(2) * n + 1))};
}

ExactRational central_ratio(std::uint64_t n)
{
    const BigInt f = factorial(n).big();
    BigInt num;
    mpz_mul_2exp(num.get_mpz_t(), BigInt(f * f).get_mpz_t(),
                 static_cast<mp_bitcnt_t>(2 * n));
    return {std::move(num), factorial(2 * n).big()};
}

Interval lemma_L_from_ratio(std::uint64_t n, const ExactRational& ratio, Precision p)
{
    require_positive(n, "lemma_L");
    Precision w = p.guarded();
    Interval root = sqrt(from_integer(BigInt(n), w), w);
    return round_outward(div(from_rational(ratio, w), root, w), p);
}

Interval lemma_rescaled_from_ratio(std::uint64_t n, const ExactRational& ratio, Precision p)
{
    require_positive(n, "lemma_rescaled");
    Precision w = p.guarded();
    Interval root = sqrt(from_integer(BigInt(2) * n + 1, w), w);
    return round_outward(div(from_rational(ratio, w), root, w), p);
}

Interval lemma_L(std::uint64_t n, Precision p)
{
    require_positive(n, "lemma_L");
    return lemma_L_from_ratio(n, central_ratio(n), p);
}

Interval lemma_rescaled(std::uint64_t n, Precision p)
{
    require_positive(n, "lemma_rescaled");
    return lemma_rescaled_from_ratio(n, central_ratio(n), p);
}

WallisRow wallis_row(std::uint64_t n, Precision p)
{
    require_positive(n, "wallis_row");
    ExactRational ratio = central_ratio(n);
    return {n,
            wallis_partial(n),
            lemma_L_from_ratio(n, ratio, p),
            lemma_rescaled_from_ratio(n, ratio, p)};
}

//---------------------------------------------------------------------------//
WallisSweep::WallisSweep(std::uint64_t start)
    : n_(start), partial_(wallis_partial(start)), ratio_(central_ratio(start))
{
}

void WallisSweep::advance()
{
    BigInt m = n_;
    // W_{n+1} / W_n = (2n+2)^2 / ((2n+1)(2n+3))
    partial_ = partial_
               * ExactRational(BigInt((2 * m + 2) * (2 * m + 2)),
                               BigInt((2 * m + 1) * (2 * m + 3)));
    // c_{n+1} / c_n = 4 (n+1)^2 / ((2n+1)(2n+2)) = 2(n+1)/(2n+1)
    ratio_ = ratio_ * ExactRational(BigInt(2 * m + 2), BigInt(2 * m + 1));
    ++n_;
}

} // namespace stirling
