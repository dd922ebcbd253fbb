// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <array>
#include <optional>

#include "stirling/enclosure.hpp"

namespace stirling
{

Interval::Interval(Dyadic point) : lo_(point), hi_(std::move(point)) {}

Interval::Interval(Dyadic lo, Dyadic hi) : lo_(std::move(lo)), hi_(std::move(hi))
{
    if (hi_ < lo_)
        throw DomainError("Interval: lo > hi");
}

bool Interval::contains(const ExactRational& q) const
{
    return compare(lo_, q) <= 0 && compare(hi_, q) >= 0;
}

double Interval::mid_double() const
{
    return 0.5 * (lo_.to_double() + hi_.to_double());
}

const char* to_string(TriState t)
{
    switch (t)
    {
        case TriState::certainly_true:
            return "certainly_true";
        case TriState::certainly_false:
            return "certainly_false";
        case TriState::undecided:
            return "undecided";
    }
    return "?";
}

Interval round_outward(const Interval& x, Precision p)
{
    int bits = p.significant_bits();
    return {x.lo().rounded(bits, Rounding::down),
            x.hi().rounded(bits, Rounding::up)};
}

Interval from_rational(const ExactRational& q, Precision p)
{
    const int bits = p.significant_bits();
    if (q.sign() == 0)
        return Interval(Dyadic());
    if (q.is_integer())
        return from_integer(q.num(), p);

    // floor(log2 |q|)
    BigInt mag = abs(q.num());
    auto bl = [](const BigInt& z) {
        return static_cast<std::int64_t>(mpz_sizeinbase(z.get_mpz_t(), 2));
    };
    std::int64_t t = bl(mag) - bl(q.den());
    {
        BigInt lhs = mag;
        BigInt rhs = q.den();
        if (t >= 0)
            mpz_mul_2exp(rhs.get_mpz_t(), rhs.get_mpz_t(), static_cast<mp_bitcnt_t>(t));
        else
            mpz_mul_2exp(lhs.get_mpz_t(), lhs.get_mpz_t(), static_cast<mp_bitcnt_t>(-t));
        if (lhs < rhs)
            --t;
    }
    // Scale so the quotient has `bits` integer bits: grid spacing 2^(t-bits+1).
    std::int64_t s = bits - 1 - t;
    BigInt num = q.num();
    BigInt den = q.den();
    if (s >= 0)
        mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(s));
    else
        mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(-s));
    BigInt lo;
    BigInt hi;
    mpz_fdiv_q(lo.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    mpz_cdiv_q(hi.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return {Dyadic(std::move(lo), -s), Dyadic(std::move(hi), -s)};
}

Interval from_integer(const BigInt& z, Precision p)
{
    return round_outward(Interval(Dyadic(z)), p);
}

Interval add(const Interval& x, const Interval& y, Precision p)
{
    return round_outward({x.lo() + y.lo(), x.hi() + y.hi()}, p);
}

Interval sub(const Interval& x, const Interval& y, Precision p)
{
    return round_outward({x.lo() - y.hi(), x.hi() - y.lo()}, p);
}

Interval mul(const Interval& x, const Interval& y, Precision p)
{
    if (x.is_point() && y.is_point())
        return round_outward(Interval(x.lo() * y.lo()), p);
    std::array<Dyadic, 4> c{
        x.lo() * y.lo(), x.lo() * y.hi(), x.hi() * y.lo(), x.hi() * y.hi()};
    auto [mn, mx] = std::minmax_element(c.begin(), c.end());
    return round_outward({*mn, *mx}, p);
}

Interval div(const Interval& x, const Interval& y, Precision p)
{
    if (y.lo().sign() <= 0 && y.hi().sign() >= 0)
        throw DomainError("interval division by an interval containing zero");
    const int bits = p.significant_bits();
    const std::array<const Dyadic*, 2> xs{&x.lo(), &x.hi()};
    const std::array<const Dyadic*, 2> ys{&y.lo(), &y.hi()};
    std::optional<Dyadic> lo;
    std::optional<Dyadic> hi;
    for (const Dyadic* a : xs)
    {
        for (const Dyadic* b : ys)
        {
            Dyadic d = divide(*a, *b, bits, Rounding::down);
            Dyadic u = divide(*a, *b, bits, Rounding::up);
            if (!lo || d < *lo)
                lo = std::move(d);
            if (!hi || *hi < u)
                hi = std::move(u);
        }
    }
    return {std::move(*lo), std::move(*hi)};
}

Interval neg(const Interval& x)
{
    return {-x.hi(), -x.lo()};
}

Interval scale2(const Interval& x, std::int64_t shift)
{
    return {ldexp(x.lo(), shift), ldexp(x.hi(), shift)};
}

Interval sqrt(const Interval& x, Precision p)
{
    if (x.lo().sign() < 0)
        throw DomainError("sqrt of an interval with negative lower endpoint");
    const int bits = p.significant_bits();
    return {sqrt(x.lo(), bits, Rounding::down), sqrt(x.hi(), bits, Rounding::up)};
}

TriState certainly_lt(const Interval& x, const Interval& y)
{
    if (x.hi() < y.lo())
        return TriState::certainly_true;
    if (y.hi() <= x.lo())
        return TriState::certainly_false;
    return TriState::undecided;
}

} // namespace stirling
