// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <limits>

#include "stirling/enclosure.hpp"

namespace stirling
{
namespace
{
std::strong_ordering from_cmp(int c)
{
    if (c < 0)
        return std::strong_ordering::less;
    if (c > 0)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::int64_t bits_of(const BigInt& z)
{
    return sgn(z) == 0 ? 0
                       : static_cast<std::int64_t>(
                           mpz_sizeinbase(z.get_mpz_t(), 2));
}

BigInt shifted_left(const BigInt& z, std::int64_t k)
{
    BigInt r;
    mpz_mul_2exp(r.get_mpz_t(), z.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
    return r;
}

BigInt pow10(std::int64_t k)
{
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(k));
    return r;
}

BigInt directed_quotient(const BigInt& num, const BigInt& den, Rounding dir)
{
    BigInt q;
    if (dir == Rounding::down)
        mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    else
        mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}
} // namespace

//---------------------------------------------------------------------------//
Precision::Precision(int bits) : bits_(bits)
{
    if (bits < 8)
        throw DomainError("Precision: at least 8 bits required, got "
                          + std::to_string(bits));
}

//---------------------------------------------------------------------------//
Dyadic::Dyadic(std::int64_t v)
{
    mpz_set_si(mantissa_.get_mpz_t(), v);
    canonicalize();
}

Dyadic::Dyadic(BigInt mantissa, std::int64_t exponent)
    : mantissa_(std::move(mantissa)), exponent_(exponent)
{
    canonicalize();
}

void Dyadic::canonicalize()
{
    if (sgn(mantissa_) == 0)
    {
        exponent_ = 0;
        return;
    }
    auto tz = mpz_scan1(mantissa_.get_mpz_t(), 0);
    if (tz > 0)
    {
        mpz_tdiv_q_2exp(mantissa_.get_mpz_t(), mantissa_.get_mpz_t(), tz);
        exponent_ += static_cast<std::int64_t>(tz);
    }
}

std::int64_t Dyadic::ilog2() const
{
    return bits_of(mantissa_) - 1 + exponent_;
}

std::int64_t Dyadic::mantissa_bits() const
{
    return bits_of(mantissa_);
}

Dyadic Dyadic::rounded(int bits, Rounding dir) const
{
    std::int64_t excess = mantissa_bits() - bits;
    if (excess <= 0)
        return *this;
    BigInt m;
    auto shift = static_cast<mp_bitcnt_t>(excess);
    if (dir == Rounding::down)
        mpz_fdiv_q_2exp(m.get_mpz_t(), mantissa_.get_mpz_t(), shift);
    else
        mpz_cdiv_q_2exp(m.get_mpz_t(), mantissa_.get_mpz_t(), shift);
    return Dyadic(std::move(m), exponent_ + excess);
}

BigInt Dyadic::floor() const
{
    if (exponent_ >= 0)
        return shifted_left(mantissa_, exponent_);
    BigInt r;
    mpz_fdiv_q_2exp(r.get_mpz_t(),
                    mantissa_.get_mpz_t(),
                    static_cast<mp_bitcnt_t>(-exponent_));
    return r;
}

BigInt Dyadic::ceil() const
{
    if (exponent_ >= 0)
        return shifted_left(mantissa_, exponent_);
    BigInt r;
    mpz_cdiv_q_2exp(r.get_mpz_t(),
                    mantissa_.get_mpz_t(),
                    static_cast<mp_bitcnt_t>(-exponent_));
    return r;
}

ExactRational Dyadic::to_rational() const
{
    if (exponent_ >= 0)
        return ExactRational(shifted_left(mantissa_, exponent_));
    return ExactRational(mantissa_, shifted_left(BigInt(1), -exponent_));
}

double Dyadic::to_double() const
{
    if (is_zero())
        return 0.0;
    BigInt m = mantissa_;
    std::int64_t e = exponent_;
    std::int64_t excess = mantissa_bits() - 60;
    if (excess > 0)
    {
        mpz_tdiv_q_2exp(
            m.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(excess));
        e += excess;
    }
    constexpr std::int64_t lim = 1 << 20;
    return std::ldexp(m.get_d(), static_cast<int>(std::clamp(e, -lim, lim)));
}

std::string Dyadic::to_decimal(int digits, Rounding dir) const
{
    if (is_zero())
        return "0";
    digits = std::max(digits, 1);

    const BigInt lower_limit = pow10(digits - 1);
    const BigInt upper_limit = pow10(digits);
    const BigInt two_pow_pos = shifted_left(BigInt(1), std::max<std::int64_t>(exponent_, 0));
    const BigInt two_pow_neg = shifted_left(BigInt(1), std::max<std::int64_t>(-exponent_, 0));

    // Estimate of floor(log10 |x|), corrected below.
    auto e10 = static_cast<std::int64_t>(
        std::floor(static_cast<double>(ilog2()) * 0.30102999566398120));
    bool went_up = false;
    BigInt scaled;
    std::int64_t k = 0;
    for (;;)
    {
        k = e10 - (digits - 1);
        BigInt num = mantissa_ * two_pow_pos;
        BigInt den = two_pow_neg;
        if (k >= 0)
            den *= pow10(k);
        else
            num *= pow10(-k);
        scaled = directed_quotient(num, den, dir);
        BigInt mag = abs(scaled);
        if (mag >= upper_limit)
        {
            ++e10;
            went_up = true;
            continue;
        }
        if (mag < lower_limit && !went_up)
        {
            --e10;
            continue;
        }
        break;
    }

    std::string body = BigInt(abs(scaled)).get_str();
    std::string sign = sgn(scaled) < 0 ? "-" : "";
    if (sgn(scaled) == 0)
        return "0";
    // Exponent of the leading digit.
    std::int64_t lead = k + static_cast<std::int64_t>(body.size()) - 1;

    auto strip = [](std::string s) {
        if (s.find('.') == std::string::npos)
            return s;
        while (!s.empty() && s.back() == '0')
            s.pop_back();
        if (!s.empty() && s.back() == '.')
            s.pop_back();
        return s;
    };

    if (lead >= -7 && lead <= 20)
    {
        std::string out;
        if (k >= 0)
        {
            out = body + std::string(static_cast<std::size_t>(k), '0');
        }
        else
        {
            auto frac = static_cast<std::size_t>(-k);
            if (body.size() <= frac)
                body = std::string(frac - body.size() + 1, '0') + body;
            out = body.substr(0, body.size() - frac) + "."
                  + body.substr(body.size() - frac);
        }
        return sign + strip(out);
    }
    std::string mant = body.substr(0, 1);
    if (body.size() > 1)
        mant += "." + body.substr(1);
    return sign + strip(mant) + "e" + (lead >= 0 ? "+" : "")
           + std::to_string(lead);
}

Dyadic operator+(const Dyadic& a, const Dyadic& b)
{
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    std::int64_t e = std::min(a.exponent_, b.exponent_);
    BigInt m = shifted_left(a.mantissa_, a.exponent_ - e)
               + shifted_left(b.mantissa_, b.exponent_ - e);
    return Dyadic(std::move(m), e);
}

Dyadic operator-(const Dyadic& a)
{
    Dyadic r = a;
    r.mantissa_ = -r.mantissa_;
    return r;
}

Dyadic operator-(const Dyadic& a, const Dyadic& b)
{
    return a + (-b);
}

Dyadic operator*(const Dyadic& a, const Dyadic& b)
{
    return Dyadic(BigInt(a.mantissa_ * b.mantissa_), a.exponent_ + b.exponent_);
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b)
{
    int sa = a.sign();
    int sb = b.sign();
    if (sa != sb)
        return from_cmp(sa - sb);
    if (sa == 0)
        return std::strong_ordering::equal;
    // Same sign, both nonzero: magnitudes decide unless the binades match.
    std::int64_t la = a.ilog2();
    std::int64_t lb = b.ilog2();
    if (la != lb)
        return from_cmp(sa > 0 ? (la < lb ? -1 : 1) : (la < lb ? 1 : -1));
    std::int64_t e = std::min(a.exponent_, b.exponent_);
    return from_cmp(cmp(shifted_left(a.mantissa_, a.exponent_ - e),
                        shifted_left(b.mantissa_, b.exponent_ - e)));
}

Dyadic ldexp(const Dyadic& x, std::int64_t shift)
{
    if (x.is_zero())
        return x;
    return Dyadic(x.mantissa(), x.exponent() + shift);
}

Dyadic divide(const Dyadic& a, const Dyadic& b, int bits, Rounding dir)
{
    if (b.is_zero())
        throw DomainError("Dyadic division by zero");
    if (a.is_zero())
        return {};
    std::int64_t shift = std::max<std::int64_t>(
        0, bits + 2 + b.mantissa_bits() - a.mantissa_bits());
    BigInt num = shifted_left(a.mantissa(), shift);
    BigInt q = directed_quotient(num, b.mantissa(), dir);
    return Dyadic(std::move(q), a.exponent() - b.exponent() - shift)
        .rounded(bits, dir);
}

Dyadic sqrt(const Dyadic& a, int bits, Rounding dir)
{
    if (a.sign() < 0)
        throw DomainError("sqrt of negative dyadic");
    if (a.is_zero())
        return {};
    std::int64_t shift
        = std::max<std::int64_t>(0, 2 * (bits + 2) - a.mantissa_bits());
    if ((a.exponent() - shift) % 2 != 0)
        ++shift;
    BigInt m = shifted_left(a.mantissa(), shift);
    BigInt r;
    BigInt rem;
    mpz_sqrtrem(r.get_mpz_t(), rem.get_mpz_t(), m.get_mpz_t());
    if (dir == Rounding::up && sgn(rem) != 0)
        r += 1;
    return Dyadic(std::move(r), (a.exponent() - shift) / 2).rounded(bits, dir);
}

std::strong_ordering compare(const Dyadic& a, const ExactRational& q)
{
    // a <=> num/den  <=>  a*den <=> num
    Dyadic scaled = a * Dyadic(q.den());
    return scaled <=> Dyadic(q.num());
}

std::strong_ordering compare(const Dyadic& a, const BigInt& z)
{
    return a <=> Dyadic(z);
}

} // namespace stirling
