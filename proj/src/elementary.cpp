// SPDX-License-Identifier: Apache-2.0
#include <map>
#include <mutex>

#include "stirling/enclosure.hpp"

namespace stirling
{
namespace
{
Dyadic abs_max(const Interval& x)
{
    Dyadic a = x.lo().sign() < 0 ? -x.lo() : x.lo();
    Dyadic b = x.hi().sign() < 0 ? -x.hi() : x.hi();
    return a < b ? b : a;
}

// 2^-k as a dyadic.
Dyadic unit(std::int64_t k)
{
    return Dyadic(BigInt(1), -k);
}

std::int64_t bit_width(std::uint64_t v)
{
    std::int64_t w = 0;
    while (v)
    {
        ++w;
        v >>= 1;
    }
    return w;
}

//---------------------------------------------------------------------------//
// Memoized constants keyed on precision bits.
class ConstantCache
{
  public:
    template<class F>
    Interval get(int bits, F&& compute)
    {
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto it = values_.find(bits);
            if (it != values_.end())
                return it->second;
        }
        Interval v = compute();
        std::lock_guard<std::mutex> lock(mutex_);
        values_.emplace(bits, v);
        return v;
    }

  private:
    std::mutex mutex_;
    std::map<int, Interval> values_;
};

//---------------------------------------------------------------------------//
/*
 * sum_{i>=0} k^(2i+1)/(2i+1) for k in K, 0 <= K.lo, K.hi < 1. The geometric
 * remainder k^(2m+3)/(1-k^2) is added to the upper endpoint.
 */
Interval atanh_series(const Interval& k, Precision w)
{
    const Dyadic k_hi = k.hi();
    if (k_hi.is_zero())
        return Interval(Dyadic());
    const int bits = w.significant_bits();
    const Interval k2 = mul(k, k, w);
    const Dyadic one_minus_k2 = (Dyadic(1) - k2.hi()).rounded(bits, Rounding::down);
    if (one_minus_k2.sign() <= 0)
        throw DomainError("atanh series: k too close to 1 for working precision");
    const Dyadic target = ldexp(k_hi, -(w.bits() + 4));

    Interval power = k; // k^(2i+1)
    Interval sum = k;
    for (std::uint64_t i = 1;; ++i)
    {
        // Remainder after the terms already summed: k^(2i+1) * k^2 / (1 - k^2)
        // where k^(2i+1) here is the last included power.
        Dyadic next_hi = (power.hi() * k2.hi()).rounded(bits, Rounding::up);
        Dyadic tail = divide(next_hi, one_minus_k2, bits, Rounding::up);
        if (tail < target)
            return round_outward({sum.lo(), sum.hi() + tail}, w);

        power = mul(power, k2, w);
        Interval term = div(power, Interval(Dyadic(static_cast<std::int64_t>(2 * i + 1))), w);
        sum = add(sum, term, w);
    }
}

Interval exp_point(const Dyadic& x, Precision w)
{
    if (x.is_zero())
        return Interval(Dyadic(1));
    // exp(x) = exp(x / 2^s)^(2^s) with |x / 2^s| < 1.
    std::int64_t s = std::max<std::int64_t>(0, x.ilog2() + 1);
    Precision wr(w.bits() + static_cast<int>(s) + 8);
    const int bits = wr.significant_bits();
    const Interval r(ldexp(x, -s));
    const Dyadic target = unit(wr.bits() + 4);

    Interval sum(Dyadic(1));
    Interval term(Dyadic(1));
    Dyadic tail;
    for (std::int64_t j = 1;; ++j)
    {
        term = div(mul(term, r, wr), Interval(Dyadic(j)), wr);
        sum = add(sum, term, wr);
        // |sum_{i>j} r^i/i!| <= 2 |r|^(j+1)/(j+1)! <= 2 |term_j| / (j+1)
        tail = divide(ldexp(abs_max(term), 1), Dyadic(j + 1), bits, Rounding::up);
        if (tail < target)
            break;
    }
    Interval y = round_outward({sum.lo() - tail, sum.hi() + tail}, wr);
    for (std::int64_t i = 0; i < s; ++i)
        y = mul(y, y, wr);
    return y;
}

Interval ln_point(const Dyadic& y, Precision w)
{
    if (y == Dyadic(1))
        return Interval(Dyadic());
    // y = z * 2^s with z in [3/4, 3/2).
    std::int64_t s = y.ilog2();
    Dyadic z = ldexp(y, -s);
    if (Dyadic(3, 0) <= ldexp(z, 1))
    {
        ++s;
        z = ldexp(y, -s);
    }
    ExactRational zq = z.to_rational();
    ExactRational k = (zq - ExactRational(1)) / (zq + ExactRational(1));

    Precision wk(w.bits() + 4);
    Interval half_log(Dyadic{});
    if (k.sign() != 0)
    {
        ExactRational mag = k.sign() < 0 ? -k : k;
        half_log = atanh_series(from_rational(mag, wk), wk);
        if (k.sign() < 0)
            half_log = neg(half_log);
    }
    Interval result = scale2(half_log, 1);
    if (s != 0)
    {
        std::uint64_t smag = static_cast<std::uint64_t>(s < 0 ? -s : s);
        Precision wl(w.bits() + static_cast<int>(bit_width(smag)) + 4);
        Interval ln2 = constant_ln2(wl);
        result = add(result, mul(Interval(Dyadic(s)), ln2, wl), w);
    }
    return round_outward(result, w);
}

} // namespace

//---------------------------------------------------------------------------//
Interval atanh_halflog(const ExactRational& k, Precision p)
{
    if (k.sign() <= 0 || k >= ExactRational(1))
        throw DomainError("atanh_halflog: k must lie in (0, 1), got "
                          + k.to_string());
    Precision w = p.guarded();
    if (k <= ExactRational(BigInt(1), BigInt(3)))
        return round_outward(atanh_series(from_rational(k, w), w), p);
    // Near 1 the series converges slowly; ln reduces (1+k)/(1-k) by powers
    // of two and comes back here with |k| <= 1/5.
    ExactRational ratio = (ExactRational(1) + k) / (ExactRational(1) - k);
    return round_outward(scale2(ln(from_rational(ratio, w), w), -1), p);
}

Interval ln(const Interval& x, Precision p)
{
    if (x.lo().sign() <= 0)
        throw DomainError("ln of an interval that is not strictly positive");
    Precision w = p.guarded();
    const int bits = w.significant_bits() + 8;
    Dyadic lo = x.lo().rounded(bits, Rounding::down);
    Dyadic hi = x.hi().rounded(bits, Rounding::up);
    Interval at_lo = ln_point(lo, w);
    if (lo == hi)
        return round_outward(at_lo, p);
    Interval at_hi = ln_point(hi, w);
    return round_outward({at_lo.lo(), at_hi.hi()}, p);
}

Interval exp(const Interval& x, Precision p)
{
    Precision w = p.guarded();
    const int bits = w.significant_bits() + 8;
    Dyadic lo = x.lo().rounded(bits, Rounding::down);
    Dyadic hi = x.hi().rounded(bits, Rounding::up);
    Interval at_lo = exp_point(lo, w);
    if (lo == hi)
        return round_outward(at_lo, p);
    Interval at_hi = exp_point(hi, w);
    return round_outward({at_lo.lo(), at_hi.hi()}, p);
}

Interval pow_rational(const Interval& x, const ExactRational& r, Precision p)
{
    if (x.lo().sign() <= 0)
        throw DomainError("pow_rational: base must be strictly positive");
    if (r.sign() == 0)
        return Interval(Dyadic(1));
    Precision w = p.guarded();
    Interval logx = ln(x, w);
    Interval rr = from_rational(r, w);
    Interval arg = mul(rr, logx, w);
    // exp amplifies absolute error in its argument by the argument's size.
    Dyadic big = abs_max(arg);
    if (!big.is_zero() && big.ilog2() >= 0)
    {
        Precision wide(w.bits() + static_cast<int>(big.ilog2()) + 2);
        logx = ln(x, wide);
        rr = from_rational(r, wide);
        arg = mul(rr, logx, wide);
    }
    return round_outward(exp(arg, w), p);
}

Interval constant_ln2(Precision p)
{
    static ConstantCache cache;
    return cache.get(p.bits(), [p] {
        Precision w = p.guarded();
        Interval half = atanh_series(from_rational(ExactRational(1, 3), w), w);
        return round_outward(scale2(half, 1), p);
    });
}

Interval constant_e(Precision p)
{
    static ConstantCache cache;
    return cache.get(p.bits(), [p] {
        // sum_{i<=m} 1/i!, remainder below 2/(m+1)!
        Precision w = p.guarded();
        const Dyadic target = unit(w.bits() + 4);
        Interval sum(Dyadic(2));
        BigInt fact = 1;
        for (std::uint64_t i = 2;; ++i)
        {
            fact *= static_cast<unsigned long>(i);
            sum = add(sum, from_rational(ExactRational(BigInt(1), fact), w), w);
            BigInt next = fact * static_cast<unsigned long>(i + 1);
            Interval tail = from_rational(ExactRational(BigInt(2), next), w);
            if (tail.hi() < target)
                return round_outward({sum.lo(), sum.hi() + tail.hi()}, p);
        }
    });
}

namespace
{
// arctan(1/x) = sum_j (-1)^j / ((2j+1) x^(2j+1)); alternating, so the
// remainder lies between 0 and the first omitted term.
Interval arctan_inverse(unsigned long x, Precision w)
{
    const Dyadic target = unit(w.bits() + 8);
    const BigInt x2 = BigInt(x) * x;
    BigInt xpow = x;
    Interval sum(Dyadic{});
    for (std::uint64_t j = 0;; ++j)
    {
        Interval term = from_rational(
            ExactRational(BigInt(1), BigInt(xpow * (2 * j + 1))), w);
        sum = (j % 2 == 0) ? add(sum, term, w) : sub(sum, term, w);
        xpow *= x2;
        Interval next = from_rational(
            ExactRational(BigInt(1), BigInt(xpow * (2 * j + 3))), w);
        if (next.hi() < target)
        {
            // next omitted term has sign (-1)^(j+1)
            if (j % 2 == 0)
                return {sum.lo() - next.hi(), sum.hi()};
            return {sum.lo(), sum.hi() + next.hi()};
        }
    }
}
} // namespace

Interval constant_pi(Precision p)
{
    static ConstantCache cache;
    return cache.get(p.bits(), [p] {
        // pi = 16 arctan(1/5) - 4 arctan(1/239)
        Precision w = p.guarded();
        Interval a5 = scale2(arctan_inverse(5, w), 4);
        Interval a239 = scale2(arctan_inverse(239, w), 2);
        return round_outward(sub(a5, a239, w), p);
    });
}

} // namespace stirling
