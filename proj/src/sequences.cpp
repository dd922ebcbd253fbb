// SPDX-License-Identifier: Apache-2.0
#include "stirling/sequences.hpp"

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

Precision accumulation_precision(Precision p)
{
    return Precision(p.bits() + 40);
}

Interval ln_of_integer(const BigInt& z, Precision w)
{
    return ln(from_integer(z, w), w);
}

// Last block boundary at or below n (n > threshold).
std::uint64_t block_boundary(std::uint64_t n)
{
    return kExactFactorialThreshold
           + ((n - kExactFactorialThreshold) / kLogFactorialBlock)
                 * kLogFactorialBlock;
}

Interval combine(const Interval& block_sum,
                 const BigInt& partial,
                 Precision acc,
                 Precision p)
{
    if (partial == 1)
        return round_outward(block_sum, p);
    return round_outward(add(block_sum, ln_of_integer(partial, acc), acc), p);
}
} // namespace

ExactRational k_of(std::uint64_t n)
{
    require_positive(n, "k_of");
    return {BigInt(1), BigInt(2) * n + 1};
}

ExactRational tail_of(std::uint64_t n)
{
    require_positive(n, "tail_of");
    BigInt nn = n;
    return {BigInt(1), BigInt(4 * nn * (nn + 1))};
}

Interval log_factorial(std::uint64_t n, Precision p)
{
    Precision acc = accumulation_precision(p);
    if (n <= kExactFactorialThreshold)
        return round_outward(ln_of_integer(factorial(n).big(), acc), p);

    Interval sum = ln_of_integer(factorial(kExactFactorialThreshold).big(), acc);
    const std::uint64_t boundary = block_boundary(n);
    for (std::uint64_t lo = kExactFactorialThreshold; lo < boundary;
         lo += kLogFactorialBlock)
    {
        sum = add(sum,
                  ln_of_integer(range_product(lo + 1, lo + kLogFactorialBlock), acc),
                  acc);
    }
    return combine(sum, range_product(boundary + 1, n), acc, p);
}

Precision log_factorial_precision(Precision p)
{
    return Precision(p.bits() + 64);
}

Interval b_from_log_factorial(std::uint64_t n, const Interval& log_fact, Precision p)
{
    require_positive(n, "b_of");
    Precision w = log_factorial_precision(p);
    BigInt nn = n;
    // b_n = ln n! - (n + 1/2) ln n + n
    Interval ln_n = ln(from_integer(nn, w), w);
    Interval weight = from_rational(ExactRational(BigInt(2 * nn + 1), BigInt(2)), w);
    Interval b = sub(log_fact, mul(weight, ln_n, w), w);
    b = add(b, from_integer(nn, w), w);
    return round_outward(b, p);
}

Interval b_of(std::uint64_t n, Precision p)
{
    require_positive(n, "b_of");
    return b_from_log_factorial(n, log_factorial(n, log_factorial_precision(p)), p);
}

Precision a_inner_precision(Precision p)
{
    return p.guarded(8);
}

Interval a_from_b(const Interval& b, Precision p)
{
    return exp(b, p);
}

Interval a_of(std::uint64_t n, Precision p)
{
    require_positive(n, "a_of");
    return a_from_b(b_of(n, a_inner_precision(p)), p);
}

Interval ratio_of(std::uint64_t n, Precision p)
{
    require_positive(n, "ratio_of");
    Precision w = p.guarded();
    BigInt nn = n;
    Interval base = from_rational(ExactRational(BigInt(nn + 1), nn), w);
    Interval power = pow_rational(base, ExactRational(BigInt(2 * nn + 1), BigInt(2)), w);
    return round_outward(div(power, constant_e(w), w), p);
}

Interval b_diff_series(std::uint64_t n, Precision p)
{
    require_positive(n, "b_diff_series");
    Precision w = p.guarded();
    const BigInt q = (BigInt(2) * n + 1) * (BigInt(2) * n + 1); // 1/k^2
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(w.bits() + 4));
    const BigInt threshold = scale * q; // remainder < k^2 2^-(bits+4)

    Interval sum(Dyadic{});
    BigInt q_pow = 1; // q^i
    for (std::uint64_t i = 1;; ++i)
    {
        q_pow *= q;
        sum = add(sum,
                  from_rational(ExactRational(BigInt(1), BigInt(q_pow * (2 * i + 1))), w),
                  w);
        // sum_{j>i} k^(2j) = k^(2i+2)/(1-k^2) = 1/(q^i (q-1))
        BigInt tail_den = q_pow * (q - 1);
        if (threshold < tail_den)
        {
            Interval tail = from_rational(ExactRational(BigInt(1), tail_den), w);
            return round_outward({sum.lo(), sum.hi() + tail.hi()}, p);
        }
    }
}

Interval lower_bound_const(Precision p)
{
    return exp(Interval(Dyadic(BigInt(3), -2)), p);
}

StirlingRow row_of(std::uint64_t n, Precision p)
{
    require_positive(n, "row_of");
    StirlingRow row;
    row.n = n;
    row.k = k_of(n);
    row.b = b_of(n, p);
    row.a = a_of(n, p);
    row.b_diff = b_diff_series(n, p);
    row.tail = tail_of(n);
    return row;
}

//---------------------------------------------------------------------------//
LogFactorialSweep::LogFactorialSweep(std::uint64_t start, Precision p)
    : prec_(p), acc_prec_(accumulation_precision(p)), n_(start)
{
    if (n_ <= kExactFactorialThreshold)
    {
        factorial_ = factorial(n_).big();
    }
    else
    {
        boundary_ = block_boundary(n_);
        Interval sum = ln_of_integer(factorial(kExactFactorialThreshold).big(), acc_prec_);
        for (std::uint64_t lo = kExactFactorialThreshold; lo < boundary_;
             lo += kLogFactorialBlock)
        {
            sum = add(sum,
                      ln_of_integer(range_product(lo + 1, lo + kLogFactorialBlock),
                                    acc_prec_),
                      acc_prec_);
        }
        block_sum_ = sum;
        partial_ = range_product(boundary_ + 1, n_);
    }
    refresh();
}

void LogFactorialSweep::advance()
{
    ++n_;
    if (n_ <= kExactFactorialThreshold)
    {
        factorial_ *= static_cast<unsigned long>(n_);
    }
    else if (!block_sum_)
    {
        // Crossing the threshold: n_ - 1 == threshold.
        block_sum_ = ln_of_integer(factorial_, acc_prec_);
        boundary_ = kExactFactorialThreshold;
        partial_ = n_;
        factorial_ = 0;
    }
    else
    {
        partial_ *= static_cast<unsigned long>(n_);
        if (n_ - boundary_ == kLogFactorialBlock)
        {
            block_sum_ = add(*block_sum_, ln_of_integer(partial_, acc_prec_), acc_prec_);
            boundary_ = n_;
            partial_ = 1;
        }
    }
    refresh();
}

void LogFactorialSweep::refresh()
{
    if (n_ <= kExactFactorialThreshold)
        value_ = round_outward(ln_of_integer(factorial_, acc_prec_), prec_);
    else
        value_ = combine(*block_sum_, partial_, acc_prec_, prec_);
}

//---------------------------------------------------------------------------//
BSweep::BSweep(std::uint64_t start, Precision p)
    : prec_(p), sweep_(start, log_factorial_precision(p))
{
    require_positive(start, "BSweep");
}

Interval BSweep::value() const
{
    return b_from_log_factorial(sweep_.n(), sweep_.value(), prec_);
}

ASweep::ASweep(std::uint64_t start, Precision p)
    : prec_(p), b_(start, a_inner_precision(p))
{
}

Interval ASweep::value() const
{
    return a_from_b(b_.value(), prec_);
}

} // namespace stirling
