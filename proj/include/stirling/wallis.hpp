// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "stirling/enclosure.hpp"

namespace stirling
{

struct WallisRow
{
    std::uint64_t n = 0;
    ExactRational partial;  //!< W_n = (2n)!!^2 / ((2n-1)!!^2 (2n+1))
    Interval lemma;         //!< L_n = 4^n n!^2 / (sqrt(n) (2n)!)
    Interval rescaled;      //!< 4^n n!^2 / ((2n)! sqrt(2n+1))
};

/// Partial Wallis product from double factorials.
ExactRational wallis_partial(std::uint64_t n);
/// 2^(4n) n!^4 / ((2n)!^2 (2n+1)); equal to wallis_partial(n).
ExactRational lemma_ratio_squared(std::uint64_t n);
/// 4^n n!^2 / (2n)! = 4^n / C(2n, n), exact.
ExactRational central_ratio(std::uint64_t n);

Interval lemma_L(std::uint64_t n, Precision p);
Interval lemma_rescaled(std::uint64_t n, Precision p);
WallisRow wallis_row(std::uint64_t n, Precision p);

/// Enclosures of L_n and the rescaled form from a known central_ratio(n).
Interval lemma_L_from_ratio(std::uint64_t n, const ExactRational& ratio, Precision p);
Interval lemma_rescaled_from_ratio(std::uint64_t n, const ExactRational& ratio, Precision p);

/*!
 * Running W_n and 4^n n!^2/(2n)! over consecutive n, one exact
 * multiplication per step: W_{n+1} = W_n (2n+2)^2/((2n+1)(2n+3)).
 */
class WallisSweep
{
  public:
    explicit WallisSweep(std::uint64_t start);

    std::uint64_t n() const noexcept { return n_; }
    const ExactRational& partial() const noexcept { return partial_; }
    const ExactRational& ratio() const noexcept { return ratio_; }
    void advance();

  private:
    std::uint64_t n_;
    ExactRational partial_;
    ExactRational ratio_;
};

} // namespace stirling
