// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include "stirling/sequences.hpp"
#include "stirling/stirling.hpp"
#include "stirling/wallis.hpp"

using namespace stirling;

namespace
{
const Precision p53(53);

ExactRational square(const ExactRational& q)
{
    return q * q;
}
} // namespace

TEST_CASE("wallis_partial examples")
{
    CHECK(wallis_partial(1) == ExactRational(4, 3));
    CHECK(wallis_partial(2) == ExactRational(64, 45));
    CHECK(wallis_partial(3) == ExactRational(256, 175));
    CHECK_THROWS_AS(wallis_partial(0), DomainError);
}

TEST_CASE("lemma_ratio_squared")
{
    CHECK(lemma_ratio_squared(1) == ExactRational(4, 3));
    CHECK(lemma_ratio_squared(2) == ExactRational(64, 45));
    CHECK(lemma_ratio_squared(50) == wallis_partial(50));
    for (std::uint64_t n = 1; n <= 2000; ++n)
        REQUIRE(lemma_ratio_squared(n) == wallis_partial(n));
    CHECK_THROWS_AS(lemma_ratio_squared(0), DomainError);
}

TEST_CASE("central ratio identity and sweep")
{
    CHECK(central_ratio(0) == ExactRational(1));
    CHECK(central_ratio(1) == ExactRational(2));
    CHECK(central_ratio(2) == ExactRational(8, 3));
    WallisSweep sweep(1);
    for (std::uint64_t n = 1; n <= 1500; ++n)
    {
        ExactRational w = wallis_partial(n);
        REQUIRE(w * ExactRational(BigInt(2 * n + 1)) == square(central_ratio(n)));
        REQUIRE(sweep.n() == n);
        REQUIRE(sweep.partial() == w);
        REQUIRE(sweep.ratio() == central_ratio(n));
        ExactRational next = wallis_partial(n + 1);
        REQUIRE(w < next);
        sweep.advance();
    }
    WallisSweep late(777);
    CHECK(late.partial() == wallis_partial(777));
}

TEST_CASE("lemma_L examples")
{
    CHECK(lemma_L(1, p53).contains(Dyadic(2)));
    // 4 sqrt 2 / 3: square is 32/9
    Interval l2 = lemma_L(2, p53);
    CHECK(mul(l2, l2, Precision(60)).contains(ExactRational(32, 9)));
    CHECK(l2.lo().to_decimal(6, Rounding::down) == "1.88561");

    Interval l = lemma_L(10000, Precision(64));
    Interval sp = sqrt_pi(Precision(64));
    CHECK(certainly_lt(sp, l) == TriState::certainly_true);
    Interval band = add(sp, from_rational({4, 100000}, Precision(64)), Precision(64));
    CHECK(certainly_lt(l, band) == TriState::certainly_true);
    CHECK_THROWS_AS(lemma_L(0, p53), DomainError);
}

TEST_CASE("lemma_rescaled examples")
{
    Interval r1 = lemma_rescaled(1, p53);
    CHECK(mul(r1, r1, Precision(60)).contains(ExactRational(4, 3)));
    Interval r2 = lemma_rescaled(2, p53);
    // (64/24)^2 / 5 = 64/45
    CHECK(mul(r2, r2, Precision(60)).contains(ExactRational(64, 45)));
    CHECK(r2.lo().to_decimal(6, Rounding::down) == "1.19256");

    Interval r = lemma_rescaled(10000, Precision(64));
    Interval target = sqrt(half_pi(Precision(64)), Precision(64));
    Interval diff = sub(target, r, Precision(64));
    CHECK(diff.lo().sign() > 0);
    CHECK(compare(diff.hi(), ExactRational(1, 10000)) < 0);

    for (std::uint64_t n = 1; n <= 200; ++n)
    {
        Precision p(80);
        Interval scale = sqrt(from_rational(ExactRational(BigInt(2 * n + 1), BigInt(n)), p), p);
        REQUIRE(mul(lemma_rescaled(n, p), scale, p).intersects(lemma_L(n, p)));
    }
    CHECK_THROWS_AS(lemma_rescaled(0, p53), DomainError);
}

TEST_CASE("monotonicity and ordering")
{
    Interval hp = half_pi(Precision(128));
    for (std::uint64_t n = 1; n <= 1000; ++n)
    {
        // (L_n / L_{n+1})^2 = (2n+1)^2 / (4n(n+1))
        ExactRational r = square(central_ratio(n)) / ExactRational(BigInt(n));
        ExactRational r1 = square(central_ratio(n + 1)) / ExactRational(BigInt(n + 1));
        REQUIRE(r / r1 == ExactRational(BigInt((2 * n + 1) * (2 * n + 1)), BigInt(4 * n * (n + 1))));
        REQUIRE(r1 < r);
        REQUIRE(certainly_lt(lemma_L(n + 1, p53), lemma_L(n, p53)) == TriState::certainly_true);
        REQUIRE(certainly_lt(from_rational(wallis_partial(n), Precision(128)), hp) == TriState::certainly_true);
    }
}

TEST_CASE("L_n against a_n^2 / (a_2n sqrt 2)")
{
    Precision p(80);
    Interval root2 = sqrt(Interval(Dyadic(2)), p);
    for (std::uint64_t n = 1; n <= 500; ++n)
    {
        Interval an = a_of(n, p);
        Interval v = div(mul(an, an, p), mul(a_of(2 * n, p), root2, p), p);
        REQUIRE(v.intersects(lemma_L(n, p)));
    }
}

TEST_CASE("wallis_row")
{
    WallisRow row = wallis_row(3, p53);
    CHECK(row.n == 3);
    CHECK(row.partial == ExactRational(256, 175));
    CHECK(row.lemma == lemma_L(3, p53));
    CHECK(row.rescaled == lemma_rescaled(3, p53));
}
