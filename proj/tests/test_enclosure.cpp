// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include "oracle.hpp"

using namespace stirling;
using namespace stirling::test;

namespace
{
Interval point(std::int64_t v)
{
    return Interval(Dyadic(v));
}

ExactRational pow2(int e)
{
    BigInt one = 1;
    return e >= 0 ? ExactRational(BigInt(one << static_cast<mp_bitcnt_t>(e)))
                  : ExactRational(BigInt(1), BigInt(one << static_cast<mp_bitcnt_t>(-e)));
}

bool width_at_most(const Interval& x, int e)
{
    return !(pow2(e) < x.width().to_rational());
}

Ref ref_ln2()
{
    return ref_log(ref_rational(2));
}
} // namespace

TEST_CASE("precision and dyadic basics")
{
    CHECK_THROWS_AS(Precision(7), DomainError);
    CHECK(Precision(8).bits() == 8);
    Dyadic d(BigInt(12), 3);
    CHECK(d.mantissa() == 3);
    CHECK(d.exponent() == 5);
    CHECK(Dyadic(0).exponent() == 0);
    CHECK(Dyadic(BigInt(0), 17).exponent() == 0);
    CHECK(Dyadic(BigInt(3), -1) < Dyadic(2));
    CHECK(Dyadic(BigInt(5), -2).to_rational() == ExactRational(5, 4));
    CHECK(Dyadic(BigInt(-5), -1).floor() == -3);
    CHECK(Dyadic(BigInt(-5), -1).ceil() == -2);
    CHECK_THROWS_AS(Interval(Dyadic(2), Dyadic(1)), DomainError);
}

TEST_CASE("from_rational")
{
    Interval half = from_rational({1, 2}, Precision(8));
    CHECK(half.is_point());
    CHECK(half.lo() == Dyadic(BigInt(1), -1));

    Interval third = from_rational({1, 3}, Precision(16));
    CHECK(third.contains(ExactRational(1, 3)));
    CHECK(width_at_most(third, -16));

    Interval tt = from_rational({22, 7}, Precision(53));
    CHECK(tt.contains(ExactRational(22, 7)));
    CHECK(width_at_most(tt, -51));
    CHECK(tt.lo().to_decimal(14, Rounding::down).rfind("3.142857142857", 0) == 0);
}

TEST_CASE("arithmetic examples")
{
    Precision p(53);
    CHECK(add(point(1), point(2), p).contains(ExactRational(3)));
    Interval zero = mul(point(2), point(0), p);
    CHECK(zero.lo() == Dyadic(0));
    CHECK(zero.hi() == Dyadic(0));
    Interval q = div(Interval(Dyadic(1), Dyadic(2)), Interval(Dyadic(2), Dyadic(4)), p);
    CHECK(q.contains(Interval(Dyadic(BigInt(1), -2), Dyadic(1))));
    CHECK_THROWS_AS(div(point(1), Interval(Dyadic(-1), Dyadic(1)), p), DomainError);
    CHECK(sub(point(1), point(3), p).contains(ExactRational(-2)));
    CHECK(neg(Interval(Dyadic(1), Dyadic(2))) == Interval(Dyadic(-2), Dyadic(-1)));
}

TEST_CASE("sqrt examples")
{
    for (int bits : {8, 53, 128})
    {
        Precision p(bits);
        Interval four = sqrt(point(4), p);
        CHECK(four.contains(Dyadic(2)));
        CHECK(width_at_most(four, -bits + 2));
        CHECK(sqrt(point(0), p) == point(0));
        Interval two = sqrt(point(2), p);
        CHECK(encloses(two, ref_sqrt(ref_rational(2))));
    }
    CHECK_THROWS_AS(sqrt(Interval(Dyadic(-1), Dyadic(1)), Precision(53)), DomainError);
    CHECK(sqrt(point(2), Precision(53)).lo().to_decimal(9, Rounding::down) == "1.41421356");
}

TEST_CASE("atanh_halflog examples")
{
    Precision p(64);
    Interval third = atanh_halflog({1, 3}, p);
    Ref half_ln2 = ref_ln2();
    mpfr_div_2ui(half_ln2.lo.get(), half_ln2.lo.get(), 1, MPFR_RNDD);
    mpfr_div_2ui(half_ln2.hi.get(), half_ln2.hi.get(), 1, MPFR_RNDU);
    CHECK(encloses(third, half_ln2));

    ExactRational k(1, 1000001);
    Interval small = atanh_halflog(k, p);
    Interval window(from_rational(k, Precision(200)).lo(),
                    from_rational(k / (ExactRational(1) - k * k), Precision(200)).hi());
    CHECK(small.intersects(window));
    CHECK(compare(small.hi(), k) > 0);

    Interval fifth = atanh_halflog({1, 5}, p);
    Ref r = ref_atanh(ref_rational({1, 5}));
    CHECK(encloses(fifth, r));
    CHECK(fifth.lo().to_decimal(8, Rounding::down) == "0.20273255");

    // Near 1 the ratio route must still enclose.
    ExactRational near_one(999999, 1000000);
    CHECK(encloses(atanh_halflog(near_one, p), ref_atanh(ref_rational(near_one))));

    CHECK_THROWS_AS(atanh_halflog(0, p), DomainError);
    CHECK_THROWS_AS(atanh_halflog(1, p), DomainError);
    CHECK_THROWS_AS(atanh_halflog({-1, 2}, p), DomainError);
}

TEST_CASE("ln examples")
{
    for (int bits : {16, 53, 200})
    {
        Precision p(bits);
        Interval l1 = ln(point(1), p);
        CHECK(l1.contains(Dyadic(0)));
        CHECK(width_at_most(l1, -bits));
        CHECK(encloses(ln(point(2), p), ref_ln2()));
        CHECK(ln(constant_e(p.guarded()), p).contains(Dyadic(1)));
    }
    // Doubled half-log at 1/3 and ln 2 are the same number.
    Precision p(100);
    Interval twice = scale2(atanh_halflog({1, 3}, p), 1);
    CHECK(twice.intersects(ln(point(2), p)));
    CHECK_THROWS_AS(ln(Interval(Dyadic(0), Dyadic(1)), p), DomainError);
}

TEST_CASE("exp examples")
{
    for (int bits : {16, 53, 200})
    {
        Precision p(bits);
        Interval e0 = exp(point(0), p);
        CHECK(e0.contains(Dyadic(1)));
        CHECK(width_at_most(e0, -bits));
        CHECK(encloses(exp(point(1), p), ref_e()));
        Interval e34 = exp(from_rational({3, 4}, p), p);
        CHECK(encloses(e34, ref_exp(ref_rational({3, 4}))));
    }
    CHECK(exp(point(1), Precision(53)).lo().to_decimal(12, Rounding::down) == "2.71828182845");
    CHECK(exp(from_rational({3, 4}, Precision(53)), Precision(53)).lo().to_decimal(9, Rounding::down)
          == "2.11700001");
    // Round trip: exp(ln x) contains x.
    Sampler s(11);
    for (int i = 0; i < 200; ++i)
    {
        ExactRational x = s.rational(false);
        Precision p(static_cast<int>(s.integer(16, 128)));
        REQUIRE(exp(ln(from_rational(x, p), p), p).contains(x));
    }
    CHECK(exp(point(-40), Precision(53)).lo().sign() > 0);
}

TEST_CASE("pow_rational examples")
{
    Precision p(53);
    CHECK(pow_rational(point(2), 1, p).contains(Dyadic(2)));
    CHECK(pow_rational(point(4), {1, 2}, p).contains(Dyadic(2)));
    Interval r = pow_rational(point(2), {3, 2}, p);
    Ref two = ref_rational(2);
    CHECK(encloses(r, ref_mul_pos(two, ref_sqrt(two))));
    CHECK(r.lo().to_decimal(9, Rounding::down) == "2.82842712");
    CHECK_THROWS_AS(pow_rational(Interval(Dyadic(0), Dyadic(1)), 2, p), DomainError);
}

TEST_CASE("constants")
{
    for (int bits : {8, 16, 32, 53, 64, 128, 256})
    {
        Precision p(bits);
        Interval e = constant_e(p);
        Interval pi = constant_pi(p);
        CHECK(encloses(e, ref_e()));
        CHECK(encloses(pi, ref_pi()));
        CHECK(encloses(constant_ln2(p), ref_ln2()));
        CHECK(width_at_most(e, -bits + 2));
        CHECK(width_at_most(pi, -bits + 2));
    }
    CHECK(width_at_most(constant_e(Precision(8)), -6));
    CHECK(width_at_most(constant_pi(Precision(8)), -6));
    CHECK(constant_e(Precision(16)).contains(constant_e(Precision(64))));
    CHECK(constant_pi(Precision(32)).contains(constant_pi(Precision(128))));
    CHECK(constant_e(Precision(53)).lo().to_decimal(16, Rounding::down) == "2.718281828459045");
    CHECK(constant_pi(Precision(53)).lo().to_decimal(16, Rounding::down) == "3.141592653589793");
}

TEST_CASE("certainly_lt")
{
    auto iv = [](int a, int b) { return Interval(Dyadic(a), Dyadic(b)); };
    CHECK(certainly_lt(iv(1, 2), iv(3, 4)) == TriState::certainly_true);
    CHECK(certainly_lt(iv(1, 3), iv(2, 4)) == TriState::undecided);
    CHECK(certainly_lt(iv(3, 4), iv(1, 2)) == TriState::certainly_false);
    CHECK(certainly_lt(iv(1, 2), iv(2, 3)) == TriState::undecided);
    CHECK(certainly_lt(iv(2, 3), iv(1, 2)) == TriState::certainly_false);

    // Decisions persist as precision grows.
    for (int n = 1; n < 60; ++n)
    {
        ExactRational a(n, n + 1);
        ExactRational b(n + 1, n + 2);
        TriState first = TriState::undecided;
        for (int bits = 8; bits <= 128; bits *= 2)
        {
            TriState t = certainly_lt(from_rational(a, Precision(bits)), from_rational(b, Precision(bits)));
            if (first != TriState::undecided)
                REQUIRE(t == first);
            else
                first = t;
        }
        CHECK(first == TriState::certainly_true);
    }
}

TEST_CASE("decimal rendering respects the rounding direction")
{
    Sampler s(5);
    for (int i = 0; i < 2000; ++i)
    {
        Interval x = s.interval();
        int digits = static_cast<int>(s.integer(1, 40));
        ExactRational lo = parse_decimal(x.lo().to_decimal(digits, Rounding::down));
        ExactRational hi = parse_decimal(x.hi().to_decimal(digits, Rounding::up));
        REQUIRE(compare(x.lo(), lo) >= 0);
        REQUIRE(compare(x.hi(), hi) <= 0);
    }
    CHECK(Dyadic(BigInt(1), -1).to_decimal(5, Rounding::down) == "0.5");
    CHECK(Dyadic(120).to_decimal(5, Rounding::up) == "120");
}
