#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "locc/rational.hpp"

using locc::Rational;

namespace {

// Small deterministic LCG so property tests are reproducible.
struct Lcg {
    unsigned long long s = 0x243f6a8885a308d3ull;
    unsigned long long next() {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        return s >> 33;
    }
    long long range(long long lo, long long hi) {  // inclusive
        return lo + static_cast<long long>(next() % static_cast<unsigned long long>(hi - lo + 1));
    }
    Rational rational() {
        long long num = range(-20, 20);
        long long den = range(1, 12);
        return Rational(num, den);
    }
};

}  // namespace

TEST_CASE("construction normalizes sign and gcd") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, -7) == Rational(0));
    CHECK(Rational(6, 3).is_integer());
    CHECK(Rational(6, 3).num() == 2);
    CHECK(Rational(5, 10).den() == 2);
}

TEST_CASE("arithmetic basics") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK(-Rational(3, 7) == Rational(-3, 7));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("string round trip") {
    CHECK(Rational(1, 2).str() == "1/2");
    CHECK(Rational(-3).str() == "-3");
    CHECK(Rational::from_string("7/3") == Rational(7, 3));
    CHECK(Rational::from_string("-4") == Rational(-4));
    CHECK(Rational::from_string("-6/4") == Rational(-3, 2));
    CHECK_THROWS(Rational::from_string("x"));
}

TEST_CASE("128-bit overflow is detected, never wrapped") {
    locc::int128 big = 1;
    for (int i = 0; i < 126; ++i) big = locc::checked_mul(big, 2);
    CHECK_THROWS_AS(locc::checked_mul(big, 4), locc::arithmetic_overflow);
    CHECK_THROWS_AS(locc::checked_add(big, big), locc::arithmetic_overflow);
    CHECK(locc::int128_to_string(locc::int128_from_string("-170141183460469231731687303715884105727")) ==
          "-170141183460469231731687303715884105727");
}

TEST_CASE("field laws on random values") {
    Lcg rng;
    for (int i = 0; i < 500; ++i) {
        Rational a = rng.rational(), b = rng.rational(), c = rng.rational();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!c.is_zero()) CHECK((a / c) * c == a);
        CHECK(a - a == Rational(0));
        // gcd-reduced invariant
        Rational s = a * b + c;
        CHECK(locc::gcd128(s.num() < 0 ? -s.num() : s.num(), s.den()) == 1);
        CHECK(s.den() > 0);
    }
}
