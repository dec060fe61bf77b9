#include "doctest.h"

#include <stdexcept>

#include "kstab/rational.hpp"
#include "kstab/verify.hpp"

using kstab::Rational;

TEST_CASE("rationals are stored in lowest terms with positive denominator") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(2, 4).num() == 1);
    CHECK(Rational(2, 4).den() == 2);
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(3, -6).den() == 2);
    CHECK(Rational(-4, -8) == Rational(1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0).den() == 1);
}

TEST_CASE("arithmetic is exact") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
    CHECK(Rational(7, 2).pow(3) == Rational(343, 8));
    CHECK(Rational(-2, 5).inverse() == Rational(-5, 2));
    CHECK((-Rational(3, 4)).sign() == -1);
    CHECK(Rational(3, 4).abs() == Rational(3, 4));
    CHECK(Rational(-3, 4).abs() == Rational(3, 4));
}

TEST_CASE("division by zero throws") {
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), kstab::division_by_zero);
    CHECK_THROWS_AS(Rational(0).inverse(), kstab::division_by_zero);
    CHECK_THROWS_AS(Rational(1, 0), kstab::division_by_zero);
}

TEST_CASE("comparison is a total order") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(7, 2) > Rational(3));
    CHECK(Rational(4, 2) <= Rational(2));
    CHECK(Rational(4, 2) >= Rational(2));
    CHECK(Rational(1, 3) != Rational(2, 3));
}

TEST_CASE("field axioms hold on random values") {
    kstab::SplitMix64 rng(20240811);
    for (int t = 0; t < 200; ++t) {
        const auto draw = [&rng]() {
            return Rational(rng.range(-40, 40), rng.range(1, 24));
        };
        const Rational a = draw(), b = draw(), c = draw();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a + (-a) == Rational(0));
        if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
    }
}

TEST_CASE("parse accepts exact integers and fractions only") {
    CHECK(Rational::parse("7/2") == Rational(7, 2));
    CHECK(Rational::parse("-3") == Rational(-3));
    CHECK(Rational::parse("+5") == Rational(5));
    CHECK(Rational::parse("-50127/15392") == Rational(-50127, 15392));
    CHECK(Rational::parse("004") == Rational(4));
    CHECK(Rational::parse("6/4") == Rational(3, 2));

    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("3/"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("/2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(" 1"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1 "), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("3/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("--2"), std::invalid_argument);
}

TEST_CASE("str round-trips through parse") {
    kstab::SplitMix64 rng(77);
    for (int t = 0; t < 100; ++t) {
        const Rational r(rng.range(-5000, 5000), rng.range(1, 997));
        CHECK(Rational::parse(r.str()) == r);
    }
    CHECK(Rational(7, 2).str() == "7/2");
    CHECK(Rational(-3).str() == "-3");
    CHECK(Rational(6, 4).str() == "3/2");
}

TEST_CASE("decimal renders 12 significant digits, half away from zero") {
    // reference digits computed independently with exact decimal division
    CHECK(Rational(19, 11).decimal() == "1.72727272727");
    CHECK(Rational(-50127, 15392).decimal() == "-3.25669178794");
    CHECK(Rational(1, 7).decimal() == "0.142857142857");
    CHECK(Rational(1, 2).decimal() == "0.500000000000");
    CHECK(Rational(0).decimal() == "0");
    CHECK(Rational(-4).decimal() == "-4.00000000000");
    CHECK(Rational(1, 10000).decimal() == "0.000100000000000");
    CHECK(Rational(1, 100000).decimal() == "1.00000000000e-5");
    CHECK(Rational(10).pow(20).decimal() == "1.00000000000e+20");
    // rounding direction
    CHECK(Rational(2, 3).decimal(3) == "0.667");
    CHECK(Rational(-2, 3).decimal(3) == "-0.667");
    CHECK(Rational(1, 3).decimal(3) == "0.333");
    CHECK(Rational(1, 2).decimal(1) == "0.5");
    CHECK(Rational(999999999999L, 1000000000000L).decimal(3) == "1.00");
}
