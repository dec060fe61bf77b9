#include "doctest.h"

#include "kstab/polynomial.hpp"
#include "kstab/verify.hpp"

using kstab::Polynomial;
using kstab::Rational;

namespace {

Polynomial random_poly(kstab::SplitMix64& rng, int max_degree) {
    std::vector<Rational> cs(static_cast<std::size_t>(rng.range(0, max_degree)) + 1);
    for (auto& c : cs) c = Rational(rng.range(-9, 9), rng.range(1, 5));
    return Polynomial(std::move(cs));
}

} // namespace

TEST_CASE("normalization strips trailing zeros, zero polynomial has no degree") {
    const Polynomial p{Rational(1), Rational(0), Rational(0)};
    CHECK(p.degree() == 0);
    CHECK(Polynomial{}.degree() == std::nullopt);
    CHECK(Polynomial{Rational(0), Rational(0)}.is_zero());
    CHECK((Polynomial{Rational(1), Rational(2)} - Polynomial{Rational(1), Rational(2)}).is_zero());
}

TEST_CASE("evaluation is exact") {
    // k^2 + 2k at 7/2: 49/4 + 7 = 77/4
    const Polynomial p{Rational(0), Rational(2), Rational(1)};
    CHECK(p.evaluate(Rational(7, 2)) == Rational(77, 4));
    CHECK(p.evaluate(Rational(0)) == Rational(0));
    CHECK(Polynomial{}.evaluate(Rational(5)) == Rational(0));
}

TEST_CASE("arithmetic identities on random polynomials") {
    kstab::SplitMix64 rng(31337);
    for (int t = 0; t < 50; ++t) {
        const Polynomial a = random_poly(rng, 5);
        const Polynomial b = random_poly(rng, 5);
        const Polynomial c = random_poly(rng, 4);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        const Rational x(rng.range(-6, 6), rng.range(1, 4));
        CHECK((a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x));
        CHECK((a + b).evaluate(x) == a.evaluate(x) + b.evaluate(x));
    }
}

TEST_CASE("euclidean division reconstructs the dividend") {
    kstab::SplitMix64 rng(99);
    for (int t = 0; t < 50; ++t) {
        const Polynomial a = random_poly(rng, 6);
        Polynomial b = random_poly(rng, 3);
        if (b.is_zero()) b = Polynomial{Rational(1), Rational(1)};
        const auto [q, r] = Polynomial::divmod(a, b);
        CHECK(q * b + r == a);
        if (!r.is_zero()) CHECK(*r.degree() < *b.degree());
    }
    CHECK_THROWS_AS(Polynomial::divmod(Polynomial{Rational(1)}, Polynomial{}),
                    kstab::division_by_zero);
}

TEST_CASE("derivative follows the product rule") {
    kstab::SplitMix64 rng(401);
    for (int t = 0; t < 30; ++t) {
        const Polynomial a = random_poly(rng, 4);
        const Polynomial b = random_poly(rng, 4);
        CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
    }
    CHECK(Polynomial{Rational(5)}.derivative().is_zero());
}

TEST_CASE("string rendering") {
    CHECK(Polynomial{Rational(-1), Rational(0), Rational(4)}.str("k") == "4*k^2 - 1");
    CHECK(Polynomial{Rational(22), Rational(10), Rational(6)}.str("c") ==
          "6*c^2 + 10*c + 22");
    CHECK(Polynomial{Rational(0), Rational(1)}.str("m") == "m");
    CHECK(Polynomial{Rational(0), Rational(-1, 2)}.str("m") == "-1/2*m");
    CHECK(Polynomial{}.str() == "0");
    CHECK(Polynomial{Rational(-12), Rational(-48), Rational(-52), Rational(-16), Rational(1)}
              .str("m") == "m^4 - 16*m^3 - 52*m^2 - 48*m - 12");
}
