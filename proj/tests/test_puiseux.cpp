#include "kintraj/puiseux.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace kintraj;
using kintraj::testing::poly;

namespace {
const Rational kHalf(BigInt(1), BigInt(2));
const Rational kThreeHalves(BigInt(3), BigInt(2));
}  // namespace

TEST_CASE("ring operation examples") {
    const PuiseuxPoly r = PuiseuxPoly::variable_r();
    const PuiseuxPoly s = PuiseuxPoly::variable_sigma();

    // (r + s)(r - s) = r^2 - s^2
    CHECK((r + s) * (r - s) == poly({{1, 1, 2, 1, 0}, {-1, 1, 0, 1, 2}}));

    // (r^(3/2))^2 = r^3
    const PuiseuxPoly root32 = PuiseuxPoly::monomial(1, kThreeHalves, 0);
    CHECK(root32 * root32 == poly({{1, 1, 3, 1, 0}}));

    // additive inverse collapses to the empty term map
    const PuiseuxPoly f = poly({{7, 1, 3, 1, 0}, {-6, 1, 7, 2, 0}});
    const PuiseuxPoly g = poly({{6, 1, 7, 2, 0}, {-7, 1, 3, 1, 0}});
    CHECK((f + g).is_zero());
    CHECK((f + g).term_count() == 0);
}

TEST_CASE("weighted integration examples") {
    // r -> (2/3) r^3 sigma
    CHECK(PuiseuxPoly::variable_r().weighted_integrate() == poly({{2, 3, 3, 1, 1}}));
    // r^(3/2) -> (4/7) r^(7/2) sigma
    CHECK(PuiseuxPoly::monomial(1, kThreeHalves, 0).weighted_integrate() ==
          poly({{4, 7, 7, 2, 1}}));
    // 1 -> r^2 sigma
    CHECK(PuiseuxPoly::constant(1).weighted_integrate() == poly({{1, 1, 2, 1, 1}}));
    // exponents at or below -2 are not integrable at the origin
    CHECK_THROWS_AS(PuiseuxPoly::monomial(1, -2, 0).weighted_integrate(), std::domain_error);
    CHECK_THROWS_AS(PuiseuxPoly::monomial(1, -3, 0).weighted_integrate(), std::domain_error);
}

TEST_CASE("differentiation examples") {
    CHECK(poly({{1, 1, 3, 1, 0}}).differentiate_r() == poly({{3, 1, 2, 1, 0}}));
    // 7 r^(3/2) - 6 r -> (21/2) r^(1/2) - 6
    CHECK(poly({{7, 1, 3, 2, 0}, {-6, 1, 1, 1, 0}}).differentiate_r() ==
          poly({{21, 2, 1, 2, 0}, {-6, 1, 0, 1, 0}}));
    // sigma^2 is constant in r
    CHECK(poly({{1, 1, 0, 1, 2}}).differentiate_r().is_zero());
}

TEST_CASE("evaluation examples") {
    const PuiseuxPoly f = poly({{7, 1, 3, 1, 0}, {-6, 1, 7, 2, 0}});  // 7r^3 - 6r^(7/2)
    CHECK(f.eval(1.0, -1.0) == doctest::Approx(1.0).epsilon(1e-14));

    // exact mode: r = 1/4 with root denominator 2, so the root is 1/2
    const PuiseuxPoly root = poly({{1, 1, 1, 2, 0}});
    CHECK(root.eval_exact(kHalf, -1) == kHalf);

    // sigma r^2 at r = 1/2, sigma = -2 (integer exponents: root denominator 1)
    const PuiseuxPoly g = poly({{1, 1, 2, 1, 1}});
    CHECK(g.eval(0.5, -2.0) == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(g.root_denom() == 1);
    CHECK(g.eval_exact(kHalf, -2) == Rational(BigInt(-1), BigInt(2)));

    // pole at r = 0 for negative exponents
    const PuiseuxPoly pole = poly({{1, 1, -3, 2, 0}});
    CHECK_THROWS_AS(pole.eval(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(pole.substitute_r_root(0), std::domain_error);
}

TEST_CASE("leading r exponent") {
    // 24 (-3 r^(1/6) + r^(1/2) + 2) sigma^2 / r^(3/2), expanded
    const PuiseuxPoly shift = PuiseuxPoly::monomial(24, Rational(BigInt(-3), BigInt(2)), 2);
    const PuiseuxPoly inner =
        poly({{-3, 1, 1, 6, 0}, {1, 1, 1, 2, 0}, {2, 1, 0, 1, 0}});
    CHECK((shift * inner).leading_r_exponent() == Rational(BigInt(-3), BigInt(2)));

    CHECK(poly({{1, 1, 3, 1, 0}, {1, 1, 7, 2, 0}}).leading_r_exponent() == Rational(3));
    CHECK(PuiseuxPoly::constant(5).leading_r_exponent() == Rational(0));
    CHECK_THROWS_AS(PuiseuxPoly::zero().leading_r_exponent(), std::domain_error);
}

TEST_CASE("ring axioms on random sparse inputs") {
    std::mt19937 rng(11);
    for (int it = 0; it < 60; ++it) {
        const PuiseuxPoly a = testing::random_poly(rng);
        const PuiseuxPoly b = testing::random_poly(rng);
        const PuiseuxPoly c = testing::random_poly(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK(a * b == b * a);
    }
}

TEST_CASE("fundamental theorem: differentiate after weighted integration") {
    std::mt19937 rng(13);
    const PuiseuxPoly weight = PuiseuxPoly::monomial(2, 1, 1);  // 2 sigma r
    for (int it = 0; it < 60; ++it) {
        PuiseuxPoly f;
        // keep exponents integrable: q > -2
        std::uniform_int_distribution<long long> r_num(-3, 6);
        std::uniform_int_distribution<long long> r_den(1, 3);
        std::uniform_int_distribution<int> s_exp(-2, 2);
        for (int t = 0; t < 4; ++t) {
            Rational q(BigInt(r_num(rng)), BigInt(r_den(rng)));
            while (q <= Rational(-2)) q = Rational(BigInt(r_num(rng)), BigInt(r_den(rng)));
            f += PuiseuxPoly::monomial(testing::random_nonzero_rational(rng), q, s_exp(rng));
        }
        const PuiseuxPoly integral = f.weighted_integrate();
        CHECK(integral.differentiate_r() == weight * f);
        // the integral vanishes at the origin
        CHECK(integral.substitute_r_root(0).is_zero());
    }
}

TEST_CASE("compiled evaluation matches exact evaluation") {
    std::mt19937 rng(17);
    for (int it = 0; it < 40; ++it) {
        const PuiseuxPoly p = testing::random_poly(rng);
        const CompiledPoly c(p);
        std::uniform_real_distribution<double> rr(0.05, 1.0), ss(-3.0, -0.5);
        for (int pt = 0; pt < 5; ++pt) {
            const double r = rr(rng), sigma = ss(rng);
            const double want = p.eval(r, sigma);
            CHECK(c.eval(r, sigma) ==
                  doctest::Approx(want).epsilon(1e-12).scale(std::max(1.0, std::abs(want))));
        }
    }
}

TEST_CASE("substitution at exact roots tracks the root denominator") {
    // r^(1/3) - r at r = 8/27 (root 2/3, denominator 3)
    const PuiseuxPoly p = poly({{1, 1, 1, 3, 0}, {-1, 1, 1, 1, 0}});
    CHECK(p.root_denom() == 3);
    const Rational root(BigInt(2), BigInt(3));
    CHECK(p.eval_exact(root, 0) ==
          Rational(BigInt(2), BigInt(3)) - Rational(BigInt(8), BigInt(27)));
}
