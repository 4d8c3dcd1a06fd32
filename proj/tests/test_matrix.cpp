#include "kintraj/poly_matrix.hpp"

#include "kintraj/baselines.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace kintraj;
using kintraj::testing::poly;

namespace {

PolyMatrix random_matrix(std::mt19937& rng, std::size_t n) {
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.set(i, j, testing::random_poly(rng, 2));
    return m;
}

}  // namespace

TEST_CASE("symbolic 2x2 determinant") {
    // [[a, b], [c, d]] with distinct markers -> ad - bc
    PolyMatrix m(2, 2);
    const PuiseuxPoly a = poly({{1, 1, 1, 1, 0}});   // r
    const PuiseuxPoly b = poly({{1, 1, 0, 1, 1}});   // sigma
    const PuiseuxPoly c = poly({{1, 1, 2, 1, 0}});   // r^2
    const PuiseuxPoly d = poly({{1, 1, 0, 1, 2}});   // sigma^2
    m.set(0, 0, a);
    m.set(0, 1, b);
    m.set(1, 0, c);
    m.set(1, 1, d);
    CHECK(m.determinant() == a * d - b * c);
}

TEST_CASE("determinant of the single-step matrix is the expected monomial") {
    const BaselinePair base = baseline_pair_k1();
    CHECK(base.a.determinant() ==
          PuiseuxPoly::monomial(1, Rational(BigInt(9), BigInt(2)), 0));
}

TEST_CASE("adjugate column against the closed-form inverse tail") {
    const BaselinePair base = baseline_pair_k1();
    const PuiseuxPoly det = base.a.determinant();
    const auto det_term = *det.single_term();
    const PuiseuxPoly inv_det =
        PuiseuxPoly::monomial(det_term.second.reciprocal(), -det_term.first.r_exp, 0);
    const auto adj = base.a.adjugate_column(1);
    const auto want = baseline_inverse_tail_k1();
    REQUIRE(adj.size() == 2);
    CHECK(adj[0] * inv_det == want[0]);
    CHECK(adj[1] * inv_det == want[1]);
}

TEST_CASE("determinant is multiplicative on random matrices") {
    std::mt19937 rng(23);
    for (int it = 0; it < 15; ++it) {
        const PolyMatrix m = random_matrix(rng, 3);
        const PolyMatrix n = random_matrix(rng, 3);
        CHECK((m * n).determinant() == m.determinant() * n.determinant());
    }
}

TEST_CASE("matrix times adjugate columns reproduces det times identity") {
    std::mt19937 rng(29);
    int tested = 0;
    while (tested < 10) {
        const PolyMatrix m = random_matrix(rng, 3);
        const PuiseuxPoly det = m.determinant();
        if (det.is_zero()) continue;
        ++tested;
        for (std::size_t j = 0; j < 3; ++j) {
            const auto col = m.mul_vector(m.adjugate_column(j));
            for (std::size_t i = 0; i < 3; ++i) {
                if (i == j)
                    CHECK(col[i] == det);
                else
                    CHECK(col[i].is_zero());
            }
        }
    }
}

TEST_CASE("dimension errors") {
    PolyMatrix rect(2, 3);
    CHECK_THROWS_AS(rect.determinant(), std::invalid_argument);
    CHECK_THROWS_AS(rect.adjugate_column(0), std::invalid_argument);
    PolyMatrix a(2, 2), b(3, 3);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    PolyMatrix big(14, 14);
    CHECK_THROWS_AS(big.determinant(), std::invalid_argument);
}
