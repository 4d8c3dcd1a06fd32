#include "kintraj/baselines.hpp"

namespace kintraj {

namespace {

struct Term {
    long long cn;       // coefficient numerator
    long long cd;       // coefficient denominator
    long long rn;       // r-exponent numerator
    long long rd;       // r-exponent denominator
    int s;              // sigma power
};

PuiseuxPoly poly(std::initializer_list<Term> terms) {
    PuiseuxPoly p;
    for (const Term& t : terms)
        p += PuiseuxPoly::monomial(Rational(BigInt(t.cn), BigInt(t.cd)),
                                   Rational(BigInt(t.rn), BigInt(t.rd)), t.s);
    return p;
}

}  // namespace

BaselinePair baseline_pair_k1() {
    PolyMatrix a(2, 2), b(2, 2);
    // a11 = 7 r^3 - 6 r^(7/2)
    a.set(0, 0, poly({{7, 1, 3, 1, 0}, {-6, 1, 7, 2, 0}}));
    // a12 = 4 (sqrt(r) - 1) r^3 sigma
    a.set(0, 1, poly({{4, 1, 7, 2, 1}, {-4, 1, 3, 1, 1}}));
    // a21 = (21 / (2 sigma)) (r - r^(3/2))
    a.set(1, 0, poly({{21, 2, 1, 1, -1}, {-21, 2, 3, 2, -1}}));
    // a22 = 7 r^(3/2) - 6 r
    a.set(1, 1, poly({{7, 1, 3, 2, 0}, {-6, 1, 1, 1, 0}}));
    // b11 = 1 + (6 sqrt(r) - 7) r^3
    b.set(0, 0, poly({{1, 1, 0, 1, 0}, {6, 1, 7, 2, 0}, {-7, 1, 3, 1, 0}}));
    // b12 = (sqrt(r) - 1)^2 (1 + 2 sqrt(r)) r^2 sigma = (r^2 - 3 r^3 + 2 r^(7/2)) sigma
    b.set(0, 1, poly({{1, 1, 2, 1, 1}, {-3, 1, 3, 1, 1}, {2, 1, 7, 2, 1}}));
    // b21 = (21 / (2 sigma)) (-r + r^(3/2))
    b.set(1, 0, poly({{-21, 2, 1, 1, -1}, {21, 2, 3, 2, -1}}));
    // b22 = 1 - (9/2) r + (7/2) r^(3/2)
    b.set(1, 1, poly({{1, 1, 0, 1, 0}, {-9, 2, 1, 1, 0}, {7, 2, 3, 2, 0}}));
    return {std::move(a), std::move(b)};
}

PolyMatrix baseline_matrix_a_k2() {
    PolyMatrix a(3, 3);
    // Row 1, prefactor r^5.
    // (-495 r^(1/3) + 320 r^(1/2) + 176) r^5
    a.set(0, 0, poly({{-495, 1, 16, 3, 0}, {320, 1, 11, 2, 0}, {176, 1, 5, 1, 0}}));
    // -2 (-153 r^(1/3) + 100 r^(1/2) + 53) r^5 sigma
    a.set(0, 1, poly({{306, 1, 16, 3, 1}, {-200, 1, 11, 2, 1}, {-106, 1, 5, 1, 1}}));
    // 24 (2 r^(11/2) - 3 r^(16/3) + r^5) sigma^2
    a.set(0, 2, poly({{48, 1, 11, 2, 2}, {-72, 1, 16, 3, 2}, {24, 1, 5, 1, 2}}));
    // Row 2, prefactor r^3.
    // 440 (2 r^(7/2) - 3 r^(10/3) + r^3) / sigma
    a.set(1, 0, poly({{880, 1, 7, 2, -1}, {-1320, 1, 10, 3, -1}, {440, 1, 3, 1, -1}}));
    // (816 r^(1/3) - 550 r^(1/2) - 265) r^3
    a.set(1, 1, poly({{816, 1, 10, 3, 0}, {-550, 1, 7, 2, 0}, {-265, 1, 3, 1, 0}}));
    // 12 (-16 r^(1/3) + 11 r^(1/2) + 5) r^3 sigma
    a.set(1, 2, poly({{-192, 1, 10, 3, 1}, {132, 1, 7, 2, 1}, {60, 1, 3, 1, 1}}));
    // Row 3, prefactor r.
    // 220 (-10 r^(1/3) + 7 r^(1/2) + 3) r / sigma^2
    a.set(2, 0, poly({{-2200, 1, 4, 3, -2}, {1540, 1, 3, 2, -2}, {660, 1, 1, 1, -2}}));
    // -(5/2) (-544 r^(1/3) + 385 r^(1/2) + 159) r / sigma
    a.set(2, 1, poly({{1360, 1, 4, 3, -1}, {-1925, 2, 3, 2, -1}, {-795, 2, 1, 1, -1}}));
    // (-320 r^(1/3) + 231 r^(1/2) + 90) r
    a.set(2, 2, poly({{-320, 1, 4, 3, 0}, {231, 1, 3, 2, 0}, {90, 1, 1, 1, 0}}));
    return a;
}

PolyMatrix baseline_matrix_a_k3() {
    PolyMatrix a(4, 4);
    // Row 1, prefactor r^7.
    // (82215 r^(1/3) - 73920 r^(1/4) - 17864 r^(1/2) + 9570) r^7
    a.set(0, 0, poly({{82215, 1, 22, 3, 0},
                      {-73920, 1, 29, 4, 0},
                      {-17864, 1, 15, 2, 0},
                      {9570, 1, 7, 1, 0}}));
    // 2 (-25515 r^(1/3) + 22880 r^(1/4) + 5572 r^(1/2) - 2937) r^7 sigma
    a.set(0, 1, poly({{-51030, 1, 22, 3, 1},
                      {45760, 1, 29, 4, 1},
                      {11144, 1, 15, 2, 1},
                      {-5874, 1, 7, 1, 1}}));
    // -8 (-1701 r^(1/3) + 1520 r^(1/4) + 374 r^(1/2) - 193) r^7 sigma^2
    a.set(0, 2, poly({{13608, 1, 22, 3, 2},
                      {-12160, 1, 29, 4, 2},
                      {-2992, 1, 15, 2, 2},
                      {1544, 1, 7, 1, 2}}));
    // 192 (-9 r^(1/3) + 8 r^(1/4) + 2 r^(1/2) - 1) r^7 sigma^3
    a.set(0, 3, poly({{-1728, 1, 22, 3, 3},
                      {1536, 1, 29, 4, 3},
                      {384, 1, 15, 2, 3},
                      {-192, 1, 7, 1, 3}}));
    // Row 2, prefactor r^5.
    // -33495 (-9 r^(1/3) + 8 r^(1/4) + 2 r^(1/2) - 1) r^5 / sigma
    a.set(1, 0, poly({{301455, 1, 16, 3, -1},
                      {-267960, 1, 21, 4, -1},
                      {-66990, 1, 11, 2, -1},
                      {33495, 1, 5, 1, -1}}));
    // (-187110 r^(1/3) + 165880 r^(1/4) + 41790 r^(1/2) - 20559) r^5
    a.set(1, 1, poly({{-187110, 1, 16, 3, 0},
                      {165880, 1, 21, 4, 0},
                      {41790, 1, 11, 2, 0},
                      {-20559, 1, 5, 1, 0}}));
    // -4 (-12474 r^(1/3) + 11020 r^(1/4) + 2805 r^(1/2) - 1351) r^5 sigma
    a.set(1, 2, poly({{49896, 1, 16, 3, 1},
                      {-44080, 1, 21, 4, 1},
                      {-11220, 1, 11, 2, 1},
                      {5404, 1, 5, 1, 1}}));
    // 96 (-66 r^(1/3) + 58 r^(1/4) + 15 r^(1/2) - 7) r^5 sigma^2
    a.set(1, 3, poly({{-6336, 1, 16, 3, 2},
                      {5568, 1, 21, 4, 2},
                      {1440, 1, 11, 2, 2},
                      {-672, 1, 5, 1, 2}}));
    // Row 3, prefactor r^3.
    // -(33495/2) (-48 r^(1/3) + 42 r^(1/4) + 11 r^(1/2) - 5) r^3 / sigma^2
    a.set(2, 0, poly({{803880, 1, 10, 3, -2},
                      {-703395, 1, 13, 4, -2},
                      {-368445, 2, 7, 2, -2},
                      {167475, 2, 3, 1, -2}}));
    // (1155/2) (-864 r^(1/3) + 754 r^(1/4) + 199 r^(1/2) - 89) r^3 / sigma
    a.set(2, 1, poly({{-498960, 1, 10, 3, -1},
                      {435435, 1, 13, 4, -1},
                      {229845, 2, 7, 2, -1},
                      {-102795, 2, 3, 1, -1}}));
    // (133056 r^(1/3) - 115710 r^(1/4) - 30855 r^(1/2) + 13510) r^3
    a.set(2, 2, poly({{133056, 1, 10, 3, 0},
                      {-115710, 1, 13, 4, 0},
                      {-30855, 1, 7, 2, 0},
                      {13510, 1, 3, 1, 0}}));
    // 24 (-704 r^(1/3) + 609 r^(1/4) + 165 r^(1/2) - 70) r^3 sigma
    a.set(2, 3, poly({{-16896, 1, 10, 3, 1},
                      {14616, 1, 13, 4, 1},
                      {3960, 1, 7, 2, 1},
                      {-1680, 1, 3, 1, 1}}));
    // Row 4, prefactor r.
    // -(33495/8) (-320 r^(1/3) + 273 r^(1/4) + 77 r^(1/2) - 30) r / sigma^3
    a.set(3, 0, poly({{1339800, 1, 4, 3, -3},
                      {-9144135, 8, 5, 4, -3},
                      {-2579115, 8, 3, 2, -3},
                      {502425, 4, 1, 1, -3}}));
    // (1155/8) (-5760 r^(1/3) + 4901 r^(1/4) + 1393 r^(1/2) - 534) r / sigma^2
    a.set(3, 1, poly({{-831600, 1, 4, 3, -2},
                      {5660655, 8, 5, 4, -2},
                      {1608915, 8, 3, 2, -2},
                      {-308385, 4, 1, 1, -2}}));
    // -(105/4) (-8448 r^(1/3) + 7163 r^(1/4) + 2057 r^(1/2) - 772) r / sigma
    a.set(3, 2, poly({{221760, 1, 4, 3, -1},
                      {-752115, 4, 5, 4, -1},
                      {-215985, 4, 3, 2, -1},
                      {20265, 1, 1, 1, -1}}));
    // (-28160 r^(1/3) + 23751 r^(1/4) + 6930 r^(1/2) - 2520) r
    a.set(3, 3, poly({{-28160, 1, 4, 3, 0},
                      {23751, 1, 5, 4, 0},
                      {6930, 1, 3, 2, 0},
                      {-2520, 1, 1, 1, 0}}));
    return a;
}

std::vector<PuiseuxPoly> baseline_inverse_tail_k1() {
    // (ad - bc)^(-1) (-b, a)^T with det = r^(9/2):
    //   4 sigma (r^(-3/2) - r^(-1)),  7 r^(-3/2) - 6 r^(-1)
    return {poly({{4, 1, -3, 2, 1}, {-4, 1, -1, 1, 1}}),
            poly({{7, 1, -3, 2, 0}, {-6, 1, -1, 1, 0}})};
}

std::vector<PuiseuxPoly> baseline_inverse_tail_k2() {
    // 24 (-3 r^(1/6) + r^(1/2) + 2) sigma^2 / r^(3/2)
    // 12 (-16 r^(1/6) + 5 r^(1/2) + 11) sigma / r^(3/2)
    // (-320 r^(1/6) + 90 r^(1/2) + 231) / r^(3/2)
    return {poly({{-72, 1, -4, 3, 2}, {24, 1, -1, 1, 2}, {48, 1, -3, 2, 2}}),
            poly({{-192, 1, -4, 3, 1}, {60, 1, -1, 1, 1}, {132, 1, -3, 2, 1}}),
            poly({{-320, 1, -4, 3, 0}, {90, 1, -1, 1, 0}, {231, 1, -3, 2, 0}})};
}

std::vector<PuiseuxPoly> baseline_inverse_tail_k3() {
    // -192 (-8 r^(1/4) + 9 r^(1/6) + r^(1/2) - 2) sigma^3 / r^(3/2)
    // -96 (-58 r^(1/4) + 66 r^(1/6) + 7 r^(1/2) - 15) sigma^2 / r^(3/2)
    // -24 (-609 r^(1/4) + 704 r^(1/6) + 70 r^(1/2) - 165) sigma / r^(3/2)
    // (23751 r^(1/4) - 28160 r^(1/6) - 2520 r^(1/2) + 6930) / r^(3/2)
    return {poly({{1536, 1, -5, 4, 3}, {-1728, 1, -4, 3, 3}, {-192, 1, -1, 1, 3}, {384, 1, -3, 2, 3}}),
            poly({{5568, 1, -5, 4, 2}, {-6336, 1, -4, 3, 2}, {-672, 1, -1, 1, 2}, {1440, 1, -3, 2, 2}}),
            poly({{14616, 1, -5, 4, 1}, {-16896, 1, -4, 3, 1}, {-1680, 1, -1, 1, 1}, {3960, 1, -3, 2, 1}}),
            poly({{23751, 1, -5, 4, 0}, {-28160, 1, -4, 3, 0}, {-2520, 1, -1, 1, 0}, {6930, 1, -3, 2, 0}})};
}

PuiseuxPoly baseline_det_b_k1() {
    const PuiseuxPoly root = PuiseuxPoly::monomial(1, Rational(BigInt(1), BigInt(2)), 0);
    const PuiseuxPoly one = PuiseuxPoly::constant(1);
    const PuiseuxPoly quartic = (root - one).pow(4);
    PuiseuxPoly tail = PuiseuxPoly::constant(2);
    tail += PuiseuxPoly::constant(6) * root;
    tail += PuiseuxPoly::monomial(5, 1, 0);
    tail += PuiseuxPoly::monomial(6, Rational(BigInt(3), BigInt(2)), 0);
    tail += PuiseuxPoly::monomial(2, 2, 0);
    return Rational(BigInt(1), BigInt(2)) * (quartic * (one + root) * tail);
}

bool has_baseline(int k) { return k >= 1 && k <= 3; }

}  // namespace kintraj
