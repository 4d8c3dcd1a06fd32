#pragma once

// Exponent schedule for the k-step trajectory ansatz. The bottom matrix
// row is a combination of r, r^kappa_1, ..., r^kappa_k with
// kappa_i = 1 + 1/(i+1); rows above arise by repeated weighted
// integration, so terminal conditions at r = 1 reduce to rational linear
// systems sharing one coefficient matrix.

#include "kintraj/rational.hpp"

#include <vector>

namespace kintraj {

// Value at r = 1 of depth-fold weighted integration of r^q, with the
// sigma factors stripped: the product of 2/(q + 2 nu) for nu = 1..depth.
// Requires q > -2; depth 0 gives 1.
Rational iterated_integral_factor(const Rational& q, int depth);

struct Ansatz {
    int steps = 0;                          // k
    std::vector<Rational> kappa;            // kappa_i = 1 + 1/(i+1), i = 1..k
    std::vector<Rational> basis_exponents;  // [1, kappa_1, ..., kappa_k]
    long long root_denom = 1;               // lcm(2, ..., k+1)
    static constexpr int time_exponent = 2; // gamma_t(r) = t + sigma r^2

    static Ansatz for_steps(int k);         // 1 <= k <= 12

    // Terminal-condition matrix: entry (i, l), 0-based, is the value at
    // r = 1 of the (k - i)-fold weighted integral of the l-th basis
    // monomial, sigma stripped. Row k is the bottom matrix row itself.
    std::vector<std::vector<Rational>> terminal_matrix() const;
};

// Conjectured determinant exponent: (k+1)^2 + sum of (kappa_l - 1).
Rational determinant_exponent(int k);

inline constexpr int kMaxSteps = 12;

}  // namespace kintraj
