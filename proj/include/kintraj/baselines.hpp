#pragma once

// Known closed forms for small step counts, kept as exact regression
// baselines: the full pair for k = 1, the first matrix and its inverse
// tail column for k = 2 and k = 3, and the factored k = 1 determinant of
// the second matrix.

#include "kintraj/poly_matrix.hpp"

#include <vector>

namespace kintraj {

struct BaselinePair {
    PolyMatrix a;
    PolyMatrix b;
};

BaselinePair baseline_pair_k1();
PolyMatrix baseline_matrix_a_k2();
PolyMatrix baseline_matrix_a_k3();

// Last column of the inverse of the first matrix (Laurent entries).
std::vector<PuiseuxPoly> baseline_inverse_tail_k1();
std::vector<PuiseuxPoly> baseline_inverse_tail_k2();
std::vector<PuiseuxPoly> baseline_inverse_tail_k3();

// det B for k = 1 in factored form:
// (1/2) (sqrt(r)-1)^4 (1+sqrt(r)) (2 + 6 sqrt(r) + 5 r + 6 r^(3/2) + 2 r^2).
PuiseuxPoly baseline_det_b_k1();

// True when a baseline exists for this step count.
bool has_baseline(int k);

}  // namespace kintraj
