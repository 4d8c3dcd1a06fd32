#pragma once

// Construction and evaluation of the trajectory matrix pair (A, B) for a
// k-step kinetic equation. A path between endpoints (t, x_1..x_k, v) at
// r = 0 and (s, y_1..y_k, w) at r = 1, s < t, is
//
//   gamma_t(r) = t + sigma r^2,   sigma = s - t,
//   (gamma_x(r), gamma_v(r))^T = A(r, sigma) (y, w)^T + B(r, sigma) (x, v)^T,
//
// where A and B are (k+1) x (k+1) matrices of scalar blocks satisfying
// A(0) = 0, A(1) = Id, B(0) = Id, B(1) = 0 and the row recursion
// d/dr row_i = 2 sigma r row_{i+1} that keeps the path integral to the
// drift and velocity fields.

#include "kintraj/ansatz.hpp"
#include "kintraj/fraction.hpp"
#include "kintraj/poly_matrix.hpp"

#include <array>
#include <vector>

namespace kintraj {

// Solved bottom-row coefficient: coeff * sigma^sigma_power attached to the
// basis monomial r^basis_exponent.
struct CoefficientEntry {
    Rational basis_exponent;
    Rational coeff;
    int sigma_power = 0;
};
using CoefficientTable = std::vector<std::vector<CoefficientEntry>>;  // [column][basis]

struct TrajectoryPair {
    int k = 0;
    long long root_denom = 1;
    std::vector<Rational> kappa;
    PolyMatrix a;  // multiplies the r = 1 endpoint (y, w)
    PolyMatrix b;  // multiplies the r = 0 endpoint (x, v)
    CoefficientTable alpha;  // bottom-row coefficients of a, per column
    CoefficientTable beta;   // bottom-row coefficients of b, per column
};

// Builds the pair for 1 <= k <= 12 by solving, per column, the rational
// terminal system at r = 1 (sigma powers are factored out row-wise first)
// and integrating the bottom row upward. Throws singular_system_error if
// the exponent schedule degenerates.
TrajectoryPair build_pair(int k);

struct KineticPoint {
    double t = 0.0;
    std::vector<std::vector<double>> x;  // k position blocks, each a d-vector
    std::vector<double> v;               // velocity d-vector

    std::size_t dim() const { return v.size(); }
    static KineticPoint scalar(double t, std::vector<double> x_blocks, double v);
};

// gamma(r) for endpoints end0 = (t, x, v) at r = 0 and end1 = (s, y, w) at
// r = 1; requires s < t and r in [0, 1].
KineticPoint eval_gamma(const TrajectoryPair& pair, const KineticPoint& end1,
                        const KineticPoint& end0, double r);

// d/dr of the velocity component of gamma at r.
std::vector<double> eval_gamma_dot_v(const TrajectoryPair& pair, const KineticPoint& end1,
                                     const KineticPoint& end0, double r);

// Double-precision snapshot of a pair for hot loops: entry evaluators for
// both matrices plus the differentiated bottom rows.
class CompiledPair {
public:
    explicit CompiledPair(const TrajectoryPair& pair);

    int steps() const { return k_; }
    double a_entry(std::size_t i, std::size_t j, double r, double sigma) const;
    double b_entry(std::size_t i, std::size_t j, double r, double sigma) const;
    double a_bottom_derivative(std::size_t j, double r, double sigma) const;
    double b_bottom_derivative(std::size_t j, double r, double sigma) const;

    // Scalar path evaluation (d = 1): end0/end1 as (t, x_1..x_k, v).
    // Fills gamma with 1 + (k+1) entries: gamma_t then the space blocks.
    void eval_path(const std::vector<double>& end1, const std::vector<double>& end0,
                   double r, std::vector<double>& gamma) const;

private:
    int k_;
    std::vector<CompiledPoly> a_, b_, da_bottom_, db_bottom_;
};

}  // namespace kintraj
