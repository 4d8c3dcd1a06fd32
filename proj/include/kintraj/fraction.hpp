#pragma once

// Fraction field over the Laurent-Puiseux ring, and exact Gaussian
// elimination returning numerator/denominator pairs. No polynomial gcd is
// attempted; normalization cancels common pure monomial factors and makes
// the denominator monic in its lexicographically leading term.

#include "kintraj/poly_matrix.hpp"

#include <stdexcept>
#include <vector>

namespace kintraj {

struct singular_system_error : std::runtime_error {
    explicit singular_system_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct PolyFraction {
    PuiseuxPoly num;
    PuiseuxPoly den = PuiseuxPoly::constant(1);

    PolyFraction() = default;
    PolyFraction(PuiseuxPoly n, PuiseuxPoly d);
    static PolyFraction from_poly(PuiseuxPoly p) { return PolyFraction(std::move(p), PuiseuxPoly::constant(1)); }

    bool is_zero() const { return num.is_zero(); }
    void normalize();

    PolyFraction operator-() const;
    friend PolyFraction operator+(const PolyFraction& a, const PolyFraction& b);
    friend PolyFraction operator-(const PolyFraction& a, const PolyFraction& b);
    friend PolyFraction operator*(const PolyFraction& a, const PolyFraction& b);
    friend PolyFraction operator/(const PolyFraction& a, const PolyFraction& b);

    // Exact equality as fractions (cross-multiplication).
    friend bool operator==(const PolyFraction& a, const PolyFraction& b);
};

// Solves M x = rhs exactly over the fraction field. Throws
// singular_system_error when the matrix is singular (which, for terminal
// systems built from a degenerate exponent schedule, is the failure mode
// to surface).
std::vector<PolyFraction> fraction_solve(const PolyMatrix& m,
                                         const std::vector<PuiseuxPoly>& rhs);

}  // namespace kintraj
