#include "kintraj/fraction.hpp"

namespace kintraj {

PolyFraction::PolyFraction(PuiseuxPoly n, PuiseuxPoly d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw std::domain_error("PolyFraction: zero denominator");
    normalize();
}

void PolyFraction::normalize() {
    if (num.is_zero()) {
        den = PuiseuxPoly::constant(1);
        return;
    }
    // Shift the denominator's lowest r and sigma exponents to zero.
    Rational min_r = den.leading_r_exponent();
    int min_s = den.terms().begin()->first.sigma_exp;
    for (const auto& [m, c] : den.terms()) min_s = std::min(min_s, m.sigma_exp);
    if (!min_r.is_zero() || min_s != 0) {
        const PuiseuxPoly shift = PuiseuxPoly::monomial(1, -min_r, -min_s);
        num = num * shift;
        den = den * shift;
    }
    // Make the denominator monic in its leading (lex-max) term.
    const Rational lc = den.leading_term_lex().second;
    if (!lc.is_one()) {
        const Rational inv = lc.reciprocal();
        num = num.scaled(inv);
        den = den.scaled(inv);
    }
}

PolyFraction PolyFraction::operator-() const {
    PolyFraction out;
    out.num = -num;
    out.den = den;
    return out;
}

PolyFraction operator+(const PolyFraction& a, const PolyFraction& b) {
    return PolyFraction(a.num * b.den + b.num * a.den, a.den * b.den);
}

PolyFraction operator-(const PolyFraction& a, const PolyFraction& b) {
    return PolyFraction(a.num * b.den - b.num * a.den, a.den * b.den);
}

PolyFraction operator*(const PolyFraction& a, const PolyFraction& b) {
    return PolyFraction(a.num * b.num, a.den * b.den);
}

PolyFraction operator/(const PolyFraction& a, const PolyFraction& b) {
    if (b.is_zero()) throw std::domain_error("PolyFraction: division by zero");
    return PolyFraction(a.num * b.den, a.den * b.num);
}

bool operator==(const PolyFraction& a, const PolyFraction& b) {
    return a.num * b.den == b.num * a.den;
}

std::vector<PolyFraction> fraction_solve(const PolyMatrix& m,
                                         const std::vector<PuiseuxPoly>& rhs) {
    if (m.rows() != m.cols()) throw std::invalid_argument("fraction_solve: matrix is not square");
    const std::size_t n = m.rows();
    if (rhs.size() != n) throw std::invalid_argument("fraction_solve: rhs size mismatch");

    std::vector<std::vector<PolyFraction>> aug(n, std::vector<PolyFraction>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = PolyFraction::from_poly(m.at(i, j));
        aug[i][n] = PolyFraction::from_poly(rhs[i]);
    }

    for (std::size_t col = 0; col < n; ++col) {
        // Deterministic pivot: nonzero entry with the sparsest numerator.
        std::size_t pivot = n;
        std::size_t best_terms = 0;
        for (std::size_t i = col; i < n; ++i) {
            if (aug[i][col].is_zero()) continue;
            const std::size_t t = aug[i][col].num.term_count();
            if (pivot == n || t < best_terms) {
                pivot = i;
                best_terms = t;
            }
        }
        if (pivot == n)
            throw singular_system_error("fraction_solve: singular system at column " +
                                        std::to_string(col + 1));
        if (pivot != col) std::swap(aug[pivot], aug[col]);

        for (std::size_t i = col + 1; i < n; ++i) {
            if (aug[i][col].is_zero()) continue;
            const PolyFraction factor = aug[i][col] / aug[col][col];
            for (std::size_t j = col; j <= n; ++j)
                aug[i][j] = aug[i][j] - factor * aug[col][j];
        }
    }

    std::vector<PolyFraction> x(n);
    for (std::size_t i = n; i-- > 0;) {
        PolyFraction sum = aug[i][n];
        for (std::size_t j = i + 1; j < n; ++j) sum = sum - aug[i][j] * x[j];
        x[i] = sum / aug[i][i];
        x[i].normalize();
    }
    return x;
}

}  // namespace kintraj
