#pragma once

// Sparse Laurent-Puiseux polynomials in two symbols:
//   r      — the curve parameter, with rational exponents of bounded
//            denominator (every r-exponent's denominator divides root_denom),
//            negative exponents allowed;
//   sigma  — the time displacement s - t, integer exponents, kept symbolic.
//
// Coefficients are exact rationals. The canonical zero is the empty term
// map and equality is term-map equality, so exact regression comparisons
// are unambiguous.

#include "kintraj/rational.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kintraj {

struct Monomial {
    Rational r_exp;
    int sigma_exp = 0;

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.sigma_exp == b.sigma_exp && a.r_exp == b.r_exp;
    }
    friend bool operator<(const Monomial& a, const Monomial& b) {
        if (a.r_exp != b.r_exp) return a.r_exp < b.r_exp;
        return a.sigma_exp < b.sigma_exp;
    }
};

class PuiseuxPoly {
public:
    using TermMap = std::map<Monomial, Rational>;

    PuiseuxPoly() = default;

    static PuiseuxPoly zero() { return {}; }
    static PuiseuxPoly constant(const Rational& c);
    static PuiseuxPoly monomial(const Rational& coeff, const Rational& r_exp, int sigma_exp);
    static PuiseuxPoly variable_r() { return monomial(1, 1, 0); }
    static PuiseuxPoly variable_sigma() { return monomial(1, 0, 1); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    long long root_denom() const { return root_denom_; }
    void widen_root_denom(long long d);

    // Coefficient of an exact monomial (zero if absent).
    Rational coefficient(const Rational& r_exp, int sigma_exp) const;

    // True when the poly is a single term; returns it.
    std::optional<std::pair<Monomial, Rational>> single_term() const;

    // Constant-term extraction; throws unless all exponents are zero.
    Rational constant_value() const;

    PuiseuxPoly operator-() const;
    PuiseuxPoly& operator+=(const PuiseuxPoly& o);
    PuiseuxPoly& operator-=(const PuiseuxPoly& o);
    friend PuiseuxPoly operator+(PuiseuxPoly a, const PuiseuxPoly& b) { return a += b; }
    friend PuiseuxPoly operator-(PuiseuxPoly a, const PuiseuxPoly& b) { return a -= b; }
    friend PuiseuxPoly operator*(const PuiseuxPoly& a, const PuiseuxPoly& b);

    PuiseuxPoly scaled(const Rational& c) const;
    PuiseuxPoly pow(unsigned e) const;

    friend bool operator==(const PuiseuxPoly& a, const PuiseuxPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const PuiseuxPoly& a, const PuiseuxPoly& b) { return !(a == b); }

    // Antiderivative of 2*sigma*tau*f(tau) from 0 to r:
    // c r^q sigma^n  ->  (2c/(q+2)) r^(q+2) sigma^(n+1).
    // Throws std::domain_error when some exponent q <= -2 (not integrable
    // at the origin).
    PuiseuxPoly weighted_integrate() const;

    // Termwise d/dr; constant-in-r terms vanish.
    PuiseuxPoly differentiate_r() const;

    // Floating evaluation. r must be >= 0; r = 0 with a negative exponent
    // and sigma = 0 with a negative sigma power throw (pole).
    double eval(double r, double sigma) const;

    // Exact substitution r = r_root^root_denom (r_root is the root_denom-th
    // root of the r value); the result is a poly in sigma alone.
    PuiseuxPoly substitute_r_root(const Rational& r_root) const;

    // Fully exact evaluation at r = r_root^root_denom, sigma exact.
    Rational eval_exact(const Rational& r_root, const Rational& sigma) const;

    // Minimum r-exponent over stored terms; throws on the zero polynomial.
    Rational leading_r_exponent() const;

    // Largest term under (r_exp, sigma_exp) lexicographic order.
    std::pair<Monomial, Rational> leading_term_lex() const;

    bool sigma_free() const;
    // If every term carries one sigma power, returns it (zero poly -> nullopt).
    std::optional<int> uniform_sigma_power() const;

    std::string to_string() const;

private:
    void add_term(const Monomial& m, const Rational& c);
    void absorb_denominator(const Rational& r_exp);

    TermMap terms_;
    long long root_denom_ = 1;
};

PuiseuxPoly operator*(const Rational& c, const PuiseuxPoly& p);

// Flattened double-precision form for hot numeric loops (grid sweeps,
// Monte Carlo). Term order matches the exact poly, so evaluation is
// deterministic.
class CompiledPoly {
public:
    CompiledPoly() = default;
    explicit CompiledPoly(const PuiseuxPoly& p);

    double eval(double r, double sigma) const;

private:
    struct Term {
        double coeff;
        double r_exp;
        int sigma_exp;
    };
    std::vector<Term> terms_;
};

}  // namespace kintraj
