#include "kintraj/puiseux.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace kintraj {

namespace {

double ipow(double base, int e) {
    if (e < 0) return 1.0 / ipow(base, -e);
    double out = 1.0;
    while (e > 0) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

}  // namespace

PuiseuxPoly PuiseuxPoly::constant(const Rational& c) { return monomial(c, 0, 0); }

PuiseuxPoly PuiseuxPoly::monomial(const Rational& coeff, const Rational& r_exp, int sigma_exp) {
    PuiseuxPoly p;
    p.add_term({r_exp, sigma_exp}, coeff);
    return p;
}

void PuiseuxPoly::absorb_denominator(const Rational& r_exp) {
    root_denom_ = std::lcm(root_denom_, r_exp.denominator_ll());
}

void PuiseuxPoly::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    absorb_denominator(m.r_exp);
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void PuiseuxPoly::widen_root_denom(long long d) {
    if (d < 1) throw std::invalid_argument("PuiseuxPoly: root denominator must be positive");
    root_denom_ = std::lcm(root_denom_, d);
}

Rational PuiseuxPoly::coefficient(const Rational& r_exp, int sigma_exp) const {
    auto it = terms_.find({r_exp, sigma_exp});
    return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<std::pair<Monomial, Rational>> PuiseuxPoly::single_term() const {
    if (terms_.size() != 1) return std::nullopt;
    return *terms_.begin();
}

Rational PuiseuxPoly::constant_value() const {
    if (terms_.empty()) return 0;
    auto t = single_term();
    if (!t || !t->first.r_exp.is_zero() || t->first.sigma_exp != 0)
        throw std::domain_error("PuiseuxPoly: not a constant: " + to_string());
    return t->second;
}

PuiseuxPoly PuiseuxPoly::operator-() const {
    PuiseuxPoly out;
    out.root_denom_ = root_denom_;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

PuiseuxPoly& PuiseuxPoly::operator+=(const PuiseuxPoly& o) {
    widen_root_denom(o.root_denom_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

PuiseuxPoly& PuiseuxPoly::operator-=(const PuiseuxPoly& o) {
    widen_root_denom(o.root_denom_);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

PuiseuxPoly operator*(const PuiseuxPoly& a, const PuiseuxPoly& b) {
    PuiseuxPoly out;
    out.widen_root_denom(std::lcm(a.root_denom_, b.root_denom_));
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            out.add_term({ma.r_exp + mb.r_exp, ma.sigma_exp + mb.sigma_exp}, ca * cb);
    return out;
}

PuiseuxPoly PuiseuxPoly::scaled(const Rational& c) const {
    PuiseuxPoly out;
    out.root_denom_ = root_denom_;
    if (c.is_zero()) return out;
    for (const auto& [m, t] : terms_) out.terms_.emplace(m, c * t);
    return out;
}

PuiseuxPoly operator*(const Rational& c, const PuiseuxPoly& p) { return p.scaled(c); }

PuiseuxPoly PuiseuxPoly::pow(unsigned e) const {
    PuiseuxPoly out = constant(1);
    out.root_denom_ = root_denom_;
    PuiseuxPoly base = *this;
    while (e > 0) {
        if (e & 1) out = out * base;
        base = base * base;
        e >>= 1;
    }
    return out;
}

PuiseuxPoly PuiseuxPoly::weighted_integrate() const {
    PuiseuxPoly out;
    out.root_denom_ = root_denom_;
    for (const auto& [m, c] : terms_) {
        if (m.r_exp <= Rational(-2))
            throw std::domain_error("weighted_integrate: exponent " + m.r_exp.to_string() +
                                    " <= -2 is not integrable at the origin");
        out.add_term({m.r_exp + 2, m.sigma_exp + 1}, Rational(2) / (m.r_exp + 2) * c);
    }
    return out;
}

PuiseuxPoly PuiseuxPoly::differentiate_r() const {
    PuiseuxPoly out;
    out.root_denom_ = root_denom_;
    for (const auto& [m, c] : terms_) {
        if (m.r_exp.is_zero()) continue;
        out.add_term({m.r_exp - 1, m.sigma_exp}, c * m.r_exp);
    }
    return out;
}

double PuiseuxPoly::eval(double r, double sigma) const {
    if (r < 0.0) throw std::domain_error("PuiseuxPoly::eval: negative r");
    double acc = 0.0;
    for (const auto& [m, c] : terms_) {
        double rp;
        if (r == 0.0) {
            if (m.r_exp.is_negative())
                throw std::domain_error("PuiseuxPoly::eval: pole at r = 0 (exponent " +
                                        m.r_exp.to_string() + ")");
            rp = m.r_exp.is_zero() ? 1.0 : 0.0;
        } else {
            rp = std::pow(r, m.r_exp.to_double());
        }
        double sp;
        if (sigma == 0.0) {
            if (m.sigma_exp < 0)
                throw std::domain_error("PuiseuxPoly::eval: pole at sigma = 0");
            sp = m.sigma_exp == 0 ? 1.0 : 0.0;
        } else {
            sp = ipow(sigma, m.sigma_exp);
        }
        acc += c.to_double() * rp * sp;
    }
    return acc;
}

PuiseuxPoly PuiseuxPoly::substitute_r_root(const Rational& r_root) const {
    PuiseuxPoly out;
    for (const auto& [m, c] : terms_) {
        const Rational scaled_exp = m.r_exp * Rational(root_denom_);
        if (!scaled_exp.is_integer())
            throw std::logic_error("PuiseuxPoly: exponent denominator exceeds root_denom");
        const long long e = scaled_exp.numerator().convert_to<long long>();
        if (r_root.is_zero()) {
            if (e < 0)
                throw std::domain_error("PuiseuxPoly: pole at r = 0 (exponent " +
                                        m.r_exp.to_string() + ")");
            if (e > 0) continue;
            out.add_term({0, m.sigma_exp}, c);
        } else {
            out.add_term({0, m.sigma_exp}, c * r_root.pow(e));
        }
    }
    return out;
}

Rational PuiseuxPoly::eval_exact(const Rational& r_root, const Rational& sigma) const {
    const PuiseuxPoly in_sigma = substitute_r_root(r_root);
    Rational acc = 0;
    for (const auto& [m, c] : in_sigma.terms_) {
        if (sigma.is_zero()) {
            if (m.sigma_exp < 0)
                throw std::domain_error("PuiseuxPoly::eval_exact: pole at sigma = 0");
            if (m.sigma_exp > 0) continue;
            acc += c;
        } else {
            acc += c * sigma.pow(m.sigma_exp);
        }
    }
    return acc;
}

Rational PuiseuxPoly::leading_r_exponent() const {
    if (terms_.empty())
        throw std::domain_error("leading_r_exponent: undefined for the zero polynomial");
    return terms_.begin()->first.r_exp;  // map is ordered by (r_exp, sigma_exp)
}

std::pair<Monomial, Rational> PuiseuxPoly::leading_term_lex() const {
    if (terms_.empty())
        throw std::domain_error("leading_term_lex: undefined for the zero polynomial");
    return *terms_.rbegin();
}

bool PuiseuxPoly::sigma_free() const {
    for (const auto& [m, c] : terms_)
        if (m.sigma_exp != 0) return false;
    return true;
}

std::optional<int> PuiseuxPoly::uniform_sigma_power() const {
    if (terms_.empty()) return std::nullopt;
    const int p = terms_.begin()->first.sigma_exp;
    for (const auto& [m, c] : terms_)
        if (m.sigma_exp != p) return std::nullopt;
    return p;
}

std::string PuiseuxPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational coeff = c;
        if (first) {
            if (coeff.is_negative()) {
                os << "-";
                coeff = -coeff;
            }
        } else {
            os << (coeff.is_negative() ? " - " : " + ");
            coeff = coeff.abs();
        }
        first = false;
        const bool has_var = !m.r_exp.is_zero() || m.sigma_exp != 0;
        if (!coeff.is_one() || !has_var) os << coeff.to_string();
        bool star = !coeff.is_one() || !has_var;
        if (!m.r_exp.is_zero()) {
            if (star) os << "*";
            os << "r";
            if (!m.r_exp.is_one()) os << "^(" << m.r_exp.to_string() << ")";
            star = true;
        }
        if (m.sigma_exp != 0) {
            if (star) os << "*";
            os << "s";
            if (m.sigma_exp != 1) os << "^(" << m.sigma_exp << ")";
        }
    }
    return os.str();
}

CompiledPoly::CompiledPoly(const PuiseuxPoly& p) {
    terms_.reserve(p.terms().size());
    for (const auto& [m, c] : p.terms())
        terms_.push_back({c.to_double(), m.r_exp.to_double(), m.sigma_exp});
}

double CompiledPoly::eval(double r, double sigma) const {
    double acc = 0.0;
    for (const auto& t : terms_) {
        double rp;
        if (r == 0.0)
            rp = t.r_exp == 0.0 ? 1.0 : (t.r_exp > 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
        else
            rp = std::pow(r, t.r_exp);
        acc += t.coeff * rp * ipow(sigma, t.sigma_exp);
    }
    return acc;
}

}  // namespace kintraj
