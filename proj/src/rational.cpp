#include "kintraj/rational.hpp"

#include <ostream>

namespace kintraj {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den.is_zero()) throw std::domain_error("Rational: zero denominator");
    // The backend insists on a positive denominator; move the sign up front.
    if (den < 0)
        v_ = BigRat(-num, -den);
    else
        v_ = BigRat(num, den);
}

Rational Rational::from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rational: empty string");
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s), BigInt(1));
        return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    }
}

long long Rational::denominator_ll() const {
    const BigInt d = denominator();
    if (d > BigInt(std::numeric_limits<long long>::max()))
        throw std::overflow_error("Rational: denominator exceeds machine range");
    return d.convert_to<long long>();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
    return Rational(denominator(), numerator());
}

Rational Rational::pow(long long e) const {
    if (e < 0) return reciprocal().pow(-e);
    Rational base = *this;
    Rational out = 1;
    while (e > 0) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

std::string Rational::to_string() const {
    std::string out = numerator().str();
    if (!is_integer()) out += "/" + denominator().str();
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace kintraj
