#pragma once

// Arbitrary-precision rational scalar. Always reduced, denominator > 0.
// Backed by boost::multiprecision; this wrapper pins down construction,
// string I/O (fraction strings, never decimals) and integer powers.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace kintraj {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

class Rational {
public:
    Rational() = default;
    Rational(long long n) : v_(n) {}                     // NOLINT: implicit by design
    Rational(const BigInt& num, const BigInt& den);
    explicit Rational(BigRat v) : v_(std::move(v)) {}

    static Rational from_string(const std::string& s);   // "p/q" or "p"

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return denominator() == 1; }
    bool is_negative() const { return v_ < 0; }
    int sign() const { return v_.sign(); }

    // Denominator as a machine integer; throws if it does not fit.
    long long denominator_ll() const;

    Rational operator-() const { return Rational(BigRat(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational reciprocal() const;
    Rational abs() const { return is_negative() ? -*this : *this; }

    // Integer power, negative exponents allowed for nonzero values.
    Rational pow(long long e) const;

    double to_double() const { return v_.convert_to<double>(); }
    std::string to_string() const;                        // "p/q", "/q" omitted for integers

private:
    BigRat v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace kintraj
