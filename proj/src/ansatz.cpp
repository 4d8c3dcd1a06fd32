#include "kintraj/ansatz.hpp"

#include <numeric>
#include <stdexcept>

namespace kintraj {

Rational iterated_integral_factor(const Rational& q, int depth) {
    if (q <= Rational(-2))
        throw std::domain_error("iterated_integral_factor: exponent must exceed -2");
    if (depth < 0) throw std::invalid_argument("iterated_integral_factor: negative depth");
    Rational out = 1;
    for (int nu = 1; nu <= depth; ++nu) out *= Rational(2) / (q + Rational(2 * nu));
    return out;
}

Ansatz Ansatz::for_steps(int k) {
    if (k < 1 || k > kMaxSteps)
        throw std::invalid_argument("Ansatz: step count must be between 1 and " +
                                    std::to_string(kMaxSteps));
    Ansatz a;
    a.steps = k;
    a.basis_exponents.push_back(1);
    long long denom = 1;
    for (int i = 1; i <= k; ++i) {
        const Rational kappa_i = Rational(1) + Rational(BigInt(1), BigInt(i + 1));
        a.kappa.push_back(kappa_i);
        a.basis_exponents.push_back(kappa_i);
        denom = std::lcm(denom, static_cast<long long>(i + 1));
    }
    a.root_denom = denom;
    return a;
}

std::vector<std::vector<Rational>> Ansatz::terminal_matrix() const {
    const int n = steps + 1;
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int l = 0; l < n; ++l)
            m[i][l] = iterated_integral_factor(basis_exponents[l], steps - i);
    return m;
}

Rational determinant_exponent(int k) {
    const Ansatz a = Ansatz::for_steps(k);
    Rational p = Rational(static_cast<long long>(k + 1) * (k + 1));
    for (const Rational& kl : a.kappa) p += kl - Rational(1);
    return p;
}

}  // namespace kintraj
