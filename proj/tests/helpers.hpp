#pragma once

// Shared test utilities: term-list poly construction, random generators
// with fixed seeds, and an independent plain Gaussian elimination oracle
// kept deliberately separate from the library's solver.

#include "kintraj/puiseux.hpp"

#include <optional>
#include <random>
#include <vector>

namespace kintraj::testing {

struct Term {
    long long cn, cd;  // coefficient cn/cd
    long long rn, rd;  // r-exponent rn/rd
    int s;             // sigma power
};

inline PuiseuxPoly poly(std::initializer_list<Term> terms) {
    PuiseuxPoly p;
    for (const Term& t : terms)
        p += PuiseuxPoly::monomial(Rational(BigInt(t.cn), BigInt(t.cd)),
                                   Rational(BigInt(t.rn), BigInt(t.rd)), t.s);
    return p;
}

inline Rational random_rational(std::mt19937& rng, long long max_num = 20,
                                long long max_den = 10) {
    std::uniform_int_distribution<long long> num(-max_num, max_num);
    std::uniform_int_distribution<long long> den(1, max_den);
    return Rational(BigInt(num(rng)), BigInt(den(rng)));
}

inline Rational random_nonzero_rational(std::mt19937& rng) {
    for (;;) {
        Rational r = random_rational(rng);
        if (!r.is_zero()) return r;
    }
}

inline PuiseuxPoly random_poly(std::mt19937& rng, int max_terms = 5, bool laurent = true) {
    std::uniform_int_distribution<int> n_terms(1, max_terms);
    std::uniform_int_distribution<long long> r_num(laurent ? -6 : 0, 6);
    std::uniform_int_distribution<long long> r_den(1, 3);
    std::uniform_int_distribution<int> s_exp(-2, 2);
    PuiseuxPoly p;
    const int n = n_terms(rng);
    for (int i = 0; i < n; ++i)
        p += PuiseuxPoly::monomial(random_nonzero_rational(rng),
                                   Rational(BigInt(r_num(rng)), BigInt(r_den(rng))), s_exp(rng));
    return p;
}

// Plain textbook Gaussian elimination over rationals (first nonzero pivot,
// no sparsity heuristics); returns nullopt on a singular system.
inline std::optional<std::vector<Rational>> gauss_oracle(std::vector<std::vector<Rational>> m,
                                                         std::vector<Rational> rhs) {
    const std::size_t n = m.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(m[pivot], m[col]);
        std::swap(rhs[pivot], rhs[col]);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m[i][col].is_zero()) continue;
            const Rational f = m[i][col] / m[col][col];
            for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
            rhs[i] -= f * rhs[col];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rational sum = rhs[i];
        for (std::size_t j = i + 1; j < n; ++j) sum -= m[i][j] * x[j];
        if (m[i][i].is_zero()) return std::nullopt;
        x[i] = sum / m[i][i];
    }
    return x;
}

}  // namespace kintraj::testing
