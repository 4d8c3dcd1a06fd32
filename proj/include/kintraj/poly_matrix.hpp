#pragma once

// Dense rectangular matrices over the Laurent-Puiseux ring, with exact
// multiplication, division-free determinants and adjugate columns via
// memoized cofactor expansion. The cofactor path is intended for the
// small dimensions arising here (hard cap below).

#include "kintraj/puiseux.hpp"

#include <cstdint>
#include <vector>

namespace kintraj {

// Largest dimension accepted by determinant/adjugate_column. Step counts
// up to 12 build (k+1) x (k+1) matrices, hence 13.
inline constexpr std::size_t kMaxCofactorDim = 13;

class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t rows, std::size_t cols);

    static PolyMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const PuiseuxPoly& at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, PuiseuxPoly p);

    // Least common root denominator over all entries.
    long long common_root_denom() const;

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    std::vector<PuiseuxPoly> mul_vector(const std::vector<PuiseuxPoly>& v) const;

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

    // Exact determinant (square, rows <= kMaxCofactorDim).
    PuiseuxPoly determinant() const;

    // Column j (0-based) of the adjugate, so that inverse column j equals
    // adjugate column j divided by the determinant.
    std::vector<PuiseuxPoly> adjugate_column(std::size_t j) const;

private:
    std::size_t index(std::size_t i, std::size_t j) const { return i * cols_ + j; }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<PuiseuxPoly> entries_;
};

}  // namespace kintraj
