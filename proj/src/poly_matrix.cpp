#include "kintraj/poly_matrix.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace kintraj {

namespace {

// Minor determinants memoized on (row set, column set). Rows are always
// expanded along the lowest remaining row, so the sign bookkeeping stays
// local to each expansion step.
class MinorTable {
public:
    explicit MinorTable(const PolyMatrix& m) : m_(m) {}

    const PuiseuxPoly& minor(std::uint32_t rows, std::uint32_t cols) {
        const std::uint64_t key = (std::uint64_t(rows) << 32) | cols;
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        PuiseuxPoly det;
        if (rows == 0) {
            det = PuiseuxPoly::constant(1);
        } else {
            const int r0 = std::countr_zero(rows);
            const std::uint32_t rest_rows = rows & (rows - 1);
            int parity = 0;
            for (std::uint32_t c = cols; c != 0; c &= c - 1) {
                const int col = std::countr_zero(c);
                const PuiseuxPoly& entry = m_.at(std::size_t(r0), std::size_t(col));
                if (!entry.is_zero()) {
                    PuiseuxPoly sub = entry * minor(rest_rows, cols & ~(1u << col));
                    if (parity & 1)
                        det -= sub;
                    else
                        det += sub;
                }
                ++parity;
            }
        }
        return memo_.emplace(key, std::move(det)).first->second;
    }

private:
    const PolyMatrix& m_;
    std::unordered_map<std::uint64_t, PuiseuxPoly> memo_;
};

std::uint32_t full_mask(std::size_t n) { return (n == 32) ? ~0u : ((1u << n) - 1u); }

}  // namespace

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
    if (rows == 0 || cols == 0)
        throw std::invalid_argument("PolyMatrix: dimensions must be positive");
}

PolyMatrix PolyMatrix::identity(std::size_t n) {
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, PuiseuxPoly::constant(1));
    return m;
}

const PuiseuxPoly& PolyMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("PolyMatrix: index out of range");
    return entries_[index(i, j)];
}

void PolyMatrix::set(std::size_t i, std::size_t j, PuiseuxPoly p) {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("PolyMatrix: index out of range");
    entries_[index(i, j)] = std::move(p);
}

long long PolyMatrix::common_root_denom() const {
    long long d = 1;
    for (const auto& e : entries_) d = std::lcm(d, e.root_denom());
    return d;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("PolyMatrix: dimension mismatch");
    PolyMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) {
            PuiseuxPoly acc;
            for (std::size_t l = 0; l < a.cols_; ++l)
                acc += a.at(i, l) * b.at(l, j);
            out.set(i, j, std::move(acc));
        }
    return out;
}

std::vector<PuiseuxPoly> PolyMatrix::mul_vector(const std::vector<PuiseuxPoly>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("PolyMatrix: dimension mismatch");
    std::vector<PuiseuxPoly> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
    return out;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

PuiseuxPoly PolyMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant: matrix is not square");
    if (rows_ > kMaxCofactorDim)
        throw std::invalid_argument("determinant: dimension beyond cofactor cap");
    MinorTable table(*this);
    return table.minor(full_mask(rows_), full_mask(cols_));
}

std::vector<PuiseuxPoly> PolyMatrix::adjugate_column(std::size_t j) const {
    if (rows_ != cols_) throw std::invalid_argument("adjugate_column: matrix is not square");
    if (rows_ > kMaxCofactorDim)
        throw std::invalid_argument("adjugate_column: dimension beyond cofactor cap");
    if (j >= cols_) throw std::out_of_range("adjugate_column: column out of range");

    // adj[i][j] = (-1)^(i+j) * minor with row j and column i deleted.
    MinorTable table(*this);
    const std::uint32_t rows = full_mask(rows_) & ~(1u << j);
    std::vector<PuiseuxPoly> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        PuiseuxPoly m = table.minor(rows, full_mask(cols_) & ~(1u << i));
        out[i] = ((i + j) % 2 == 0) ? std::move(m) : -m;
    }
    return out;
}

}  // namespace kintraj
