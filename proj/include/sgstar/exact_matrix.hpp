#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "sgstar/errors.hpp"
#include "sgstar/exact_scalar.hpp"

namespace sgstar {

using ExactVector = std::vector<ExactScalar>;

inline ExactScalar dot(const ExactVector& x, const ExactVector& y) {
    if (x.size() != y.size()) throw Error("dot: size mismatch");
    ExactScalar acc(0);
    for (size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
    return acc;
}

/// Dense matrix over Q or one fixed Q(sqrt(D)); mixing fields throws MixedFields
/// from the scalar layer.
class ExactMatrix {
public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(size_t rows, size_t cols, ExactScalar fill = ExactScalar(0))
        : rows_(rows), cols_(cols), e_(rows * cols, std::move(fill)) {}

    static ExactMatrix identity(size_t n) {
        ExactMatrix m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = ExactScalar(1);
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    ExactScalar& operator()(size_t i, size_t j) { return e_[i * cols_ + j]; }
    const ExactScalar& operator()(size_t i, size_t j) const { return e_[i * cols_ + j]; }

    friend bool operator==(const ExactMatrix& x, const ExactMatrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.e_ == y.e_;
    }
    friend bool operator!=(const ExactMatrix& x, const ExactMatrix& y) { return !(x == y); }

    ExactMatrix transpose() const {
        ExactMatrix t(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y) {
        if (x.cols_ != y.rows_) throw Error("matrix product: shape mismatch");
        ExactMatrix r(x.rows_, y.cols_);
        for (size_t i = 0; i < x.rows_; ++i)
            for (size_t k = 0; k < x.cols_; ++k) {
                if (x(i, k).is_zero()) continue;
                for (size_t j = 0; j < y.cols_; ++j) r(i, j) += x(i, k) * y(k, j);
            }
        return r;
    }

    friend ExactMatrix operator-(const ExactMatrix& x, const ExactMatrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw Error("matrix difference: shape mismatch");
        ExactMatrix r(x.rows_, x.cols_);
        for (size_t i = 0; i < x.e_.size(); ++i) r.e_[i] = x.e_[i] - y.e_[i];
        return r;
    }

    ExactVector column(size_t j) const {
        ExactVector v(rows_);
        for (size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    /// Columns of `extra` appended on the right.
    ExactMatrix augmented(const ExactMatrix& extra) const {
        if (extra.rows_ != rows_) throw Error("augment: row mismatch");
        ExactMatrix r(rows_, cols_ + extra.cols_);
        for (size_t i = 0; i < rows_; ++i) {
            for (size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
            for (size_t j = 0; j < extra.cols_; ++j) r(i, cols_ + j) = extra(i, j);
        }
        return r;
    }

    ExactMatrix augmented(const ExactVector& v) const {
        ExactMatrix col(rows_, 1);
        for (size_t i = 0; i < rows_; ++i) col(i, 0) = v[i];
        return augmented(col);
    }

private:
    size_t rows_, cols_;
    std::vector<ExactScalar> e_;
};

namespace detail {

// Multiplies each row by the lcm of its denominators; rank-preserving, and it
// keeps the Bareiss recurrence in (half-)integers.
inline void clear_row_denominators(std::vector<ExactVector>& w) {
    for (auto& row : w) {
        mpz_class l = 1;
        for (const auto& v : row) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.rational_part().get_den().get_mpz_t());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.surd_coefficient().get_den().get_mpz_t());
        }
        if (l == 1) continue;
        ExactScalar s{mpq_class(l)};
        for (auto& v : row) v *= s;
    }
}

}  // namespace detail

/// Rank over the scalar field by fraction-free Bareiss elimination with exact
/// pivot tests.
inline size_t rank(const ExactMatrix& m) {
    const size_t rows = m.rows(), cols = m.cols();
    std::vector<ExactVector> w(rows, ExactVector(cols));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) w[i][j] = m(i, j);
    detail::clear_row_denominators(w);

    ExactScalar prev(1);
    size_t r = 0;
    for (size_t col = 0; col < cols && r < rows; ++col) {
        size_t pivot = r;
        while (pivot < rows && w[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(w[r], w[pivot]);
        const ExactScalar& p = w[r][col];
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = col + 1; j < cols; ++j)
                w[i][j] = (p * w[i][j] - w[i][col] * w[r][j]) / prev;
            w[i][col] = ExactScalar(0);
        }
        prev = p;
        ++r;
    }
    return r;
}

/// Determinant of a square matrix (Bareiss; the final pivot, sign-adjusted for
/// row swaps).
inline ExactScalar det(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw NotSquare("det requires a square matrix");
    const size_t n = m.rows();
    if (n == 0) return ExactScalar(1);
    std::vector<ExactVector> w(n, ExactVector(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) w[i][j] = m(i, j);

    ExactScalar prev(1);
    int swaps = 0;
    for (size_t k = 0; k < n; ++k) {
        size_t pivot = k;
        while (pivot < n && w[pivot][k].is_zero()) ++pivot;
        if (pivot == n) return ExactScalar(0);
        if (pivot != k) {
            std::swap(w[k], w[pivot]);
            ++swaps;
        }
        const ExactScalar& p = w[k][k];
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) w[i][j] = (p * w[i][j] - w[i][k] * w[k][j]) / prev;
            w[i][k] = ExactScalar(0);
        }
        prev = p;
    }
    return (swaps % 2 == 0) ? w[n - 1][n - 1] : -w[n - 1][n - 1];
}

/// Exact solution X of m * X = rhs for square invertible m.
inline ExactMatrix solve(const ExactMatrix& m, const ExactMatrix& rhs) {
    if (m.rows() != m.cols()) throw NotSquare("solve requires a square matrix");
    if (rhs.rows() != m.rows()) throw Error("solve: right-hand side row mismatch");
    const size_t n = m.rows(), k = rhs.cols();
    ExactMatrix w = m.augmented(rhs);
    // Gauss-Jordan over the field.
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && w(pivot, col).is_zero()) ++pivot;
        if (pivot == n) throw SingularMatrix("matrix is singular");
        if (pivot != col)
            for (size_t j = 0; j < n + k; ++j) std::swap(w(col, j), w(pivot, j));
        ExactScalar inv = w(col, col).inverse();
        for (size_t j = col; j < n + k; ++j) w(col, j) *= inv;
        for (size_t i = 0; i < n; ++i) {
            if (i == col || w(i, col).is_zero()) continue;
            ExactScalar f = w(i, col);
            for (size_t j = col; j < n + k; ++j) w(i, j) -= f * w(col, j);
        }
    }
    ExactMatrix x(n, k);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < k; ++j) x(i, j) = w(i, n + j);
    return x;
}

inline ExactVector solve(const ExactMatrix& m, const ExactVector& rhs) {
    ExactMatrix col(rhs.size(), 1);
    for (size_t i = 0; i < rhs.size(); ++i) col(i, 0) = rhs[i];
    return solve(m, col).column(0);
}

inline ExactMatrix inverse(const ExactMatrix& m) {
    return solve(m, ExactMatrix::identity(m.rows()));
}

/// Basis of the null space, one vector per free column of the RREF.
inline std::vector<ExactVector> kernel_basis(const ExactMatrix& m) {
    const size_t rows = m.rows(), cols = m.cols();
    std::vector<ExactVector> w(rows, ExactVector(cols));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) w[i][j] = m(i, j);

    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t col = 0; col < cols && r < rows; ++col) {
        size_t pivot = r;
        while (pivot < rows && w[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(w[r], w[pivot]);
        ExactScalar inv = w[r][col].inverse();
        for (size_t j = col; j < cols; ++j) w[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || w[i][col].is_zero()) continue;
            ExactScalar f = w[i][col];
            for (size_t j = col; j < cols; ++j) w[i][j] -= f * w[r][j];
        }
        pivot_col.push_back(col);
        ++r;
    }

    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivot_col) is_pivot[c] = true;
    std::vector<ExactVector> basis;
    for (size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        ExactVector v(cols, ExactScalar(0));
        v[free_col] = ExactScalar(1);
        for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -w[i][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace sgstar
