#ifndef GRASSMORPH_MATRIX_HPP
#define GRASSMORPH_MATRIX_HPP

#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "grassmorph/fp.hpp"
#include "grassmorph/rational.hpp"

namespace grassmorph {

namespace field {

inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const Fp& x) { return x.is_zero(); }
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Fp zero_like(const Fp& x) { return Fp(0, x.modulus()); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Fp one_like(const Fp& x) { return Fp(1, x.modulus()); }

// Pivot cost: exact elimination over Q picks the entry of minimal bit
// length to keep coefficient growth in check. Over F_p any pivot is equal.
inline unsigned long pivot_cost(const Rational& x) { return bit_length(x); }
inline unsigned long pivot_cost(const Fp&) { return 1; }

} // namespace field

/// Dense matrix over an exact field (Rational or Fp). All entries must lie
/// in one common field; over F_p that means one common modulus.
template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
        Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        std::vector<T> out;
        out.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            T acc = field::zero_like(v.empty() ? at(0, 0) : v.front());
            for (std::size_t j = 0; j < cols_; ++j) acc = acc + at(i, j) * v[j];
            out.push_back(acc);
        }
        return out;
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> data_;
};

namespace detail {

/// Row echelon reduction in place. Returns the pivot columns.
/// Deterministic: among candidate pivots takes minimal pivot_cost, ties by
/// lowest row index.
template <typename T>
std::vector<std::size_t> echelonize(Matrix<T>& m) {
    std::vector<std::size_t> pivot_cols;
    std::size_t pr = 0;
    for (std::size_t col = 0; col < m.cols() && pr < m.rows(); ++col) {
        std::size_t best = m.rows();
        unsigned long best_cost = std::numeric_limits<unsigned long>::max();
        for (std::size_t r = pr; r < m.rows(); ++r) {
            if (!field::is_zero(m.at(r, col))) {
                unsigned long c = field::pivot_cost(m.at(r, col));
                if (c < best_cost) { best_cost = c; best = r; }
            }
        }
        if (best == m.rows()) continue;
        if (best != pr)
            for (std::size_t j = col; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(best, j));
        T inv_pivot = field::one_like(m.at(pr, col)) / m.at(pr, col);
        for (std::size_t j = col; j < m.cols(); ++j) m.at(pr, j) = m.at(pr, j) * inv_pivot;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == pr || field::is_zero(m.at(r, col))) continue;
            T factor = m.at(r, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m.at(r, j) = m.at(r, j) - factor * m.at(pr, j);
        }
        pivot_cols.push_back(col);
        ++pr;
    }
    return pivot_cols;
}

} // namespace detail

/// Rank over the entry field, by exact Gaussian elimination.
template <typename T>
std::size_t rank(const Matrix<T>& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Matrix<T> w = m;
    return detail::echelonize(w).size();
}

/// Basis of the right kernel: every returned v satisfies m*v = 0 exactly,
/// and the count is cols - rank. Uses the RREF free-column construction, so
/// output is deterministic.
template <typename T>
std::vector<std::vector<T>> kernel_basis(const Matrix<T>& m, const T& exemplar = T()) {
    const T zero = field::zero_like(m.rows() && m.cols() ? m.at(0, 0) : exemplar);
    const T one = field::one_like(zero);
    if (m.cols() == 0) return {};
    Matrix<T> w = m;
    std::vector<std::size_t> pivots = m.rows() ? detail::echelonize(w) : std::vector<std::size_t>{};
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<T>> basis;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<T> v(m.cols(), zero);
        v[free_col] = one;
        for (std::size_t pi = 0; pi < pivots.size(); ++pi)
            v[pivots[pi]] = zero - w.at(pi, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Determinant of a square matrix by exact elimination.
template <typename T>
T det(Matrix<T> m, const T& exemplar = T()) {
    const T zero = field::zero_like(m.rows() ? m.at(0, 0) : exemplar);
    const T one = field::one_like(zero);
    if (m.rows() != m.cols()) throw Error("det: matrix not square");
    std::size_t n = m.rows();
    if (n == 0) return one;
    T result = one;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t best = n;
        unsigned long best_cost = std::numeric_limits<unsigned long>::max();
        for (std::size_t r = col; r < n; ++r) {
            if (!field::is_zero(m.at(r, col))) {
                unsigned long c = field::pivot_cost(m.at(r, col));
                if (c < best_cost) { best_cost = c; best = r; }
            }
        }
        if (best == n) return zero;
        if (best != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(m.at(col, j), m.at(best, j));
            result = zero - result;
        }
        const T pivot = m.at(col, col);
        result = result * pivot;
        T inv_pivot = one / pivot;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (field::is_zero(m.at(r, col))) continue;
            T factor = m.at(r, col) * inv_pivot;
            for (std::size_t j = col; j < n; ++j)
                m.at(r, j) = m.at(r, j) - factor * m.at(col, j);
        }
    }
    return result;
}

using QMatrix = Matrix<Rational>;
using FpMatrix = Matrix<Fp>;

} // namespace grassmorph

#endif
