#pragma once

/**
 * @file integer.hpp
 * @brief Arbitrary-precision integers and dense integer matrices.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "composition.hpp"

namespace qsym {

using Integer = boost::multiprecision::cpp_int;

/// Dense row-major square or rectangular integer matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw domain_error("matrix product dimension mismatch");
    Matrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Integer& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b(k, j).is_zero()) p(i, j) += x * b(k, j);
      }
    return p;
  }

  bool is_identity() const { return rows_ == cols_ && *this == identity(rows_); }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> data_;
};

namespace detail {
inline void row_axpy(Matrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  // row[dst] -= q * row[src]
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!m(src, c).is_zero()) m(dst, c) -= q * m(src, c);
}
inline void row_swap(Matrix& m, std::size_t a, std::size_t b) {
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}
inline void row_negate(Matrix& m, std::size_t a) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(a, c) = -m(a, c);
}
}  // namespace detail

/**
 * @brief Exact inverse of a square integer matrix with an integral inverse.
 *
 * Gauss-Jordan elimination using only unimodular row operations (Euclidean
 * reduction within each column), so no division ever leaves the integers.
 * @throws domain_error if the matrix is singular or its inverse is not integral.
 */
inline Matrix invert_integral(const Matrix& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw domain_error("cannot invert a non-square matrix");
  Matrix m(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m(r, c) = a(r, c);
    m(r, n + r) = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    // Prefer a unit pivot; fall back to Euclid on the column.
    std::size_t pivot = n;
    for (std::size_t r = col; r < n; ++r)
      if (abs(m(r, col)) == 1) {
        pivot = r;
        break;
      }
    if (pivot == n) {
      while (true) {
        std::size_t best = n;
        for (std::size_t r = col; r < n; ++r)
          if (!m(r, col).is_zero() && (best == n || abs(m(r, col)) < abs(m(best, col)))) best = r;
        if (best == n) throw domain_error("singular transition matrix (column " + std::to_string(col) + ")");
        bool reduced = true;
        for (std::size_t r = col; r < n; ++r) {
          if (r == best || m(r, col).is_zero()) continue;
          Integer q = m(r, col) / m(best, col);
          detail::row_axpy(m, r, best, q);
          if (!m(r, col).is_zero()) reduced = false;
        }
        if (reduced) {
          pivot = best;
          break;
        }
      }
      if (abs(m(pivot, col)) != 1)
        throw domain_error("non-integral inverse: pivot " + m(pivot, col).str() + " in column " + std::to_string(col));
    }
    if (pivot != col) detail::row_swap(m, pivot, col);
    if (m(col, col) == -1) detail::row_negate(m, col);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m(r, col).is_zero()) continue;
      Integer q = m(r, col);
      detail::row_axpy(m, r, col, q);
    }
  }
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = m(r, n + c);
  return inv;
}

}  // namespace qsym
