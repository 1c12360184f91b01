#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pdalg/errors.hpp"
#include "pdalg/ratexpr.hpp"
#include "pdalg/scalar.hpp"

namespace pdalg {

/// Dense row-major matrix over an exact field (GaussianRational or RatExpr).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b(k, j).is_zero()) out(i, j) += a(i, k) * b(k, j);
      }
    return out;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_square() const { return rows_ == cols_; }

  /// Exact determinant by fraction-carrying Gaussian elimination.
  T determinant() const {
    if (!is_square()) throw DomainError("determinant of a non-square matrix");
    Matrix a = *this;
    T det(1);
    for (std::size_t col = 0; col < rows_; ++col) {
      std::size_t piv = col;
      while (piv < rows_ && a(piv, col).is_zero()) ++piv;
      if (piv == rows_) return T(0);
      if (piv != col) {
        a.swap_rows(piv, col);
        det = -det;
      }
      det *= a(col, col);
      const T inv = T(1) / a(col, col);
      for (std::size_t r = col + 1; r < rows_; ++r) {
        if (a(r, col).is_zero()) continue;
        const T factor = a(r, col) * inv;
        for (std::size_t c = col; c < cols_; ++c)
          if (!a(col, c).is_zero()) a(r, c) -= factor * a(col, c);
      }
    }
    return det;
  }

  /// Exact inverse; nullopt for a singular matrix.
  std::optional<Matrix> inverse() const {
    if (!is_square()) throw DomainError("inverse of a non-square matrix");
    const std::size_t n = rows_;
    Matrix a = *this;
    Matrix inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t piv = col;
      while (piv < n && a(piv, col).is_zero()) ++piv;
      if (piv == n) return std::nullopt;
      a.swap_rows(piv, col);
      inv.swap_rows(piv, col);
      const T s = T(1) / a(col, col);
      for (std::size_t c = 0; c < n; ++c) {
        if (!a(col, c).is_zero()) a(col, c) *= s;
        if (!inv(col, c).is_zero()) inv(col, c) *= s;
      }
      for (std::size_t r = 0; r < n; ++r) {
        if (r == col || a(r, col).is_zero()) continue;
        const T factor = a(r, col);
        for (std::size_t c = 0; c < n; ++c) {
          if (!a(col, c).is_zero()) a(r, c) -= factor * a(col, c);
          if (!inv(col, c).is_zero()) inv(r, c) -= factor * inv(col, c);
        }
      }
    }
    return inv;
  }

  /// Solves A x = b exactly. Returns one solution (free variables set to
  /// zero) or nullopt when the system is inconsistent.
  std::optional<std::vector<T>> solve(const std::vector<T>& b) const {
    if (b.size() != rows_) throw DomainError("right-hand side size mismatch");
    Matrix a(rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) a(i, j) = (*this)(i, j);
      a(i, cols_) = b[i];
    }
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
      std::size_t piv = row;
      while (piv < rows_ && a(piv, col).is_zero()) ++piv;
      if (piv == rows_) continue;
      a.swap_rows(piv, row);
      const T s = T(1) / a(row, col);
      for (std::size_t c = col; c <= cols_; ++c) a(row, c) *= s;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (r == row || a(r, col).is_zero()) continue;
        const T factor = a(r, col);
        for (std::size_t c = col; c <= cols_; ++c) a(r, c) -= factor * a(row, c);
      }
      pivot_cols.push_back(col);
      ++row;
    }
    for (std::size_t r = row; r < rows_; ++r)
      if (!a(r, cols_).is_zero()) return std::nullopt;
    std::vector<T> x(cols_, T(0));
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) x[pivot_cols[r]] = a(r, cols_);
    return x;
  }

 private:
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ScalarMatrix = Matrix<GaussianRational>;
using ExprMatrix = Matrix<RatExpr>;

}  // namespace pdalg
