#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "okd/errors.hpp"
#include "okd/polynomial.hpp"
#include "okd/scalars.hpp"

namespace okd {

/// Dense row-major matrix over a field.
template <Field F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}
  /// From nested rows; throws DomainError if ragged.
  Matrix(std::initializer_list<std::initializer_list<F>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DomainError("ragged matrix rows");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }
  static Matrix from_rows(const std::vector<std::vector<F>>& rows) {
    Matrix out(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != out.cols_) throw DomainError("ragged matrix rows");
      for (std::size_t j = 0; j < out.cols_; ++j) out(i, j) = rows[i][j];
    }
    return out;
  }

  static Matrix identity(std::size_t n) {
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = F(1);
    return out;
  }
  static Matrix diagonal(const std::vector<F>& entries) {
    Matrix out(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) out(i, i) = entries[i];
    return out;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }
  /// Entrywise conjugate.
  Matrix conjugate() const {
    Matrix out = *this;
    for (auto& x : out.data_) x = conj(x);
    return out;
  }
  Matrix adjoint() const { return conjugate().transpose(); }

  F trace() const {
    F t(0);
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t = t + (*this)(i, i);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix shape mismatch in product");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const F& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) = out(i, j) + aik * b(k, j);
      }
    return out;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = out.data_[i] + b.data_[i];
    return out;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = out.data_[i] - b.data_[i];
    return out;
  }
  friend Matrix operator*(const F& s, const Matrix& a) {
    Matrix out = a;
    for (auto& x : out.data_) x = s * x;
    return out;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i)
      if (!(a.data_[i] == b.data_[i])) return false;
    return true;
  }

  std::vector<std::vector<F>> to_rows() const {
    std::vector<std::vector<F>> out(rows_, std::vector<F>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
    return out;
  }

 private:
  void require_same_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw DomainError("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

/// Rank by exact Gaussian elimination (tolerance-based for Complex).
template <Field F>
std::size_t rank(Matrix<F> m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && is_zero(m(pivot, c))) ++pivot;
    if (pivot == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(pivot, j));
    const F inv = F(1) / m(r, c);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (is_zero(m(i, c))) continue;
      const F factor = m(i, c) * inv;
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = m(i, j) - factor * m(r, j);
    }
    ++r;
  }
  return r;
}

/// A nonzero vector x with m x = 0, if one exists.
template <Field F>
std::optional<std::vector<F>> kernel_vector(Matrix<F> m) {
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && is_zero(m(pivot, c))) ++pivot;
    if (pivot == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(pivot, j));
    const F inv = F(1) / m(r, c);
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const F factor = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = m(i, j) - factor * m(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::size_t free_col = 0;
  for (std::size_t k = 0; free_col < m.cols(); ++free_col, ++k) {
    if (k >= pivot_cols.size() || pivot_cols[k] != free_col) break;
  }
  if (free_col == m.cols()) return std::nullopt;
  std::vector<F> x(m.cols(), F(0));
  x[free_col] = F(1);
  for (std::size_t k = 0; k < pivot_cols.size(); ++k) x[pivot_cols[k]] = -m(k, free_col);
  return x;
}

/// Inverse by Gauss-Jordan; std::nullopt when singular or not square.
template <Field F>
std::optional<Matrix<F>> inverse(const Matrix<F>& a) {
  if (!a.square()) return std::nullopt;
  const std::size_t n = a.rows();
  Matrix<F> m = a;
  Matrix<F> inv = Matrix<F>::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && is_zero(m(pivot, c))) ++pivot;
    if (pivot == n) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(m(c, j), m(pivot, j));
      std::swap(inv(c, j), inv(pivot, j));
    }
    const F p = F(1) / m(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      m(c, j) = m(c, j) * p;
      inv(c, j) = inv(c, j) * p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || is_zero(m(i, c))) continue;
      const F factor = m(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) = m(i, j) - factor * m(c, j);
        inv(i, j) = inv(i, j) - factor * inv(c, j);
      }
    }
  }
  return inv;
}

/// Result of the exact positive-semidefiniteness test.
struct PsdVerdict {
  bool psd = true;
  /// Pivots taken by the symmetric elimination, in order.
  std::vector<Rational> pivots;
  /// Diagonal index (in the original numbering) whose pivot was negative,
  /// or of a zero diagonal with a nonzero off-diagonal entry in its row.
  std::optional<std::size_t> witness;
};

/// Exact PSD test for a symmetric rational matrix by symmetric Gaussian
/// elimination with diagonal pivoting: at each step a nonzero diagonal entry
/// is eliminated; a negative pivot, or a zero diagonal with a nonzero entry
/// in its row, certifies that the matrix is not PSD.
PsdVerdict psd_test(const Matrix<Rational>& g);

/// Characteristic polynomial det(xI - m) over Q.
RationalPolynomial characteristic_polynomial(const Matrix<Rational>& m);

/// Monic invariant factors of xI - m over Q[x] (the non-unit diagonal of its
/// Smith normal form), in divisibility order. Complete similarity invariant.
std::vector<RationalPolynomial> invariant_factors(const Matrix<Rational>& m);

/// Whether two square rational matrices are similar over Q.
bool similar(const Matrix<Rational>& a, const Matrix<Rational>& b);

/// Rational roots of a nonzero polynomial with rational coefficients.
std::vector<Rational> rational_roots(const RationalPolynomial& p);

}  // namespace okd
