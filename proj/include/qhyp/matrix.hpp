#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qhyp/qscalar.hpp"

namespace qhyp {

/// Dense matrix over an exact field (QScalar or CScalar).
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
      if (r.size() != cols_) throw std::invalid_argument("Matrix: ragged initializer");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  T& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const Matrix& o) const = default;

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  Matrix operator-() const {
    Matrix r = *this;
    for (auto& x : r.data_) x = -x;
    return r;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.check_same(b);
    Matrix r = a;
    for (size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
    return r;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-b); }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: dimension mismatch");
    Matrix r(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (size_t j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
      }
    return r;
  }

  friend Matrix operator*(const T& s, const Matrix& m) {
    Matrix r = m;
    for (auto& x : r.data_) x = s * x;
    return r;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  T trace() const {
    T s{};
    for (size_t i = 0; i < rows_ && i < cols_; ++i) s += (*this)(i, i);
    return s;
  }

  std::vector<T> col(size_t j) const {
    std::vector<T> c(rows_);
    for (size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

 private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("Matrix: dimension mismatch");
  }

  size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

template <typename T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> r(a.rows() * b.rows(), a.cols() * b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (size_t k = 0; k < b.rows(); ++k)
        for (size_t l = 0; l < b.cols(); ++l)
          r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return r;
}

/// In-place reduced row echelon form; returns the pivot columns.
template <typename T>
std::vector<size_t> rref(Matrix<T>& m) {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    T inv = T(1) / m(row, col);
    for (size_t j = col; j < m.cols(); ++j) m(row, j) = inv * m(row, j);
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      T f = m(i, col);
      for (size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <typename T>
size_t rank(Matrix<T> m) {
  return rref(m).size();
}

/// Basis of the right nullspace, one vector per column of the result.
template <typename T>
Matrix<T> nullspace(Matrix<T> m) {
  std::vector<size_t> pivots = rref(m);
  std::vector<size_t> free_cols;
  {
    size_t pi = 0;
    for (size_t c = 0; c < m.cols(); ++c) {
      if (pi < pivots.size() && pivots[pi] == c)
        ++pi;
      else
        free_cols.push_back(c);
    }
  }
  Matrix<T> ns(m.cols(), free_cols.size());
  for (size_t k = 0; k < free_cols.size(); ++k) {
    size_t fc = free_cols[k];
    ns(fc, k) = T(1);
    for (size_t r = 0; r < pivots.size(); ++r) ns(pivots[r], k) = -m(r, fc);
  }
  return ns;
}

/// One solution of A x = b, or nullopt if inconsistent.
template <typename T>
std::optional<std::vector<T>> solve(const Matrix<T>& a, const std::vector<T>& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve: dimension mismatch");
  Matrix<T> aug(a.rows(), a.cols() + 1);
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  std::vector<size_t> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  std::vector<T> x(a.cols());
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
  return x;
}

template <typename T>
std::optional<Matrix<T>> inverse(const Matrix<T>& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse: not square");
  size_t n = a.rows();
  Matrix<T> aug(n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = T(1);
  }
  if (rref(aug).size() != n) return std::nullopt;
  Matrix<T> inv(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

using QMatrix = Matrix<QScalar>;
using CMatrix = Matrix<CScalar>;

}  // namespace qhyp
