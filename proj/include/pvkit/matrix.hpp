#pragma once

// Dense matrices over a field (RatFunc for module data, CycloNum for
// constant matrices). Row-major storage. Everything here is exact.

#include <optional>
#include <vector>

#include "pvkit/ratfunc.hpp"

namespace pvkit {

template <typename K>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<K> entries)
      : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows_ * cols_) throw Error("Matrix: entry count mismatch");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  K& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const K& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  const std::vector<K>& entries() const { return a_; }

  bool is_zero() const {
    for (const auto& v : a_)
      if (!(v == K())) return false;
    return true;
  }

  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
      throw Error("Matrix: shape mismatch in addition");
    Matrix r = x;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = r.a_[i] + y.a_[i];
    return r;
  }

  friend Matrix operator-(const Matrix& x, const Matrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
      throw Error("Matrix: shape mismatch in subtraction");
    Matrix r = x;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = r.a_[i] - y.a_[i];
    return r;
  }

  Matrix operator-() const {
    Matrix r = *this;
    for (auto& v : r.a_) v = -v;
    return r;
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) throw Error("Matrix: shape mismatch in product");
    Matrix r(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        const K& xik = x(i, k);
        if (xik == K()) continue;
        for (std::size_t j = 0; j < y.cols_; ++j)
          r(i, j) = r(i, j) + xik * y(k, j);
      }
    return r;
  }

  friend Matrix operator*(const K& s, const Matrix& x) {
    Matrix r = x;
    for (auto& v : r.a_) v = s * v;
    return r;
  }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  K trace() const {
    if (!is_square()) throw Error("Matrix: trace of non-square matrix");
    K t{};
    for (std::size_t i = 0; i < rows_; ++i) t = t + (*this)(i, i);
    return t;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<K> a_;
};

template <typename K>
Matrix<K> kron(const Matrix<K>& x, const Matrix<K>& y) {
  Matrix<K> r(x.rows() * y.rows(), x.cols() * y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) {
      if (x(i, j) == K()) continue;
      for (std::size_t p = 0; p < y.rows(); ++p)
        for (std::size_t q = 0; q < y.cols(); ++q)
          r(i * y.rows() + p, j * y.cols() + q) = x(i, j) * y(p, q);
    }
  return r;
}

// In-place reduced row echelon form. Returns pivot column indices.
template <typename K>
std::vector<std::size_t> rref(Matrix<K>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col) == K()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m(sel, j), m(row, j));
    K inv = K(1) / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = inv * m(row, j);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == K()) continue;
      K f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        m(i, j) = m(i, j) - f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <typename K>
std::size_t rank(Matrix<K> m) {
  return rref(m).size();
}

template <typename K>
K det(Matrix<K> m) {
  if (!m.is_square()) throw Error("det: non-square matrix");
  K d = K(1);
  std::size_t n = m.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && m(sel, col) == K()) ++sel;
    if (sel == n) return K();
    if (sel != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(sel, j), m(col, j));
      d = -d;
    }
    d = d * m(col, col);
    K inv = K(1) / m(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m(i, col) == K()) continue;
      K f = inv * m(i, col);
      for (std::size_t j = col; j < n; ++j)
        m(i, j) = m(i, j) - f * m(col, j);
    }
  }
  return d;
}

template <typename K>
std::optional<Matrix<K>> try_inverse(const Matrix<K>& m) {
  if (!m.is_square()) throw Error("inverse: non-square matrix");
  std::size_t n = m.rows();
  Matrix<K> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = K(1);
  }
  auto pivots = rref(aug);
  if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
  Matrix<K> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

template <typename K>
Matrix<K> inverse(const Matrix<K>& m) {
  auto inv = try_inverse(m);
  if (!inv) throw Error("inverse: matrix is singular");
  return *inv;
}

// Basis of the right kernel {v : m v = 0}, one column per basis vector.
template <typename K>
Matrix<K> kernel_basis(Matrix<K> m) {
  std::size_t n = m.cols();
  auto pivots = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix<K> basis(n, free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t fc = free_cols[k];
    basis(fc, k) = K(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      basis(pivots[r], k) = -m(r, fc);
  }
  return basis;
}

// Solves m x = b (b may have several columns). Returns nullopt if inconsistent.
template <typename K>
std::optional<Matrix<K>> solve(const Matrix<K>& m, const Matrix<K>& b) {
  if (m.rows() != b.rows()) throw Error("solve: shape mismatch");
  std::size_t n = m.cols();
  Matrix<K> aug(m.rows(), n + b.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) aug(i, n + j) = b(i, j);
  }
  auto pivots = rref(aug);
  for (std::size_t r = 0; r < pivots.size(); ++r)
    if (pivots[r] >= n) return std::nullopt;
  Matrix<K> x(n, b.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[r], j) = aug(r, n + j);
  return x;
}

// Entrywise derivative of a matrix of rational functions.
inline Matrix<RatFunc> derive(const Matrix<RatFunc>& m) {
  Matrix<RatFunc> r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).derivative();
  return r;
}

using FMat = Matrix<RatFunc>;
using CMat = Matrix<CycloNum>;

}  // namespace pvkit
