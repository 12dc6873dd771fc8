/*
   Copyright 2026 The knotslice Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "knotslice/algebra/ring.hpp"
#include "knotslice/errors.hpp"

namespace knotslice {

/// Dense row-major matrix over a commutative ring.
template <CommutativeRing R>
class Matrix {
 public:
  Matrix() = default;

  Matrix(std::size_t rows, std::size_t cols, const R& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  Matrix(std::size_t rows, std::size_t cols, std::vector<R> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) throw dimension_error("Matrix: entry count does not match shape");
  }

  Matrix(std::initializer_list<std::initializer_list<R>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
      if (r.size() != cols_) throw dimension_error("Matrix: ragged initializer");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n, const R& one) {
    Matrix m(n, n, zero_like(one));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return data_.empty(); }

  R& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const R& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<R>& entries() const { return data_; }

  Matrix transpose() const {
    Matrix t;
    t.rows_ = cols_;
    t.cols_ = rows_;
    t.data_.reserve(data_.size());
    for (std::size_t j = 0; j < cols_; ++j)
      for (std::size_t i = 0; i < rows_; ++i) t.data_.push_back((*this)(i, j));
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  /// Entrywise image under f.
  template <class F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const R&>()))> {
    using S = decltype(f(std::declval<const R&>()));
    std::vector<S> out;
    out.reserve(data_.size());
    for (const auto& x : data_) out.push_back(f(x));
    return Matrix<S>(rows_, cols_, std::move(out));
  }

  /// Copy with row i and column j removed.
  Matrix minor(std::size_t i, std::size_t j) const {
    std::vector<R> out;
    out.reserve((rows_ - 1) * (cols_ - 1));
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == i) continue;
      for (std::size_t c = 0; c < cols_; ++c)
        if (c != j) out.push_back((*this)(r, c));
    }
    return Matrix(rows_ - 1, cols_ - 1, std::move(out));
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) { return zip(a, b, false); }
  friend Matrix operator-(const Matrix& a, const Matrix& b) { return zip(a, b, true); }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw dimension_error("Matrix: product shape mismatch");
    if (a.empty() || b.empty()) return Matrix(a.rows_, b.cols_, std::vector<R>(a.rows_ * b.cols_));
    const R zero = zero_like(a.data_.front());
    Matrix c(a.rows_, b.cols_, zero);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const R& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = c(i, j) + aik * b(k, j);
      }
    return c;
  }

  friend Matrix operator*(const R& s, const Matrix& a) {
    Matrix c = a;
    for (auto& x : c.data_) x = s * x;
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  static Matrix zip(const Matrix& a, const Matrix& b, bool subtract) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw dimension_error("Matrix: shape mismatch");
    Matrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] = subtract ? c.data_[k] - b.data_[k] : c.data_[k] + b.data_[k];
    return c;
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<R> data_;
};

/// Kronecker product a (x) b.
template <CommutativeRing R>
Matrix<R> kronecker(const Matrix<R>& a, const Matrix<R>& b) {
  std::vector<R> out;
  out.reserve(a.rows() * b.rows() * a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < b.rows(); ++k)
      for (std::size_t j = 0; j < a.cols(); ++j)
        for (std::size_t l = 0; l < b.cols(); ++l) out.push_back(a(i, j) * b(k, l));
  return Matrix<R>(a.rows() * b.rows(), a.cols() * b.cols(), std::move(out));
}

/// Matrix power by repeated squaring; m must be square.
template <CommutativeRing R>
Matrix<R> power(Matrix<R> m, unsigned long e, const R& one) {
  if (!m.is_square()) throw dimension_error("power: matrix must be square");
  Matrix<R> acc = Matrix<R>::identity(m.rows(), one);
  while (e) {
    if (e & 1) acc = acc * m;
    m = m * m;
    e >>= 1;
  }
  return acc;
}

}  // namespace knotslice
