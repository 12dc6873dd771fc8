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
#include <utility>

#include "knotslice/algebra/matrix.hpp"
#include "knotslice/algebra/ring.hpp"
#include "knotslice/errors.hpp"

namespace knotslice {

namespace detail {

// Swap a nonzero entry of column k (at or below row k) into the pivot slot.
// Returns false when the column is zero there.
template <ExactDomain R>
bool bring_pivot(Matrix<R>& m, std::size_t k, bool& negate) {
  if (!is_zero(m(k, k))) return true;
  for (std::size_t i = k + 1; i < m.rows(); ++i) {
    if (!is_zero(m(i, k))) {
      m.swap_rows(i, k);
      negate = !negate;
      return true;
    }
  }
  return false;
}

// One Bareiss step: eliminate below pivot (k, k) on columns k+1..cols-1.
template <ExactDomain R>
void bareiss_step(Matrix<R>& m, std::size_t k, const R& prev) {
  const R& pivot = m(k, k);
  for (std::size_t i = k + 1; i < m.rows(); ++i) {
    const R lead = m(i, k);
    for (std::size_t j = k + 1; j < m.cols(); ++j) m(i, j) = exact_div(m(i, j) * pivot - lead * m(k, j), prev);
    m(i, k) = zero_like(lead);
  }
}

}  // namespace detail

/**
 * Determinant by Bareiss fraction-free elimination. Every intermediate
 * division is exact, so this works over Z[t^+-1] as well as over Z.
 */
template <ExactDomain R>
R det_bareiss(Matrix<R> m) {
  if (!m.is_square()) throw dimension_error("det_bareiss: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return one_like(R{});
  bool negate = false;
  R prev = one_like(m(0, 0));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (!detail::bring_pivot(m, k, negate)) return zero_like(m(0, 0));
    detail::bareiss_step(m, k, prev);
    prev = m(k, k);
  }
  R d = m(n - 1, n - 1);
  return negate ? -d : d;
}

/**
 * Fraction-free solve of m * x = rhs. Returns (d, y) with m * y = d * rhs,
 * where d = +-det(m), so that x = y / d. Throws invariant_error when m is
 * singular.
 */
template <ExactDomain R>
std::pair<R, Matrix<R>> solve_fraction_free(const Matrix<R>& m, const Matrix<R>& rhs) {
  if (!m.is_square()) throw dimension_error("solve_fraction_free: matrix is not square");
  if (rhs.rows() != m.rows()) throw dimension_error("solve_fraction_free: right-hand side has wrong height");
  const std::size_t n = m.rows(), w = rhs.cols();
  if (n == 0) return {one_like(R{}), rhs};

  Matrix<R> aug(n, n + w, zero_like(m(0, 0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    for (std::size_t j = 0; j < w; ++j) aug(i, n + j) = rhs(i, j);
  }
  bool negate = false;
  R prev = one_like(m(0, 0));
  for (std::size_t k = 0; k < n; ++k) {
    if (!detail::bring_pivot(aug, k, negate)) throw invariant_error("solve_fraction_free: singular matrix");
    detail::bareiss_step(aug, k, prev);
    prev = aug(k, k);
  }
  const R d = aug(n - 1, n - 1);
  Matrix<R> y(n, w, zero_like(d));
  for (std::size_t c = 0; c < w; ++c) {
    for (std::size_t i = n; i-- > 0;) {
      R acc = d * aug(i, n + c);
      for (std::size_t j = i + 1; j < n; ++j) acc = acc - aug(i, j) * y(j, c);
      y(i, c) = exact_div(acc, aug(i, i));
    }
  }
  return {d, std::move(y)};
}

}  // namespace knotslice
