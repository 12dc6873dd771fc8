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
#include <optional>
#include <utility>
#include <vector>

#include "knotslice/algebra/laurent.hpp"
#include "knotslice/algebra/matrix.hpp"
#include "knotslice/algebra/ring.hpp"

namespace knotslice {

/// Euclidean structure used by smith_normal_form.
template <class R>
struct Euclidean;

template <>
struct Euclidean<Integer> {
  static Integer size(const Integer& x) { return abs(x); }
  static std::pair<Integer, Integer> divmod(const Integer& a, const Integer& b) {
    Integer q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    return {q, r};
  }
  static Integer normalize(const Integer& x) { return abs(x); }
};

/// Q[t]; entries must be genuine polynomials (no negative exponents).
template <>
struct Euclidean<RatPoly> {
  static int size(const RatPoly& p) { return p.degree(); }
  static std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) { return knotslice::divmod(a, b); }
  static RatPoly normalize(const RatPoly& p) {
    if (p.is_zero()) return p;
    return Rational(1) / p.leading_coefficient() * p;
  }
};

namespace detail {

template <class R>
void row_axpy(Matrix<R>& m, std::size_t dst, std::size_t src, const R& q, std::size_t from) {
  // row[dst] -= q * row[src]
  for (std::size_t j = from; j < m.cols(); ++j)
    if (!is_zero(m(src, j))) m(dst, j) = m(dst, j) - q * m(src, j);
}

template <class R>
void col_axpy(Matrix<R>& m, std::size_t dst, std::size_t src, const R& q, std::size_t from) {
  for (std::size_t i = from; i < m.rows(); ++i)
    if (!is_zero(m(i, src))) m(i, dst) = m(i, dst) - q * m(i, src);
}

}  // namespace detail

/**
 * Invariant factors d_1 | d_2 | ... | d_k of m, k = min(rows, cols), each
 * normalized (nonnegative integers, monic polynomials). Zero factors, if
 * any, come last. Pivots are chosen by minimal Euclidean size with a
 * row-major scan, so the elimination order is deterministic.
 */
template <class R>
std::vector<R> smith_normal_form(Matrix<R> m) {
  using E = Euclidean<R>;
  const std::size_t k = std::min(m.rows(), m.cols());
  std::vector<R> diag;
  diag.reserve(k);
  std::size_t t = 0;
  for (; t < k; ++t) {
    bool found = true;
    for (;;) {
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t i = t; i < m.rows(); ++i)
        for (std::size_t j = t; j < m.cols(); ++j)
          if (!is_zero(m(i, j)) && (!best || E::size(m(i, j)) < E::size(m(best->first, best->second)))) best = {i, j};
      if (!best) {
        found = false;
        break;
      }
      m.swap_rows(t, best->first);
      m.swap_cols(t, best->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < m.rows(); ++i) {
        if (is_zero(m(i, t))) continue;
        auto [q, r] = E::divmod(m(i, t), m(t, t));
        detail::row_axpy(m, i, t, q, t);
        if (!is_zero(r)) clean = false;
      }
      for (std::size_t j = t + 1; j < m.cols(); ++j) {
        if (is_zero(m(t, j))) continue;
        auto [q, r] = E::divmod(m(t, j), m(t, t));
        detail::col_axpy(m, j, t, q, t);
        if (!is_zero(r)) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the whole remaining block; fold in an offending row.
      std::optional<std::size_t> bad;
      for (std::size_t i = t + 1; i < m.rows() && !bad; ++i)
        for (std::size_t j = t + 1; j < m.cols(); ++j)
          if (!is_zero(m(i, j)) && !is_zero(E::divmod(m(i, j), m(t, t)).second)) {
            bad = i;
            break;
          }
      if (!bad) break;
      for (std::size_t j = t; j < m.cols(); ++j) m(t, j) = m(t, j) + m(*bad, j);
    }
    if (!found) break;
    diag.push_back(E::normalize(m(t, t)));
  }
  const R zero = diag.empty() ? R{} : zero_like(diag.front());
  for (; t < k; ++t) diag.push_back(zero);
  return diag;
}

}  // namespace knotslice
