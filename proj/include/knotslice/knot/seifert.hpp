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
#include <memory>
#include <string>

#include "knotslice/algebra/cyclotomic.hpp"
#include "knotslice/algebra/determinant.hpp"
#include "knotslice/algebra/laurent.hpp"
#include "knotslice/algebra/matrix.hpp"
#include "knotslice/errors.hpp"

namespace knotslice {

/// Seifert matrix of K_n for the genus n-1 rotation-invariant surface.
struct SeifertData {
  int n = 0;
  Matrix<Integer> A;

  /// Half the rank: A is 2g x 2g.
  std::size_t genus() const { return A.rows() / 2; }
};

/**
 * A = [[-B^T, 0], [B, B]] with B the (n-1)x(n-1) bidiagonal matrix having 1 on
 * the diagonal and -1 directly below it. With this orientation tA - A^T is
 * the displayed presentation of the Alexander module whose (n-1)-th and
 * (2n-2)-th columns give t a_{n-2} + (1-t) a_{n-1} + t b_{n-1} = 0 and
 * a_{n-2} - a_{n-1} + b_{n-2} + (t-1) b_{n-1} = 0.
 */
inline SeifertData seifert_matrix(int n) {
  if (n < 2) throw domain_error("seifert_matrix: n must be at least 2");
  const std::size_t g = static_cast<std::size_t>(n - 1);
  Matrix<Integer> B(g, g, Integer(0));
  for (std::size_t i = 0; i < g; ++i) {
    B(i, i) = 1;
    if (i + 1 < g) B(i + 1, i) = -1;
  }
  Matrix<Integer> A(2 * g, 2 * g, Integer(0));
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) {
      A(i, j) = -B(j, i);
      A(g + i, j) = B(i, j);
      A(g + i, g + j) = B(i, j);
    }
  return {n, std::move(A)};
}

/// x * A - A^T as a matrix of integer polynomials in t = x.
inline Matrix<IntPoly> seifert_form(const Matrix<Integer>& A, const IntPoly& x) {
  const std::size_t m = A.rows();
  Matrix<IntPoly> out(m, m, IntPoly{});
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out(i, j) = A(i, j) * x - IntPoly(A(j, i));
  return out;
}

/// tA - A^T, the presentation matrix of the Alexander module (relations are its columns).
inline Matrix<IntPoly> alexander_presentation(const SeifertData& sd) {
  return seifert_form(sd.A, IntPoly::monomial(1, 1));
}

/// A - tA^T, whose inverse carries the Blanchfield pairing.
inline Matrix<IntPoly> blanchfield_matrix(const SeifertData& sd) {
  const std::size_t m = sd.A.rows();
  Matrix<IntPoly> out(m, m, IntPoly{});
  const IntPoly t = IntPoly::monomial(1, 1);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out(i, j) = IntPoly(sd.A(i, j)) - sd.A(j, i) * t;
  return out;
}

/// Representative of p up to units +-t^k: lowest exponent 0, positive leading coefficient.
inline IntPoly normalize_up_to_units(const IntPoly& p) {
  if (p.is_zero()) return p;
  IntPoly q = p.shifted(-p.min_exponent());
  return q.leading_coefficient() < 0 ? -q : q;
}

/// det(tA - A^T), normalized up to units.
inline IntPoly alexander_polynomial(const SeifertData& sd) {
  return normalize_up_to_units(det_bareiss(alexander_presentation(sd)));
}

/**
 * p_n(t) = prod_{k=1}^{(n-1)/2} (t^2 + (xi^k - 1 + xi^-k) t + 1), expanded in
 * Z[xi_n][t] and checked to have integer coefficients.
 */
inline IntPoly p_n(int n) {
  if (n < 3 || n % 2 == 0) throw domain_error("p_n: n must be odd and at least 3");
  auto ring = std::make_shared<const CyclotomicRing>(n);
  const auto one = Cyclotomic::from_integer(ring, 1);
  CycPoly product(one);
  for (int k = 1; k <= (n - 1) / 2; ++k) {
    Cyclotomic middle = Cyclotomic::xi(ring, k) - one + Cyclotomic::xi(ring, -k);
    product = product * CycPoly::from_coefficients({one, middle, one});
  }
  std::vector<Integer> coeffs;
  for (const auto& c : product.dense()) {
    auto v = c.as_integer();
    if (!v) throw invariant_error("p_n: coefficient " + c.str() + " is not an integer");
    coeffs.push_back(*v);
  }
  return IntPoly::from_coefficients(std::move(coeffs), product.min_exponent());
}

}  // namespace knotslice
