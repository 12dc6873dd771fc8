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
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "knotslice/algebra/determinant.hpp"
#include "knotslice/errors.hpp"
#include "knotslice/ff/fp_poly.hpp"
#include "knotslice/ff/prime_field.hpp"
#include "knotslice/knot/braid.hpp"
#include "knotslice/knot/wirtinger.hpp"
#include "knotslice/metabolizers/character.hpp"
#include "knotslice/twisted/fox.hpp"
#include "knotslice/twisted/representation.hpp"

namespace knotslice {

/// Determinant of a dense square matrix over Z/s (row-major), by elimination.
inline std::uint64_t det_mod(std::vector<std::uint64_t> a, std::size_t n, const PrimeField& f) {
  std::uint64_t det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv * n + k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[piv * n + j]);
      det = f.neg(det);
    }
    const std::uint64_t p = a[k * n + k];
    det = f.mul(det, p);
    const std::uint64_t inv = f.inv(p);
    for (std::size_t i = k + 1; i < n; ++i) {
      const std::uint64_t factor = f.mul(a[i * n + k], inv);
      if (!factor) continue;
      for (std::size_t j = k; j < n; ++j) a[i * n + j] = f.sub(a[i * n + j], f.mul(factor, a[k * n + j]));
    }
  }
  return det;
}

/// Unique polynomial of degree < xs.size() through (xs[i], ys[i]); Newton form.
inline FpPoly interpolate(const PrimeField& f, const std::vector<std::uint64_t>& xs, const std::vector<std::uint64_t>& ys) {
  const std::size_t m = xs.size();
  std::vector<std::uint64_t> dd = ys;
  for (std::size_t level = 1; level < m; ++level)
    for (std::size_t i = m - 1; i >= level; --i)
      dd[i] = f.mul(f.sub(dd[i], dd[i - 1]), f.inv(f.sub(xs[i], xs[i - level])));
  FpPoly p(f);
  for (std::size_t i = m; i-- > 0;) p = p * FpPoly(f, {f.neg(xs[i]), 1}) + FpPoly::constant(f, dd[i]);
  return p;
}

inline FpPoly to_fp_poly(const ZpPoly& p, const PrimeField& f) {
  if (p.is_zero()) return FpPoly(f);
  if (p.min_exponent() < 0) throw domain_error("to_fp_poly: negative exponent");
  std::vector<std::uint64_t> c(static_cast<std::size_t>(p.max_exponent()) + 1, 0);
  for (const auto& [e, v] : p.terms()) c[static_cast<std::size_t>(e)] = v.value;
  return FpPoly(f, std::move(c));
}

enum class DeterminantMethod { kInterpolation, kBareiss };

/**
 * det of a matrix over Z_s[t]. Interpolation evaluates at deg_bound + 1
 * points of Z_s, where deg_bound counts rows carrying a t-term; when Z_s is
 * too small for that, or on request, polynomial Bareiss is used instead.
 */
inline FpPoly polynomial_determinant(const ZpMatrix& m, const PrimeField& f,
                                     std::optional<DeterminantMethod> method = std::nullopt) {
  if (!m.is_square()) throw dimension_error("polynomial_determinant: matrix is not square");
  const std::size_t n = m.rows();
  std::size_t bound = 0;
  for (std::size_t i = 0; i < n; ++i) {
    int row_deg = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const auto& e = m(i, j);
      if (e.is_zero()) continue;
      if (e.min_exponent() < 0) throw domain_error("polynomial_determinant: negative exponent");
      row_deg = std::max(row_deg, e.max_exponent());
    }
    bound += static_cast<std::size_t>(row_deg);
  }
  DeterminantMethod use = method.value_or(bound + 1 <= f.modulus() ? DeterminantMethod::kInterpolation : DeterminantMethod::kBareiss);
  if (use == DeterminantMethod::kBareiss) return to_fp_poly(det_bareiss(m), f);
  if (bound + 1 > f.modulus()) throw domain_error("polynomial_determinant: field too small to interpolate");

  std::vector<std::uint64_t> xs, ys;
  std::vector<std::uint64_t> dense(n * n);
  for (std::uint64_t x = 0; x <= bound; ++x) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) dense[i * n + j] = to_fp_poly(m(i, j), f).evaluate(x);
    xs.push_back(x);
    ys.push_back(det_mod(dense, n, f));
  }
  return interpolate(f, xs, ys);
}

struct TwistedPolynomial {
  long long n = 0;
  Character chi;
  std::uint64_t s = 0;
  std::uint64_t theta = 0;
  FpPoly raw_determinant;
  FpPoly polynomial;  // monic, nonzero constant term
  int target_degree = 0;
  bool degree_check = false;
};

struct TwistedOptions {
  int skip_relator = 0;
  int skip_generator = 0;
  std::optional<DeterminantMethod> method;
};

/**
 * pi of the reduced twisted Alexander polynomial of K_n for the character
 * chi, over Z_s with xi_n -> theta: the deleted Fox determinant divided by
 * (t - 1)^2, normalized monic with nonzero constant term. degree_check
 * records whether its degree is 2 floor((c - 3) / 2) = 2(n - 2).
 */
inline TwistedPolynomial twisted_polynomial(long long n, const Character& chi, std::uint64_t s, std::uint64_t theta,
                                            const TwistedOptions& opts = {}) {
  if (chi.n != n) throw domain_error("twisted_polynomial: character has order " + std::to_string(chi.n));
  PrimeField field(s);
  Reduction pi{field, primitive_root_of_unity(field, static_cast<std::uint64_t>(n), theta)};
  const auto pres = wirtinger_of_closure(family_braid(static_cast<int>(n)));
  const auto rep = twisted_rep(chi, pres);
  const auto m = fox_matrix(rep, pres, pi, opts.skip_relator, opts.skip_generator);

  TwistedPolynomial out{n, chi, s, pi.theta, polynomial_determinant(m, field, opts.method), FpPoly(field), 0, false};
  const FpPoly t_minus_1_sq = FpPoly::from_signed(field, {1, -2, 1});
  auto [q, r] = divmod(out.raw_determinant, t_minus_1_sq);
  if (!r.is_zero() || out.raw_determinant.is_zero())
    throw invariant_error("twisted_polynomial: determinant " + out.raw_determinant.str() + " is not divisible by (t-1)^2");
  std::size_t low = 0;
  while (q.coeff(low) == 0) ++low;
  std::vector<std::uint64_t> shifted(q.coefficients().begin() + static_cast<std::ptrdiff_t>(low), q.coefficients().end());
  out.polynomial = FpPoly(field, std::move(shifted)).monic();
  out.target_degree = 2 * ((pres.generator_count - 3) / 2);
  out.degree_check = out.polynomial.degree() == out.target_degree;
  return out;
}

}  // namespace knotslice
