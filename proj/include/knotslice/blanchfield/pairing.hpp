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

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "knotslice/algebra/determinant.hpp"
#include "knotslice/algebra/laurent.hpp"
#include "knotslice/algebra/matrix.hpp"
#include "knotslice/algebra/smith.hpp"
#include "knotslice/blanchfield/cover_group.hpp"
#include "knotslice/errors.hpp"
#include "knotslice/knot/seifert.hpp"

namespace knotslice {

/// num/den in Q(t), both integer Laurent polynomials.
struct RationalFunction {
  IntPoly num, den;

  bool operator==(const RationalFunction& o) const { return num * o.den == o.num * den; }
  RationalFunction involution() const { return {num.involution(), den.involution()}; }
  std::string str() const { return "(" + num.str() + ")/(" + den.str() + ")"; }
};

/**
 * The 2x2 block of (t-1)(A - tA^T)^-1 on the generators a = a_{n-1} and
 * b = b_{n-1}; c[0][0] = Bl(a, a), c[0][1] = Bl(a, b) and so on. Every
 * entry shares the denominator `determinant` = det(A - tA^T) up to sign.
 */
struct BlanchfieldEntries {
  std::array<std::array<RationalFunction, 2>, 2> c;
  IntPoly determinant;

  bool is_hermitian() const {
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        if (!(c[i][j] == c[j][i].involution())) return false;
    return true;
  }
};

/// Rows/columns g-1 and 2g-1 (0-based), the last alpha and last beta dual curves.
inline BlanchfieldEntries blanchfield_entries(const SeifertData& sd) {
  const std::size_t g = sd.genus();
  if (g == 0) throw domain_error("blanchfield_entries: empty Seifert matrix");
  const auto m = blanchfield_matrix(sd);
  const std::array<std::size_t, 2> idx{g - 1, 2 * g - 1};
  Matrix<IntPoly> rhs(2 * g, 2, IntPoly{});
  rhs(idx[0], 0) = IntPoly(Integer(1));
  rhs(idx[1], 1) = IntPoly(Integer(1));
  auto [d, y] = solve_fraction_free(m, rhs);
  const IntPoly t_minus_1 = int_poly({-1, 1});
  BlanchfieldEntries out;
  out.determinant = d;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) out.c[i][j] = {t_minus_1 * y(idx[i], j), d};
  return out;
}

/// r(t), c with Delta * r = c mod t^q - 1.
struct TorsionInverse {
  IntPoly r;
  Integer c;
};

namespace detail {

inline IntPoly reduce_mod_cyclic(const IntPoly& p, int q) {
  std::vector<Integer> c(static_cast<std::size_t>(q), Integer(0));
  for (const auto& [e, v] : p.terms()) c[static_cast<std::size_t>(((e % q) + q) % q)] += v;
  return IntPoly::from_coefficients(std::move(c));
}

inline Integer lcm_integer(const Integer& x, const Integer& y) { return x / boost::multiprecision::gcd(x, y) * y; }

inline IntPoly as_polynomial(const IntPoly& p) { return p.is_zero() ? p : p.shifted(-p.min_exponent()); }

}  // namespace detail

/// Extended Euclid over Q[t], then clear denominators.
inline TorsionInverse torsion_inverse_gcd(const IntPoly& delta, int q) {
  if (q < 2) throw domain_error("torsion_inverse: q must be at least 2");
  RatPoly old_r = to_rational(detail::as_polynomial(delta));
  RatPoly r = to_rational(IntPoly::monomial(Integer(1), q) - IntPoly(Integer(1)));
  RatPoly old_s(Rational(1)), s;
  while (!r.is_zero()) {
    auto [quot, rem] = divmod(old_r, r);
    old_r = std::exchange(r, rem);
    old_s = std::exchange(s, old_s - quot * s);
  }
  if (old_r.degree() != 0)
    throw inapplicable_error("torsion_inverse: Delta and t^" + std::to_string(q) + " - 1 are not coprime");
  const RatPoly u = (Rational(1) / old_r.leading_coefficient()) * old_s;
  Integer den(1);
  for (const auto& [e, v] : u.terms()) den = detail::lcm_integer(den, boost::multiprecision::denominator(v));
  std::vector<Integer> coeffs;
  for (const auto& v : u.dense()) coeffs.push_back(boost::multiprecision::numerator(v * den));
  // delta was shifted to a polynomial; undo that on r
  IntPoly rr = IntPoly::from_coefficients(std::move(coeffs), u.min_exponent() - delta.min_exponent());
  return {detail::reduce_mod_cyclic(rr, q), den};
}

/**
 * Same pair through the group ring Z[C_q]: multiplication by Delta is a
 * circulant matrix M, and M y = det(M) e_0 gives r = sum y_i t^i, c = +-det(M).
 */
inline TorsionInverse torsion_inverse_circulant(const IntPoly& delta, int q) {
  if (q < 2) throw domain_error("torsion_inverse: q must be at least 2");
  const IntPoly d = detail::reduce_mod_cyclic(delta, q);
  const auto uq = static_cast<std::size_t>(q);
  Matrix<Integer> m(uq, uq, Integer(0));
  for (std::size_t i = 0; i < uq; ++i)
    for (std::size_t j = 0; j < uq; ++j) m(i, j) = d.coefficient(static_cast<int>((i + uq - j) % uq), Integer(0));
  Matrix<Integer> e0(uq, 1, Integer(0));
  e0(0, 0) = 1;
  std::pair<Integer, Matrix<Integer>> solved;
  try {
    solved = solve_fraction_free(m, e0);
  } catch (const invariant_error&) {
    throw inapplicable_error("torsion_inverse: Delta is a zero divisor mod t^" + std::to_string(q) + " - 1");
  }
  std::vector<Integer> coeffs;
  for (std::size_t i = 0; i < uq; ++i) coeffs.push_back(solved.second(i, 0));
  return {IntPoly::from_coefficients(std::move(coeffs)), solved.first};
}

/**
 * lambda_q(x, y) in Q/Z, returned in [0, 1), for x = t^i e and y = t^j f with
 * e, f in {0 = a, 1 = b}. Uses Bl(y, x) = t^(j-i) c[f][e] = p / Delta and
 * reads off the constant term of p r mod t^q - 1.
 */
inline Rational linking_value(const BlanchfieldEntries& bl, const IntPoly& delta, const TorsionInverse& inv, int q,
                              std::size_t e, int i, std::size_t f, int j) {
  const auto& entry = bl.c.at(f).at(e);
  const IntPoly p = exact_div(entry.num * delta, entry.den).shifted(j - i);
  const IntPoly pr = detail::reduce_mod_cyclic(p * inv.r, q);
  Rational v = Rational(pr.coefficient(0, Integer(0))) / Rational(inv.c);
  v -= Rational(boost::multiprecision::numerator(v) / boost::multiprecision::denominator(v));
  if (v < 0) v += 1;
  return v;
}

/**
 * H_1 of the 3-fold branched cover of K_n with its linking form, t-action
 * and the order-n symmetry r_*, all on the Z_n-basis (a, ta, b, tb).
 * linking[x][y] = n * lambda(x, y) mod n. Matrices act on column vectors.
 */
struct CoverHomology {
  long long n = 0;
  int q = 3;
  CoverMatrix linking{};
  CoverMatrix t_action{};
  CoverMatrix r_action{};
  /// +1: lambda(x, t^i y) = alpha_{q-i}/c taken as is.
  int linking_sign = 1;
  TorsionInverse torsion;

  long long lambda(const CoverVector& x, const CoverVector& y) const { return bilinear(linking, x, y, n); }
};

/// Fixed orientation of the linking form; reproduces the reference matrix L.
inline constexpr int kLinkingSign = 1;

/// The reference template (1/n)[[-1,-k,-k,k],[-k,-1,0,-k],[-k,0,1,k],[k,-k,k,1]], n = 2k + 1.
inline CoverMatrix reference_linking_matrix(long long n) {
  const long long k = (n - 1) / 2;
  CoverMatrix m{{{-1, -k, -k, k}, {-k, -1, 0, -k}, {-k, 0, 1, k}, {k, -k, k, 1}}};
  for (auto& row : m)
    for (auto& x : row) x = mod_n(x, n);
  return m;
}

namespace detail {

// x + y t in Z[t]/(t^2 + t + 1).
struct QuadElt {
  long long c0 = 0, c1 = 0;
};

inline QuadElt operator*(QuadElt x, QuadElt y) {
  // t^2 = -1 - t
  const long long t2 = x.c1 * y.c1;
  return {x.c0 * y.c0 - t2, x.c0 * y.c1 + x.c1 * y.c0 - t2};
}
inline QuadElt operator+(QuadElt x, QuadElt y) { return {x.c0 + y.c0, x.c1 + y.c1}; }

}  // namespace detail

/**
 * r_* on (a, ta, b, tb), from r(a) = -t^-1 a - b and r(b) = t^-1 a + (1 - t) b
 * in the Alexander module, with t^-1 = t^2 = -1 - t after t^3 = 1.
 */
inline CoverMatrix symmetry_action(long long n) {
  if (n < 2 || n % 2 == 0 || n % 3 == 0) throw domain_error("symmetry_action: n must be odd and prime to 3");
  using detail::QuadElt;
  const QuadElt one{1, 0}, t{0, 1}, t_inv = t * t;
  // images of a and b as (coefficient of a, coefficient of b)
  const std::array<QuadElt, 2> ra{QuadElt{-t_inv.c0, -t_inv.c1}, QuadElt{-1, 0}};
  const std::array<QuadElt, 2> rb{t_inv, one + QuadElt{0, -1}};
  CoverMatrix m{};
  auto put = [&](std::size_t col, const std::array<QuadElt, 2>& img, QuadElt scale) {
    const QuadElt ca = img[0] * scale, cb = img[1] * scale;
    m[kA][col] = mod_n(ca.c0, n);
    m[kTA][col] = mod_n(ca.c1, n);
    m[kB][col] = mod_n(cb.c0, n);
    m[kTB][col] = mod_n(cb.c1, n);
  };
  put(kA, ra, one);
  put(kTA, ra, t);
  put(kB, rb, one);
  put(kTB, rb, t);
  return m;
}

/// Linking form on H_1(Sigma_3) from the Blanchfield entries (q = 3 only).
inline CoverHomology linking_form(const BlanchfieldEntries& bl, const IntPoly& delta, long long n, int q = 3,
                                  const TorsionInverse* pair = nullptr) {
  if (q != 3) throw domain_error("linking_form: the (a, ta, b, tb) model needs q = 3");
  CoverHomology h;
  h.n = n;
  h.q = q;
  h.torsion = pair ? *pair : torsion_inverse_gcd(delta, q);
  h.linking_sign = kLinkingSign;
  constexpr std::array<std::pair<std::size_t, int>, 4> basis{{{0, 0}, {0, 1}, {1, 0}, {1, 1}}};
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y) {
      const Rational v = linking_value(bl, delta, h.torsion, q, basis[x].first, basis[x].second, basis[y].first,
                                       basis[y].second) *
                         Rational(n);
      if (boost::multiprecision::denominator(v) != 1)
        throw invariant_error("linking_form: lambda does not lie in (1/n)Z/Z");
      h.linking[x][y] = mod_n(kLinkingSign * static_cast<long long>(boost::multiprecision::numerator(v)), n);
    }
  h.t_action = t_action();
  h.r_action = symmetry_action(n);
  return h;
}

/// Everything for K_n in one call.
inline CoverHomology cover_homology(int n) {
  const auto sd = seifert_matrix(n);
  return linking_form(blanchfield_entries(sd), alexander_polynomial(sd), n);
}

/**
 * Nontrivial invariant factors of H_1(Sigma_q): substitute for t the
 * q x q cyclic shift P in tA - A^T, i.e. take A (x) P - A^T (x) I over Z.
 * A zero factor stands for a free Z summand.
 */
inline std::vector<Integer> cover_homology_snf(const SeifertData& sd, int q) {
  if (q < 2) throw domain_error("cover_homology_snf: q must be at least 2");
  const std::size_t m = sd.A.rows(), uq = static_cast<std::size_t>(q);
  Matrix<Integer> big(m * uq, m * uq, Integer(0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < uq; ++k) {
        big(i * uq + (k + 1) % uq, j * uq + k) += sd.A(i, j);
        big(i * uq + k, j * uq + k) -= sd.A(j, i);
      }
  std::vector<Integer> out;
  for (auto& d : smith_normal_form(std::move(big)))
    if (d != 1) out.push_back(d);
  return out;
}

/// Resultant through the Sylvester matrix.
inline Integer resultant(const IntPoly& f, const IntPoly& g) {
  const IntPoly a = detail::as_polynomial(f), b = detail::as_polynomial(g);
  if (a.is_zero() || b.is_zero()) return 0;
  const auto da = static_cast<std::size_t>(a.degree()), db = static_cast<std::size_t>(b.degree());
  const std::size_t size = da + db;
  if (size == 0) return 1;
  Matrix<Integer> s(size, size, Integer(0));
  for (std::size_t r = 0; r < db; ++r)
    for (std::size_t k = 0; k <= da; ++k) s(r, r + k) = a.coefficient(static_cast<int>(da - k), Integer(0));
  for (std::size_t r = 0; r < da; ++r)
    for (std::size_t k = 0; k <= db; ++k) s(db + r, r + k) = b.coefficient(static_cast<int>(db - k), Integer(0));
  return det_bareiss(std::move(s));
}

/// |H_1(Sigma_q)| = |Res(Delta, 1 + t + ... + t^(q-1))|.
inline Integer branched_cover_order(const IntPoly& delta, int q) {
  if (q < 2) throw domain_error("branched_cover_order: q must be at least 2");
  std::vector<Integer> ones(static_cast<std::size_t>(q), Integer(1));
  return boost::multiprecision::abs(resultant(delta, IntPoly::from_coefficients(std::move(ones))));
}

}  // namespace knotslice
