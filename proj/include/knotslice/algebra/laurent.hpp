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

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "knotslice/algebra/ring.hpp"
#include "knotslice/errors.hpp"

namespace knotslice {

/**
 * Laurent polynomial sum_k c_k t^k over a commutative ring R.
 *
 * Stored densely from the lowest to the highest nonzero exponent. The
 * representation is kept normalized (no zero at either end; the zero
 * polynomial is empty) so that equality is structural.
 */
template <CommutativeRing R>
class Laurent {
 public:
  using coefficient_type = R;

  Laurent() = default;

  explicit Laurent(R constant) {
    if (!detail::coeff_is_zero(constant)) coeffs_.push_back(std::move(constant));
  }

  /// Ascending coefficients starting at exponent `low`.
  static Laurent from_coefficients(std::vector<R> ascending, int low = 0) {
    Laurent p;
    p.low_ = low;
    p.coeffs_ = std::move(ascending);
    p.normalize();
    return p;
  }

  static Laurent monomial(R coefficient, int exponent) {
    Laurent p;
    if (!detail::coeff_is_zero(coefficient)) {
      p.low_ = exponent;
      p.coeffs_.push_back(std::move(coefficient));
    }
    return p;
  }

  bool is_zero() const { return coeffs_.empty(); }
  int min_exponent() const { return low_; }
  int max_exponent() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }

  /// Width max - min of the support; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  bool is_polynomial() const { return is_zero() || low_ >= 0; }
  bool is_constant() const { return is_zero() || (coeffs_.size() == 1 && low_ == 0); }

  const R& leading_coefficient() const {
    require_nonzero("leading_coefficient");
    return coeffs_.back();
  }
  const R& trailing_coefficient() const {
    require_nonzero("trailing_coefficient");
    return coeffs_.front();
  }

  /// Coefficient of t^e; `zero` is returned outside the support.
  R coefficient(int e, const R& zero) const {
    if (is_zero() || e < low_ || e > max_exponent()) return zero;
    return coeffs_[static_cast<std::size_t>(e - low_)];
  }
  R coefficient(int e) const {
    return coefficient(e, is_zero() ? R{} : zero_like(coeffs_.front()));
  }

  /// Nonzero terms as (exponent, coefficient), ascending.
  std::vector<std::pair<int, R>> terms() const {
    std::vector<std::pair<int, R>> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!detail::coeff_is_zero(coeffs_[i])) out.emplace_back(low_ + static_cast<int>(i), coeffs_[i]);
    return out;
  }

  /// Dense ascending coefficients from min_exponent() to max_exponent().
  const std::vector<R>& dense() const { return coeffs_; }

  Laurent shifted(int k) const {
    Laurent p = *this;
    if (!p.is_zero()) p.low_ += k;
    return p;
  }

  /// t^i -> t^-i, with the coefficient involution applied.
  Laurent involution() const
    requires InvolutiveRing<R>
  {
    Laurent p;
    if (is_zero()) return p;
    p.low_ = -max_exponent();
    p.coeffs_.reserve(coeffs_.size());
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) p.coeffs_.push_back(conjugate(*it));
    p.normalize();
    return p;
  }

  /// Value at x; negative exponents need an invertible x via exact_div.
  R evaluate(const R& x) const {
    if (is_zero()) return zero_like(x);
    R acc = zero_like(x);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    if (low_ > 0) {
      for (int i = 0; i < low_; ++i) acc = acc * x;
    } else if (low_ < 0) {
      if constexpr (ExactDomain<R>) {
        R xp = one_like(x);
        for (int i = 0; i < -low_; ++i) xp = xp * x;
        acc = exact_div(acc, xp);
      } else {
        throw domain_error("evaluate: negative exponents need exact division");
      }
    }
    return acc;
  }

  Laurent operator-() const {
    Laurent p = *this;
    for (auto& c : p.coeffs_) c = -c;
    return p;
  }

  Laurent& operator+=(const Laurent& o) { return add_scaled(o, false); }
  Laurent& operator-=(const Laurent& o) { return add_scaled(o, true); }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent p;
    if (a.is_zero() || b.is_zero()) return p;
    p.low_ = a.low_ + b.low_;
    p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, zero_like(a.coeffs_.front()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (detail::coeff_is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) p.coeffs_[i + j] = p.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
    p.normalize();
    return p;
  }

  friend Laurent operator*(const R& s, const Laurent& a) {
    Laurent p = a;
    for (auto& c : p.coeffs_) c = s * c;
    p.normalize();
    return p;
  }

  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.coeffs_.size() == b.coeffs_.size() && (a.is_zero() || a.low_ == b.low_) && a.coeffs_ == b.coeffs_;
  }

  std::string str(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 0; --i) {
      const R& c = coeffs_[static_cast<std::size_t>(i)];
      if (detail::coeff_is_zero(c)) continue;
      int e = low_ + i;
      if (!first) os << " + ";
      first = false;
      bool unit = c == one_like(c);
      if (!unit || e == 0) os << "(" << to_string(c) << ")";
      if (e != 0) {
        if (!unit) os << "*";
        os << var;
        if (e != 1) os << "^" << e;
      }
    }
    return os.str();
  }

 private:
  void require_nonzero(const char* what) const {
    if (is_zero()) throw domain_error(std::string(what) + ": zero polynomial");
  }

  Laurent& add_scaled(const Laurent& o, bool subtract) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
      *this = subtract ? -o : o;
      return *this;
    }
    int lo = std::min(low_, o.low_);
    int hi = std::max(max_exponent(), o.max_exponent());
    if (lo < low_) coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), zero_like(coeffs_.front()));
    low_ = lo;
    coeffs_.resize(static_cast<std::size_t>(hi - lo + 1), zero_like(coeffs_.front()));
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      auto& c = coeffs_[static_cast<std::size_t>(o.low_ - lo) + j];
      c = subtract ? c - o.coeffs_[j] : c + o.coeffs_[j];
    }
    normalize();
    return *this;
  }

  void normalize() {
    std::size_t hi = coeffs_.size();
    while (hi > 0 && detail::coeff_is_zero(coeffs_[hi - 1])) --hi;
    coeffs_.resize(hi, R{});
    std::size_t lo = 0;
    while (lo < coeffs_.size() && detail::coeff_is_zero(coeffs_[lo])) ++lo;
    if (lo > 0) {
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lo));
      low_ += static_cast<int>(lo);
    }
    if (coeffs_.empty()) low_ = 0;
  }

  int low_ = 0;
  std::vector<R> coeffs_;
};

// Ring protocol so that Laurent<R> can itself be a coefficient or matrix entry.

template <CommutativeRing R>
bool is_zero(const Laurent<R>& p) {
  return p.is_zero();
}

template <CommutativeRing R>
Laurent<R> zero_like(const Laurent<R>&) {
  return {};
}

template <CommutativeRing R>
Laurent<R> one_like(const Laurent<R>& p) {
  return Laurent<R>(p.is_zero() ? one_like(R{}) : one_like(p.dense().front()));
}

template <InvolutiveRing R>
Laurent<R> conjugate(const Laurent<R>& p) {
  return p.involution();
}

/**
 * Exact quotient a / b in R[t, t^-1]. Throws domain_error when b does not
 * divide a. Leading coefficients must divide exactly in R.
 */
template <ExactDomain R>
Laurent<R> exact_div(const Laurent<R>& a, const Laurent<R>& b) {
  if (b.is_zero()) throw domain_error("exact_div: division by zero polynomial");
  Laurent<R> q;
  if (a.is_zero()) return q;
  const int lowest = a.min_exponent() - b.min_exponent();
  Laurent<R> r = a;
  while (!r.is_zero()) {
    int e = r.max_exponent() - b.max_exponent();
    if (e < lowest) throw domain_error("exact_div: polynomial does not divide");
    auto term = Laurent<R>::monomial(exact_div(r.leading_coefficient(), b.leading_coefficient()), e);
    q += term;
    r -= term * b;
  }
  return q;
}

/**
 * Quotient and remainder as ordinary polynomials over a field. Both
 * operands must have nonnegative exponents; the divisor's leading
 * coefficient must be invertible.
 */
template <ExactDomain R>
std::pair<Laurent<R>, Laurent<R>> divmod(const Laurent<R>& a, const Laurent<R>& b) {
  if (b.is_zero()) throw domain_error("divmod: division by zero polynomial");
  if (!a.is_polynomial() || !b.is_polynomial()) throw domain_error("divmod: operands must be polynomials");
  Laurent<R> q, r = a;
  while (!r.is_zero() && r.max_exponent() >= b.max_exponent()) {
    R c = exact_div(r.leading_coefficient(), b.leading_coefficient());
    auto term = Laurent<R>::monomial(c, r.max_exponent() - b.max_exponent());
    q += term;
    r -= term * b;
  }
  return {std::move(q), std::move(r)};
}

template <CommutativeRing R>
std::string to_string(const Laurent<R>& p) {
  return p.str();
}

/// The variable t as a Laurent polynomial over R, built from a ring exemplar.
template <CommutativeRing R>
Laurent<R> variable(const R& like) {
  return Laurent<R>::monomial(one_like(like), 1);
}

using IntPoly = Laurent<Integer>;
using RatPoly = Laurent<Rational>;

/// Integer Laurent polynomial from ascending int coefficients.
inline IntPoly int_poly(std::initializer_list<long> ascending, int low = 0) {
  std::vector<Integer> c(ascending.begin(), ascending.end());
  return IntPoly::from_coefficients(std::move(c), low);
}

inline RatPoly to_rational(const IntPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.dense().size());
  for (const auto& x : p.dense()) c.emplace_back(x);
  return RatPoly::from_coefficients(std::move(c), p.min_exponent());
}

}  // namespace knotslice
