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
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "knotslice/algebra/ring.hpp"
#include "knotslice/errors.hpp"
#include "knotslice/ff/prime_field.hpp"

namespace knotslice {

/// Dense univariate polynomial over Z/s, ascending coefficients, normalized.
class FpPoly {
 public:
  explicit FpPoly(PrimeField field) : field_(field) {}

  FpPoly(PrimeField field, std::vector<std::uint64_t> ascending) : field_(field), c_(std::move(ascending)) {
    for (auto& x : c_) x %= field_.modulus();
    trim();
  }

  /// From signed integer coefficients (reduced mod s).
  static FpPoly from_signed(PrimeField field, const std::vector<long long>& ascending) {
    std::vector<std::uint64_t> c;
    c.reserve(ascending.size());
    for (auto x : ascending) c.push_back(field.reduce(x));
    return FpPoly(field, std::move(c));
  }

  static FpPoly constant(PrimeField field, std::uint64_t v) { return FpPoly(field, {v}); }
  static FpPoly x(PrimeField field) { return FpPoly(field, {0, 1}); }
  /// c * x^e
  static FpPoly monomial(PrimeField field, std::uint64_t c, std::size_t e) {
    std::vector<std::uint64_t> v(e + 1, 0);
    v[e] = c;
    return FpPoly(field, std::move(v));
  }

  const PrimeField& field() const { return field_; }
  std::uint64_t modulus() const { return field_.modulus(); }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::uint64_t leading() const { return c_.empty() ? 0 : c_.back(); }
  std::uint64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  const std::vector<std::uint64_t>& coefficients() const { return c_; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

  FpPoly monic() const {
    if (is_zero()) return *this;
    return scaled(field_.inv(leading()));
  }

  FpPoly scaled(std::uint64_t k) const {
    FpPoly r = *this;
    for (auto& x : r.c_) x = field_.mul(x, k);
    r.trim();
    return r;
  }

  FpPoly derivative() const {
    FpPoly r(field_);
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = field_.mul(c_[i], i % field_.modulus());
    r.trim();
    return r;
  }

  std::uint64_t evaluate(std::uint64_t x) const {
    std::uint64_t acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = field_.add(field_.mul(acc, x), *it);
    return acc;
  }

  friend FpPoly operator+(const FpPoly& a, const FpPoly& b) { return a.combine(b, false); }
  friend FpPoly operator-(const FpPoly& a, const FpPoly& b) { return a.combine(b, true); }

  friend FpPoly operator*(const FpPoly& a, const FpPoly& b) {
    FpPoly r(a.field_);
    if (a.is_zero() || b.is_zero()) return r;
    const std::uint64_t s = a.modulus();
    std::vector<unsigned __int128> acc(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (!a.c_[i]) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] += static_cast<unsigned __int128>(a.c_[i]) * b.c_[j];
    }
    r.c_.resize(acc.size());
    for (std::size_t k = 0; k < acc.size(); ++k) r.c_[k] = static_cast<std::uint64_t>(acc[k] % s);
    r.trim();
    return r;
  }

  friend std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) {
    if (b.is_zero()) throw domain_error("FpPoly: division by zero polynomial");
    FpPoly q(a.field_), r = a;
    if (a.degree() < b.degree()) return {q, r};
    const auto& f = a.field_;
    const std::uint64_t inv = f.inv(b.leading());
    const std::size_t db = static_cast<std::size_t>(b.degree());
    q.c_.assign(static_cast<std::size_t>(a.degree() - b.degree()) + 1, 0);
    for (std::size_t top = r.c_.size(); top-- > db;) {
      std::uint64_t coef = f.mul(r.c_[top], inv);
      if (!coef) continue;
      q.c_[top - db] = coef;
      for (std::size_t j = 0; j <= db; ++j) r.c_[top - db + j] = f.sub(r.c_[top - db + j], f.mul(coef, b.c_[j]));
    }
    q.trim();
    r.trim();
    return {q, r};
  }

  friend FpPoly operator/(const FpPoly& a, const FpPoly& b) { return divmod(a, b).first; }
  friend FpPoly operator%(const FpPoly& a, const FpPoly& b) { return divmod(a, b).second; }

  friend bool operator==(const FpPoly& a, const FpPoly& b) { return a.modulus() == b.modulus() && a.c_ == b.c_; }

  /// e.g. "t^2 + 13*t + 1"
  std::string str(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (!c_[i]) continue;
      if (!first) os << " + ";
      first = false;
      if (c_[i] != 1 || i == 0) os << c_[i];
      if (i > 0) {
        if (c_[i] != 1) os << "*";
        os << var;
        if (i > 1) os << "^" << i;
      }
    }
    return os.str();
  }

 private:
  FpPoly combine(const FpPoly& b, bool subtract) const {
    if (modulus() != b.modulus()) throw domain_error("FpPoly: mixing different prime fields");
    FpPoly r = *this;
    if (r.c_.size() < b.c_.size()) r.c_.resize(b.c_.size(), 0);
    for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] = subtract ? field_.sub(r.c_[i], b.c_[i]) : field_.add(r.c_[i], b.c_[i]);
    r.trim();
    return r;
  }

  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  PrimeField field_;
  std::vector<std::uint64_t> c_;
};

/// Monic gcd (zero only when both inputs are zero).
inline FpPoly gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// base^e mod m, for an arbitrary-precision exponent.
inline FpPoly powmod(const FpPoly& base, Integer e, const FpPoly& m) {
  FpPoly result = FpPoly::constant(base.field(), 1) % m;
  FpPoly b = base % m;
  while (e > 0) {
    if (static_cast<unsigned>(e & 1)) result = (result * b) % m;
    e >>= 1;
    if (e > 0) b = (b * b) % m;
  }
  return result;
}

/// x^(s^k) mod m via k Frobenius steps.
inline FpPoly frobenius_power(const FpPoly& m, unsigned k) {
  FpPoly h = FpPoly::x(m.field()) % m;
  for (unsigned i = 0; i < k; ++i) h = powmod(h, Integer(m.modulus()), m);
  return h;
}

/**
 * Rabin's test: f of degree d is irreducible iff x^(s^d) = x mod f and
 * gcd(x^(s^(d/q)) - x, f) = 1 for each prime q | d.
 */
inline bool is_irreducible(const FpPoly& f) {
  const int d = f.degree();
  if (d < 1) return false;
  if (d == 1) return true;
  const FpPoly x = FpPoly::x(f.field());
  if (!(frobenius_power(f, static_cast<unsigned>(d)) == x % f)) return false;
  int rest = d;
  for (int q = 2; q <= rest; ++q) {
    if (rest % q) continue;
    while (rest % q == 0) rest /= q;
    if (!gcd(f, frobenius_power(f, static_cast<unsigned>(d / q)) - x).is_one()) return false;
  }
  return true;
}

}  // namespace knotslice
