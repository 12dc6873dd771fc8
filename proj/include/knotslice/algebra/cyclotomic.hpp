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
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "knotslice/algebra/laurent.hpp"
#include "knotslice/algebra/ring.hpp"
#include "knotslice/errors.hpp"

namespace knotslice {

/// n-th cyclotomic polynomial Phi_n in Z[x].
inline IntPoly cyclotomic_polynomial(int n) {
  if (n < 1) throw domain_error("cyclotomic_polynomial: n must be positive");
  // x^n - 1 divided by Phi_d for every proper divisor d of n.
  IntPoly p = IntPoly::monomial(1, n) - IntPoly(Integer(1));
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = exact_div(p, cyclotomic_polynomial(d));
  return p;
}

/// Z[xi_n] = Z[x] / Phi_n(x), with xi_n = exp(2 pi i / n).
class CyclotomicRing {
 public:
  explicit CyclotomicRing(int n) : n_(n), modulus_(cyclotomic_polynomial(n)) {}

  int order() const { return n_; }
  /// Euler phi(n): the rank of Z[xi_n] over Z.
  int rank() const { return modulus_.degree(); }
  const IntPoly& modulus() const { return modulus_; }

 private:
  int n_;
  IntPoly modulus_;
};

/**
 * Element of Z[xi_n], stored as its phi(n) integer coordinates in the power
 * basis 1, xi, ..., xi^(phi(n)-1). A default-constructed element has no
 * ring attached and behaves as the integer 0; binary operations adopt the
 * ring of the other operand.
 */
class Cyclotomic {
 public:
  Cyclotomic() = default;

  static Cyclotomic from_integer(std::shared_ptr<const CyclotomicRing> ring, const Integer& m) {
    Cyclotomic z(std::move(ring));
    z.coeffs_[0] = m;
    return z;
  }

  /// Ringless integer; adopts the ring of whatever it is combined with.
  static Cyclotomic integer(const Integer& m) {
    Cyclotomic z;
    z.coeffs_[0] = m;
    return z;
  }

  /// xi_n^k for any integer k.
  static Cyclotomic xi(std::shared_ptr<const CyclotomicRing> ring, long k) {
    const int n = ring->order();
    long e = ((k % n) + n) % n;
    std::vector<Integer> raw(static_cast<std::size_t>(e) + 1, 0);
    raw.back() = 1;
    Cyclotomic z(std::move(ring));
    z.assign_reduced(std::move(raw));
    return z;
  }

  const std::shared_ptr<const CyclotomicRing>& ring() const { return ring_; }
  int order() const { return ring_ ? ring_->order() : 0; }

  /// Coordinates in the power basis (length phi(n), or 1 without a ring).
  std::vector<Integer> coordinates() const {
    if (!ring_) return {scalar()};
    return coeffs_;
  }

  /// The integer value when every xi-coordinate vanishes.
  std::optional<Integer> as_integer() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (!coeffs_[i].is_zero()) return std::nullopt;
    return scalar();
  }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!c.is_zero()) return false;
    return true;
  }

  /// Complex conjugation xi -> xi^-1.
  Cyclotomic conjugate() const {
    if (!ring_) return *this;
    const int n = ring_->order();
    std::vector<Integer> raw(static_cast<std::size_t>(n), 0);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) raw[(static_cast<std::size_t>(n) - k) % static_cast<std::size_t>(n)] += coeffs_[k];
    Cyclotomic z(ring_);
    z.assign_reduced(std::move(raw));
    return z;
  }

  Cyclotomic operator-() const {
    Cyclotomic z = *this;
    for (auto& c : z.coeffs_) c = -c;
    return z;
  }

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) { return combine(a, b, false); }
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return combine(a, b, true); }

  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    if (!a.ring_ && !b.ring_) {
      Cyclotomic z;
      z.coeffs_[0] = a.scalar() * b.scalar();
      return z;
    }
    if (!a.ring_) return b.scaled(a.scalar());
    if (!b.ring_) return a.scaled(b.scalar());
    check_same(a, b);
    std::vector<Integer> raw(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) raw[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    Cyclotomic z(a.ring_);
    z.assign_reduced(std::move(raw));
    return z;
  }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return (a - b).is_zero(); }

  std::string str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (coeffs_[k].is_zero()) continue;
      if (!first) os << " + ";
      first = false;
      os << coeffs_[k];
      if (k > 0) os << "*z^" << k;
    }
    if (first) os << "0";
    return os.str();
  }

 private:
  explicit Cyclotomic(std::shared_ptr<const CyclotomicRing> ring)
      : ring_(std::move(ring)), coeffs_(static_cast<std::size_t>(ring_->rank()), 0) {}

  const Integer& scalar() const { return coeffs_[0]; }

  Cyclotomic scaled(const Integer& s) const {
    Cyclotomic z = *this;
    for (auto& c : z.coeffs_) c *= s;
    return z;
  }

  static void check_same(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.ring_->order() != b.ring_->order()) throw domain_error("Cyclotomic: mixing different cyclotomic rings");
  }

  static Cyclotomic combine(const Cyclotomic& a, const Cyclotomic& b, bool subtract) {
    if (!a.ring_ && !b.ring_) {
      Cyclotomic z;
      z.coeffs_[0] = subtract ? a.scalar() - b.scalar() : a.scalar() + b.scalar();
      return z;
    }
    if (a.ring_ && b.ring_) check_same(a, b);
    Cyclotomic z(a.ring_ ? a.ring_ : b.ring_);
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) z.coeffs_[k] += a.coeffs_[k];
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) z.coeffs_[k] += subtract ? -b.coeffs_[k] : b.coeffs_[k];
    return z;
  }

  // Reduce an arbitrary-length coordinate vector modulo the monic Phi_n.
  void assign_reduced(std::vector<Integer> raw) {
    const auto& phi = ring_->modulus().dense();
    const std::size_t d = phi.size() - 1;
    for (std::size_t top = raw.size(); top-- > d;) {
      if (raw[top].is_zero()) continue;
      Integer c = raw[top];
      for (std::size_t j = 0; j <= d; ++j) raw[top - d + j] -= c * phi[j];
    }
    raw.resize(d, 0);
    coeffs_ = std::move(raw);
  }

  std::shared_ptr<const CyclotomicRing> ring_;
  std::vector<Integer> coeffs_ = std::vector<Integer>(1, 0);
};

inline bool is_zero(const Cyclotomic& z) { return z.is_zero(); }
inline Cyclotomic zero_like(const Cyclotomic& z) {
  return z.ring() ? Cyclotomic::from_integer(z.ring(), 0) : Cyclotomic{};
}
inline Cyclotomic one_like(const Cyclotomic& z) {
  if (z.ring()) return Cyclotomic::from_integer(z.ring(), 1);
  return Cyclotomic::integer(1);
}
inline Cyclotomic conjugate(const Cyclotomic& z) { return z.conjugate(); }
inline std::string to_string(const Cyclotomic& z) { return z.str(); }

using CycPoly = Laurent<Cyclotomic>;

}  // namespace knotslice
