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
#include <cstdint>
#include <optional>
#include <string>

#include "knotslice/errors.hpp"

namespace knotslice {

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return r;
}

}  // namespace detail

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = detail::powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = detail::mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// Z/s for a prime s < 2^32; elements are canonical residues 0..s-1.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t s) : s_(s) {
    if (!is_prime(s)) throw domain_error("PrimeField: modulus " + std::to_string(s) + " is not prime");
    if (s >> 32) throw domain_error("PrimeField: modulus must be below 2^32");
  }

  std::uint64_t modulus() const { return s_; }

  std::uint64_t reduce(long long x) const {
    long long m = static_cast<long long>(s_);
    long long r = x % m;
    return static_cast<std::uint64_t>(r < 0 ? r + m : r);
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % s_; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + s_ - b) % s_; }
  std::uint64_t neg(std::uint64_t a) const { return (s_ - a) % s_; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return detail::mulmod(a, b, s_); }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const { return detail::powmod(a, e, s_); }
  std::uint64_t inv(std::uint64_t a) const {
    if (a % s_ == 0) throw domain_error("PrimeField: zero has no inverse");
    return pow(a, s_ - 2);
  }

  /// Multiplicative order of a nonzero element.
  std::uint64_t order(std::uint64_t a) const {
    if (a % s_ == 0) throw domain_error("PrimeField: zero has no multiplicative order");
    std::uint64_t m = s_ - 1, ord = m;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
      if (m % p) continue;
      while (m % p == 0) m /= p;
      while (ord % p == 0 && pow(a, ord / p) == 1) ord /= p;
    }
    if (m > 1 && pow(a, ord / m) == 1) ord /= m;
    return ord;
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t s_;
};

/**
 * Primitive d-th root of unity mod s: returns `candidate`
 * after validating it, or the smallest element of order d when none is
 * given. Requires d | s - 1.
 */
inline std::uint64_t primitive_root_of_unity(const PrimeField& field, std::uint64_t d,
                                             std::optional<std::uint64_t> candidate = std::nullopt) {
  const std::uint64_t s = field.modulus();
  if (d == 0 || (s - 1) % d != 0)
    throw domain_error("primitive_root_of_unity: " + std::to_string(d) + " does not divide " + std::to_string(s) + " - 1");
  if (candidate) {
    std::uint64_t theta = *candidate % s;
    if (theta == 0 || field.order(theta) != d)
      throw domain_error("primitive_root_of_unity: " + std::to_string(*candidate) + " does not have order " +
                         std::to_string(d) + " mod " + std::to_string(s));
    return theta;
  }
  for (std::uint64_t x = 2; x < s; ++x)
    if (field.order(x) == d) return x;
  if (d == 1) return 1;
  throw domain_error("primitive_root_of_unity: no root found");
}

/**
 * Residue modulo a runtime prime, usable as a generic ring coefficient.
 * A default-constructed value (modulus 0) acts as a modulus-free integer
 * and adopts the modulus of the other operand.
 */
struct Zp {
  std::uint64_t value = 0;
  std::uint64_t modulus = 0;

  Zp() = default;
  Zp(std::uint64_t v, std::uint64_t p) : value(p ? v % p : v), modulus(p) {}

  static std::uint64_t joint(const Zp& a, const Zp& b) { return a.modulus ? a.modulus : b.modulus; }

  friend Zp operator+(const Zp& a, const Zp& b) {
    auto m = joint(a, b);
    return {m ? (a.value % m + b.value % m) % m : a.value + b.value, m};
  }
  friend Zp operator-(const Zp& a, const Zp& b) {
    auto m = joint(a, b);
    return {m ? (a.value % m + m - b.value % m) % m : a.value - b.value, m};
  }
  friend Zp operator*(const Zp& a, const Zp& b) {
    auto m = joint(a, b);
    return {m ? detail::mulmod(a.value % m, b.value % m, m) : a.value * b.value, m};
  }
  Zp operator-() const { return {modulus ? (modulus - value) % modulus : 0 - value, modulus}; }
  friend bool operator==(const Zp& a, const Zp& b) {
    auto m = joint(a, b);
    return m ? a.value % m == b.value % m : a.value == b.value;
  }
};

inline bool is_zero(const Zp& x) { return x.modulus ? x.value % x.modulus == 0 : x.value == 0; }
inline Zp zero_like(const Zp& x) { return {0, x.modulus}; }
inline Zp one_like(const Zp& x) { return {1, x.modulus}; }
inline Zp conjugate(const Zp& x) { return x; }
inline Zp exact_div(const Zp& a, const Zp& b) {
  auto m = Zp::joint(a, b);
  if (m == 0 || is_zero(b)) throw domain_error("Zp: division by zero or missing modulus");
  return a * Zp(detail::powmod(b.value % m, m - 2, m), m);
}
inline std::string to_string(const Zp& x) { return std::to_string(x.value); }

}  // namespace knotslice
