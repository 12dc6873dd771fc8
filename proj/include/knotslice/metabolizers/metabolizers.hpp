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
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "knotslice/blanchfield/cover_group.hpp"
#include "knotslice/blanchfield/pairing.hpp"
#include "knotslice/errors.hpp"
#include "knotslice/ff/prime_field.hpp"
#include "knotslice/metabolizers/character.hpp"

namespace knotslice {

/**
 * An order n^2 t-invariant submodule of (Z_n)^4. Either
 *   P_{n0,n1} = span_{Z_n[t]} { a + (n0 + n1 t) b }
 *             = span_{Z_n} { a + n0 b + n1 tb, ta - n1 b + (n0 - n1) tb }
 * or P' = span { b, tb }.
 */
struct Submodule {
  enum class Kind { kP, kPrime };
  Kind kind = Kind::kP;
  long long n = 0;
  long long n0 = 0, n1 = 0;

  static Submodule P(long long n0, long long n1, long long n) { return {Kind::kP, n, mod_n(n0, n), mod_n(n1, n)}; }
  static Submodule prime(long long n) { return {Kind::kPrime, n, 0, 0}; }

  std::array<CoverVector, 2> generators() const {
    if (kind == Kind::kPrime) return {CoverVector{0, 0, 1, 0}, CoverVector{0, 0, 0, 1}};
    return {reduce({1, 0, n0, n1}, n), reduce({0, 1, -n1, n0 - n1}, n)};
  }

  /// Membership; the a and ta coordinates pin down the combination of generators.
  bool contains(const CoverVector& v) const {
    const auto [g1, g2] = generators();
    CoverVector w{};
    if (kind == Kind::kPrime) return mod_n(v[kA], n) == 0 && mod_n(v[kTA], n) == 0;
    for (std::size_t i = 0; i < 4; ++i) w[i] = mod_n(v[kA] * g1[i] + v[kTA] * g2[i], n);
    return w == reduce(v, n);
  }

  /// All n^2 elements.
  std::vector<CoverVector> elements() const {
    const auto [g1, g2] = generators();
    std::vector<CoverVector> out;
    out.reserve(static_cast<std::size_t>(n * n));
    for (long long x = 0; x < n; ++x)
      for (long long y = 0; y < n; ++y) {
        CoverVector v{};
        for (std::size_t i = 0; i < 4; ++i) v[i] = mod_n(x * g1[i] + y * g2[i], n);
        out.push_back(v);
      }
    return out;
  }

  std::string str() const {
    if (kind == Kind::kPrime) return "P'";
    return "P_{" + std::to_string(centered(n0, n)) + "," + std::to_string(centered(n1, n)) + "}";
  }

  friend bool operator==(const Submodule&, const Submodule&) = default;
  friend auto operator<=>(const Submodule&, const Submodule&) = default;
};

namespace detail {

// Inverse in F_{n^2} = Z_n[t]/(t^2 + t + 1): conj(x) / N(x) with conj(t) = t^2 = -1 - t.
inline QuadElt quad_inverse(QuadElt x, long long n) {
  const long long norm = mod_n(x.c0 * x.c0 - x.c0 * x.c1 + x.c1 * x.c1, n);
  if (norm == 0) throw domain_error("quad_inverse: element is not invertible");
  const long long inv = static_cast<long long>(PrimeField(static_cast<std::uint64_t>(n)).inv(static_cast<std::uint64_t>(norm)));
  return {mod_n(mod_n(x.c0 - x.c1, n) * inv, n), mod_n(mod_n(-x.c1, n) * inv, n)};
}

inline void require_classification(long long n) {
  if (n < 5 || n % 6 != 5 || !is_prime(static_cast<std::uint64_t>(n)))
    throw domain_error("metabolizers: submodule classification needs a prime n = 5 mod 6, got " + std::to_string(n));
}

}  // namespace detail

/// m(P) for a Z_n[t]-linear m, read off from the image of a + (n0 + n1 t) b.
inline Submodule image_of(const Submodule& p, const CoverMatrix& m) {
  detail::require_classification(p.n);
  const long long n = p.n;
  // P' is generated by b
  const CoverVector gen = p.kind == Submodule::Kind::kPrime ? CoverVector{0, 0, 1, 0} : p.generators()[0];
  const CoverVector img = apply(m, gen, n);
  const detail::QuadElt f{img[kA], img[kTA]}, g{img[kB], img[kTB]};
  if (mod_n(f.c0, n) == 0 && mod_n(f.c1, n) == 0) {
    if (mod_n(g.c0, n) == 0 && mod_n(g.c1, n) == 0) throw invariant_error("image_of: map kills a generator");
    return Submodule::prime(n);
  }
  const auto h = g * detail::quad_inverse(f, n);
  return Submodule::P(h.c0, h.c1, n);
}

/// lambda vanishes on P x P (checked on generator pairs); the order is n^2 by construction.
inline bool is_metabolizer(const Submodule& p, const CoverHomology& h) {
  if (p.n != h.n) throw dimension_error("is_metabolizer: modulus mismatch");
  const auto g = p.generators();
  for (const auto& x : g)
    for (const auto& y : g)
      if (h.lambda(x, y) != 0) return false;
  return true;
}

/// Debug variant: every pair of the n^2 elements.
inline bool is_metabolizer_exhaustive(const Submodule& p, const CoverHomology& h) {
  const auto elems = p.elements();
  for (const auto& x : elems)
    for (const auto& y : elems)
      if (h.lambda(x, y) != 0) return false;
  return true;
}

/// The n^2 + 1 order n^2 submodules: every P_{n0,n1}, then P'.
inline std::vector<Submodule> invariant_submodules(long long n) {
  detail::require_classification(n);
  std::vector<Submodule> out;
  out.reserve(static_cast<std::size_t>(n * n + 1));
  for (long long n0 = 0; n0 < n; ++n0)
    for (long long n1 = 0; n1 < n; ++n1) out.push_back(Submodule::P(n0, n1, n));
  out.push_back(Submodule::prime(n));
  return out;
}

inline std::vector<Submodule> enumerate_metabolizers(const CoverHomology& h) {
  std::vector<Submodule> out;
  for (const auto& p : invariant_submodules(h.n))
    if (is_metabolizer(p, h)) out.push_back(p);
  return out;
}

/// r-orbits, each starting at its smallest member; sorted by size, then first member.
inline std::vector<std::vector<Submodule>> orbit_decomposition(const std::vector<Submodule>& mets, const CoverMatrix& r) {
  std::vector<std::vector<Submodule>> orbits;
  std::vector<Submodule> sorted = mets;
  std::sort(sorted.begin(), sorted.end());
  std::vector<bool> seen(sorted.size(), false);
  auto index_of = [&](const Submodule& p) -> std::optional<std::size_t> {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), p);
    if (it == sorted.end() || !(*it == p)) return std::nullopt;
    return static_cast<std::size_t>(it - sorted.begin());
  };
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (seen[i]) continue;
    std::vector<Submodule> orbit;
    Submodule cur = sorted[i];
    do {
      auto j = index_of(cur);
      if (!j) throw invariant_error("orbit_decomposition: r maps a metabolizer to " + cur.str() + ", outside the set");
      if (seen[*j]) throw invariant_error("orbit_decomposition: r does not permute the metabolizers");
      seen[*j] = true;
      orbit.push_back(cur);
      cur = image_of(cur, r);
    } while (!(cur == sorted[i]));
    orbits.push_back(std::move(orbit));
  }
  std::stable_sort(orbits.begin(), orbits.end(), [](const auto& x, const auto& y) { return x.size() < y.size(); });
  return orbits;
}

/// P_+ = P_{1,1} and P_- = P_{-1,-1}.
inline Submodule p_plus(long long n) { return Submodule::P(1, 1, n); }
inline Submodule p_minus(long long n) { return Submodule::P(-1, -1, n); }

/// A character vanishing on P together with where it came from.
struct CharacterChoice {
  Character chi;
  int sign = 0;  // base character chi_+ or chi_-
  long long k = 0;  // P = r^k(P_-); 0 for P_+ and P_-
};

/**
 * chi_+ for P_+, and chi_- o r^-k when P = r^k(P_-). Precomposing with r^-k
 * is what moves the kernel from P_- onto r^k(P_-).
 */
inline CharacterChoice character_for(const Submodule& p, const CoverHomology& h) {
  const long long n = h.n;
  CharacterChoice out;
  if (p == p_plus(n)) {
    out = {sign_character(n, 1), 1, 0};
  } else {
    Submodule cur = p_minus(n);
    long long k = 0;
    while (!(cur == p) && k < n) {
      cur = image_of(cur, h.r_action);
      ++k;
    }
    if (!(cur == p)) throw domain_error("character_for: " + p.str() + " is neither P_+ nor in the orbit of P_-");
    out = {sign_character(n, -1).compose(power(h.r_action, static_cast<unsigned long>((n - k) % n), n)), -1, k};
  }
  for (const auto& g : p.generators())
    if (out.chi(g) != 0) throw invariant_error("character_for: character does not vanish on " + p.str());
  return out;
}

}  // namespace knotslice
