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
#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "knotslice/errors.hpp"
#include "knotslice/ff/fp_poly.hpp"

namespace knotslice {

/// Seed used for equal-degree splitting unless the caller picks another.
inline constexpr std::uint64_t kDefaultFactorSeed = 0x5eed'2024'0b57ull;

struct FactorizationResult {
  PrimeField field;
  std::uint64_t unit = 1;
  /// Monic irreducible factors with multiplicity, sorted by (degree,
  /// ascending coefficient vector).
  std::vector<std::pair<FpPoly, int>> factors;
  std::uint64_t seed = kDefaultFactorSeed;

  FpPoly product() const {
    FpPoly p = FpPoly::constant(field, unit);
    for (const auto& [f, m] : factors)
      for (int i = 0; i < m; ++i) p = p * f;
    return p;
  }
};

namespace detail {

// f(x) = g(x^s); returns g. Valid when f' = 0 over Z/s.
inline FpPoly pth_root(const FpPoly& f) {
  const std::uint64_t s = f.modulus();
  std::vector<std::uint64_t> c;
  for (std::size_t i = 0; i < f.coefficients().size(); i += s) c.push_back(f.coefficients()[i]);
  return FpPoly(f.field(), std::move(c));
}

// Square-free decomposition of a monic polynomial: pairs (g, m) with g
// squarefree, pairwise coprime, f = prod g^m.
inline void squarefree(const FpPoly& f, int mult, std::vector<std::pair<FpPoly, int>>& out) {
  if (f.degree() < 1) return;
  FpPoly c = gcd(f, f.derivative());
  FpPoly w = f / c;
  int i = 1;
  while (w.degree() > 0) {
    FpPoly y = gcd(w, c);
    FpPoly fac = w / y;
    if (fac.degree() > 0) out.emplace_back(fac.monic(), i * mult);
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) squarefree(pth_root(c).monic(), mult * static_cast<int>(f.modulus()), out);
}

// Distinct-degree factorization of a monic squarefree polynomial.
inline std::vector<std::pair<FpPoly, int>> distinct_degree(FpPoly g) {
  std::vector<std::pair<FpPoly, int>> out;
  const FpPoly x = FpPoly::x(g.field());
  FpPoly h = x % g;
  for (int i = 1; g.degree() >= 2 * i; ++i) {
    h = powmod(h, Integer(g.modulus()), g);
    FpPoly d = gcd(g, h - x);
    if (d.degree() > 0) {
      out.emplace_back(d, i);
      g = g / d;
      h = h % g;
    }
  }
  if (g.degree() > 0) out.emplace_back(g.monic(), g.degree());
  return out;
}

// Equal-degree splitting (Cantor-Zassenhaus; trace map in characteristic 2).
inline void equal_degree(const FpPoly& g, int d, std::mt19937_64& rng, std::vector<FpPoly>& out) {
  if (g.degree() == d) {
    out.push_back(g.monic());
    return;
  }
  const std::uint64_t s = g.modulus();
  std::uniform_int_distribution<std::uint64_t> coef(0, s - 1);
  Integer half = (boost::multiprecision::pow(Integer(s), static_cast<unsigned>(d)) - 1) / 2;
  for (;;) {
    std::vector<std::uint64_t> c(static_cast<std::size_t>(g.degree()));
    for (auto& x : c) x = coef(rng);
    FpPoly a(g.field(), std::move(c));
    if (a.degree() < 1) continue;
    FpPoly b(g.field());
    if (s == 2) {
      FpPoly term = a % g;
      b = term;
      for (int k = 1; k < d; ++k) {
        term = (term * term) % g;
        b = b + term;
      }
    } else {
      b = powmod(a, half, g) - FpPoly::constant(g.field(), 1);
    }
    FpPoly split = gcd(g, b);
    if (split.degree() > 0 && split.degree() < g.degree()) {
      equal_degree(split, d, rng, out);
      equal_degree(g / split, d, rng, out);
      return;
    }
  }
}

inline bool factor_less(const FpPoly& a, const FpPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.coefficients() < b.coefficients();
}

}  // namespace detail

/**
 * Complete factorization over Z/s into a unit times monic irreducibles.
 * Equal-degree splitting draws from a generator seeded with `seed`, so the
 * output is reproducible; the factor list itself is canonical.
 */
inline FactorizationResult factor(const FpPoly& p, std::uint64_t seed = kDefaultFactorSeed) {
  if (p.is_zero()) throw domain_error("factor: zero polynomial");
  FactorizationResult res{p.field(), p.leading(), {}, seed};
  std::mt19937_64 rng(seed);

  std::vector<std::pair<FpPoly, int>> sqf;
  detail::squarefree(p.monic(), 1, sqf);

  std::vector<std::pair<FpPoly, int>> raw;
  for (const auto& [g, mult] : sqf) {
    for (const auto& [block, d] : detail::distinct_degree(g)) {
      std::vector<FpPoly> pieces;
      detail::equal_degree(block, d, rng, pieces);
      for (auto& f : pieces) raw.emplace_back(std::move(f), mult);
    }
  }
  std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) { return detail::factor_less(a.first, b.first); });
  for (auto& [f, m] : raw) {
    if (!res.factors.empty() && res.factors.back().first == f)
      res.factors.back().second += m;
    else
      res.factors.emplace_back(std::move(f), m);
  }
  return res;
}

/// Degrees of the irreducible factors, repeated by multiplicity, ascending.
inline std::vector<int> degree_sequence(const FactorizationResult& f) {
  std::vector<int> out;
  for (const auto& [g, m] : f.factors)
    for (int i = 0; i < m; ++i) out.push_back(g.degree());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace knotslice
