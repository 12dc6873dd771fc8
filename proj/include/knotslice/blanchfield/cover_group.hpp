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

#include "knotslice/errors.hpp"

namespace knotslice {

/**
 * The group (Z_n)^4 underlying H_1 of the 3-fold branched cover of K_n, in
 * the ordered basis (a, t.a, b, t.b). As a Z_n[t]-module it is two copies
 * of Z_n[t]/(t^2 + t + 1), generated by a and b.
 */
using CoverVector = std::array<long long, 4>;
using CoverMatrix = std::array<std::array<long long, 4>, 4>;

enum CoverBasis : std::size_t { kA = 0, kTA = 1, kB = 2, kTB = 3 };

inline long long mod_n(long long x, long long n) {
  long long r = x % n;
  return r < 0 ? r + n : r;
}

/// Representative in (-n/2, n/2], for display.
inline long long centered(long long x, long long n) {
  long long r = mod_n(x, n);
  return 2 * r > n ? r - n : r;
}

inline CoverVector reduce(CoverVector v, long long n) {
  for (auto& x : v) x = mod_n(x, n);
  return v;
}

inline CoverVector apply(const CoverMatrix& m, const CoverVector& v, long long n) {
  CoverVector out{};
  for (std::size_t i = 0; i < 4; ++i) {
    long long acc = 0;
    for (std::size_t j = 0; j < 4; ++j) acc = mod_n(acc + m[i][j] * v[j], n);
    out[i] = acc;
  }
  return out;
}

inline CoverMatrix multiply(const CoverMatrix& x, const CoverMatrix& y, long long n) {
  CoverMatrix out{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      long long acc = 0;
      for (std::size_t k = 0; k < 4; ++k) acc = mod_n(acc + x[i][k] * y[k][j], n);
      out[i][j] = acc;
    }
  return out;
}

inline CoverMatrix transpose(const CoverMatrix& m) {
  CoverMatrix out{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) out[i][j] = m[j][i];
  return out;
}

inline CoverMatrix identity_cover() {
  CoverMatrix out{};
  for (std::size_t i = 0; i < 4; ++i) out[i][i] = 1;
  return out;
}

inline CoverMatrix power(const CoverMatrix& m, unsigned long e, long long n) {
  CoverMatrix acc = identity_cover(), base = m;
  while (e) {
    if (e & 1) acc = multiply(acc, base, n);
    base = multiply(base, base, n);
    e >>= 1;
  }
  return acc;
}

inline bool equal_mod(const CoverMatrix& x, const CoverMatrix& y, long long n) {
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (mod_n(x[i][j] - y[i][j], n) != 0) return false;
  return true;
}

/// Column matrix of x -> t.x, using t^2 = -1 - t.
inline CoverMatrix t_action() {
  CoverMatrix m{};
  m[kTA][kA] = 1;   // t.a = ta
  m[kA][kTA] = -1;  // t.ta = -a - ta
  m[kTA][kTA] = -1;
  m[kTB][kB] = 1;
  m[kB][kTB] = -1;
  m[kTB][kTB] = -1;
  return m;
}

/// Bilinear value v^T L w mod n.
inline long long bilinear(const CoverMatrix& form, const CoverVector& v, const CoverVector& w, long long n) {
  long long acc = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) acc = mod_n(acc + v[i] * mod_n(form[i][j] * w[j], n), n);
  return acc;
}

inline std::string to_string(const CoverVector& v) {
  return "(" + std::to_string(v[0]) + ", " + std::to_string(v[1]) + ", " + std::to_string(v[2]) + ", " +
         std::to_string(v[3]) + ")";
}

}  // namespace knotslice
