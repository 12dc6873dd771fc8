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

#include "knotslice/blanchfield/cover_group.hpp"
#include "knotslice/errors.hpp"

namespace knotslice {

/// Homomorphism (Z_n)^4 -> Z_n, stored as its values on (a, ta, b, tb).
struct Character {
  long long n = 0;
  CoverVector values{};

  long long operator()(const CoverVector& v) const {
    long long acc = 0;
    for (std::size_t i = 0; i < 4; ++i) acc = mod_n(acc + values[i] * v[i], n);
    return acc;
  }

  bool is_trivial() const {
    for (auto x : values)
      if (mod_n(x, n) != 0) return false;
    return true;
  }

  /// The character x -> chi(m x).
  Character compose(const CoverMatrix& m) const {
    Character out{n, {}};
    for (std::size_t j = 0; j < 4; ++j) {
      long long acc = 0;
      for (std::size_t i = 0; i < 4; ++i) acc = mod_n(acc + values[i] * m[i][j], n);
      out.values[j] = acc;
    }
    return out;
  }

  friend bool operator==(const Character& x, const Character& y) {
    if (x.n != y.n) return false;
    for (std::size_t i = 0; i < 4; ++i)
      if (mod_n(x.values[i] - y.values[i], x.n) != 0) return false;
    return true;
  }
};

/// chi_+ (sign > 0) or chi_-: chi(a) = +-1, chi(ta) = 0, chi(b) = 0, chi(tb) = -1.
inline Character sign_character(long long n, int sign) {
  if (sign != 1 && sign != -1) throw domain_error("sign_character: sign must be +1 or -1");
  return Character{n, reduce({sign, 0, 0, -1}, n)};
}

}  // namespace knotslice
