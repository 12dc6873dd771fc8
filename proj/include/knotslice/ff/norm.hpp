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

#include <numeric>
#include <string>
#include <vector>

#include "knotslice/errors.hpp"

namespace knotslice {

/**
 * True when no sub-multiset of `degrees` sums to `half`: the polynomial
 * then cannot split as a product of two degree-`half` polynomials, so it
 * is not a norm. Requires sum(degrees) == 2 * half.
 */
inline bool norm_obstructed(const std::vector<int>& degrees, int half) {
  const long total = std::accumulate(degrees.begin(), degrees.end(), 0L);
  if (half < 0 || total != 2L * half)
    throw domain_error("norm_obstructed: degrees sum to " + std::to_string(total) + ", expected " +
                       std::to_string(2L * half));
  std::vector<char> reachable(static_cast<std::size_t>(half) + 1, 0);
  reachable[0] = 1;
  for (int d : degrees) {
    if (d < 0) throw domain_error("norm_obstructed: negative degree");
    for (int v = half; v >= d; --v)
      if (reachable[static_cast<std::size_t>(v - d)]) reachable[static_cast<std::size_t>(v)] = 1;
  }
  return !reachable[static_cast<std::size_t>(half)];
}

}  // namespace knotslice
