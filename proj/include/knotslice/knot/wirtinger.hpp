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

#include <cstdlib>
#include <numeric>
#include <string>
#include <vector>

#include "knotslice/errors.hpp"
#include "knotslice/knot/braid.hpp"

namespace knotslice {

/// Relator g_a g_b g_c^-1 g_b^-1 (0-based generator indices); b is the overstrand.
struct WirtingerRelator {
  int a = 0;
  int b = 0;
  int c = 0;
  friend bool operator==(const WirtingerRelator&, const WirtingerRelator&) = default;
};

struct WirtingerPresentation {
  int generator_count = 0;
  std::vector<WirtingerRelator> relators;
  int base_generator = 0;  // g_1, the preferred meridian
};

/**
 * Wirtinger presentation of a braid closure, strands oriented downward.
 *
 * Arcs entering the top of the braid are g_1..g_k from left to right; every
 * other arc is numbered in the order its crossing is met reading the word
 * from the top. At sigma_i the left strand passes over, at sigma_i^-1 the
 * right strand does. For overstrand x and understrand y -> z, a positive
 * crossing gives z = x y x^-1 and a negative one z = x^-1 y x.
 * For (sigma_1 sigma_2^-1)^n this makes g_4 the
 * arc leaving the first crossing and g_2 = g_1^-1 g_4 g_1.
 */
inline WirtingerPresentation wirtinger_of_closure(const BraidWord& braid) {
  braid.validate();
  if (braid.closure_components() != 1) throw domain_error("wirtinger_of_closure: closure is not a knot");
  if (braid.letters.empty()) throw domain_error("wirtinger_of_closure: empty braid has no crossings");

  const int k = braid.strands;
  // Provisional ids: top arcs 0..k-1, then one per crossing.
  std::vector<int> at(static_cast<std::size_t>(k));
  std::iota(at.begin(), at.end(), 0);
  struct Raw {
    int over, in, out, sign;
  };
  std::vector<Raw> raw;
  int next = k;
  for (int l : braid.letters) {
    auto left = static_cast<std::size_t>(std::abs(l) - 1), right = left + 1;
    int sign = l > 0 ? 1 : -1;
    int over = sign > 0 ? at[left] : at[right];
    int in = sign > 0 ? at[right] : at[left];
    int out = next++;
    raw.push_back({over, in, out, sign});
    // The strands exchange positions; the understrand continues as `out`.
    if (sign > 0) {
      at[left] = out;
      at[right] = over;
    } else {
      at[left] = over;
      at[right] = out;
    }
  }

  // Closing the braid glues the bottom arc at each position to the top arc there.
  std::vector<int> parent(static_cast<std::size_t>(next));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (int p = 0; p < k; ++p) {
    int bottom = find(at[static_cast<std::size_t>(p)]), top = find(p);
    if (bottom == top) continue;
    if (bottom < top) std::swap(bottom, top);
    parent[static_cast<std::size_t>(bottom)] = top;
  }

  std::vector<int> label(static_cast<std::size_t>(next), -1);
  int count = 0;
  for (int id = 0; id < next; ++id) {
    int root = find(id);
    if (label[static_cast<std::size_t>(root)] < 0) label[static_cast<std::size_t>(root)] = count++;
    label[static_cast<std::size_t>(id)] = label[static_cast<std::size_t>(root)];
  }

  WirtingerPresentation pres;
  pres.generator_count = count;
  for (const auto& r : raw) {
    int x = label[static_cast<std::size_t>(r.over)], y = label[static_cast<std::size_t>(r.in)],
        z = label[static_cast<std::size_t>(r.out)];
    // g_c = g_b^-1 g_a g_b with b the overstrand.
    pres.relators.push_back(r.sign > 0 ? WirtingerRelator{z, x, y} : WirtingerRelator{y, x, z});
  }
  if (static_cast<int>(pres.relators.size()) != pres.generator_count)
    throw invariant_error("wirtinger_of_closure: arc count differs from crossing count");
  return pres;
}

}  // namespace knotslice
