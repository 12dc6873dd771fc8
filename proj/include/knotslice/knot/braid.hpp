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
#include <sstream>
#include <string>
#include <vector>

#include "knotslice/errors.hpp"

namespace knotslice {

/// Word in the braid group: letter +i is sigma_i, -i is sigma_i^-1.
struct BraidWord {
  int strands = 0;
  std::vector<int> letters;

  void validate() const {
    if (strands < 1) throw domain_error("BraidWord: need at least one strand");
    for (int l : letters)
      if (l == 0 || std::abs(l) >= strands)
        throw domain_error("BraidWord: generator index " + std::to_string(l) + " out of range for " +
                           std::to_string(strands) + " strands");
  }

  /// perm[p] = bottom position of the strand entering at top position p.
  std::vector<int> permutation() const {
    std::vector<int> at(static_cast<std::size_t>(strands));  // at[pos] = strand id
    std::iota(at.begin(), at.end(), 0);
    for (int l : letters) {
      auto i = static_cast<std::size_t>(std::abs(l) - 1);
      std::swap(at[i], at[i + 1]);
    }
    std::vector<int> perm(at.size());
    for (std::size_t pos = 0; pos < at.size(); ++pos) perm[static_cast<std::size_t>(at[pos])] = static_cast<int>(pos);
    return perm;
  }

  /// Number of components of the closure.
  int closure_components() const {
    auto perm = permutation();
    std::vector<char> seen(perm.size(), 0);
    int cycles = 0;
    for (std::size_t p = 0; p < perm.size(); ++p) {
      if (seen[p]) continue;
      ++cycles;
      for (auto q = p; !seen[q]; q = static_cast<std::size_t>(perm[q])) seen[q] = 1;
    }
    return cycles;
  }

  std::string str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < letters.size(); ++i) os << (i ? " " : "") << letters[i];
    return os.str();
  }
};

/// Parse whitespace-separated signed generator indices, e.g. "1 -2 1 -2".
inline BraidWord parse_braid(const std::string& text, int strands) {
  BraidWord w{strands, {}};
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw domain_error("parse_braid: bad token '" + tok + "'");
    w.letters.push_back(v);
  }
  w.validate();
  return w;
}

/// The three-braid (sigma_1 sigma_2^-1)^n whose closure is K_n.
inline BraidWord family_braid(int n) {
  if (n < 1) throw domain_error("family_braid: n must be at least 1");
  BraidWord w{3, {}};
  for (int i = 0; i < n; ++i) {
    w.letters.push_back(1);
    w.letters.push_back(-2);
  }
  return w;
}

}  // namespace knotslice
