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

#include "knotslice/algebra/laurent.hpp"
#include "knotslice/algebra/matrix.hpp"
#include "knotslice/errors.hpp"
#include "knotslice/ff/prime_field.hpp"
#include "knotslice/knot/wirtinger.hpp"
#include "knotslice/twisted/representation.hpp"

namespace knotslice {

using ZpPoly = Laurent<Zp>;
using ZpMatrix = Matrix<ZpPoly>;

/// The reduction xi_n -> theta of Z[xi_n][t] onto Z_s[t].
struct Reduction {
  PrimeField field;
  std::uint64_t theta;
};

/// pi(phi(g)) = C * diag(theta^e1, theta^e2, theta^e3) over Z_s[t].
inline ZpMatrix reduced_image(const ExponentTriple& e, const Reduction& pi) {
  const auto s = pi.field.modulus();
  auto root = [&](long long k) { return Zp(pi.field.pow(pi.theta, static_cast<std::uint64_t>(k)), s); };
  ZpMatrix m(3, 3, ZpPoly{});
  m(0, 2) = ZpPoly::monomial(root(e[2]), 1);
  m(1, 0) = ZpPoly(root(e[0]));
  m(2, 1) = ZpPoly(root(e[1]));
  return m;
}

/**
 * pi(Phi(d r_i / d g_j)) for r_i = g_a g_b g_c^-1 g_b^-1:
 *   d r/d g_a = 1,  d r/d g_b = g_a - 1,  d r/d g_c = -g_b,
 * summed when indices coincide; the zero matrix when j is not involved.
 */
inline ZpMatrix fox_block(const TwistedRep& rep, const WirtingerRelator& r, int generator, const Reduction& pi) {
  const auto s = pi.field.modulus();
  const ZpMatrix id = ZpMatrix::identity(3, ZpPoly(Zp(1, s)));
  ZpMatrix block(3, 3, ZpPoly{});
  if (generator == r.a) block = block + id;
  if (generator == r.b) block = block + reduced_image(rep.tuples[static_cast<std::size_t>(r.a)], pi) - id;
  if (generator == r.c) block = block - reduced_image(rep.tuples[static_cast<std::size_t>(r.b)], pi);
  return block;
}

/**
 * Fox Jacobian with relator `skip_relator` and generator `skip_generator`
 * deleted: a 3(c-1)-square matrix over Z_s[t].
 */
inline ZpMatrix fox_matrix(const TwistedRep& rep, const WirtingerPresentation& pres, const Reduction& pi,
                           int skip_relator = 0, int skip_generator = 0) {
  const int c = pres.generator_count;
  if (static_cast<int>(pres.relators.size()) != c) throw dimension_error("fox_matrix: need as many relators as generators");
  if (skip_relator < 0 || skip_relator >= c || skip_generator < 0 || skip_generator >= c)
    throw domain_error("fox_matrix: deletion index out of range");
  const std::size_t size = 3 * static_cast<std::size_t>(c - 1);
  ZpMatrix m(size, size, ZpPoly{});
  std::size_t bi = 0;
  for (int i = 0; i < c; ++i) {
    if (i == skip_relator) continue;
    std::size_t bj = 0;
    for (int j = 0; j < c; ++j) {
      if (j == skip_generator) continue;
      const auto block = fox_block(rep, pres.relators[static_cast<std::size_t>(i)], j, pi);
      for (std::size_t u = 0; u < 3; ++u)
        for (std::size_t v = 0; v < 3; ++v) m(3 * bi + u, 3 * bj + v) = block(u, v);
      ++bj;
    }
    ++bi;
  }
  return m;
}

}  // namespace knotslice
