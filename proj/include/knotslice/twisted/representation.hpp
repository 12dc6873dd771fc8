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
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "knotslice/algebra/cyclotomic.hpp"
#include "knotslice/algebra/matrix.hpp"
#include "knotslice/blanchfield/cover_group.hpp"
#include "knotslice/errors.hpp"
#include "knotslice/knot/wirtinger.hpp"
#include "knotslice/metabolizers/character.hpp"

namespace knotslice {

/// Exponents (e1, e2, e3) in Z_n of phi(g) = C * diag(xi^e1, xi^e2, xi^e3).
using ExponentTriple = std::array<long long, 3>;

/**
 * 3-dimensional representation of the knot group induced by a character
 * of H_1 of the 3-fold branched cover: every Wirtinger generator maps to
 * C * diag(xi_n^e), where C = [[0,0,t],[1,0,0],[0,1,0]].
 */
struct TwistedRep {
  long long n = 0;
  std::vector<ExponentTriple> tuples;
};

/// (e1, e2, e3) -> (e2, e3, e1): the exponents of C^-1 D C.
inline ExponentTriple rotate_back(const ExponentTriple& e) { return {e[1], e[2], e[0]}; }
/// (e1, e2, e3) -> (e3, e1, e2): the exponents of C D C^-1.
inline ExponentTriple rotate_forward(const ExponentTriple& e) { return {e[2], e[0], e[1]}; }

namespace detail {

inline ExponentTriple add(const ExponentTriple& x, const ExponentTriple& y, long long n) {
  return {mod_n(x[0] + y[0], n), mod_n(x[1] + y[1], n), mod_n(x[2] + y[2], n)};
}
inline ExponentTriple sub(const ExponentTriple& x, const ExponentTriple& y, long long n) {
  return {mod_n(x[0] - y[0], n), mod_n(x[1] - y[1], n), mod_n(x[2] - y[2], n)};
}

// For g_c = g_b^-1 g_a g_b:  e_c = e_b + rot_back(e_a - e_b).
inline ExponentTriple conjugate_out(const ExponentTriple& ea, const ExponentTriple& eb, long long n) {
  return add(eb, rotate_back(sub(ea, eb, n)), n);
}
// Inverse direction, g_a = g_b g_c g_b^-1:  e_a = e_b + rot_forward(e_c - e_b).
inline ExponentTriple conjugate_in(const ExponentTriple& ec, const ExponentTriple& eb, long long n) {
  return add(eb, rotate_forward(sub(ec, eb, n)), n);
}

}  // namespace detail

/// Exponent triples of the top-of-braid generators g_1, g_2, g_3, g_4.
struct SeedTuples {
  ExponentTriple g1, g2, g3, g4;
};

/**
 * g_1 is the preferred meridian, so its triple vanishes. The arcs g_4 and
 * g_3 see a and b through l(g_1^-1 g_4) = t^-1 a and l(g_1^-1 g_3) = t b:
 *   (*)_4 = (-chi(a) - chi(ta), chi(a), chi(ta))
 *   (*)_3 = (chi(tb), -chi(b) - chi(tb), chi(b))
 * and g_2 = g_1^-1 g_4 g_1 fixes the last one.
 */
inline SeedTuples seed_tuples(const Character& chi) {
  if (chi.is_trivial()) throw domain_error("seed_tuples: character must be nontrivial");
  const long long n = chi.n;
  const long long ca = chi.values[kA], cta = chi.values[kTA], cb = chi.values[kB], ctb = chi.values[kTB];
  SeedTuples s;
  s.g1 = {0, 0, 0};
  s.g4 = {mod_n(-ca - cta, n), mod_n(ca, n), mod_n(cta, n)};
  s.g3 = {mod_n(ctb, n), mod_n(-cb - ctb, n), mod_n(cb, n)};
  s.g2 = detail::conjugate_out(s.g4, s.g1, n);
  return s;
}

/// Relators violated by an exponent assignment (empty when it is a representation).
inline std::vector<std::size_t> violated_relators(const TwistedRep& rep, const WirtingerPresentation& pres) {
  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i < pres.relators.size(); ++i) {
    const auto& r = pres.relators[i];
    const auto& ea = rep.tuples[static_cast<std::size_t>(r.a)];
    const auto& eb = rep.tuples[static_cast<std::size_t>(r.b)];
    const auto& ec = rep.tuples[static_cast<std::size_t>(r.c)];
    if (detail::conjugate_out(ea, eb, rep.n) != ec) bad.push_back(i);
  }
  return bad;
}

/**
 * Extend fixed generator triples to every arc through the relators, then
 * check all relators. Throws invariant_error on an inconsistent result
 * (the seeds do not come from a representation under this arc convention).
 */
inline TwistedRep propagate(const std::map<int, ExponentTriple>& seeds, const WirtingerPresentation& pres, long long n) {
  std::vector<std::optional<ExponentTriple>> known(static_cast<std::size_t>(pres.generator_count));
  for (const auto& [g, e] : seeds) {
    if (g < 0 || g >= pres.generator_count) throw domain_error("propagate: seed index out of range");
    known[static_cast<std::size_t>(g)] = ExponentTriple{mod_n(e[0], n), mod_n(e[1], n), mod_n(e[2], n)};
  }
  for (bool progress = true; progress;) {
    progress = false;
    for (const auto& r : pres.relators) {
      auto& ea = known[static_cast<std::size_t>(r.a)];
      auto& eb = known[static_cast<std::size_t>(r.b)];
      auto& ec = known[static_cast<std::size_t>(r.c)];
      if (!eb) continue;
      if (ea && !ec) {
        ec = detail::conjugate_out(*ea, *eb, n);
        progress = true;
      } else if (ec && !ea) {
        ea = detail::conjugate_in(*ec, *eb, n);
        progress = true;
      }
    }
  }
  TwistedRep rep{n, {}};
  for (std::size_t g = 0; g < known.size(); ++g) {
    if (!known[g]) throw invariant_error("propagate: generator g" + std::to_string(g + 1) + " left undetermined");
    rep.tuples.push_back(*known[g]);
  }
  auto bad = violated_relators(rep, pres);
  if (!bad.empty())
    throw invariant_error("propagate: relator r" + std::to_string(bad.front() + 1) +
                          " violated; arc convention is inconsistent with the seeds");
  return rep;
}

/**
 * The curve around g_1 g_4^-1 on our braid diagram lifts to -a rather than a
 * (the two orientations of gamma_a). Reading chi through that orientation
 * negates its values on a and ta. Fixed by matching the reference factor
 * tables; no relabelling of arcs does it.
 */
inline Character diagram_character(const Character& chi) {
  Character out = chi;
  out.values[kA] = mod_n(-chi.values[kA], chi.n);
  out.values[kTA] = mod_n(-chi.values[kTA], chi.n);
  return out;
}

/// phi_chi on every Wirtinger generator of a closed 3-braid presentation.
inline TwistedRep twisted_rep(const Character& chi, const WirtingerPresentation& pres) {
  if (pres.generator_count < 4) throw domain_error("twisted_rep: presentation needs generators g1..g4");
  auto s = seed_tuples(diagram_character(chi));
  return propagate({{0, s.g1}, {1, s.g2}, {2, s.g3}, {3, s.g4}}, pres, chi.n);
}

/// phi(g_i) as an exact matrix over Z[xi_n][t^+-1].
inline Matrix<CycPoly> exact_image(const TwistedRep& rep, std::size_t generator,
                                   const std::shared_ptr<const CyclotomicRing>& ring) {
  const auto& e = rep.tuples.at(generator);
  auto entry = [&](long long k, int texp) { return CycPoly::monomial(Cyclotomic::xi(ring, static_cast<long>(k)), texp); };
  Matrix<CycPoly> m(3, 3, CycPoly{});
  m(0, 2) = entry(e[2], 1);
  m(1, 0) = entry(e[0], 0);
  m(2, 1) = entry(e[1], 0);
  return m;
}

/**
 * Exact check of phi(g_a) phi(g_b) = phi(g_b) phi(g_c) for every relator,
 * over Z[xi_n][t]. Returns the indices of failing relators.
 */
inline std::vector<std::size_t> homomorphism_failures(const TwistedRep& rep, const WirtingerPresentation& pres) {
  auto ring = std::make_shared<const CyclotomicRing>(static_cast<int>(rep.n));
  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i < pres.relators.size(); ++i) {
    const auto& r = pres.relators[i];
    auto pa = exact_image(rep, static_cast<std::size_t>(r.a), ring);
    auto pb = exact_image(rep, static_cast<std::size_t>(r.b), ring);
    auto pc = exact_image(rep, static_cast<std::size_t>(r.c), ring);
    if (!(pa * pb == pb * pc)) bad.push_back(i);
  }
  return bad;
}

}  // namespace knotslice
