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


#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "knotslice/metabolizers/character.hpp"
#include "knotslice/metabolizers/metabolizers.hpp"
#include "knotslice/twisted/representation.hpp"

using namespace knotslice;

namespace {

using ElementSet = std::set<CoverVector>;

ElementSet as_set(const std::vector<CoverVector>& v) { return {v.begin(), v.end()}; }

// Every t-invariant 2-dimensional subspace of (Z_n)^4, by spanning all vector pairs.
std::set<ElementSet> brute_force_invariant_planes(long long n) {
  std::vector<CoverVector> all;
  for (long long i = 0; i < n * n * n * n; ++i)
    all.push_back({i % n, i / n % n, i / (n * n) % n, i / (n * n * n)});
  std::set<ElementSet> planes;
  const auto t = t_action();
  for (const auto& v : all) {
    if (v == CoverVector{}) continue;
    const auto tv = apply(t, v, n);
    ElementSet span;
    for (long long x = 0; x < n; ++x)
      for (long long y = 0; y < n; ++y) {
        CoverVector w{};
        for (std::size_t i = 0; i < 4; ++i) w[i] = mod_n(x * v[i] + y * tv[i], n);
        span.insert(w);
      }
    // t has no eigenvalues mod n = 5 mod 6, so v and tv always span a plane
    if (static_cast<long long>(span.size()) == n * n) planes.insert(span);
  }
  return planes;
}

}  // namespace

TEST(Character, EvaluationAndComposition) {
  const Character chi{11, {1, 0, 0, 10}};
  EXPECT_EQ(chi({1, 1, 1, 1}), 0);
  EXPECT_EQ(chi({2, 0, 0, 0}), 2);
  EXPECT_EQ(chi.compose(identity_cover()), chi);
  EXPECT_EQ(sign_character(11, 1), chi);
  EXPECT_EQ(sign_character(11, -1), (Character{11, {10, 0, 0, 10}}));
  EXPECT_THROW(sign_character(11, 0), domain_error);
  EXPECT_FALSE(chi.is_trivial());
  EXPECT_TRUE((Character{11, {0, 11, 22, 0}}).is_trivial());
  // (chi o m)(x) = chi(m x)
  const auto r = symmetry_action(11);
  const CoverVector x{3, 1, 4, 1};
  EXPECT_EQ(chi.compose(r)(x), chi(apply(r, x, 11)));
}

TEST(Character, SeedTuplesFromFormulas) {
  const auto plus = seed_tuples(sign_character(11, 1));
  EXPECT_EQ(plus.g1, (ExponentTriple{0, 0, 0}));
  EXPECT_EQ(plus.g4, (ExponentTriple{10, 1, 0}));
  EXPECT_EQ(plus.g3, (ExponentTriple{10, 1, 0}));
  const auto minus = seed_tuples(sign_character(11, -1));
  EXPECT_EQ(minus.g4, (ExponentTriple{1, 10, 0}));
  EXPECT_EQ(minus.g3, (ExponentTriple{10, 1, 0}));
  EXPECT_THROW(seed_tuples(Character{11, {}}), domain_error);
}

TEST(Character, DiagramOrientationNegatesAOnly) {
  const Character chi{11, {1, 2, 3, 4}};
  EXPECT_EQ(diagram_character(chi), (Character{11, {10, 9, 3, 4}}));
  EXPECT_EQ(diagram_character(diagram_character(chi)), chi);
  // the reoriented chi_+ has the seeds of the literal chi_- and vice versa
  EXPECT_EQ(seed_tuples(diagram_character(sign_character(11, 1))).g4, seed_tuples(sign_character(11, -1)).g4);
}

TEST(Submodule, GeneratorsAndMembership) {
  const auto p = Submodule::P(1, 1, 11);
  EXPECT_EQ(p.str(), "P_{1,1}");
  EXPECT_EQ(Submodule::P(-1, -1, 11).str(), "P_{-1,-1}");
  EXPECT_EQ(Submodule::prime(11).str(), "P'");
  const auto elems = p.elements();
  EXPECT_EQ(elems.size(), 121u);
  EXPECT_EQ(as_set(elems).size(), 121u);
  for (const auto& e : elems) {
    EXPECT_TRUE(p.contains(e));
    EXPECT_TRUE(p.contains(apply(t_action(), e, 11)));
  }
  EXPECT_FALSE(p.contains({0, 0, 1, 0}));
  EXPECT_TRUE(Submodule::prime(11).contains({0, 0, 3, 7}));
}

TEST(Submodule, ClassificationMatchesBruteForce) {
  const long long n = 5;
  const auto planes = brute_force_invariant_planes(n);
  const auto subs = invariant_submodules(n);
  ASSERT_EQ(subs.size(), static_cast<std::size_t>(n * n + 1));
  std::set<ElementSet> ours;
  for (const auto& s : subs) ours.insert(as_set(s.elements()));
  EXPECT_EQ(ours.size(), subs.size());
  EXPECT_EQ(ours, planes);
}

TEST(Submodule, ClassificationNeedsPrimeFiveModSix) {
  EXPECT_THROW(invariant_submodules(7), domain_error);
  EXPECT_THROW(invariant_submodules(25), domain_error);
  EXPECT_NO_THROW(invariant_submodules(29));
}

TEST(Submodule, ImageAgreesWithPointwiseImage) {
  const long long n = 11;
  const auto r = symmetry_action(n);
  for (const auto& p : invariant_submodules(n)) {
    ElementSet img;
    for (const auto& e : p.elements()) img.insert(apply(r, e, n));
    EXPECT_EQ(as_set(image_of(p, r).elements()), img) << p.str();
  }
}

TEST(Metabolizers, CountsAndOrbits) {
  for (int n : {11, 17, 23}) {
    const auto h = cover_homology(n);
    const auto mets = enumerate_metabolizers(h);
    EXPECT_EQ(mets.size(), static_cast<std::size_t>(n + 1)) << n;
    EXPECT_LE(mets.size(), static_cast<std::size_t>(2 * n));
    const auto orbits = orbit_decomposition(mets, h.r_action);
    ASSERT_EQ(orbits.size(), 2u);
    EXPECT_EQ(orbits[0].size(), 1u);
    EXPECT_EQ(orbits[1].size(), static_cast<std::size_t>(n));
    EXPECT_EQ(orbits[0].front(), p_plus(n));
    EXPECT_NE(std::find(orbits[1].begin(), orbits[1].end(), p_minus(n)), orbits[1].end());
  }
}

TEST(Metabolizers, PrimeIsRejected) {
  const auto h = cover_homology(11);
  EXPECT_EQ(h.lambda({0, 0, 1, 0}, {0, 0, 1, 0}), 1);  // lambda(b, b) = 1/11
  EXPECT_FALSE(is_metabolizer(Submodule::prime(11), h));
}

TEST(Metabolizers, GeneratorTestAgreesWithExhaustive) {
  const auto h = cover_homology(11);
  for (const auto& p : invariant_submodules(11)) EXPECT_EQ(is_metabolizer(p, h), is_metabolizer_exhaustive(p, h)) << p.str();
}

TEST(Metabolizers, OrbitDecompositionRejectsNonInvariantSets) {
  const auto h = cover_homology(11);
  auto mets = enumerate_metabolizers(h);
  mets.erase(std::find(mets.begin(), mets.end(), p_minus(11)));
  EXPECT_THROW(orbit_decomposition(mets, h.r_action), invariant_error);
}

TEST(Metabolizers, CharacterVanishesOnItsMetabolizer) {
  for (int n : {11, 17}) {
    const auto h = cover_homology(n);
    for (const auto& p : enumerate_metabolizers(h)) {
      const auto choice = character_for(p, h);
      EXPECT_FALSE(choice.chi.is_trivial());
      const auto elems = p.elements();
      for (std::size_t i = 0; i < elems.size(); i += 7) EXPECT_EQ(choice.chi(elems[i]), 0) << p.str();
      if (p == p_plus(n)) {
        EXPECT_EQ(choice.sign, 1);
      }
      if (p == p_minus(n)) {
        EXPECT_EQ(choice.sign, -1);
        EXPECT_EQ(choice.k, 0);
        EXPECT_EQ(choice.chi, sign_character(n, -1));
      }
    }
    EXPECT_THROW(character_for(Submodule::prime(n), h), domain_error);
  }
}
