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

#include <random>

#include "knotslice/ff/factor.hpp"
#include "knotslice/ff/fp_poly.hpp"
#include "knotslice/ff/norm.hpp"
#include "knotslice/ff/prime_field.hpp"

using namespace knotslice;

namespace {

// Subset enumeration; fine for the short degree lists we feed it.
bool some_subset_sums_to(const std::vector<int>& d, int target) {
  const std::size_t k = d.size();
  for (std::uint64_t mask = 0; mask < (1ull << k); ++mask) {
    int s = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) s += d[i];
    if (s == target) return true;
  }
  return false;
}

bool has_root(const FpPoly& f) {
  for (std::uint64_t x = 0; x < f.modulus(); ++x)
    if (f.evaluate(x) == 0) return true;
  return false;
}

FpPoly random_poly(std::mt19937_64& rng, const PrimeField& f, int degree) {
  std::uniform_int_distribution<std::uint64_t> d(0, f.modulus() - 1);
  std::vector<std::uint64_t> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = d(rng);
  c.back() = 1 + d(rng) % (f.modulus() - 1);
  return FpPoly(f, c);
}

}  // namespace

TEST(PrimeField, InverseAndOrders) {
  PrimeField f(23);
  for (std::uint64_t a = 1; a < 23; ++a) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
  EXPECT_EQ(f.order(2), 11u);
  EXPECT_EQ(PrimeField(103).order(8), 17u);
  EXPECT_EQ(PrimeField(103).order(9), 17u);
  EXPECT_EQ(PrimeField(47).order(4), 23u);
  EXPECT_EQ(PrimeField(47).order(2), 23u);
  EXPECT_THROW(PrimeField(21), domain_error);
}

TEST(PrimeField, PrimitiveRoots) {
  PrimeField f(23);
  EXPECT_EQ(primitive_root_of_unity(f, 11, 2), 2u);
  EXPECT_THROW(primitive_root_of_unity(f, 11, 5), domain_error);  // 5 has order 22
  EXPECT_THROW(primitive_root_of_unity(f, 7), domain_error);
  EXPECT_EQ(f.order(primitive_root_of_unity(f, 11)), 11u);
}

TEST(FpPoly, DivmodAndGcd) {
  PrimeField f(47);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    auto a = random_poly(rng, f, 9), b = random_poly(rng, f, 4);
    auto [q, r] = divmod(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
    auto g = gcd(a * b, b * b);
    EXPECT_TRUE(((a * b) % g).is_zero());
    EXPECT_TRUE(((b * b) % g).is_zero());
    EXPECT_TRUE((g % b).is_zero());
    EXPECT_EQ(g.leading(), 1u);
  }
}

TEST(Factor, WorkedExampleOverZ47) {
  PrimeField f(47);
  const FpPoly p = FpPoly(f, {1, 1}) * FpPoly(f, {1, 1}) * FpPoly(f, {1, 1, 1});
  const auto r = factor(p);
  ASSERT_EQ(r.factors.size(), 2u);
  EXPECT_EQ(r.factors[0].first, FpPoly(f, {1, 1}));
  EXPECT_EQ(r.factors[0].second, 2);
  EXPECT_EQ(r.factors[1].first, FpPoly(f, {1, 1, 1}));
  EXPECT_EQ(r.factors[1].second, 1);
  EXPECT_EQ(degree_sequence(r), (std::vector<int>{1, 1, 2}));
}

TEST(Factor, RoundTripAndIrreducibility) {
  std::mt19937_64 rng(99);
  for (std::uint64_t s : {2ull, 3ull, 23ull, 47ull, 103ull}) {
    PrimeField f(s);
    for (int i = 0; i < 15; ++i) {
      auto p = random_poly(rng, f, 1 + i % 12);
      if (i % 3 == 0) p = p * p;  // force repeated factors
      const auto r = factor(p);
      EXPECT_EQ(r.product(), p) << p.str();
      for (const auto& [g, m] : r.factors) {
        EXPECT_EQ(g.leading(), 1u);
        EXPECT_TRUE(is_irreducible(g)) << g.str() << " mod " << s;
        EXPECT_GE(m, 1);
      }
    }
  }
}

TEST(Factor, IsIrreducibleAgreesWithRootTestInLowDegree) {
  PrimeField f(23);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    auto p = random_poly(rng, f, 2 + i % 2).monic();
    EXPECT_EQ(is_irreducible(p), !has_root(p)) << p.str();
  }
}

TEST(Factor, SeedDoesNotChangeResult) {
  PrimeField f(103);
  std::mt19937_64 rng(17);
  auto p = random_poly(rng, f, 20);
  EXPECT_EQ(factor(p, 1).factors, factor(p, 2).factors);
}

TEST(Factor, MisprintedQuadraticSplitsMod23) {
  PrimeField f(23);
  const FpPoly printed(f, {1, 13, 1});
  const FpPoly computed(f, {10, 13, 1});
  EXPECT_FALSE(is_irreducible(printed));
  EXPECT_TRUE(has_root(printed));
  EXPECT_EQ(degree_sequence(factor(printed)), (std::vector<int>{1, 1}));
  EXPECT_TRUE(is_irreducible(computed));
}

TEST(Norm, TableExamples) {
  EXPECT_TRUE(norm_obstructed({2, 2, 3, 3, 8}, 9));
  EXPECT_TRUE(norm_obstructed({4, 14}, 9));
  EXPECT_TRUE(norm_obstructed({1, 1, 11, 29}, 21));
  EXPECT_TRUE(norm_obstructed({1, 1, 2, 12, 12, 14}, 21));
  EXPECT_FALSE(norm_obstructed({2, 2}, 2));
  EXPECT_FALSE(norm_obstructed({1, 1, 1, 4, 5, 6}, 9));
  EXPECT_THROW(norm_obstructed({2, 3}, 3), domain_error);
}

TEST(Norm, MatchesBruteForce) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> deg(1, 15), len(1, 9);
  for (int i = 0; i < 500; ++i) {
    std::vector<int> d(static_cast<std::size_t>(len(rng)));
    int sum = 0;
    for (auto& x : d) sum += (x = deg(rng));
    if (sum % 2) {
      d.push_back(1);
      ++sum;
    }
    EXPECT_EQ(norm_obstructed(d, sum / 2), !some_subset_sums_to(d, sum / 2));
  }
}
