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

#include "knotslice/ff/factor.hpp"
#include "knotslice/knot/braid.hpp"
#include "knotslice/metabolizers/metabolizers.hpp"
#include "knotslice/twisted/fox.hpp"
#include "knotslice/twisted/polynomial.hpp"
#include "knotslice/twisted/representation.hpp"

using namespace knotslice;

namespace {

struct Row {
  int n, sign;
  std::uint64_t s, theta;
  std::vector<int> degrees;
};

const std::vector<Row> kRows{
    {11, 1, 23, 2, {2, 2, 3, 3, 8}},  {11, -1, 23, 2, {4, 14}},         {17, 1, 103, 8, {2, 3, 9, 16}},
    {17, -1, 103, 9, {2, 28}},        {23, 1, 47, 4, {1, 1, 11, 29}},   {23, -1, 47, 2, {1, 1, 2, 12, 12, 14}},
};

}  // namespace

TEST(TwistedRep, RelatorsHoldExactly) {
  for (int n : {11, 17}) {
    const auto pres = wirtinger_of_closure(family_braid(n));
    for (int sign : {1, -1}) {
      const auto rep = twisted_rep(sign_character(n, sign), pres);
      ASSERT_EQ(rep.tuples.size(), static_cast<std::size_t>(2 * n));
      EXPECT_TRUE(violated_relators(rep, pres).empty());
      EXPECT_TRUE(homomorphism_failures(rep, pres).empty()) << n << " " << sign;
    }
  }
}

TEST(TwistedRep, RelatorsHoldForEveryMetabolizerCharacter) {
  const auto h = cover_homology(11);
  const auto pres = wirtinger_of_closure(family_braid(11));
  for (const auto& p : enumerate_metabolizers(h)) {
    const auto rep = twisted_rep(character_for(p, h).chi, pres);
    EXPECT_TRUE(violated_relators(rep, pres).empty()) << p.str();
  }
}

TEST(TwistedRep, SeedsFixTheBaseMeridian) {
  const auto pres = wirtinger_of_closure(family_braid(11));
  const auto rep = twisted_rep(sign_character(11, 1), pres);
  EXPECT_EQ(rep.tuples[0], (ExponentTriple{0, 0, 0}));
  // g_2 = g_1^-1 g_4 g_1
  EXPECT_EQ(rep.tuples[1], detail::conjugate_out(rep.tuples[3], rep.tuples[0], 11));
}

TEST(TwistedRep, InconsistentSeedsAreReported) {
  const auto pres = wirtinger_of_closure(family_braid(11));
  std::map<int, ExponentTriple> seeds{{0, {0, 0, 0}}, {1, {1, 0, 0}}, {2, {0, 1, 10}}, {3, {10, 1, 0}}};
  EXPECT_THROW(propagate(seeds, pres, 11), invariant_error);
}

TEST(TwistedRep, RotationsInvertEachOther) {
  const ExponentTriple e{1, 2, 3};
  EXPECT_EQ(rotate_back(rotate_forward(e)), e);
  EXPECT_EQ(detail::conjugate_in(detail::conjugate_out(e, {4, 5, 6}, 11), {4, 5, 6}, 11), e);
}

TEST(Fox, BlockDerivatives) {
  const auto pres = wirtinger_of_closure(family_braid(5));
  const auto rep = twisted_rep(sign_character(5, 1), pres);
  PrimeField f(11);
  const Reduction pi{f, primitive_root_of_unity(f, 5)};
  const auto& r = pres.relators[0];
  const int other = [&] {
    for (int g = 0; g < pres.generator_count; ++g)
      if (g != r.a && g != r.b && g != r.c) return g;
    return -1;
  }();
  const auto zero = fox_block(rep, r, other, pi);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_TRUE(zero(i, j).is_zero());
  EXPECT_EQ(fox_matrix(rep, pres, pi).rows(), static_cast<std::size_t>(3 * (pres.generator_count - 1)));
  EXPECT_THROW(fox_matrix(rep, pres, pi, 99, 0), domain_error);
}

TEST(TwistedPolynomial, DegreeSequencesOfTableRows) {
  for (const auto& row : kRows) {
    const auto tp = twisted_polynomial(row.n, sign_character(row.n, row.sign), row.s, row.theta);
    EXPECT_TRUE(tp.degree_check);
    EXPECT_EQ(tp.target_degree, 2 * (row.n - 2));
    EXPECT_EQ(tp.polynomial.degree(), 2 * (row.n - 2));
    EXPECT_EQ(tp.polynomial.leading(), 1u);
    EXPECT_NE(tp.polynomial.coeff(0), 0u);
    EXPECT_EQ(degree_sequence(factor(tp.polynomial)), row.degrees) << row.n << (row.sign > 0 ? "+" : "-");
  }
}

TEST(TwistedPolynomial, DeletionIndependence) {
  const auto chi = sign_character(11, -1);
  const auto base = twisted_polynomial(11, chi, 23, 2).polynomial;
  for (auto [rel, gen] : {std::pair{1, 0}, std::pair{0, 5}, std::pair{7, 13}, std::pair{21, 21}}) {
    TwistedOptions opts;
    opts.skip_relator = rel;
    opts.skip_generator = gen;
    EXPECT_EQ(twisted_polynomial(11, chi, 23, 2, opts).polynomial, base) << rel << "," << gen;
  }
}

TEST(TwistedPolynomial, BareissAgreesWithInterpolation) {
  for (int sign : {1, -1}) {
    TwistedOptions a, b;
    a.method = DeterminantMethod::kInterpolation;
    b.method = DeterminantMethod::kBareiss;
    const auto chi = sign_character(11, sign);
    const auto pa = twisted_polynomial(11, chi, 23, 2, a);
    const auto pb = twisted_polynomial(11, chi, 23, 2, b);
    EXPECT_EQ(pa.raw_determinant, pb.raw_determinant);
    EXPECT_EQ(pa.polynomial, pb.polynomial);
  }
}

TEST(TwistedPolynomial, OrbitCharacterRuns) {
  // the character for r(P_-) goes through the same pipeline
  const auto h = cover_homology(11);
  const auto tp = twisted_polynomial(11, sign_character(11, -1), 23, 2);
  EXPECT_TRUE(tp.degree_check);
  const auto moved = character_for(image_of(p_minus(11), h.r_action), h);
  EXPECT_EQ(moved.k, 1);
  EXPECT_EQ(twisted_polynomial(11, moved.chi, 23, 2).target_degree, 18);
}

TEST(TwistedPolynomial, RejectsBadParameters) {
  const auto chi = sign_character(11, 1);
  EXPECT_THROW(twisted_polynomial(11, chi, 23, 5), domain_error);  // 5 has order 22
  EXPECT_THROW(twisted_polynomial(11, chi, 29, 2), domain_error);  // 11 does not divide 28
  EXPECT_THROW(twisted_polynomial(17, chi, 103, 8), domain_error);
}
