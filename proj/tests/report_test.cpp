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

#include "knotslice/report/report.hpp"

using namespace knotslice;

namespace {

ObstructionReport sample_report() {
  ObstructionReport r;
  r.n = 11;
  r.sign = -1;
  r.s = 23;
  r.theta = 2;
  r.degree_sequence = {4, 14};
  r.factors = {{1, 17, 4, 17, 1}};
  r.total_degree = 18;
  r.target_degree = 18;
  r.degree_check = true;
  r.norm_obstructed = true;
  r.metabolizer_summary = {12, {1, 11}};
  r.verdict = "not slice";
  return r;
}

}  // namespace

TEST(Golden, SixRowsWithConsistentDegrees) {
  ASSERT_EQ(golden_rows().size(), 6u);
  for (const auto& g : golden_rows()) {
    ASSERT_EQ(g.factors_descending.size(), g.degree_sequence.size());
    int total = 0;
    for (std::size_t i = 0; i < g.factors_descending.size(); ++i) {
      EXPECT_EQ(static_cast<int>(g.factors_descending[i].size()) - 1, g.degree_sequence[i]);
      EXPECT_EQ(g.factors_descending[i].front(), 1u);
      total += g.degree_sequence[i];
    }
    EXPECT_EQ(total, 2 * (g.n - 2));
  }
  EXPECT_EQ(reference_parameters(17, -1), std::make_pair(std::uint64_t{103}, std::uint64_t{9}));
  EXPECT_FALSE(reference_parameters(29, 1).has_value());
}

TEST(Golden, CorrectedQuadraticIsStored) {
  const auto row = golden_row(11, 1);
  ASSERT_TRUE(row);
  EXPECT_EQ(row->factors_descending.front(), (std::vector<std::uint64_t>{1, 13, 10}));
}

TEST(VerifyTable, AllRowsMatch) {
  for (int n : {11, 17, 23}) {
    const auto check = verify_table(n);
    EXPECT_TRUE(check.ok()) << n << ": " << (check.differences.empty() ? "" : check.differences.front());
    ASSERT_EQ(check.reports.size(), 2u);
    EXPECT_EQ(check.reports[0].sign, 1);
    EXPECT_EQ(check.reports[1].sign, -1);
    for (const auto& r : check.reports) {
      EXPECT_EQ(r.verdict, "not slice");
      EXPECT_EQ(r.metabolizer_summary.count, static_cast<std::size_t>(n + 1));
    }
  }
  EXPECT_THROW(verify_table(29), domain_error);
}

TEST(VerifyTable, TamperedGoldenGivesStructuredDiff) {
  const auto check = verify_table(11);
  auto g = *golden_row(11, -1);
  g.factors_descending[0][1] = 16;
  g.degree_sequence = {4, 13};
  const auto diffs = compare_with_golden(check.reports[1], g);
  ASSERT_EQ(diffs.size(), 2u);
  EXPECT_NE(diffs[0].find("degree sequence"), std::string::npos);
  EXPECT_NE(diffs[1].find("missing"), std::string::npos);
}

TEST(Obstruct, FamilyKnotsAreNotSlice) {
  for (int n : {11, 23}) {
    const auto out = obstruct(n);
    EXPECT_EQ(out.verdict, "not slice");
    EXPECT_TRUE(out.verified_by_reference);
    ASSERT_EQ(out.reports.size(), 2u);
    EXPECT_EQ(out.metabolizers[0], p_plus(n));
    EXPECT_EQ(out.metabolizers[1], p_minus(n));
    // representatives reproduce the verify_table rows
    const auto check = verify_table(n);
    EXPECT_EQ(out.reports, check.reports);
  }
}

TEST(Obstruct, MissingParametersAreAnError) {
  EXPECT_THROW(obstruct(29), domain_error);
  EXPECT_THROW(obstruct(7), domain_error);  // no reference parameters
  EXPECT_THROW(obstruct(15), domain_error);
}

TEST(Obstruct, UserParametersAreFlaggedUnverified) {
  ObstructOptions opts;
  opts.s = 67;  // 67 = 1 mod 11
  const auto out = obstruct(11, opts);
  EXPECT_FALSE(out.verified_by_reference);
  for (const auto& r : out.reports) {
    EXPECT_EQ(r.s, 67u);
    EXPECT_EQ(PrimeField(67).order(r.theta), 11u);
  }
  opts.theta = 2;
  opts.s = 23;
  EXPECT_TRUE(obstruct(11, opts).verified_by_reference);
}

TEST(Obstruct, ExhaustiveCoversEveryMetabolizer) {
  ObstructOptions opts;
  opts.exhaustive = true;
  const auto out = obstruct(11, opts);
  EXPECT_EQ(out.reports.size(), 12u);
  // the verdict follows the per-metabolizer results, whatever they are
  const bool all = std::all_of(out.reports.begin(), out.reports.end(), [](const auto& r) { return r.obstructs(); });
  EXPECT_EQ(out.verdict, all ? "not slice" : "inconclusive");
  for (const auto& p : out.orbit_mismatches) EXPECT_NE(p, p_minus(11));
}

TEST(Verdict, NormFailureIsInconclusive) {
  // degrees (2, 2) with half 2: a norm is possible
  ObstructionReport r = sample_report();
  r.degree_sequence = {2, 2};
  r.norm_obstructed = norm_obstructed(r.degree_sequence, 2);
  EXPECT_FALSE(r.norm_obstructed);
  EXPECT_FALSE(r.obstructs());
  r.norm_obstructed = true;
  r.degree_check = false;
  EXPECT_FALSE(r.obstructs());
}

TEST(Json, RoundTrip) {
  const auto r = sample_report();
  const nlohmann::json j = r;
  EXPECT_EQ(j.at("sign"), "-");
  EXPECT_EQ(j.at("factors")[0], (std::vector<std::uint64_t>{1, 17, 4, 17, 1}));
  EXPECT_EQ(j.at("metabolizer_summary").at("orbit_sizes"), (std::vector<std::size_t>{1, 11}));
  EXPECT_EQ(nlohmann::json::parse(j.dump()).get<ObstructionReport>(), r);
  EXPECT_EQ(j.size(), 13u);
}

TEST(Json, RoundTripOfComputedReports) {
  const auto out = obstruct(11);
  const auto j = reports_to_json(out.reports);
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(reports_from_json(nlohmann::json::parse(j.dump())), out.reports);
  EXPECT_TRUE(reports_to_json({out.reports[0]}).is_object());
  EXPECT_EQ(reports_from_json(reports_to_json({out.reports[0]})).front(), out.reports[0]);
}

TEST(Json, RejectsBadFields) {
  nlohmann::json j = sample_report();
  j["sign"] = "x";
  EXPECT_THROW(j.get<ObstructionReport>(), domain_error);
  j = sample_report();
  j["verdict"] = "slice";
  EXPECT_THROW(j.get<ObstructionReport>(), domain_error);
  j = sample_report();
  j.erase("theta");
  EXPECT_THROW(j.get<ObstructionReport>(), nlohmann::json::exception);
}

TEST(Csv, TableColumnOrder) {
  auto a = sample_report();
  auto b = sample_report();
  b.sign = 1;
  b.degree_sequence = {2, 2, 3, 3, 8};
  EXPECT_EQ(to_csv({b, a}), "n,sign,s,theta,degree_sequence\n11,+,23,2,\"(2,2,3,3,8)\"\n11,-,23,2,\"(4,14)\"\n");
}

TEST(Obstruct, UnclassifiedNGivesPolynomialsOnly) {
  ObstructOptions opts;
  opts.s = 29;  // 29 = 1 mod 7
  const auto out = obstruct(7, opts);
  EXPECT_FALSE(out.metabolizers_classified);
  EXPECT_FALSE(out.verified_by_reference);
  EXPECT_EQ(out.verdict, "inconclusive");
  ASSERT_EQ(out.reports.size(), 2u);
  for (const auto& r : out.reports) {
    EXPECT_EQ(r.target_degree, 10);
    EXPECT_EQ(r.verdict, "inconclusive");
    EXPECT_EQ(r.metabolizer_summary.count, 0u);
  }
  opts.exhaustive = true;
  EXPECT_THROW(obstruct(7, opts), domain_error);
  EXPECT_THROW(obstruct(9, opts), domain_error);
}
