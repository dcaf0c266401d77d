/*
 * Copyright 2026 The satmetric Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "satmetric/psychometrics.hpp"
#include "alpha_oracle.hpp"
#include "xyz_fixture.hpp"

namespace satmetric {
namespace {

using testing::covariance_alpha;
using testing::random_matrix;

const Matrix kSmall{{1, 2, 3}, {2, 4, 5}, {3, 3, 4}, {4, 5, 5}};
const Matrix kFive{{3, 4, 2, 5}, {1, 2, 2, 3}, {4, 4, 5, 4}, {2, 3, 1, 2}, {5, 4, 4, 5}};

TEST(Descriptives, PopulationVarianceFromSums) {
  // Item 2 of the XYZ expectation survey: sum 348, sum of squares 1524, N 81.
  const auto d = descriptives_from_sums(2, 348, 1524, 81, VarianceMode::population);
  EXPECT_NEAR(d.variance, 0.356652949, 1e-9);
  EXPECT_NEAR(d.mean, 4.296296296, 1e-9);
  const auto s = descriptives_from_sums(2, 348, 1524, 81, VarianceMode::sample);
  EXPECT_NEAR(s.variance, d.variance * 81.0 / 80.0, 1e-15);
}

TEST(Descriptives, ConstantColumnHasZeroVariance) {
  const SurveyInstrument inst({{1, "a", Dimension::empathy, KanoCategory::performance, {}}}, LikertScale{});
  const ResponseSet rs(ResponseKind::expectation, "x", LikertScale{}, IntMatrix(6, 1, 3));
  for (auto mode : {VarianceMode::population, VarianceMode::sample}) {
    const auto d = item_descriptives(rs, inst, mode);
    EXPECT_EQ(d[0].mean, 3.0);
    EXPECT_EQ(d[0].variance, 0.0);
    EXPECT_EQ(d[0].n, 6u);
  }
}

TEST(Descriptives, PermutationInvariant) {
  const SurveyInstrument inst({{1, "a", Dimension::empathy, KanoCategory::performance, {}},
                               {2, "b", Dimension::empathy, KanoCategory::performance, {}}},
                              LikertScale{});
  std::mt19937_64 rng(3);
  IntMatrix m(30, 2);
  for (std::size_t r = 0; r < 30; ++r) {
    m(r, 0) = 1 + static_cast<int>(rng() % 5);
    m(r, 1) = 1 + static_cast<int>(rng() % 5);
  }
  std::vector<std::size_t> perm(30);
  std::iota(perm.begin(), perm.end(), 0u);
  std::shuffle(perm.begin(), perm.end(), rng);
  IntMatrix p(30, 2);
  for (std::size_t r = 0; r < 30; ++r) {
    p(r, 0) = m(perm[r], 0);
    p(r, 1) = m(perm[r], 1);
  }
  const ResponseSet a(ResponseKind::expectation, "x", LikertScale{}, m);
  const ResponseSet b(ResponseKind::expectation, "x", LikertScale{}, p);
  EXPECT_EQ(item_descriptives(a, inst, VarianceMode::population), item_descriptives(b, inst, VarianceMode::population));
}

TEST(CronbachAlpha, SmallMatrixOracle) {
  EXPECT_NEAR(cronbach_alpha(kSmall), 120.0 / 131.0, 1e-12);
  EXPECT_NEAR(cronbach_alpha(kSmall.without_column(0)), 56.0 / 59.0, 1e-12);
  EXPECT_NEAR(cronbach_alpha(kSmall.without_column(1)), 40.0 / 51.0, 1e-12);
  EXPECT_NEAR(cronbach_alpha(kSmall.without_column(2)), 8.0 / 9.0, 1e-12);
}

TEST(CronbachAlpha, IdenticalColumnsGiveOne) {
  for (std::size_t k = 2; k <= 6; ++k) {
    Matrix m(5, k);
    const double col[] = {1, 4, 2, 5, 3};
    for (std::size_t r = 0; r < 5; ++r) {
      for (std::size_t c = 0; c < k; ++c) m(r, c) = col[r];
    }
    EXPECT_NEAR(cronbach_alpha(m), 1.0, 1e-12);
  }
}

TEST(CronbachAlpha, UndefinedCasesThrow) {
  EXPECT_THROW(cronbach_alpha(Matrix{{1}, {2}}), DomainError);
  EXPECT_THROW(cronbach_alpha(Matrix{{1, 2}}), DomainError);
  EXPECT_THROW(cronbach_alpha(Matrix{{3, 3}, {3, 3}, {3, 3}}), DomainError);
  // Offsetting items: total constant.
  EXPECT_THROW(cronbach_alpha(Matrix{{1, 5}, {2, 4}, {3, 3}}), DomainError);
}

TEST(CronbachAlpha, MatchesCovarianceOracle) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const auto m = random_matrix(rng, 5 + rng() % 6, 3 + rng() % 4);
    double alpha = 0.0;
    try {
      alpha = cronbach_alpha(m);
    } catch (const DomainError&) {
      continue;
    }
    EXPECT_NEAR(alpha, covariance_alpha(m), 1e-12);
  }
}

TEST(CronbachAlpha, NegativeWhenItemsOppose) {
  EXPECT_LT(cronbach_alpha(Matrix{{1, 5, 3}, {2, 4, 3}, {3, 3, 4}, {5, 1, 2}}), 0.0);
}

void expect_stats(const OmittedItemStats& s, double mean, double sd, double r, double smc) {
  EXPECT_NEAR(s.adj_total_mean, mean, 1e-12);
  EXPECT_NEAR(s.adj_total_stdev, sd, 1e-12);
  ASSERT_TRUE(s.item_adj_total_corr);
  EXPECT_NEAR(*s.item_adj_total_corr, r, 1e-12);
  ASSERT_TRUE(s.squared_multiple_corr);
  EXPECT_NEAR(*s.squared_multiple_corr, smc, 1e-12);
}

TEST(OmittedItems, SmallMatrixOracle) {
  const auto stats = omitted_item_stats(kSmall);
  ASSERT_EQ(stats.size(), 3u);
  expect_stats(stats[0], 7.75, 2.217355782608345, 0.7568892626614565, 0.7);
  expect_stats(stats[1], 6.75, 2.0615528128088303, 0.9393364366277243, 0.94);
  expect_stats(stats[2], 6.0, 2.449489742783178, 0.8528028654224418, 0.9090909090909092);
  EXPECT_NEAR(*stats[0].alpha_if_deleted, 56.0 / 59.0, 1e-12);
  EXPECT_NEAR(*stats[2].alpha_if_deleted, 8.0 / 9.0, 1e-12);
  EXPECT_EQ(stats[1].item_id, 2);
}

TEST(OmittedItems, FiveByFourOracle) {
  const std::vector<int> ids{11, 12, 13, 14};
  const auto stats = omitted_item_stats(kFive, ids);
  expect_stats(stats[0], 10.0, 3.3166247903554, 0.9057894597833126, 0.8837209302325583);
  expect_stats(stats[1], 9.6, 4.03732584763727, 0.8169269440420242, 0.8224431818181819);
  expect_stats(stats[2], 10.2, 3.492849839314596, 0.7056563042105775, 0.6438746438746439);
  expect_stats(stats[3], 9.2, 3.7682887362833544, 0.7225363821493087, 0.5674740484429066);
  EXPECT_EQ(stats[3].item_id, 14);
}

TEST(OmittedItems, ConstantColumnMarksUndefined) {
  const Matrix m{{1, 2, 3}, {2, 4, 3}, {3, 3, 3}, {4, 5, 3}};
  const auto stats = omitted_item_stats(m);
  EXPECT_FALSE(stats[2].item_adj_total_corr);
  EXPECT_FALSE(stats[2].squared_multiple_corr);
  EXPECT_TRUE(stats[2].alpha_if_deleted);
  EXPECT_TRUE(stats[0].item_adj_total_corr);
}

TEST(OmittedItems, SingularRegressionMarksUndefined) {
  // Column 2 = column 0 + column 1 - 2: regressing column 3 on the first
  // three is singular, while columns 0..2 are explained exactly.
  const Matrix m{{1, 2, 1, 4}, {2, 3, 3, 1}, {3, 1, 2, 2}, {2, 2, 2, 5}, {4, 3, 5, 3}};
  const auto stats = omitted_item_stats(m);
  EXPECT_FALSE(stats[3].squared_multiple_corr);
  ASSERT_TRUE(stats[0].squared_multiple_corr);
  EXPECT_NEAR(*stats[0].squared_multiple_corr, 1.0, 1e-9);
  EXPECT_TRUE(stats[3].item_adj_total_corr);
}

TEST(OmittedItems, NeedsThreeItems) {
  EXPECT_THROW(omitted_item_stats(Matrix{{1, 2}, {2, 3}}), DomainError);
}

TEST(OmittedItems, BoundsOnRandomSuite) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = random_matrix(rng, 6 + rng() % 10, 3 + rng() % 4);
    for (const auto& s : omitted_item_stats(m)) {
      if (s.item_adj_total_corr) {
        EXPECT_GE(*s.item_adj_total_corr, -1.0);
        EXPECT_LE(*s.item_adj_total_corr, 1.0);
      }
      if (s.squared_multiple_corr) {
        EXPECT_GE(*s.squared_multiple_corr, 0.0);
        EXPECT_LE(*s.squared_multiple_corr, 1.0);
      }
      EXPECT_GE(s.adj_total_stdev, 0.0);
    }
  }
}

TEST(ReliabilityGate, StrictInequality) {
  static_assert(reliability_gate(0.7242));
  static_assert(!reliability_gate(0.6));
  static_assert(!reliability_gate(0.59));
  static_assert(reliability_gate(0.55, 0.5));
}

TEST(AnalyzeReliability, DegenerateDataDoesNotThrow) {
  const SurveyInstrument inst({{1, "a", Dimension::empathy, KanoCategory::performance, {}},
                               {2, "b", Dimension::empathy, KanoCategory::performance, {}}},
                              LikertScale{});
  const ResponseSet rs(ResponseKind::expectation, "x", LikertScale{}, IntMatrix(4, 2, 2));
  const auto rep = analyze_reliability(rs, inst);
  EXPECT_FALSE(rep.alpha);
  EXPECT_FALSE(rep.passes_gate);
  EXPECT_TRUE(rep.omitted.empty());
  EXPECT_EQ(rep.n_respondents, 4u);
}

TEST(AnalyzeReliability, OneEntryPerItem) {
  const auto inst = testing::xyz_instrument();
  std::mt19937_64 rng(8);
  IntMatrix m(40, inst.size());
  for (std::size_t r = 0; r < 40; ++r) {
    const int base = 1 + static_cast<int>(rng() % 3);
    for (std::size_t c = 0; c < inst.size(); ++c) m(r, c) = base + static_cast<int>(rng() % 3);
  }
  const ResponseSet rs(ResponseKind::perception, "x", LikertScale{}, m);
  const auto rep = analyze_reliability(rs, inst, 0.6);
  ASSERT_TRUE(rep.alpha);
  EXPECT_EQ(rep.omitted.size(), 17u);
  EXPECT_EQ(rep.passes_gate, *rep.alpha > 0.6);
  EXPECT_NEAR(*rep.alpha, covariance_alpha(to_matrix(m)), 1e-12);
}

}  // namespace
}  // namespace satmetric
