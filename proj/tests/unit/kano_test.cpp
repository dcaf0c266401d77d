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

#include <random>

#include "satmetric/kano.hpp"
#include "xyz_fixture.hpp"

namespace satmetric {
namespace {

using namespace satmetric::testing;

const Item& catalog_item(const std::string& key) {
  for (const auto& it : master_catalog()) {
    if (it.source_key == key) return it;
  }
  throw std::runtime_error("missing " + key);
}

std::vector<ItemGap> xyz_gaps() {
  return item_gaps(fixture_descriptives(kExpectSums), fixture_descriptives(kPerceiveSums));
}

const KanoPriority& find(const std::vector<KanoPriority>& v, int id) {
  for (const auto& p : v) {
    if (p.item_id == id) return p;
  }
  throw std::runtime_error("no item");
}

TEST(Classify, CatalogCategories) {
  EXPECT_EQ(classify(catalog_item("error-free-service")), KanoCategory::must_be);
  EXPECT_EQ(classify(catalog_item("employees-courtesy")), KanoCategory::performance);
  EXPECT_EQ(classify(catalog_item("entertainment-in-waiting-area")), KanoCategory::delighter);
}

TEST(Multipliers, ParseAndFormat) {
  const KanoMultipliers def;
  EXPECT_EQ(format_kano_multipliers(def), "must_be=2,performance=1,delighter=0,indifferent=0");
  EXPECT_EQ(parse_kano_multipliers(format_kano_multipliers(def)), def);
  const auto m = parse_kano_multipliers("delighter=0.5, must_be=3");
  EXPECT_EQ(m.delighter, 0.5);
  EXPECT_EQ(m.must_be, 3.0);
  EXPECT_EQ(m.performance, 1.0);
  EXPECT_THROW(parse_kano_multipliers("must_be=-1"), ValidationError);
  EXPECT_THROW(parse_kano_multipliers("wow=1"), ValidationError);
  EXPECT_THROW(parse_kano_multipliers("must_be"), ValidationError);
  EXPECT_EQ(def.scaled(2.5).must_be, 5.0);
}

TEST(Prioritize, RepairCostItem) {
  const auto pr = prioritize(xyz_gaps(), fixture_weights(), xyz_instrument());
  const auto& p7 = find(pr, 7);
  EXPECT_EQ(p7.category, KanoCategory::performance);
  EXPECT_NEAR(p7.raw_contribution, 18.69918699, 1e-8);
  EXPECT_NEAR(p7.priority_score, 18.69918699, 1e-8);
  EXPECT_EQ(p7.multiplier, 1.0);
}

TEST(Prioritize, DelighterZeroedByDefault) {
  const auto pr = prioritize(xyz_gaps(), fixture_weights(), xyz_instrument());
  const auto& p12 = find(pr, 12);  // personal attention, gap below zero
  EXPECT_EQ(p12.category, KanoCategory::delighter);
  EXPECT_GT(p12.raw_contribution, 0.0);
  EXPECT_EQ(p12.priority_score, 0.0);

  const SurveyInstrument one({{1, "d", Dimension::empathy, KanoCategory::delighter, {}}}, LikertScale{});
  const std::vector<ItemGap> gaps{{1, 4.0, 3.5, -0.5}};
  EXPECT_EQ(prioritize(gaps, fixture_weights(), one)[0].priority_score, 0.0);
}

TEST(Prioritize, AllPositiveRanksById) {
  auto gaps = xyz_gaps();
  for (auto& g : gaps) g.gap = std::abs(g.gap) + 0.1;
  const auto pr = prioritize(gaps, fixture_weights(), xyz_instrument());
  for (std::size_t i = 0; i < pr.size(); ++i) {
    EXPECT_EQ(pr[i].item_id, static_cast<int>(i + 1));
    EXPECT_EQ(pr[i].rank, static_cast<int>(i + 1));
    EXPECT_EQ(pr[i].priority_score, 0.0);
  }
}

TEST(Prioritize, XyzOrderingAndRanks) {
  const auto pr = prioritize(xyz_gaps(), fixture_weights(), xyz_instrument());
  ASSERT_EQ(pr.size(), 17u);
  for (std::size_t i = 0; i < pr.size(); ++i) {
    EXPECT_EQ(pr[i].rank, static_cast<int>(i + 1));
    EXPECT_EQ(pr[i].priority_score, pr[i].raw_contribution * pr[i].multiplier);
    if (i > 0) EXPECT_GE(pr[i - 1].priority_score, pr[i].priority_score);
  }
  // Must-be items 5 (availability) and performance item 4 (speed) lead.
  EXPECT_EQ(pr[0].item_id, 5);
  EXPECT_NEAR(pr[0].priority_score, 2.0 * 0.666666667 * 22.19512195, 1e-7);
}

TEST(Prioritize, NegativeMultiplierRejected) {
  KanoMultipliers m;
  m.performance = -1.0;
  EXPECT_THROW(prioritize(xyz_gaps(), fixture_weights(), xyz_instrument(), m), ValidationError);
}

std::vector<int> order(const std::vector<KanoPriority>& v) {
  std::vector<int> ids;
  for (const auto& p : v) ids.push_back(p.item_id);
  return ids;
}

TEST(Prioritize, ScalingInvarianceSuite) {
  const auto inst = xyz_instrument();
  std::mt19937_64 rng(314);
  std::uniform_real_distribution<double> mean(1.0, 5.0), mult(0.0, 3.0), scale(0.01, 100.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<ItemGap> gaps;
    for (int i = 1; i <= 17; ++i) {
      const double e = mean(rng), p = mean(rng);
      gaps.push_back({i, e, p, p - e});
    }
    const KanoMultipliers m{mult(rng), mult(rng), mult(rng), mult(rng)};
    const double c = scale(rng);
    const auto a = prioritize(gaps, fixture_weights(), inst, m);
    const auto b = prioritize(gaps, fixture_weights(), inst, m.scaled(c));
    EXPECT_EQ(order(a), order(b));
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_NEAR(b[i].priority_score, c * a[i].priority_score, 1e-12 * std::max(1.0, c * a[i].priority_score));
    }
  }
}

TEST(Prioritize, MonotoneInGap) {
  const SurveyInstrument one({{1, "x", Dimension::assurance, KanoCategory::must_be, {}}}, LikertScale{});
  double prev = -1.0;
  for (double gap = 0.5; gap >= -4.0; gap -= 0.25) {
    const std::vector<ItemGap> gaps{{1, 3.0, 3.0 + gap, gap}};
    const double s = prioritize(gaps, fixture_weights(), one)[0].priority_score;
    EXPECT_GE(s, prev);
    prev = s;
  }
}

TEST(Prioritize, NonnegativeGapsNeverOutrankPositiveScores) {
  const auto pr = prioritize(xyz_gaps(), fixture_weights(), xyz_instrument());
  bool seen_zero = false;
  for (const auto& p : pr) {
    if (p.priority_score == 0.0) seen_zero = true;
    else EXPECT_FALSE(seen_zero) << "positive score after a zero score";
  }
}

}  // namespace
}  // namespace satmetric
