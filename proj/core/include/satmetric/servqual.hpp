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

#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "satmetric/ingest.hpp"
#include "satmetric/psychometrics.hpp"

namespace satmetric {

/// Perception-minus-expectation gap of one item.
struct ItemGap {
  int item_id = 0;
  double expectation_mean = 0.0;
  double perception_mean = 0.0;
  double gap = 0.0;

  friend bool operator==(const ItemGap&, const ItemGap&) = default;
};

/// Mean importance points per dimension, indexed by index_of(Dimension).
class ImportanceWeights {
 public:
  ImportanceWeights() = default;
  /// Throws ValidationError on a negative or non-finite weight.
  ImportanceWeights(std::array<double, kDimensionCount> by_dimension, std::size_t n_respondents);

  double operator[](Dimension d) const { return values_[index_of(d)]; }
  const std::array<double, kDimensionCount>& values() const { return values_; }
  std::size_t n_respondents() const { return n_; }
  double sum_of_means() const;
  bool within_tolerance(double tolerance) const;
  /// Rescaled so the five weights sum to 100. Throws when the sum is zero.
  ImportanceWeights normalized() const;

  friend bool operator==(const ImportanceWeights&, const ImportanceWeights&) = default;

 private:
  std::array<double, kDimensionCount> values_{};
  std::size_t n_ = 0;
};

inline constexpr double kDefaultWeightTolerance = 0.25;

struct DimensionScore {
  Dimension dimension = Dimension::reliability;
  double unweighted = 0.0;  // mean member gap
  double importance = 0.0;
  double weighted = 0.0;    // unweighted * importance
  std::vector<int> item_ids;

  friend bool operator==(const DimensionScore&, const DimensionScore&) = default;
};

struct OverallScores {
  double weighted_sum = 0.0;
  double weighted_mean = 0.0;    // weighted_sum / 100
  double unweighted_mean = 0.0;  // mean of the five dimension gaps

  friend bool operator==(const OverallScores&, const OverallScores&) = default;
};

enum class Satisfaction { satisfied, neutral, dissatisfied };

std::string_view to_token(Satisfaction s);

struct ReliabilityContext {
  ReliabilityReport expectation;
  ReliabilityReport perception;

  friend bool operator==(const ReliabilityContext&, const ReliabilityContext&) = default;
};

struct GapReport {
  std::vector<ItemGap> item_gaps;
  ImportanceWeights weights;
  std::vector<DimensionScore> dimension_scores;
  OverallScores overall;
  std::optional<ReliabilityContext> reliability;

  friend bool operator==(const GapReport&, const GapReport&) = default;
};

/// gap = perception - expectation per item. Both lists must cover the same
/// items in the same order.
std::vector<ItemGap> item_gaps(std::span<const ItemDescriptives> expect,
                               std::span<const ItemDescriptives> perceive);

/// Column means of an importance response set.
ImportanceWeights importance_weights(const ResponseSet& importance);

/// One score per dimension in canonical order. Throws ValidationError when a
/// dimension has no items or a gap refers to an unknown item.
std::vector<DimensionScore> dimension_scores(std::span<const ItemGap> gaps,
                                             const ImportanceWeights& weights,
                                             const SurveyInstrument& instrument);

/// Requires exactly five dimension scores.
OverallScores overall_scores(std::span<const DimensionScore> dims);

constexpr Satisfaction classify_satisfaction(double gap) {
  if (gap > 0.0) return Satisfaction::satisfied;
  if (gap < 0.0) return Satisfaction::dissatisfied;
  return Satisfaction::neutral;
}

/// Full gap analysis from the two descriptive lists and the weights.
GapReport analyze_gaps(std::span<const ItemDescriptives> expect,
                       std::span<const ItemDescriptives> perceive,
                       const ImportanceWeights& weights, const SurveyInstrument& instrument);

}  // namespace satmetric
