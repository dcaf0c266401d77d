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

#include "satmetric/servqual.hpp"

#include <cmath>

#include "satmetric/numfmt.hpp"

namespace satmetric {

std::string_view to_token(Satisfaction s) {
  switch (s) {
    case Satisfaction::satisfied: return "satisfied";
    case Satisfaction::neutral: return "neutral";
    case Satisfaction::dissatisfied: return "dissatisfied";
  }
  return "?";
}

ImportanceWeights::ImportanceWeights(std::array<double, kDimensionCount> by_dimension,
                                     std::size_t n_respondents)
    : values_(by_dimension), n_(n_respondents) {
  for (auto d : kDimensionOrder) {
    const double v = values_[index_of(d)];
    if (!std::isfinite(v) || v < 0.0) {
      throw ValidationError("importance weight for " + std::string(to_token(d)) +
                            " must be a finite nonnegative number, got " + format_double(v));
    }
  }
}

double ImportanceWeights::sum_of_means() const {
  double s = 0.0;
  for (auto d : kDimensionOrder) s += values_[index_of(d)];
  return s;
}

bool ImportanceWeights::within_tolerance(double tolerance) const {
  return std::abs(sum_of_means() - 100.0) <= tolerance;
}

ImportanceWeights ImportanceWeights::normalized() const {
  const double s = sum_of_means();
  if (!(s > 0.0)) throw ValidationError("cannot normalize importance weights that sum to zero");
  auto v = values_;
  for (auto& x : v) x = x * 100.0 / s;
  return ImportanceWeights(v, n_);
}

std::vector<ItemGap> item_gaps(std::span<const ItemDescriptives> expect,
                               std::span<const ItemDescriptives> perceive) {
  if (expect.size() != perceive.size()) {
    throw ValidationError("expectation and perception cover different item counts (" +
                          std::to_string(expect.size()) + " vs " +
                          std::to_string(perceive.size()) + ")");
  }
  std::vector<ItemGap> out;
  out.reserve(expect.size());
  for (std::size_t i = 0; i < expect.size(); ++i) {
    if (expect[i].item_id != perceive[i].item_id) {
      throw ValidationError("item mismatch at position " + std::to_string(i + 1) + ": " +
                            std::to_string(expect[i].item_id) + " vs " +
                            std::to_string(perceive[i].item_id));
    }
    out.push_back(ItemGap{expect[i].item_id, expect[i].mean, perceive[i].mean,
                          perceive[i].mean - expect[i].mean});
  }
  return out;
}

ImportanceWeights importance_weights(const ResponseSet& importance) {
  if (importance.kind() != ResponseKind::importance) {
    throw ValidationError("importance weights need an importance response set");
  }
  const auto& m = importance.values();
  std::array<double, kDimensionCount> by_dim{};
  for (std::size_t c = 0; c < kDimensionCount; ++c) {
    long long sum = 0;
    for (std::size_t r = 0; r < m.rows(); ++r) sum += m(r, c);
    by_dim[index_of(kImportanceColumnOrder[c])] =
        static_cast<double>(sum) / static_cast<double>(m.rows());
  }
  return ImportanceWeights(by_dim, m.rows());
}

std::vector<DimensionScore> dimension_scores(std::span<const ItemGap> gaps,
                                             const ImportanceWeights& weights,
                                             const SurveyInstrument& instrument) {
  std::array<double, kDimensionCount> sums{};
  std::array<std::vector<int>, kDimensionCount> members;
  for (const auto& g : gaps) {
    const Item* it = instrument.find(g.item_id);
    if (!it) throw ValidationError("gap refers to unknown item " + std::to_string(g.item_id));
    sums[index_of(it->dimension)] += g.gap;
    members[index_of(it->dimension)].push_back(g.item_id);
  }
  std::vector<DimensionScore> out;
  out.reserve(kDimensionCount);
  for (auto d : kDimensionOrder) {
    const auto& ids = members[index_of(d)];
    if (ids.empty()) {
      throw ValidationError("dimension '" + std::string(to_token(d)) + "' has no items");
    }
    DimensionScore s;
    s.dimension = d;
    s.unweighted = sums[index_of(d)] / static_cast<double>(ids.size());
    s.importance = weights[d];
    s.weighted = s.unweighted * s.importance;
    s.item_ids = ids;
    out.push_back(std::move(s));
  }
  return out;
}

OverallScores overall_scores(std::span<const DimensionScore> dims) {
  if (dims.size() != kDimensionCount) {
    throw ValidationError("overall scores need exactly five dimension scores");
  }
  OverallScores o;
  double unweighted = 0.0;
  for (const auto& d : dims) {
    o.weighted_sum += d.weighted;
    unweighted += d.unweighted;
  }
  o.weighted_mean = o.weighted_sum / 100.0;
  o.unweighted_mean = unweighted / static_cast<double>(kDimensionCount);
  return o;
}

GapReport analyze_gaps(std::span<const ItemDescriptives> expect,
                       std::span<const ItemDescriptives> perceive,
                       const ImportanceWeights& weights, const SurveyInstrument& instrument) {
  GapReport r;
  r.item_gaps = item_gaps(expect, perceive);
  r.weights = weights;
  r.dimension_scores = dimension_scores(r.item_gaps, weights, instrument);
  r.overall = overall_scores(r.dimension_scores);
  return r;
}

}  // namespace satmetric
