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

#include <optional>
#include <string_view>
#include <vector>

#include "satmetric/ingest.hpp"
#include "satmetric/matrix.hpp"

namespace satmetric {

enum class VarianceMode { population, sample };

std::string_view to_token(VarianceMode m);
std::optional<VarianceMode> parse_variance_mode(std::string_view token);

struct ItemDescriptives {
  int item_id = 0;
  double mean = 0.0;
  double variance = 0.0;
  std::size_t n = 0;

  friend bool operator==(const ItemDescriptives&, const ItemDescriptives&) = default;
};

/// Per-item mean and variance, in instrument order. Both are evaluated from
/// exact integer sums with a single final division, so results do not depend
/// on respondent order. Sample mode needs n >= 2.
std::vector<ItemDescriptives> item_descriptives(const ResponseSet& rs,
                                                const SurveyInstrument& instrument,
                                                VarianceMode mode = VarianceMode::population);

/// Descriptives from column totals: mean = sum / n and
/// variance = (n * sum_sq - sum^2) / (n * d), d = n or n - 1.
ItemDescriptives descriptives_from_sums(int item_id, long long sum, long long sum_sq,
                                        std::size_t n, VarianceMode mode);

Matrix to_matrix(const IntMatrix& m);

/// Cronbach's alpha with sample (n - 1) variances:
///   alpha = k / (k - 1) * (1 - sum(var(item)) / var(total)).
/// Throws DomainError when k < 2, n < 2, or the total score has no variance.
double cronbach_alpha(const Matrix& data);

struct OmittedItemStats {
  int item_id = 0;
  double adj_total_mean = 0.0;
  double adj_total_stdev = 0.0;
  std::optional<double> item_adj_total_corr;
  std::optional<double> squared_multiple_corr;
  std::optional<double> alpha_if_deleted;

  friend bool operator==(const OmittedItemStats&, const OmittedItemStats&) = default;
};

/// Item-deleted diagnostics. `item_ids` labels the columns (defaults to
/// 1..k). Requires k >= 3. Undefined values (zero variance, singular
/// regression) are left empty rather than NaN.
std::vector<OmittedItemStats> omitted_item_stats(const Matrix& data,
                                                 std::span<const int> item_ids = {});

inline constexpr double kDefaultAlphaThreshold = 0.6;

/// Strict: passes only when alpha > threshold.
constexpr bool reliability_gate(double alpha, double threshold = kDefaultAlphaThreshold) {
  return alpha > threshold;
}

struct ReliabilityReport {
  std::optional<double> alpha;  // empty when undefined
  std::size_t n_items = 0;
  std::size_t n_respondents = 0;
  std::vector<OmittedItemStats> omitted;
  bool passes_gate = false;
  double threshold = kDefaultAlphaThreshold;

  friend bool operator==(const ReliabilityReport&, const ReliabilityReport&) = default;
};

/// Alpha plus omitted-item statistics for a Likert response set. Never
/// throws on degenerate data: an undefined alpha fails the gate, and
/// omitted is empty when fewer than three items exist.
ReliabilityReport analyze_reliability(const ResponseSet& rs, const SurveyInstrument& instrument,
                                      double threshold = kDefaultAlphaThreshold);

}  // namespace satmetric
