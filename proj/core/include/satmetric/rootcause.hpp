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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "satmetric/servqual.hpp"

namespace satmetric {

struct Contribution {
  int item_id = 0;
  std::string label;
  double magnitude = 0.0;

  friend bool operator==(const Contribution&, const Contribution&) = default;
};

enum class ContributionWeighting { importance, unweighted };

/// One entry per item with a negative gap: magnitude |gap| * I_d of the
/// item's dimension (or |gap| when unweighted). Items keep instrument order.
std::vector<Contribution> dissatisfaction_contributions(
    std::span<const ItemGap> gaps, const ImportanceWeights& weights,
    const SurveyInstrument& instrument,
    ContributionWeighting weighting = ContributionWeighting::importance);

struct ParetoRow {
  int rank = 0;
  int item_id = 0;
  std::string label;
  double magnitude = 0.0;
  double cumulative = 0.0;
  double cumulative_pct = 0.0;

  friend bool operator==(const ParetoRow&, const ParetoRow&) = default;
};

inline constexpr double kDefaultParetoThreshold = 80.0;

struct ParetoTable {
  std::vector<ParetoRow> rows;
  double threshold_pct = kDefaultParetoThreshold;
  /// 1-based index of the first row whose cumulative % reaches the
  /// threshold; empty for an empty table.
  std::optional<std::size_t> vital_few_cutoff;

  bool empty() const { return rows.empty(); }
  friend bool operator==(const ParetoTable&, const ParetoTable&) = default;
};

/// Sorts by magnitude descending (ties by lower item id) and accumulates.
/// Throws ValidationError unless 0 < threshold <= 100.
ParetoTable pareto(std::span<const Contribution> contributions,
                   double threshold_pct = kDefaultParetoThreshold);

struct FishboneCause {
  std::string text;
  std::vector<std::string> sub_causes;

  friend bool operator==(const FishboneCause&, const FishboneCause&) = default;
};

struct FishboneBranch {
  std::string name;
  std::vector<FishboneCause> causes;
  std::vector<int> item_ids;  // optional link to questionnaire items

  friend bool operator==(const FishboneBranch&, const FishboneBranch&) = default;
};

struct FishboneTree {
  std::string effect;
  std::vector<FishboneBranch> branches;

  friend bool operator==(const FishboneTree&, const FishboneTree&) = default;
};

/// Parses a cause-and-effect definition (JSON). Causes may be plain strings
/// or {"cause": text, "sub_causes": [text...]}; the tree is at most three
/// levels deep (branch, cause, sub-cause). Throws ValidationError on an empty
/// effect or a repeated branch name.
FishboneTree build_fishbone(std::string_view json_text);

std::string serialize_fishbone(const FishboneTree& tree);

struct BranchMagnitude {
  std::string branch;
  double magnitude = 0.0;

  friend bool operator==(const BranchMagnitude&, const BranchMagnitude&) = default;
};

/// Sum of contribution magnitudes over the items each branch links to.
/// Branches without item links are omitted.
std::vector<BranchMagnitude> branch_magnitudes(const FishboneTree& tree,
                                               std::span<const Contribution> contributions);

}  // namespace satmetric
