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
#include <string>
#include <string_view>
#include <vector>

#include "satmetric/servqual.hpp"

namespace satmetric {

/// Relationship strength between a customer and a technical requirement.
/// Only 0 (none), 1 (weak), 3 (medium) and 9 (strong) are legal.
enum class Strength : int { none = 0, weak = 1, medium = 3, strong = 9 };

std::optional<Strength> strength_from_int(long long v);

enum class RoofCorrelation { positive, none, negative };

std::string_view to_token(RoofCorrelation c);
std::optional<RoofCorrelation> parse_roof_sign(std::string_view token);

struct CustomerRequirement {
  std::string id;
  std::string name;
  double importance = 0.0;

  friend bool operator==(const CustomerRequirement&, const CustomerRequirement&) = default;
};

struct TechnicalRequirement {
  std::string id;
  std::string name;

  friend bool operator==(const TechnicalRequirement&, const TechnicalRequirement&) = default;
};

struct RoofEntry {
  std::size_t i = 0;  // 0-based technical positions, i < j
  std::size_t j = 0;
  RoofCorrelation sign = RoofCorrelation::none;

  friend bool operator==(const RoofEntry&, const RoofEntry&) = default;
};

struct TechnicalImportance {
  std::string tech_id;
  double absolute = 0.0;
  double relative_pct = 0.0;
  int rank = 0;

  friend bool operator==(const TechnicalImportance&, const TechnicalImportance&) = default;
};

/// A validated house of quality with its technical weights computed.
class HouseOfQuality {
 public:
  /// `relationships` is |customer| x |technical|, row-major. Throws
  /// ValidationError on shape mismatch, duplicate ids, negative importance,
  /// or roof entries out of range / on the diagonal / repeated.
  HouseOfQuality(std::vector<CustomerRequirement> customer,
                 std::vector<TechnicalRequirement> technical, std::vector<Strength> relationships,
                 std::vector<RoofEntry> roof = {});

  const std::vector<CustomerRequirement>& customer_reqs() const { return customer_; }
  const std::vector<TechnicalRequirement>& tech_reqs() const { return technical_; }
  Strength relationship(std::size_t cr, std::size_t tr) const {
    return relationships_[cr * technical_.size() + tr];
  }
  /// Sparse upper triangle; pairs not listed are RoofCorrelation::none.
  const std::vector<RoofEntry>& roof() const { return roof_; }
  RoofCorrelation correlation(std::size_t a, std::size_t b) const;

  /// Weights in technical-requirement order (rank carried per entry).
  const std::vector<TechnicalImportance>& importance() const { return importance_; }
  /// True when every absolute weight is zero; relative weights are then 0.
  bool degenerate() const { return degenerate_; }

  /// Copy with customer importances replaced where `id` matches a dimension
  /// token.
  HouseOfQuality with_dimension_importance(const ImportanceWeights& weights) const;

  // Free-form annotations carried through to reports untouched.
  std::string benchmarks_json;
  std::string ctq_tree_json;

  friend bool operator==(const HouseOfQuality&, const HouseOfQuality&) = default;

 private:
  void compute();

  std::vector<CustomerRequirement> customer_;
  std::vector<TechnicalRequirement> technical_;
  std::vector<Strength> relationships_;
  std::vector<RoofEntry> roof_;
  std::vector<TechnicalImportance> importance_;
  bool degenerate_ = false;
};

/// Parses a house-of-quality definition (JSON). Roof positions in the file
/// are 1-based.
HouseOfQuality build_hoq(std::string_view json_text);

/// Absolute weight_j = sum_i importance_i * strength_ij; relative is the
/// share of the total in percent; rank by absolute weight descending, ties
/// to the lower technical index.
std::vector<TechnicalImportance> technical_importance(const HouseOfQuality& hoq);

/// Negatively correlated technical pairs (0-based, i < j), in (i, j) order.
std::vector<std::pair<std::size_t, std::size_t>> roof_conflicts(const HouseOfQuality& hoq);

}  // namespace satmetric
