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
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace satmetric {

/// The five service-quality dimensions. Enumerator order is the canonical
/// reporting order.
enum class Dimension { reliability, responsiveness, assurance, empathy, tangibles };

inline constexpr std::size_t kDimensionCount = 5;

inline constexpr std::array<Dimension, kDimensionCount> kDimensionOrder{
    Dimension::reliability, Dimension::responsiveness, Dimension::assurance,
    Dimension::empathy, Dimension::tangibles};

constexpr std::size_t index_of(Dimension d) { return static_cast<std::size_t>(d); }

std::string_view to_token(Dimension d);
std::string_view display_name(Dimension d);
// "response" is accepted as an alias of responsiveness.
std::optional<Dimension> parse_dimension(std::string_view token);

enum class KanoCategory { must_be, performance, delighter, indifferent };

std::string_view to_token(KanoCategory k);
std::optional<KanoCategory> parse_kano(std::string_view token);

struct LikertScale {
  int min = 1;
  int max = 5;
  std::string anchor_low;
  std::string anchor_high;

  bool contains(long long v) const { return v >= min && v <= max; }
  int span() const { return max - min; }
  friend bool operator==(const LikertScale&, const LikertScale&) = default;
};

struct Item {
  int id = 0;
  std::string prompt;
  Dimension dimension = Dimension::reliability;
  KanoCategory kano = KanoCategory::indifferent;
  std::optional<std::string> source_key;

  friend bool operator==(const Item&, const Item&) = default;
};

/// Validated, immutable survey schema. Item order is the computation and
/// serialization order.
class SurveyInstrument {
 public:
  /// Throws ValidationError on empty items, duplicate or non-positive ids,
  /// or an invalid scale.
  SurveyInstrument(std::vector<Item> items, LikertScale scale, std::string name = {});

  std::span<const Item> items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  const Item& item(std::size_t pos) const { return items_.at(pos); }
  const Item* find(int id) const;
  std::optional<std::size_t> position_of(int id) const;

  const LikertScale& scale() const { return scale_; }
  const std::string& name() const { return name_; }
  static constexpr const std::array<Dimension, kDimensionCount>& dimension_order() {
    return kDimensionOrder;
  }

  /// Positions (into items()) of the members of `d`, in item order.
  std::vector<std::size_t> members(Dimension d) const;
  std::array<std::size_t, kDimensionCount> dimension_counts() const;
  std::vector<Dimension> missing_dimensions() const;

  /// Stable identity derived from the canonical JSON serialization.
  std::string fingerprint() const;

  friend bool operator==(const SurveyInstrument&, const SurveyInstrument&) = default;

 private:
  std::vector<Item> items_;
  LikertScale scale_;
  std::string name_;
};

/// Parses an instrument definition document (JSON). Unknown fields are
/// rejected; errors name the offending item position.
SurveyInstrument build_instrument(std::string_view json_text);

/// Canonical JSON form; build_instrument(serialize_instrument(x)) == x.
std::string serialize_instrument(const SurveyInstrument& instrument);

/// The built-in 28-item catalog of customer-satisfaction drivers for computer
/// service organizations, with dimension and Kano category per driver.
const std::vector<Item>& master_catalog();

/// Selects catalog entries by source key, renumbering them 1..k in selection
/// order. Throws ValidationError on an unknown or repeated key.
SurveyInstrument select_items(std::span<const Item> catalog,
                              std::span<const std::string> keys,
                              LikertScale scale = {}, std::string name = {});

/// Source keys of the 17-item XYZ case-study instrument, in survey order.
std::span<const std::string> xyz_case_study_keys();

}  // namespace satmetric
