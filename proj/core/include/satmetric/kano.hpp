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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "satmetric/servqual.hpp"

namespace satmetric {

/// Severity multipliers per Kano category. Defaults weight an unmet must-be
/// requirement double, a performance requirement once, and ignore unmet
/// delighters and indifferent items.
struct KanoMultipliers {
  double must_be = 2.0;
  double performance = 1.0;
  double delighter = 0.0;
  double indifferent = 0.0;

  double operator[](KanoCategory k) const;
  KanoMultipliers scaled(double factor) const;

  friend bool operator==(const KanoMultipliers&, const KanoMultipliers&) = default;
};

/// Parses "must_be=2,performance=1,delighter=0,indifferent=0". Categories
/// not named keep their defaults. Throws ValidationError on a bad token or a
/// negative value.
KanoMultipliers parse_kano_multipliers(std::string_view text);
std::string format_kano_multipliers(const KanoMultipliers& m);

struct KanoPriority {
  int item_id = 0;
  KanoCategory category = KanoCategory::indifferent;
  double raw_contribution = 0.0;  // |gap| * I_d for negative gaps, else 0
  double multiplier = 0.0;
  double priority_score = 0.0;
  int rank = 0;

  friend bool operator==(const KanoPriority&, const KanoPriority&) = default;
};

inline KanoCategory classify(const Item& item) { return item.kano; }

/// Ranks items by category-adjusted dissatisfaction, highest first; ties go
/// to the lower item id.
std::vector<KanoPriority> prioritize(std::span<const ItemGap> gaps,
                                     const ImportanceWeights& weights,
                                     const SurveyInstrument& instrument,
                                     const KanoMultipliers& multipliers = {});

}  // namespace satmetric
