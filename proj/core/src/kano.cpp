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

#include "satmetric/kano.hpp"

#include <algorithm>
#include <cmath>

#include "satmetric/numfmt.hpp"

namespace satmetric {

double KanoMultipliers::operator[](KanoCategory k) const {
  switch (k) {
    case KanoCategory::must_be: return must_be;
    case KanoCategory::performance: return performance;
    case KanoCategory::delighter: return delighter;
    case KanoCategory::indifferent: return indifferent;
  }
  return 0.0;
}

KanoMultipliers KanoMultipliers::scaled(double factor) const {
  return {must_be * factor, performance * factor, delighter * factor, indifferent * factor};
}

KanoMultipliers parse_kano_multipliers(std::string_view text) {
  KanoMultipliers m;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto part = trim(text.substr(0, comma));
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (part.empty()) continue;
    const auto eq = part.find('=');
    if (eq == std::string_view::npos) {
      throw ValidationError("kano multiplier '" + std::string(part) + "' is not category=value");
    }
    const auto name = trim(part.substr(0, eq));
    const auto cat = parse_kano(name);
    if (!cat) throw ValidationError("unknown Kano category '" + std::string(name) + "'");
    const auto value = parse_real(part.substr(eq + 1));
    if (!value || *value < 0.0) {
      throw ValidationError("kano multiplier for " + std::string(name) +
                            " must be a nonnegative number");
    }
    switch (*cat) {
      case KanoCategory::must_be: m.must_be = *value; break;
      case KanoCategory::performance: m.performance = *value; break;
      case KanoCategory::delighter: m.delighter = *value; break;
      case KanoCategory::indifferent: m.indifferent = *value; break;
    }
  }
  return m;
}

std::string format_kano_multipliers(const KanoMultipliers& m) {
  return "must_be=" + format_double(m.must_be) + ",performance=" + format_double(m.performance) +
         ",delighter=" + format_double(m.delighter) +
         ",indifferent=" + format_double(m.indifferent);
}

std::vector<KanoPriority> prioritize(std::span<const ItemGap> gaps,
                                     const ImportanceWeights& weights,
                                     const SurveyInstrument& instrument,
                                     const KanoMultipliers& multipliers) {
  for (auto k : {KanoCategory::must_be, KanoCategory::performance, KanoCategory::delighter,
                 KanoCategory::indifferent}) {
    if (!(multipliers[k] >= 0.0)) throw ValidationError("kano multipliers must be nonnegative");
  }
  std::vector<KanoPriority> out;
  out.reserve(gaps.size());
  for (const auto& g : gaps) {
    const Item* it = instrument.find(g.item_id);
    if (!it) throw ValidationError("gap refers to unknown item " + std::to_string(g.item_id));
    KanoPriority p;
    p.item_id = g.item_id;
    p.category = classify(*it);
    p.multiplier = multipliers[p.category];
    if (g.gap < 0.0) {
      p.raw_contribution = std::abs(g.gap) * weights[it->dimension];
      p.priority_score = p.raw_contribution * p.multiplier;
    }
    out.push_back(p);
  }
  std::stable_sort(out.begin(), out.end(), [](const KanoPriority& a, const KanoPriority& b) {
    if (a.priority_score != b.priority_score) return a.priority_score > b.priority_score;
    return a.item_id < b.item_id;
  });
  for (std::size_t i = 0; i < out.size(); ++i) out[i].rank = static_cast<int>(i + 1);
  return out;
}

}  // namespace satmetric
