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

#include "satmetric/qfd.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <tuple>

#include <nlohmann/json.hpp>

namespace satmetric {

using nlohmann::ordered_json;

std::optional<Strength> strength_from_int(long long v) {
  switch (v) {
    case 0: return Strength::none;
    case 1: return Strength::weak;
    case 3: return Strength::medium;
    case 9: return Strength::strong;
    default: return std::nullopt;
  }
}

std::string_view to_token(RoofCorrelation c) {
  switch (c) {
    case RoofCorrelation::positive: return "positive";
    case RoofCorrelation::none: return "none";
    case RoofCorrelation::negative: return "negative";
  }
  return "?";
}

std::optional<RoofCorrelation> parse_roof_sign(std::string_view token) {
  if (token == "positive" || token == "+") return RoofCorrelation::positive;
  if (token == "negative" || token == "-") return RoofCorrelation::negative;
  if (token == "none" || token == "0") return RoofCorrelation::none;
  return std::nullopt;
}

HouseOfQuality::HouseOfQuality(std::vector<CustomerRequirement> customer,
                               std::vector<TechnicalRequirement> technical,
                               std::vector<Strength> relationships, std::vector<RoofEntry> roof)
    : customer_(std::move(customer)),
      technical_(std::move(technical)),
      relationships_(std::move(relationships)),
      roof_(std::move(roof)) {
  std::set<std::string> ids;
  for (const auto& c : customer_) {
    if (!ids.insert(c.id).second) throw ValidationError("duplicate customer requirement id '" + c.id + "'");
    if (!std::isfinite(c.importance) || c.importance < 0.0) {
      throw ValidationError("customer requirement '" + c.id + "' has negative importance");
    }
  }
  ids.clear();
  for (const auto& t : technical_) {
    if (!ids.insert(t.id).second) throw ValidationError("duplicate technical requirement id '" + t.id + "'");
  }
  if (relationships_.size() != customer_.size() * technical_.size()) {
    throw ValidationError("relationship matrix is not " + std::to_string(customer_.size()) +
                          " x " + std::to_string(technical_.size()));
  }
  for (auto& e : roof_) {
    if (e.i > e.j) std::swap(e.i, e.j);
    if (e.j >= technical_.size()) throw ValidationError("roof entry refers to a missing technical requirement");
    if (e.i == e.j) throw ValidationError("roof entry correlates a requirement with itself");
  }
  std::sort(roof_.begin(), roof_.end(), [](const RoofEntry& a, const RoofEntry& b) {
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  });
  for (std::size_t k = 1; k < roof_.size(); ++k) {
    if (roof_[k].i == roof_[k - 1].i && roof_[k].j == roof_[k - 1].j) {
      throw ValidationError("roof pair (" + std::to_string(roof_[k].i + 1) + ", " +
                            std::to_string(roof_[k].j + 1) + ") listed twice");
    }
  }
  compute();
}

void HouseOfQuality::compute() {
  const std::size_t nt = technical_.size();
  importance_.assign(nt, {});
  double total = 0.0;
  for (std::size_t j = 0; j < nt; ++j) {
    double w = 0.0;
    for (std::size_t i = 0; i < customer_.size(); ++i) {
      w += customer_[i].importance * static_cast<int>(relationship(i, j));
    }
    importance_[j].tech_id = technical_[j].id;
    importance_[j].absolute = w;
    total += w;
  }
  degenerate_ = !(total > 0.0);
  for (auto& t : importance_) t.relative_pct = degenerate_ ? 0.0 : t.absolute / total * 100.0;

  std::vector<std::size_t> order(nt);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return importance_[a].absolute > importance_[b].absolute;
  });
  for (std::size_t r = 0; r < nt; ++r) importance_[order[r]].rank = static_cast<int>(r + 1);
}

RoofCorrelation HouseOfQuality::correlation(std::size_t a, std::size_t b) const {
  if (a > b) std::swap(a, b);
  for (const auto& e : roof_) {
    if (e.i == a && e.j == b) return e.sign;
  }
  return RoofCorrelation::none;
}

HouseOfQuality HouseOfQuality::with_dimension_importance(const ImportanceWeights& weights) const {
  HouseOfQuality copy = *this;
  for (auto& c : copy.customer_) {
    if (auto d = parse_dimension(c.id)) c.importance = weights[*d];
  }
  copy.compute();
  return copy;
}

std::vector<TechnicalImportance> technical_importance(const HouseOfQuality& hoq) {
  return hoq.importance();
}

std::vector<std::pair<std::size_t, std::size_t>> roof_conflicts(const HouseOfQuality& hoq) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& e : hoq.roof()) {
    if (e.sign == RoofCorrelation::negative) out.emplace_back(e.i, e.j);
  }
  return out;
}

namespace {

void reject_unknown(const ordered_json& obj, std::initializer_list<std::string_view> allowed,
                    const std::string& where) {
  for (const auto& [key, _] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ValidationError(where + ": unknown field '" + key + "'");
    }
  }
}

}  // namespace

HouseOfQuality build_hoq(std::string_view json_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("house of quality: malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("house of quality: expected a JSON object");
  reject_unknown(doc,
                 {"name", "note", "customer_reqs", "tech_reqs", "relationships", "roof",
                  "benchmarks", "ctq_tree"},
                 "house of quality");

  try {
    std::vector<CustomerRequirement> customer;
    for (const auto& j : doc.at("customer_reqs")) {
      reject_unknown(j, {"id", "name", "importance"}, "customer requirement");
      CustomerRequirement c;
      c.id = j.at("id").get<std::string>();
      c.name = j.contains("name") ? j["name"].get<std::string>() : c.id;
      c.importance = j.at("importance").get<double>();
      customer.push_back(std::move(c));
    }
    std::vector<TechnicalRequirement> technical;
    for (const auto& j : doc.at("tech_reqs")) {
      reject_unknown(j, {"id", "name"}, "technical requirement");
      TechnicalRequirement t;
      t.id = j.at("id").get<std::string>();
      t.name = j.contains("name") ? j["name"].get<std::string>() : t.id;
      technical.push_back(std::move(t));
    }

    const auto& rel = doc.at("relationships");
    if (!rel.is_array() || rel.size() != customer.size()) {
      throw ValidationError("relationships must have one row per customer requirement (" +
                            std::to_string(customer.size()) + ")");
    }
    std::vector<Strength> cells;
    for (std::size_t i = 0; i < rel.size(); ++i) {
      const auto& row = rel[i];
      if (!row.is_array() || row.size() != technical.size()) {
        throw ValidationError("relationships row " + std::to_string(i + 1) + " must have " +
                              std::to_string(technical.size()) + " entries");
      }
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (!row[j].is_number_integer()) {
          throw ValidationError("relationship (" + std::to_string(i + 1) + ", " +
                                std::to_string(j + 1) + ") must be an integer");
        }
        const auto s = strength_from_int(row[j].get<long long>());
        if (!s) {
          throw ValidationError("relationship (" + std::to_string(i + 1) + ", " +
                                std::to_string(j + 1) + ") has illegal strength " +
                                row[j].dump() + "; allowed 0, 1, 3, 9");
        }
        cells.push_back(*s);
      }
    }

    std::vector<RoofEntry> roof;
    if (doc.contains("roof")) {
      for (const auto& j : doc["roof"]) {
        reject_unknown(j, {"i", "j", "sign"}, "roof entry");
        const auto i = j.at("i").get<long long>();
        const auto k = j.at("j").get<long long>();
        if (i < 1 || k < 1) throw ValidationError("roof positions are 1-based");
        const auto sign_text = j.at("sign").get<std::string>();
        const auto sign = parse_roof_sign(sign_text);
        if (!sign) throw ValidationError("roof entry has unknown sign '" + sign_text + "'");
        roof.push_back(RoofEntry{static_cast<std::size_t>(i - 1), static_cast<std::size_t>(k - 1), *sign});
      }
    }

    HouseOfQuality hoq(std::move(customer), std::move(technical), std::move(cells), std::move(roof));
    if (doc.contains("benchmarks")) hoq.benchmarks_json = doc["benchmarks"].dump();
    if (doc.contains("ctq_tree")) hoq.ctq_tree_json = doc["ctq_tree"].dump();
    return hoq;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("house of quality: ") + e.what());
  }
}

}  // namespace satmetric
