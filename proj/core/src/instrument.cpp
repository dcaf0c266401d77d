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

#include "satmetric/instrument.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <set>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "satmetric/error.hpp"

namespace satmetric {

using nlohmann::ordered_json;

std::string_view to_token(Dimension d) {
  switch (d) {
    case Dimension::reliability: return "reliability";
    case Dimension::responsiveness: return "responsiveness";
    case Dimension::assurance: return "assurance";
    case Dimension::empathy: return "empathy";
    case Dimension::tangibles: return "tangibles";
  }
  return "?";
}

std::string_view display_name(Dimension d) {
  switch (d) {
    case Dimension::reliability: return "Reliability";
    case Dimension::responsiveness: return "Responsiveness";
    case Dimension::assurance: return "Assurance";
    case Dimension::empathy: return "Empathy";
    case Dimension::tangibles: return "Tangibles";
  }
  return "?";
}

std::optional<Dimension> parse_dimension(std::string_view token) {
  for (auto d : kDimensionOrder) {
    if (token == to_token(d)) return d;
  }
  if (token == "response") return Dimension::responsiveness;
  return std::nullopt;
}

std::string_view to_token(KanoCategory k) {
  switch (k) {
    case KanoCategory::must_be: return "must_be";
    case KanoCategory::performance: return "performance";
    case KanoCategory::delighter: return "delighter";
    case KanoCategory::indifferent: return "indifferent";
  }
  return "?";
}

std::optional<KanoCategory> parse_kano(std::string_view token) {
  for (auto k : {KanoCategory::must_be, KanoCategory::performance, KanoCategory::delighter,
                 KanoCategory::indifferent}) {
    if (token == to_token(k)) return k;
  }
  return std::nullopt;
}

SurveyInstrument::SurveyInstrument(std::vector<Item> items, LikertScale scale, std::string name)
    : items_(std::move(items)), scale_(std::move(scale)), name_(std::move(name)) {
  if (scale_.min >= scale_.max) {
    throw ValidationError("scale: min (" + std::to_string(scale_.min) +
                          ") must be less than max (" + std::to_string(scale_.max) + ")");
  }
  if (items_.empty()) throw ValidationError("instrument has no items");
  std::unordered_set<int> seen;
  for (std::size_t i = 0; i < items_.size(); ++i) {
    const auto& it = items_[i];
    const auto where = "item at position " + std::to_string(i + 1);
    if (it.id <= 0) throw ValidationError(where + ": id must be a positive integer");
    if (!seen.insert(it.id).second) {
      throw ValidationError(where + ": duplicate id " + std::to_string(it.id));
    }
  }
}

const Item* SurveyInstrument::find(int id) const {
  auto it = std::find_if(items_.begin(), items_.end(), [id](const Item& x) { return x.id == id; });
  return it == items_.end() ? nullptr : &*it;
}

std::optional<std::size_t> SurveyInstrument::position_of(int id) const {
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (items_[i].id == id) return i;
  }
  return std::nullopt;
}

std::vector<std::size_t> SurveyInstrument::members(Dimension d) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (items_[i].dimension == d) out.push_back(i);
  }
  return out;
}

std::array<std::size_t, kDimensionCount> SurveyInstrument::dimension_counts() const {
  std::array<std::size_t, kDimensionCount> counts{};
  for (const auto& it : items_) ++counts[index_of(it.dimension)];
  return counts;
}

std::vector<Dimension> SurveyInstrument::missing_dimensions() const {
  std::vector<Dimension> out;
  const auto counts = dimension_counts();
  for (auto d : kDimensionOrder) {
    if (counts[index_of(d)] == 0) out.push_back(d);
  }
  return out;
}

std::string SurveyInstrument::fingerprint() const {
  const auto text = serialize_instrument(*this);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
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

template <typename T>
T required(const ordered_json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ValidationError(where + ": missing field '" + key + "'");
  try {
    return it->get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ValidationError(where + ": field '" + key + "' has the wrong type");
  }
}

LikertScale parse_scale(const ordered_json& j) {
  if (!j.is_object()) throw ValidationError("scale: expected an object");
  reject_unknown(j, {"min", "max", "anchor_low", "anchor_high"}, "scale");
  LikertScale s;
  s.min = required<int>(j, "min", "scale");
  s.max = required<int>(j, "max", "scale");
  if (j.contains("anchor_low")) s.anchor_low = required<std::string>(j, "anchor_low", "scale");
  if (j.contains("anchor_high")) s.anchor_high = required<std::string>(j, "anchor_high", "scale");
  return s;
}

}  // namespace

SurveyInstrument build_instrument(std::string_view json_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("instrument: malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("instrument: expected a JSON object");
  reject_unknown(doc, {"name", "scale", "items"}, "instrument");

  LikertScale scale;
  if (doc.contains("scale")) scale = parse_scale(doc["scale"]);
  std::string name;
  if (doc.contains("name")) name = required<std::string>(doc, "name", "instrument");

  if (!doc.contains("items") || !doc["items"].is_array()) {
    throw ValidationError("instrument: 'items' must be an array");
  }
  const auto& arr = doc["items"];
  if (arr.empty()) throw ValidationError("instrument: item list is empty");

  std::vector<Item> items;
  items.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto where = "item at position " + std::to_string(i + 1);
    const auto& j = arr[i];
    if (!j.is_object()) throw ValidationError(where + ": expected an object");
    reject_unknown(j, {"id", "prompt", "dimension", "kano", "source_key"}, where);
    Item it;
    it.id = required<int>(j, "id", where);
    it.prompt = required<std::string>(j, "prompt", where);
    const auto dim = required<std::string>(j, "dimension", where);
    auto d = parse_dimension(dim);
    if (!d) throw ValidationError(where + ": unknown dimension '" + dim + "'");
    it.dimension = *d;
    const auto kano = required<std::string>(j, "kano", where);
    auto k = parse_kano(kano);
    if (!k) throw ValidationError(where + ": unknown Kano category '" + kano + "'");
    it.kano = *k;
    if (j.contains("source_key")) it.source_key = required<std::string>(j, "source_key", where);
    items.push_back(std::move(it));
  }
  return SurveyInstrument(std::move(items), std::move(scale), std::move(name));
}

std::string serialize_instrument(const SurveyInstrument& instrument) {
  ordered_json doc = ordered_json::object();
  if (!instrument.name().empty()) doc["name"] = instrument.name();
  const auto& s = instrument.scale();
  ordered_json scale = {{"min", s.min}, {"max", s.max}};
  if (!s.anchor_low.empty()) scale["anchor_low"] = s.anchor_low;
  if (!s.anchor_high.empty()) scale["anchor_high"] = s.anchor_high;
  doc["scale"] = std::move(scale);
  ordered_json items = ordered_json::array();
  for (const auto& it : instrument.items()) {
    ordered_json j = {{"id", it.id},
                      {"prompt", it.prompt},
                      {"dimension", std::string(to_token(it.dimension))},
                      {"kano", std::string(to_token(it.kano))}};
    if (it.source_key) j["source_key"] = *it.source_key;
    items.push_back(std::move(j));
  }
  doc["items"] = std::move(items);
  return doc.dump(2) + "\n";
}

SurveyInstrument select_items(std::span<const Item> catalog, std::span<const std::string> keys,
                              LikertScale scale, std::string name) {
  std::vector<Item> items;
  std::set<std::string_view> chosen;
  for (const auto& key : keys) {
    auto it = std::find_if(catalog.begin(), catalog.end(),
                           [&](const Item& x) { return x.source_key && *x.source_key == key; });
    if (it == catalog.end()) throw ValidationError("unknown catalog key '" + key + "'");
    if (!chosen.insert(key).second) throw ValidationError("catalog key selected twice: '" + key + "'");
    Item copy = *it;
    copy.id = static_cast<int>(items.size()) + 1;
    items.push_back(std::move(copy));
  }
  return SurveyInstrument(std::move(items), std::move(scale), std::move(name));
}

}  // namespace satmetric
