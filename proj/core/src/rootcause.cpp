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

#include "satmetric/rootcause.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <nlohmann/json.hpp>

namespace satmetric {

using nlohmann::ordered_json;

std::vector<Contribution> dissatisfaction_contributions(std::span<const ItemGap> gaps,
                                                        const ImportanceWeights& weights,
                                                        const SurveyInstrument& instrument,
                                                        ContributionWeighting weighting) {
  std::vector<Contribution> out;
  for (const auto& g : gaps) {
    if (!(g.gap < 0.0)) continue;
    const Item* it = instrument.find(g.item_id);
    if (!it) throw ValidationError("gap refers to unknown item " + std::to_string(g.item_id));
    const double w = weighting == ContributionWeighting::importance ? weights[it->dimension] : 1.0;
    out.push_back(Contribution{g.item_id, it->prompt, std::abs(g.gap) * w});
  }
  return out;
}

ParetoTable pareto(std::span<const Contribution> contributions, double threshold_pct) {
  if (!(threshold_pct > 0.0 && threshold_pct <= 100.0)) {
    throw ValidationError("pareto threshold must be in (0, 100]");
  }
  std::vector<Contribution> sorted(contributions.begin(), contributions.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const Contribution& a, const Contribution& b) {
    if (a.magnitude != b.magnitude) return a.magnitude > b.magnitude;
    return a.item_id < b.item_id;
  });

  ParetoTable table;
  table.threshold_pct = threshold_pct;
  double total = 0.0;
  for (const auto& c : sorted) total += c.magnitude;

  double running = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    running += sorted[i].magnitude;
    ParetoRow row;
    row.rank = static_cast<int>(i + 1);
    row.item_id = sorted[i].item_id;
    row.label = sorted[i].label;
    row.magnitude = sorted[i].magnitude;
    row.cumulative = running;
    // The last row accumulates in the same order as `total`, so it lands on 100 exactly.
    row.cumulative_pct = total > 0.0 ? running / total * 100.0 : 100.0 * (i + 1) / sorted.size();
    if (!table.vital_few_cutoff && row.cumulative_pct >= threshold_pct) {
      table.vital_few_cutoff = i + 1;
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

namespace {

void reject_unknown(const ordered_json& obj, std::initializer_list<std::string_view> allowed,
                    const std::string& where) {
  if (!obj.is_object()) throw ValidationError(where + ": expected an object");
  for (const auto& [key, _] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ValidationError(where + ": unknown field '" + key + "'");
    }
  }
}

FishboneCause parse_cause(const ordered_json& j, const std::string& where) {
  if (j.is_string()) return FishboneCause{j.get<std::string>(), {}};
  reject_unknown(j, {"cause", "sub_causes"}, where);
  FishboneCause c;
  c.text = j.at("cause").get<std::string>();
  if (j.contains("sub_causes")) {
    for (const auto& s : j["sub_causes"]) {
      if (!s.is_string()) throw ValidationError(where + ": sub-causes must be text (tree depth is limited to 3)");
      c.sub_causes.push_back(s.get<std::string>());
    }
  }
  return c;
}

}  // namespace

FishboneTree build_fishbone(std::string_view json_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("fishbone: malformed JSON: ") + e.what());
  }
  reject_unknown(doc, {"effect", "branches"}, "fishbone");
  try {
    FishboneTree tree;
    tree.effect = doc.at("effect").get<std::string>();
    if (tree.effect.empty()) throw ValidationError("fishbone: effect must not be empty");
    std::set<std::string> names;
    if (doc.contains("branches")) {
      for (const auto& b : doc["branches"]) {
        reject_unknown(b, {"name", "causes", "items"}, "fishbone branch");
        FishboneBranch branch;
        branch.name = b.at("name").get<std::string>();
        const auto where = "fishbone branch '" + branch.name + "'";
        if (!names.insert(branch.name).second) {
          throw ValidationError("fishbone: duplicate branch '" + branch.name + "'");
        }
        if (b.contains("causes")) {
          for (const auto& c : b["causes"]) branch.causes.push_back(parse_cause(c, where));
        }
        if (b.contains("items")) branch.item_ids = b["items"].get<std::vector<int>>();
        tree.branches.push_back(std::move(branch));
      }
    }
    return tree;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("fishbone: ") + e.what());
  }
}

std::string serialize_fishbone(const FishboneTree& tree) {
  ordered_json doc = {{"effect", tree.effect}, {"branches", ordered_json::array()}};
  for (const auto& b : tree.branches) {
    ordered_json jb = {{"name", b.name}, {"causes", ordered_json::array()}};
    for (const auto& c : b.causes) {
      if (c.sub_causes.empty()) {
        jb["causes"].push_back(c.text);
      } else {
        jb["causes"].push_back({{"cause", c.text}, {"sub_causes", c.sub_causes}});
      }
    }
    if (!b.item_ids.empty()) jb["items"] = b.item_ids;
    doc["branches"].push_back(std::move(jb));
  }
  return doc.dump(2) + "\n";
}

std::vector<BranchMagnitude> branch_magnitudes(const FishboneTree& tree,
                                               std::span<const Contribution> contributions) {
  std::vector<BranchMagnitude> out;
  for (const auto& b : tree.branches) {
    if (b.item_ids.empty()) continue;
    BranchMagnitude bm{b.name, 0.0};
    for (const auto& c : contributions) {
      if (std::find(b.item_ids.begin(), b.item_ids.end(), c.item_id) != b.item_ids.end()) {
        bm.magnitude += c.magnitude;
      }
    }
    out.push_back(std::move(bm));
  }
  return out;
}

}  // namespace satmetric
