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

#include <nlohmann/json.hpp>

#include "satmetric/report.hpp"

namespace satmetric {

using nlohmann::ordered_json;

namespace {

ordered_json opt_number(const std::optional<double>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

std::optional<double> read_opt_number(const ordered_json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

template <typename T>
ordered_json opt_count(const std::optional<T>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

template <typename E, typename Parse>
E read_enum(const ordered_json& j, Parse parse, const char* what) {
  const auto text = j.get<std::string>();
  const auto v = parse(text);
  if (!v) throw ValidationError(std::string("report: unknown ") + what + " '" + text + "'");
  return *v;
}

// --- descriptives / reliability ------------------------------------------------

ordered_json to_j(const ItemDescriptives& d) {
  return {{"item_id", d.item_id}, {"n", d.n}, {"mean", d.mean}, {"variance", d.variance}};
}

ItemDescriptives descriptives_from_j(const ordered_json& j) {
  return {j.at("item_id").get<int>(), j.at("mean").get<double>(), j.at("variance").get<double>(),
          j.at("n").get<std::size_t>()};
}

ordered_json to_j(const ReliabilityReport& r) {
  ordered_json omitted = ordered_json::array();
  for (const auto& o : r.omitted) {
    omitted.push_back({{"item_id", o.item_id},
                       {"adj_total_mean", o.adj_total_mean},
                       {"adj_total_stdev", o.adj_total_stdev},
                       {"item_adj_total_corr", opt_number(o.item_adj_total_corr)},
                       {"squared_multiple_corr", opt_number(o.squared_multiple_corr)},
                       {"alpha_if_deleted", opt_number(o.alpha_if_deleted)}});
  }
  return {{"alpha", opt_number(r.alpha)},
          {"n_items", r.n_items},
          {"n_respondents", r.n_respondents},
          {"threshold", r.threshold},
          {"passes_gate", r.passes_gate},
          {"omitted", std::move(omitted)}};
}

ReliabilityReport reliability_from_j(const ordered_json& j) {
  ReliabilityReport r;
  r.alpha = read_opt_number(j.at("alpha"));
  r.n_items = j.at("n_items").get<std::size_t>();
  r.n_respondents = j.at("n_respondents").get<std::size_t>();
  r.threshold = j.at("threshold").get<double>();
  r.passes_gate = j.at("passes_gate").get<bool>();
  for (const auto& o : j.at("omitted")) {
    OmittedItemStats s;
    s.item_id = o.at("item_id").get<int>();
    s.adj_total_mean = o.at("adj_total_mean").get<double>();
    s.adj_total_stdev = o.at("adj_total_stdev").get<double>();
    s.item_adj_total_corr = read_opt_number(o.at("item_adj_total_corr"));
    s.squared_multiple_corr = read_opt_number(o.at("squared_multiple_corr"));
    s.alpha_if_deleted = read_opt_number(o.at("alpha_if_deleted"));
    r.omitted.push_back(s);
  }
  return r;
}

// --- gap report -----------------------------------------------------------------

ordered_json to_j(const GapReport& g) {
  ordered_json gaps = ordered_json::array();
  for (const auto& x : g.item_gaps) {
    gaps.push_back({{"item_id", x.item_id},
                    {"expectation_mean", x.expectation_mean},
                    {"perception_mean", x.perception_mean},
                    {"gap", x.gap},
                    {"satisfaction", std::string(to_token(classify_satisfaction(x.gap)))}});
  }
  ordered_json by_dim = ordered_json::object();
  for (auto d : kDimensionOrder) by_dim[std::string(to_token(d))] = g.weights[d];
  ordered_json dims = ordered_json::array();
  for (const auto& d : g.dimension_scores) {
    dims.push_back({{"dimension", std::string(to_token(d.dimension))},
                    {"item_ids", d.item_ids},
                    {"unweighted", d.unweighted},
                    {"importance", d.importance},
                    {"weighted", d.weighted}});
  }
  ordered_json rel = nullptr;
  if (g.reliability) {
    rel = {{"expectation", to_j(g.reliability->expectation)},
           {"perception", to_j(g.reliability->perception)}};
  }
  return {{"item_gaps", std::move(gaps)},
          {"importance",
           {{"n_respondents", g.weights.n_respondents()},
            {"sum_of_means", g.weights.sum_of_means()},
            {"by_dimension", std::move(by_dim)}}},
          {"dimension_scores", std::move(dims)},
          {"overall",
           {{"weighted_sum", g.overall.weighted_sum},
            {"weighted_mean", g.overall.weighted_mean},
            {"unweighted_mean", g.overall.unweighted_mean}}},
          {"reliability", std::move(rel)}};
}

GapReport gap_from_j(const ordered_json& j) {
  GapReport g;
  for (const auto& x : j.at("item_gaps")) {
    g.item_gaps.push_back({x.at("item_id").get<int>(), x.at("expectation_mean").get<double>(),
                           x.at("perception_mean").get<double>(), x.at("gap").get<double>()});
  }
  const auto& imp = j.at("importance");
  std::array<double, kDimensionCount> w{};
  for (auto d : kDimensionOrder) w[index_of(d)] = imp.at("by_dimension").at(std::string(to_token(d))).get<double>();
  g.weights = ImportanceWeights(w, imp.at("n_respondents").get<std::size_t>());
  for (const auto& d : j.at("dimension_scores")) {
    DimensionScore s;
    s.dimension = read_enum<Dimension>(d.at("dimension"), parse_dimension, "dimension");
    s.item_ids = d.at("item_ids").get<std::vector<int>>();
    s.unweighted = d.at("unweighted").get<double>();
    s.importance = d.at("importance").get<double>();
    s.weighted = d.at("weighted").get<double>();
    g.dimension_scores.push_back(std::move(s));
  }
  const auto& o = j.at("overall");
  g.overall = {o.at("weighted_sum").get<double>(), o.at("weighted_mean").get<double>(),
               o.at("unweighted_mean").get<double>()};
  if (!j.at("reliability").is_null()) {
    g.reliability = ReliabilityContext{reliability_from_j(j["reliability"].at("expectation")),
                                       reliability_from_j(j["reliability"].at("perception"))};
  }
  return g;
}

// --- qfd / pareto / fishbone ------------------------------------------------------------

ordered_json to_j(const HouseOfQuality& h) {
  ordered_json cr = ordered_json::array();
  for (const auto& c : h.customer_reqs()) {
    cr.push_back({{"id", c.id}, {"name", c.name}, {"importance", c.importance}});
  }
  ordered_json tr = ordered_json::array();
  for (const auto& t : h.tech_reqs()) tr.push_back({{"id", t.id}, {"name", t.name}});
  ordered_json rel = ordered_json::array();
  for (std::size_t i = 0; i < h.customer_reqs().size(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t k = 0; k < h.tech_reqs().size(); ++k) row.push_back(static_cast<int>(h.relationship(i, k)));
    rel.push_back(std::move(row));
  }
  ordered_json roof = ordered_json::array();
  for (const auto& e : h.roof()) {
    roof.push_back({{"i", e.i + 1}, {"j", e.j + 1}, {"sign", std::string(to_token(e.sign))}});
  }
  ordered_json weights = ordered_json::array();
  for (const auto& t : h.importance()) {
    weights.push_back({{"tech_id", t.tech_id},
                       {"absolute", t.absolute},
                       {"relative_pct", t.relative_pct},
                       {"rank", t.rank}});
  }
  return {{"customer_reqs", std::move(cr)},
          {"tech_reqs", std::move(tr)},
          {"relationships", std::move(rel)},
          {"roof", std::move(roof)},
          {"technical_importance", std::move(weights)},
          {"degenerate", h.degenerate()},
          {"benchmarks", h.benchmarks_json.empty() ? ordered_json(nullptr) : ordered_json::parse(h.benchmarks_json)},
          {"ctq_tree", h.ctq_tree_json.empty() ? ordered_json(nullptr) : ordered_json::parse(h.ctq_tree_json)}};
}

HouseOfQuality hoq_from_j(const ordered_json& j) {
  ordered_json def = {{"customer_reqs", j.at("customer_reqs")},
                      {"tech_reqs", j.at("tech_reqs")},
                      {"relationships", j.at("relationships")},
                      {"roof", j.at("roof")}};
  if (!j.at("benchmarks").is_null()) def["benchmarks"] = j["benchmarks"];
  if (!j.at("ctq_tree").is_null()) def["ctq_tree"] = j["ctq_tree"];
  return build_hoq(def.dump());
}

ordered_json to_j(const ParetoTable& p) {
  ordered_json rows = ordered_json::array();
  for (const auto& r : p.rows) {
    rows.push_back({{"rank", r.rank},
                    {"item_id", r.item_id},
                    {"label", r.label},
                    {"magnitude", r.magnitude},
                    {"cumulative", r.cumulative},
                    {"cumulative_pct", r.cumulative_pct}});
  }
  return {{"threshold_pct", p.threshold_pct},
          {"vital_few_cutoff", opt_count(p.vital_few_cutoff)},
          {"rows", std::move(rows)}};
}

ParetoTable pareto_from_j(const ordered_json& j) {
  ParetoTable p;
  p.threshold_pct = j.at("threshold_pct").get<double>();
  if (!j.at("vital_few_cutoff").is_null()) p.vital_few_cutoff = j["vital_few_cutoff"].get<std::size_t>();
  for (const auto& r : j.at("rows")) {
    p.rows.push_back({r.at("rank").get<int>(), r.at("item_id").get<int>(),
                      r.at("label").get<std::string>(), r.at("magnitude").get<double>(),
                      r.at("cumulative").get<double>(), r.at("cumulative_pct").get<double>()});
  }
  return p;
}

}  // namespace

std::string report_to_json(const AnalysisReport& r, const EmitOptions& options) {
  const auto& m = r.metadata;
  ordered_json config = ordered_json::object();
  for (const auto& [k, v] : m.config) config[k] = v;
  ordered_json meta = {
      {"tool_version", m.tool_version},
      {"instrument_name", m.instrument_name},
      {"instrument_fingerprint", m.instrument_fingerprint},
      {"n_expectation", opt_count(m.n_expectation)},
      {"n_perception", opt_count(m.n_perception)},
      {"n_importance", opt_count(m.n_importance)},
      {"generated_at", (m.generated_at && !options.suppress_timestamp) ? ordered_json(*m.generated_at)
                                                                        : ordered_json(nullptr)},
      {"config", std::move(config)},
      {"process_notes", m.process_notes}};

  ordered_json items = ordered_json::array();
  for (const auto& it : r.items) {
    ordered_json j = {{"id", it.id},
                      {"prompt", it.prompt},
                      {"dimension", std::string(to_token(it.dimension))},
                      {"kano", std::string(to_token(it.kano))}};
    j["source_key"] = it.source_key ? ordered_json(*it.source_key) : ordered_json(nullptr);
    items.push_back(std::move(j));
  }

  ordered_json desc = nullptr;
  if (r.descriptives) {
    ordered_json e = ordered_json::array(), p = ordered_json::array();
    for (const auto& d : r.descriptives->expectation) e.push_back(to_j(d));
    for (const auto& d : r.descriptives->perception) p.push_back(to_j(d));
    desc = {{"variance_mode", std::string(to_token(r.descriptives->variance_mode))},
            {"expectation", std::move(e)},
            {"perception", std::move(p)}};
  }

  ordered_json kano = ordered_json::array();
  for (const auto& k : r.kano_priorities) {
    kano.push_back({{"rank", k.rank},
                    {"item_id", k.item_id},
                    {"category", std::string(to_token(k.category))},
                    {"raw_contribution", k.raw_contribution},
                    {"multiplier", k.multiplier},
                    {"priority_score", k.priority_score}});
  }
  const auto& km = r.kano_multipliers;
  ordered_json kano_section = {
      {"multipliers",
       {{"must_be", km.must_be}, {"performance", km.performance}, {"delighter", km.delighter},
        {"indifferent", km.indifferent}}},
      {"priorities", std::move(kano)}};

  ordered_json fish = nullptr;
  if (r.fishbone) fish = ordered_json::parse(serialize_fishbone(*r.fishbone));
  ordered_json branches = ordered_json::array();
  for (const auto& b : r.branch_magnitudes) {
    branches.push_back({{"branch", b.branch}, {"magnitude", b.magnitude}});
  }

  ordered_json warns = ordered_json::array();
  for (const auto& w : r.warnings) warns.push_back({{"code", w.code}, {"message", w.message}});

  ordered_json doc = {{"metadata", std::move(meta)},
                      {"instrument", {{"items", std::move(items)}}},
                      {"descriptives", std::move(desc)},
                      {"gap_report", to_j(r.gap_report)},
                      {"kano", std::move(kano_section)},
                      {"hoq", r.hoq ? to_j(*r.hoq) : ordered_json(nullptr)},
                      {"pareto", to_j(r.pareto)},
                      {"fishbone", std::move(fish)},
                      {"fishbone_branch_magnitudes", std::move(branches)},
                      {"warnings", std::move(warns)}};
  return doc.dump(2) + "\n";
}

AnalysisReport report_from_json(std::string_view json_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("report: malformed JSON: ") + e.what());
  }
  try {
    AnalysisReport r;
    const auto& m = doc.at("metadata");
    r.metadata.tool_version = m.at("tool_version").get<std::string>();
    r.metadata.instrument_name = m.at("instrument_name").get<std::string>();
    r.metadata.instrument_fingerprint = m.at("instrument_fingerprint").get<std::string>();
    auto count = [&](const char* key) -> std::optional<std::size_t> {
      if (m.at(key).is_null()) return std::nullopt;
      return m[key].get<std::size_t>();
    };
    r.metadata.n_expectation = count("n_expectation");
    r.metadata.n_perception = count("n_perception");
    r.metadata.n_importance = count("n_importance");
    if (!m.at("generated_at").is_null()) r.metadata.generated_at = m["generated_at"].get<std::string>();
    for (const auto& [k, v] : m.at("config").items()) r.metadata.config.emplace_back(k, v.get<std::string>());
    r.metadata.process_notes = m.at("process_notes").get<std::string>();

    for (const auto& j : doc.at("instrument").at("items")) {
      Item it;
      it.id = j.at("id").get<int>();
      it.prompt = j.at("prompt").get<std::string>();
      it.dimension = read_enum<Dimension>(j.at("dimension"), parse_dimension, "dimension");
      it.kano = read_enum<KanoCategory>(j.at("kano"), parse_kano, "Kano category");
      if (!j.at("source_key").is_null()) it.source_key = j["source_key"].get<std::string>();
      r.items.push_back(std::move(it));
    }

    if (!doc.at("descriptives").is_null()) {
      const auto& d = doc["descriptives"];
      DescriptivesSection s;
      s.variance_mode = read_enum<VarianceMode>(d.at("variance_mode"), parse_variance_mode, "variance mode");
      for (const auto& x : d.at("expectation")) s.expectation.push_back(descriptives_from_j(x));
      for (const auto& x : d.at("perception")) s.perception.push_back(descriptives_from_j(x));
      r.descriptives = std::move(s);
    }

    r.gap_report = gap_from_j(doc.at("gap_report"));

    const auto& kano = doc.at("kano");
    const auto& km = kano.at("multipliers");
    r.kano_multipliers = {km.at("must_be").get<double>(), km.at("performance").get<double>(),
                          km.at("delighter").get<double>(), km.at("indifferent").get<double>()};
    for (const auto& k : kano.at("priorities")) {
      KanoPriority p;
      p.rank = k.at("rank").get<int>();
      p.item_id = k.at("item_id").get<int>();
      p.category = read_enum<KanoCategory>(k.at("category"), parse_kano, "Kano category");
      p.raw_contribution = k.at("raw_contribution").get<double>();
      p.multiplier = k.at("multiplier").get<double>();
      p.priority_score = k.at("priority_score").get<double>();
      r.kano_priorities.push_back(p);
    }

    if (!doc.at("hoq").is_null()) r.hoq = hoq_from_j(doc["hoq"]);
    r.pareto = pareto_from_j(doc.at("pareto"));
    if (!doc.at("fishbone").is_null()) r.fishbone = build_fishbone(doc["fishbone"].dump());
    for (const auto& b : doc.at("fishbone_branch_magnitudes")) {
      r.branch_magnitudes.push_back({b.at("branch").get<std::string>(), b.at("magnitude").get<double>()});
    }
    for (const auto& w : doc.at("warnings")) {
      r.warnings.push_back({w.at("code").get<std::string>(), w.at("message").get<std::string>()});
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("report: ") + e.what());
  }
}

std::string reliability_json(const ReliabilityReport& report) { return to_j(report).dump(2) + "\n"; }

}  // namespace satmetric
