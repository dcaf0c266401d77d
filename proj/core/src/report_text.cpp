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

#include <cstdio>
#include <map>

#include "satmetric/csv.hpp"
#include "satmetric/numfmt.hpp"
#include "satmetric/report.hpp"

namespace satmetric {

namespace {

std::string num(double v) { return format_double(v); }
std::string num(const std::optional<double>& v) { return v ? format_double(*v) : "NA"; }

std::string fixed9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", v);
  std::string s = buf;
  if (s == "-0.000000000") s = "0.000000000";
  return s;
}
std::string fixed9(const std::optional<double>& v) { return v ? fixed9(*v) : "n/a"; }

std::string line(const std::vector<std::string>& fields) { return csv::join(fields) + "\n"; }

std::string md_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else if (c == '\n' || c == '\r') out += ' ';
    else out.push_back(c);
  }
  return out;
}

const Item* find_item(const AnalysisReport& r, int id) {
  for (const auto& it : r.items) {
    if (it.id == id) return &it;
  }
  return nullptr;
}

std::string prompt_of(const AnalysisReport& r, int id) {
  const Item* it = find_item(r, id);
  return it ? it->prompt : std::string();
}

}  // namespace

std::string descriptives_csv(std::span<const ItemDescriptives> expectation,
                             std::span<const ItemDescriptives> perception) {
  std::string out = line({"survey", "item_id", "n", "mean", "variance"});
  for (const auto& d : expectation) {
    out += line({"expectation", std::to_string(d.item_id), std::to_string(d.n), num(d.mean), num(d.variance)});
  }
  for (const auto& d : perception) {
    out += line({"perception", std::to_string(d.item_id), std::to_string(d.n), num(d.mean), num(d.variance)});
  }
  return out;
}

std::string reliability_csv(const ReliabilityReport& r, std::string_view survey) {
  std::string out = line({"survey", "item_id", "adj_total_mean", "adj_total_stdev",
                          "item_adj_total_corr", "squared_multiple_corr", "alpha_if_deleted"});
  for (const auto& o : r.omitted) {
    out += line({std::string(survey), std::to_string(o.item_id), num(o.adj_total_mean),
                 num(o.adj_total_stdev), num(o.item_adj_total_corr), num(o.squared_multiple_corr),
                 num(o.alpha_if_deleted)});
  }
  return out;
}

std::string hoq_csv(const HouseOfQuality& hoq) {
  std::vector<std::string> header{"customer_req", "name", "importance"};
  for (const auto& t : hoq.tech_reqs()) header.push_back(t.id);
  std::string out = line(header);
  for (std::size_t i = 0; i < hoq.customer_reqs().size(); ++i) {
    const auto& c = hoq.customer_reqs()[i];
    std::vector<std::string> row{c.id, c.name, num(c.importance)};
    for (std::size_t j = 0; j < hoq.tech_reqs().size(); ++j) {
      row.push_back(std::to_string(static_cast<int>(hoq.relationship(i, j))));
    }
    out += line(row);
  }
  std::vector<std::string> abs{"absolute", "", ""}, rel{"relative_pct", "", ""}, rank{"rank", "", ""};
  for (const auto& t : hoq.importance()) {
    abs.push_back(num(t.absolute));
    rel.push_back(num(t.relative_pct));
    rank.push_back(std::to_string(t.rank));
  }
  out += line(abs) + line(rel) + line(rank);
  return out;
}

std::string pareto_csv(const ParetoTable& table) {
  std::string out = line({"rank", "item", "label", "magnitude", "cumulative", "cumulative_pct"});
  for (const auto& r : table.rows) {
    out += line({std::to_string(r.rank), std::to_string(r.item_id), r.label, num(r.magnitude),
                 num(r.cumulative), num(r.cumulative_pct)});
  }
  return out;
}

std::vector<EmittedFile> report_to_csv(const AnalysisReport& r) {
  std::vector<EmittedFile> files;

  if (r.descriptives) {
    files.push_back({"descriptives.csv", descriptives_csv(r.descriptives->expectation, r.descriptives->perception)});
  } else {
    std::string out = line({"survey", "item_id", "n", "mean", "variance"});
    for (const auto& g : r.gap_report.item_gaps) {
      out += line({"expectation", std::to_string(g.item_id), "NA", num(g.expectation_mean), "NA"});
    }
    for (const auto& g : r.gap_report.item_gaps) {
      out += line({"perception", std::to_string(g.item_id), "NA", num(g.perception_mean), "NA"});
    }
    files.push_back({"descriptives.csv", std::move(out)});
  }

  {
    std::string summary = line({"survey", "alpha", "n_items", "n_respondents", "threshold", "passes_gate"});
    std::string items = line({"survey", "item_id", "adj_total_mean", "adj_total_stdev",
                              "item_adj_total_corr", "squared_multiple_corr", "alpha_if_deleted"});
    if (const auto& rel = r.gap_report.reliability) {
      for (const auto& [name, rep] : {std::pair<std::string, const ReliabilityReport*>{"expectation", &rel->expectation},
                                      {"perception", &rel->perception}}) {
        summary += line({name, num(rep->alpha), std::to_string(rep->n_items),
                         std::to_string(rep->n_respondents), num(rep->threshold),
                         rep->passes_gate ? "true" : "false"});
        const auto body = reliability_csv(*rep, name);
        items += body.substr(body.find('\n') + 1);
      }
    }
    files.push_back({"reliability.csv", std::move(summary)});
    files.push_back({"reliability_items.csv", std::move(items)});
  }

  {
    std::string out = line({"item_id", "dimension", "prompt", "expectation_mean", "perception_mean", "gap", "satisfaction"});
    for (const auto& g : r.gap_report.item_gaps) {
      const Item* it = find_item(r, g.item_id);
      out += line({std::to_string(g.item_id), it ? std::string(to_token(it->dimension)) : "",
                   it ? it->prompt : "", num(g.expectation_mean), num(g.perception_mean), num(g.gap),
                   std::string(to_token(classify_satisfaction(g.gap)))});
    }
    files.push_back({"gaps.csv", std::move(out)});
  }

  {
    std::string out = line({"dimension", "n_items", "unweighted", "importance", "weighted"});
    for (const auto& d : r.gap_report.dimension_scores) {
      out += line({std::string(to_token(d.dimension)), std::to_string(d.item_ids.size()), num(d.unweighted),
                   num(d.importance), num(d.weighted)});
    }
    files.push_back({"dimensions.csv", std::move(out)});
    const auto& o = r.gap_report.overall;
    files.push_back({"overall.csv", line({"metric", "value"}) + line({"weighted_sum", num(o.weighted_sum)}) +
                                        line({"weighted_mean", num(o.weighted_mean)}) +
                                        line({"unweighted_mean", num(o.unweighted_mean)}) +
                                        line({"importance_sum_of_means", num(r.gap_report.weights.sum_of_means())})});
  }

  {
    std::string out = line({"rank", "item_id", "category", "raw_contribution", "multiplier", "priority_score"});
    for (const auto& k : r.kano_priorities) {
      out += line({std::to_string(k.rank), std::to_string(k.item_id), std::string(to_token(k.category)),
                   num(k.raw_contribution), num(k.multiplier), num(k.priority_score)});
    }
    files.push_back({"kano.csv", std::move(out)});
  }

  files.push_back({"pareto.csv", pareto_csv(r.pareto)});

  if (r.hoq) {
    files.push_back({"hoq.csv", hoq_csv(*r.hoq)});
    std::string roof = line({"i", "j", "tech_i", "tech_j", "sign"});
    for (const auto& e : r.hoq->roof()) {
      roof += line({std::to_string(e.i + 1), std::to_string(e.j + 1), r.hoq->tech_reqs()[e.i].id,
                    r.hoq->tech_reqs()[e.j].id, std::string(to_token(e.sign))});
    }
    files.push_back({"hoq_roof.csv", std::move(roof)});
  }

  if (!r.branch_magnitudes.empty()) {
    std::string out = line({"branch", "magnitude"});
    for (const auto& b : r.branch_magnitudes) out += line({b.branch, num(b.magnitude)});
    files.push_back({"fishbone_branches.csv", std::move(out)});
  }
  return files;
}

std::string report_to_markdown(const AnalysisReport& r, const EmitOptions& options) {
  std::string md;
  auto add = [&](const std::string& s) { md += s; };
  const auto& m = r.metadata;

  add("# Service quality gap analysis\n\n");
  add("- Instrument: " + (m.instrument_name.empty() ? std::string("(unnamed)") : md_escape(m.instrument_name)) +
      " (`" + m.instrument_fingerprint + "`)\n");
  auto n_text = [](const std::optional<std::size_t>& n) { return n ? std::to_string(*n) : std::string("n/a"); };
  add("- Respondents: expectation " + n_text(m.n_expectation) + ", perception " + n_text(m.n_perception) +
      ", importance " + n_text(m.n_importance) + "\n");
  add("- Tool version: " + m.tool_version + "\n");
  if (m.generated_at && !options.suppress_timestamp) add("- Generated: " + *m.generated_at + "\n");
  if (!m.process_notes.empty()) add("\n> " + md_escape(m.process_notes) + "\n");
  add("\n");

  if (!r.warnings.empty()) {
    add("## Warnings\n\n");
    for (const auto& w : r.warnings) add("- `" + w.code + "`: " + md_escape(w.message) + "\n");
    add("\n");
  }

  const auto& g = r.gap_report;
  const auto& o = g.overall;
  add("## Overall\n\n| Metric | Value |\n|---|---:|\n");
  add("| Weighted SERVQUAL score (sum of weighted dimension scores) | " + fixed9(o.weighted_sum) + " |\n");
  add("| Weighted mean (sum / 100) | " + fixed9(o.weighted_mean) + " |\n");
  add("| Unweighted mean of dimension scores | " + fixed9(o.unweighted_mean) + " |\n");
  add("| Importance sum of means | " + fixed9(g.weights.sum_of_means()) + " |\n\n");

  add("## Dimensions\n\n");
  for (const auto& d : g.dimension_scores) {
    add("### " + std::string(display_name(d.dimension)) + "\n\n");
    add("| Item | Description | Expectation | Perception | Gap | Importance |\n|---:|---|---:|---:|---:|---:|\n");
    bool first = true;
    for (int id : d.item_ids) {
      for (const auto& x : g.item_gaps) {
        if (x.item_id != id) continue;
        add("| " + std::to_string(id) + " | " + md_escape(prompt_of(r, id)) + " | " + fixed9(x.expectation_mean) +
            " | " + fixed9(x.perception_mean) + " | " + fixed9(x.gap) + " | " +
            (first ? fixed9(d.importance) : std::string()) + " |\n");
        first = false;
      }
    }
    add("| | Average unweighted score | | | " + fixed9(d.unweighted) + " | |\n");
    add("| | Average weighted score | | | " + fixed9(d.weighted) + " | |\n\n");
  }

  if (g.reliability) {
    add("## Reliability\n\n| Survey | Alpha | Items | Respondents | Threshold | Gate |\n|---|---:|---:|---:|---:|---|\n");
    for (const auto& [name, rep] : {std::pair<const char*, const ReliabilityReport*>{"Expectation", &g.reliability->expectation},
                                    {"Perception", &g.reliability->perception}}) {
      add(std::string("| ") + name + " | " + fixed9(rep->alpha) + " | " + std::to_string(rep->n_items) + " | " +
          std::to_string(rep->n_respondents) + " | " + fixed9(rep->threshold) + " | " +
          (rep->passes_gate ? "pass" : "fail") + " |\n");
    }
    add("\n");
    for (const auto& [name, rep] : {std::pair<const char*, const ReliabilityReport*>{"Expectation", &g.reliability->expectation},
                                    {"Perception", &g.reliability->perception}}) {
      if (rep->omitted.empty()) continue;
      add(std::string("### ") + name + " omitted-item statistics\n\n");
      add("| Item | Adj. total mean | Adj. total StDev | Item-total corr | Squared multiple corr | Alpha if deleted |\n");
      add("|---:|---:|---:|---:|---:|---:|\n");
      for (const auto& x : rep->omitted) {
        add("| " + std::to_string(x.item_id) + " | " + fixed9(x.adj_total_mean) + " | " + fixed9(x.adj_total_stdev) +
            " | " + fixed9(x.item_adj_total_corr) + " | " + fixed9(x.squared_multiple_corr) + " | " +
            fixed9(x.alpha_if_deleted) + " |\n");
      }
      add("\n");
    }
  }

  add("## Kano priorities\n\nMultipliers: `" + format_kano_multipliers(r.kano_multipliers) + "`\n\n");
  add("| Rank | Item | Category | Raw contribution | Multiplier | Score |\n|---:|---:|---|---:|---:|---:|\n");
  for (const auto& k : r.kano_priorities) {
    add("| " + std::to_string(k.rank) + " | " + std::to_string(k.item_id) + " | " + std::string(to_token(k.category)) +
        " | " + fixed9(k.raw_contribution) + " | " + format_double(k.multiplier) + " | " + fixed9(k.priority_score) + " |\n");
  }
  add("\n");

  add("## Pareto of dissatisfaction\n\n");
  if (r.pareto.empty()) {
    add("No item has a negative gap.\n\n");
  } else {
    add("| Rank | Item | Label | Magnitude | Cumulative | Cumulative % |\n|---:|---:|---|---:|---:|---:|\n");
    for (const auto& row : r.pareto.rows) {
      const bool vital = r.pareto.vital_few_cutoff && static_cast<std::size_t>(row.rank) <= *r.pareto.vital_few_cutoff;
      add("| " + std::to_string(row.rank) + " | " + std::to_string(row.item_id) + " | " + md_escape(row.label) +
          (vital ? " **(vital few)**" : "") + " | " + fixed9(row.magnitude) + " | " + fixed9(row.cumulative) + " | " +
          fixed9(row.cumulative_pct) + " |\n");
    }
    add("\nThreshold " + format_double(r.pareto.threshold_pct) + "%: vital few = first " +
        std::to_string(r.pareto.vital_few_cutoff.value_or(0)) + " row(s).\n\n");
  }

  if (r.hoq) {
    const auto& h = *r.hoq;
    add("## House of quality: technical importance\n\n| Rank | Technical requirement | Absolute | Relative % |\n|---:|---|---:|---:|\n");
    std::vector<std::size_t> order(h.importance().size());
    for (std::size_t j = 0; j < order.size(); ++j) order[static_cast<std::size_t>(h.importance()[j].rank - 1)] = j;
    for (auto j : order) {
      const auto& t = h.importance()[j];
      add("| " + std::to_string(t.rank) + " | " + md_escape(h.tech_reqs()[j].name) + " | " + fixed9(t.absolute) + " | " +
          fixed9(t.relative_pct) + " |\n");
    }
    const auto conflicts = roof_conflicts(h);
    if (!conflicts.empty()) {
      add("\nTrade-offs (negative roof correlation):\n\n");
      for (const auto& [a, b] : conflicts) {
        add("- " + md_escape(h.tech_reqs()[a].name) + " vs " + md_escape(h.tech_reqs()[b].name) + "\n");
      }
    }
    add("\n");
  }

  if (r.fishbone) {
    add("## Cause and effect\n\nEffect: **" + md_escape(r.fishbone->effect) + "**\n\n");
    std::map<std::string, double> mags;
    for (const auto& b : r.branch_magnitudes) mags[b.branch] = b.magnitude;
    for (const auto& b : r.fishbone->branches) {
      add("- " + md_escape(b.name));
      if (auto it = mags.find(b.name); it != mags.end()) add(" (linked dissatisfaction " + fixed9(it->second) + ")");
      add("\n");
      for (const auto& c : b.causes) {
        add("  - " + md_escape(c.text) + "\n");
        for (const auto& s : c.sub_causes) add("    - " + md_escape(s) + "\n");
      }
    }
    add("\n");
  }
  return md;
}

}  // namespace satmetric
