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

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "satmetric/numfmt.hpp"
#include "satmetric/report.hpp"

namespace satmetric {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 400.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 60.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 110.0;

std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string open_svg(std::string_view title) {
  std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + px(kWidth) + "\" height=\"" + px(kHeight) +
                  "\" viewBox=\"0 0 " + px(kWidth) + " " + px(kHeight) + "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  s += "<title>" + xml_escape(title) + "</title>\n";
  s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s += "<text x=\"" + px(kWidth / 2) + "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">" + xml_escape(title) + "</text>\n";
  return s;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

}  // namespace

std::string bar_chart_svg(const BarSeries& series) {
  std::string s = open_svg(series.title);
  const std::size_t n = std::min(series.labels.size(), series.values.size());
  double hi = 0.0, lo = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::isfinite(series.values[i])) {
      hi = std::max(hi, series.values[i]);
      lo = std::min(lo, series.values[i]);
    }
  }
  if (hi == lo) hi = lo + 1.0;
  const double plot_h = kHeight - kTop - kBottom;
  const double plot_w = kWidth - kLeft - kRight;
  auto y_of = [&](double v) { return kTop + (hi - v) / (hi - lo) * plot_h; };
  const double zero = y_of(0.0);

  s += "<text x=\"16\" y=\"" + px(kTop + plot_h / 2) + "\" transform=\"rotate(-90 16 " + px(kTop + plot_h / 2) +
       ")\" text-anchor=\"middle\">" + xml_escape(series.y_label) + "</text>\n";
  for (int t = 0; t <= 4; ++t) {
    const double v = lo + (hi - lo) * t / 4.0;
    const double y = y_of(v);
    s += "<line x1=\"" + px(kLeft - 4) + "\" y1=\"" + px(y) + "\" x2=\"" + px(kWidth - kRight) + "\" y2=\"" + px(y) +
         "\" stroke=\"#ddd\"/>\n";
    s += "<text x=\"" + px(kLeft - 6) + "\" y=\"" + px(y + 4) + "\" text-anchor=\"end\">" + tick_label(v) + "</text>\n";
  }
  s += "<line x1=\"" + px(kLeft) + "\" y1=\"" + px(zero) + "\" x2=\"" + px(kWidth - kRight) + "\" y2=\"" + px(zero) +
       "\" stroke=\"black\"/>\n";

  if (n > 0) {
    const double slot = plot_w / static_cast<double>(n);
    const double bar_w = slot * 0.7;
    for (std::size_t i = 0; i < n; ++i) {
      const double v = std::isfinite(series.values[i]) ? series.values[i] : 0.0;
      const double x = kLeft + slot * static_cast<double>(i) + (slot - bar_w) / 2;
      const double top = std::min(y_of(v), zero);
      const double h = std::abs(y_of(v) - zero);
      s += "<rect x=\"" + px(x) + "\" y=\"" + px(top) + "\" width=\"" + px(bar_w) + "\" height=\"" + px(h) +
           "\" fill=\"" + (v < 0 ? "#c0504d" : "#4f81bd") + "\"><title>" + xml_escape(series.labels[i]) + ": " +
           format_double(v) + "</title></rect>\n";
      const double lx = x + bar_w / 2;
      const double ly = kHeight - kBottom + 14;
      s += "<text x=\"" + px(lx) + "\" y=\"" + px(ly) + "\" transform=\"rotate(45 " + px(lx) + " " + px(ly) +
           ")\">" + xml_escape(series.labels[i]) + "</text>\n";
    }
  }
  s += "</svg>\n";
  return s;
}

std::string pareto_chart_svg(const ParetoTable& table, std::string_view title) {
  std::string s = open_svg(title);
  const double plot_h = kHeight - kTop - kBottom;
  const double plot_w = kWidth - kLeft - kRight;
  const double base = kTop + plot_h;
  double hi = 0.0;
  for (const auto& r : table.rows) hi = std::max(hi, r.magnitude);
  if (hi <= 0.0) hi = 1.0;

  s += "<line x1=\"" + px(kLeft) + "\" y1=\"" + px(base) + "\" x2=\"" + px(kWidth - kRight) + "\" y2=\"" + px(base) +
       "\" stroke=\"black\"/>\n";
  for (int t = 0; t <= 4; ++t) {
    const double y = base - plot_h * t / 4.0;
    s += "<text x=\"" + px(kLeft - 6) + "\" y=\"" + px(y + 4) + "\" text-anchor=\"end\">" + tick_label(hi * t / 4.0) +
         "</text>\n";
    s += "<text x=\"" + px(kWidth - kRight + 6) + "\" y=\"" + px(y + 4) + "\">" + std::to_string(25 * t) + "%</text>\n";
  }
  const double ty = base - plot_h * table.threshold_pct / 100.0;
  s += "<line x1=\"" + px(kLeft) + "\" y1=\"" + px(ty) + "\" x2=\"" + px(kWidth - kRight) + "\" y2=\"" + px(ty) +
       "\" stroke=\"#888\" stroke-dasharray=\"4 3\"/>\n";

  const std::size_t n = table.rows.size();
  if (n > 0) {
    const double slot = plot_w / static_cast<double>(n);
    const double bar_w = slot * 0.7;
    std::string points;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& r = table.rows[i];
      const double x = kLeft + slot * static_cast<double>(i) + (slot - bar_w) / 2;
      const double h = r.magnitude / hi * plot_h;
      const bool vital = table.vital_few_cutoff && i < *table.vital_few_cutoff;
      s += "<rect x=\"" + px(x) + "\" y=\"" + px(base - h) + "\" width=\"" + px(bar_w) + "\" height=\"" + px(h) +
           "\" fill=\"" + (vital ? "#c0504d" : "#9bbb59") + "\"><title>" + xml_escape(r.label) + ": " +
           format_double(r.magnitude) + "</title></rect>\n";
      const double cx = x + bar_w / 2;
      const double cy = base - plot_h * r.cumulative_pct / 100.0;
      if (!points.empty()) points += ' ';
      points += px(cx) + "," + px(cy);
      const double ly = base + 14;
      s += "<text x=\"" + px(cx) + "\" y=\"" + px(ly) + "\" transform=\"rotate(45 " + px(cx) + " " + px(ly) + ")\">" +
           std::to_string(r.item_id) + "</text>\n";
    }
    s += "<polyline points=\"" + points + "\" fill=\"none\" stroke=\"#1f3864\" stroke-width=\"2\"/>\n";
  }
  s += "</svg>\n";
  return s;
}

std::vector<EmittedFile> report_to_svg(const AnalysisReport& r) {
  std::vector<EmittedFile> files;
  const auto& g = r.gap_report;
  auto item_series = [&](const char* title, const char* y, auto value) {
    BarSeries s{title, y, {}, {}};
    for (const auto& x : g.item_gaps) {
      s.labels.push_back("Q" + std::to_string(x.item_id));
      s.values.push_back(value(x));
    }
    return s;
  };

  files.push_back({"expectation_by_item.svg",
                   bar_chart_svg(item_series("Expectation by item", "mean", [](const ItemGap& x) { return x.expectation_mean; }))});

  BarSeries by_dim{"Expectation by dimension", "mean", {}, {}};
  BarSeries weights{"Dimension importance", "importance (points of 100)", {}, {}};
  BarSeries weighted{"Weighted gap by dimension", "weighted gap", {}, {}};
  for (const auto& d : g.dimension_scores) {
    double sum = 0.0;
    std::size_t cnt = 0;
    for (int id : d.item_ids) {
      for (const auto& x : g.item_gaps) {
        if (x.item_id == id) {
          sum += x.expectation_mean;
          ++cnt;
        }
      }
    }
    const std::string name(display_name(d.dimension));
    by_dim.labels.push_back(name);
    by_dim.values.push_back(cnt ? sum / static_cast<double>(cnt) : 0.0);
    weights.labels.push_back(name);
    weights.values.push_back(d.importance);
    weighted.labels.push_back(name);
    weighted.values.push_back(d.weighted);
  }
  files.push_back({"expectation_by_dimension.svg", bar_chart_svg(by_dim)});
  files.push_back({"dimension_weights.svg", bar_chart_svg(weights)});
  files.push_back({"perception_by_item.svg",
                   bar_chart_svg(item_series("Perception by item", "mean", [](const ItemGap& x) { return x.perception_mean; }))});
  files.push_back({"gaps_by_item.svg",
                   bar_chart_svg(item_series("Gap by item (P - E)", "gap", [](const ItemGap& x) { return x.gap; }))});
  files.push_back({"weighted_gaps_by_dimension.svg", bar_chart_svg(weighted)});
  files.push_back({"pareto.svg", pareto_chart_svg(r.pareto, "Pareto of dissatisfaction")});

  if (r.hoq) {
    BarSeries h{"Technical importance", "relative %", {}, {}};
    for (std::size_t j = 0; j < r.hoq->tech_reqs().size(); ++j) {
      h.labels.push_back(r.hoq->tech_reqs()[j].name);
      h.values.push_back(r.hoq->importance()[j].relative_pct);
    }
    files.push_back({"hoq_weights.svg", bar_chart_svg(h)});
  }
  return files;
}

}  // namespace satmetric
