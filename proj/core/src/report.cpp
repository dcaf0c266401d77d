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

#include "satmetric/report.hpp"

#include <cmath>

#include "satmetric/numfmt.hpp"

#ifndef SATMETRIC_VERSION
#define SATMETRIC_VERSION "0.0.0"
#endif

namespace satmetric {

std::string_view tool_version() { return SATMETRIC_VERSION; }

std::string_view to_token(OutputFormat f) {
  switch (f) {
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
    case OutputFormat::markdown: return "markdown";
    case OutputFormat::svg: return "svg";
  }
  return "?";
}

std::optional<OutputFormat> parse_output_format(std::string_view token) {
  if (token == "json") return OutputFormat::json;
  if (token == "csv") return OutputFormat::csv;
  if (token == "markdown" || token == "md") return OutputFormat::markdown;
  if (token == "svg" || token == "svg-charts") return OutputFormat::svg;
  return std::nullopt;
}

namespace {

void survey_warnings(const ReliabilityReport& r, std::string_view survey, std::vector<Warning>& out) {
  const std::string name(survey);
  if (!r.alpha) {
    out.push_back({std::string(warnings::alpha_undefined),
                   name + " survey: Cronbach's alpha is undefined (zero total-score variance)"});
    out.push_back({std::string(warnings::reliability_gate_failed),
                   name + " survey: reliability gate not passed (alpha undefined)"});
  } else if (!r.passes_gate) {
    out.push_back({std::string(warnings::reliability_gate_failed),
                   name + " survey: alpha " + format_double(*r.alpha) + " does not exceed " +
                       format_double(r.threshold)});
  }
  if (r.omitted.empty()) {
    out.push_back({std::string(warnings::omitted_stats_unavailable),
                   name + " survey: omitted-item statistics need at least three items"});
  }
}

}  // namespace

std::vector<Warning> derive_warnings(const AnalysisReport& report, bool weights_normalized) {
  std::vector<Warning> out;
  if (const auto& rel = report.gap_report.reliability) {
    survey_warnings(rel->expectation, "expectation", out);
    survey_warnings(rel->perception, "perception", out);
  }
  const double drift = report.gap_report.weights.sum_of_means() - 100.0;
  if (std::abs(drift) > 1e-9) {
    out.push_back({std::string(warnings::weight_sum_drift),
                   "importance weights sum to " +
                       format_double(report.gap_report.weights.sum_of_means()) +
                       " rather than 100"});
  }
  if (weights_normalized) {
    out.push_back({std::string(warnings::weights_normalized),
                   "importance weights were rescaled to sum to 100"});
  }
  if (report.hoq && report.hoq->degenerate()) {
    out.push_back({std::string(warnings::hoq_degenerate),
                   "house of quality has no nonzero technical weight"});
  }
  if (report.pareto.empty()) {
    out.push_back({std::string(warnings::no_dissatisfaction),
                   "no item has a negative gap; the Pareto table is empty"});
  }
  return out;
}

AnalysisReport assemble(ReportParts parts) {
  if (!parts.gap_report) throw ValidationError("report needs a gap report");
  if (!parts.instrument) throw ValidationError("report needs the survey instrument");
  AnalysisReport r;
  r.metadata = std::move(parts.metadata);
  if (r.metadata.tool_version.empty()) r.metadata.tool_version = std::string(tool_version());
  r.metadata.instrument_name = parts.instrument->name();
  r.metadata.instrument_fingerprint = parts.instrument->fingerprint();
  r.items.assign(parts.instrument->items().begin(), parts.instrument->items().end());
  r.descriptives = std::move(parts.descriptives);
  r.gap_report = std::move(*parts.gap_report);
  r.kano_priorities = std::move(parts.kano_priorities);
  r.kano_multipliers = parts.kano_multipliers;
  r.hoq = std::move(parts.hoq);
  r.pareto = std::move(parts.pareto);
  r.fishbone = std::move(parts.fishbone);
  r.branch_magnitudes = std::move(parts.branch_magnitudes);
  r.warnings = derive_warnings(r, parts.weights_normalized);
  return r;
}

std::vector<EmittedFile> emit(const AnalysisReport& report, OutputFormat format,
                              std::string_view stem, const EmitOptions& options) {
  const std::string base(stem);
  switch (format) {
    case OutputFormat::json:
      return {{base + ".report.json", report_to_json(report, options)}};
    case OutputFormat::markdown:
      return {{base + ".report.md", report_to_markdown(report, options)}};
    case OutputFormat::csv: {
      auto files = report_to_csv(report);
      for (auto& f : files) f.path = base + ".tables/" + f.path;
      return files;
    }
    case OutputFormat::svg: {
      auto files = report_to_svg(report);
      for (auto& f : files) f.path = base + ".charts/" + f.path;
      return files;
    }
  }
  throw ValidationError("unknown output format");
}

}  // namespace satmetric
