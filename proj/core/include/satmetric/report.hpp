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

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "satmetric/kano.hpp"
#include "satmetric/psychometrics.hpp"
#include "satmetric/qfd.hpp"
#include "satmetric/rootcause.hpp"
#include "satmetric/servqual.hpp"

namespace satmetric {

std::string_view tool_version();

// Machine-readable warning codes.
namespace warnings {
inline constexpr std::string_view reliability_gate_failed = "reliability_gate_failed";
inline constexpr std::string_view alpha_undefined = "alpha_undefined";
inline constexpr std::string_view omitted_stats_unavailable = "omitted_stats_unavailable";
inline constexpr std::string_view weight_sum_drift = "weight_sum_drift";
inline constexpr std::string_view weights_normalized = "weights_normalized";
inline constexpr std::string_view hoq_degenerate = "hoq_degenerate";
inline constexpr std::string_view no_dissatisfaction = "no_dissatisfaction";
}  // namespace warnings

struct Warning {
  std::string code;
  std::string message;

  friend bool operator==(const Warning&, const Warning&) = default;
};

struct ReportMetadata {
  std::string tool_version;
  std::string instrument_name;
  std::string instrument_fingerprint;
  std::optional<std::size_t> n_expectation;
  std::optional<std::size_t> n_perception;
  std::optional<std::size_t> n_importance;
  std::optional<std::string> generated_at;  // ISO-8601 UTC; empty when suppressed
  std::vector<std::pair<std::string, std::string>> config;  // echo of run options
  std::string process_notes;  // free-text process description, not analyzed

  friend bool operator==(const ReportMetadata&, const ReportMetadata&) = default;
};

struct DescriptivesSection {
  VarianceMode variance_mode = VarianceMode::population;
  std::vector<ItemDescriptives> expectation;
  std::vector<ItemDescriptives> perception;

  friend bool operator==(const DescriptivesSection&, const DescriptivesSection&) = default;
};

struct AnalysisReport {
  ReportMetadata metadata;
  std::vector<Item> items;
  std::optional<DescriptivesSection> descriptives;
  GapReport gap_report;  // reliability lives in gap_report.reliability
  std::vector<KanoPriority> kano_priorities;
  KanoMultipliers kano_multipliers;
  std::optional<HouseOfQuality> hoq;
  ParetoTable pareto;
  std::optional<FishboneTree> fishbone;
  std::vector<BranchMagnitude> branch_magnitudes;
  std::vector<Warning> warnings;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

struct ReportParts {
  const SurveyInstrument* instrument = nullptr;
  ReportMetadata metadata;
  std::optional<DescriptivesSection> descriptives;
  std::optional<GapReport> gap_report;
  std::vector<KanoPriority> kano_priorities;
  KanoMultipliers kano_multipliers;
  std::optional<HouseOfQuality> hoq;
  ParetoTable pareto;
  std::optional<FishboneTree> fishbone;
  std::vector<BranchMagnitude> branch_magnitudes;
  bool weights_normalized = false;
};

/// Builds the report and derives its warnings. Throws ValidationError when
/// the gap report or the instrument is missing.
AnalysisReport assemble(ReportParts parts);

/// Warnings implied by the report's contents, in a fixed order.
std::vector<Warning> derive_warnings(const AnalysisReport& report, bool weights_normalized);

enum class OutputFormat { json, csv, markdown, svg };

std::string_view to_token(OutputFormat f);
std::optional<OutputFormat> parse_output_format(std::string_view token);

struct EmitOptions {
  bool suppress_timestamp = false;
};

struct EmittedFile {
  std::string path;  // relative to the output directory
  std::string bytes;

  friend bool operator==(const EmittedFile&, const EmittedFile&) = default;
};

/// Serializes a report. Output names: <stem>.report.json,
/// <stem>.tables/*.csv, <stem>.report.md, <stem>.charts/*.svg.
/// Byte-identical for identical (report, format, options).
std::vector<EmittedFile> emit(const AnalysisReport& report, OutputFormat format,
                              std::string_view stem, const EmitOptions& options = {});

std::string report_to_json(const AnalysisReport& report, const EmitOptions& options = {});
/// Throws ValidationError on malformed or incomplete input.
AnalysisReport report_from_json(std::string_view json_text);

std::string report_to_markdown(const AnalysisReport& report, const EmitOptions& options = {});
std::vector<EmittedFile> report_to_csv(const AnalysisReport& report);
std::vector<EmittedFile> report_to_svg(const AnalysisReport& report);

// Standalone tables, also used by the CLI subcommands.
std::string descriptives_csv(std::span<const ItemDescriptives> expectation,
                             std::span<const ItemDescriptives> perception);
std::string reliability_csv(const ReliabilityReport& report, std::string_view survey);
std::string reliability_json(const ReliabilityReport& report);
std::string hoq_csv(const HouseOfQuality& hoq);
std::string pareto_csv(const ParetoTable& table);

struct BarSeries {
  std::string title;
  std::string y_label;
  std::vector<std::string> labels;
  std::vector<double> values;
};

/// Minimal standalone SVG bar chart; negative values hang below the axis.
std::string bar_chart_svg(const BarSeries& series);
/// Bars sorted as given plus a cumulative-percent polyline and threshold line.
std::string pareto_chart_svg(const ParetoTable& table, std::string_view title);

}  // namespace satmetric
