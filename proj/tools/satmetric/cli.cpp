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

#include "cli.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "satmetric/csv.hpp"
#include "satmetric/ingest.hpp"
#include "satmetric/instrument.hpp"
#include "satmetric/kano.hpp"
#include "satmetric/numfmt.hpp"
#include "satmetric/psychometrics.hpp"
#include "satmetric/qfd.hpp"
#include "satmetric/report.hpp"
#include "satmetric/rootcause.hpp"
#include "satmetric/servqual.hpp"

namespace satmetric::cli {

namespace {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Refused to produce results; diagnostics were already printed.
struct Refusal : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string instrument;
  std::string expect;
  std::string perceive;
  std::string importance;
  std::string weights;
  std::string variance = "population";
  double alpha_threshold = kDefaultAlphaThreshold;
  bool strict_gate = false;
  std::string kano_multipliers;
  double pareto_threshold = kDefaultParetoThreshold;
  bool pareto_unweighted = false;
  bool normalize_weights = false;
  double weight_tolerance = kDefaultWeightTolerance;
  std::string missing_policy = "drop_row";
  std::string hoq;
  std::string fishbone;
  std::string notes;
  std::string out;
  std::vector<std::string> formats;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::string means;
  std::string kind = "expectation";
  bool suppress_timestamp = false;
  std::string from;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view bytes) {
  const fs::path p(path);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("cannot write " + path);
}

template <class T, class F>
T parse_choice(const std::string& flag, const std::string& value, F parser) {
  auto v = parser(value);
  if (!v) throw UsageError(flag + ": unknown value '" + value + "'");
  return *v;
}

SurveyInstrument load_instrument(const std::string& path) { return build_instrument(read_file(path)); }

ResponseSet load_responses(const std::string& path, const SurveyInstrument& instrument, ResponseKind kind,
                           MissingPolicy policy, std::ostream& err) {
  auto report_rows = [&](const ValidationReport& rep) {
    for (const auto& e : rep.row_errors) {
      err << path << ": row " << e.row;
      if (!e.column.empty()) err << ", column " << e.column;
      err << ": " << e.code << ": " << e.message << "\n";
    }
  };
  try {
    auto parsed = parse_response_file(read_file(path), instrument, kind, policy);
    report_rows(parsed.report);
    if (parsed.report.rejected_rows > 0) {
      err << path << ": dropped " << parsed.report.rejected_rows << " of " << parsed.report.raw_rows()
          << " rows\n";
    }
    return std::move(parsed.responses);
  } catch (const RejectedDataError& e) {
    report_rows(e.report());
    throw ValidationError(path + ": " + e.what());
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

// "reliability=3255/82,responsiveness=...": all five dimensions, each once.
ImportanceWeights parse_weights(const std::string& text) {
  std::array<double, kDimensionCount> v{};
  std::array<bool, kDimensionCount> seen{};
  std::string_view rest = text;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view part = trim(rest.substr(0, comma));
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    const auto eq = part.find('=');
    if (eq == std::string_view::npos) throw UsageError("--weights: expected dimension=value, got '" + std::string(part) + "'");
    const auto dim = parse_dimension(trim(part.substr(0, eq)));
    if (!dim) throw UsageError("--weights: unknown dimension '" + std::string(part.substr(0, eq)) + "'");
    const auto value = parse_real(trim(part.substr(eq + 1)));
    if (!value) throw UsageError("--weights: bad number in '" + std::string(part) + "'");
    if (seen[index_of(*dim)]) throw UsageError("--weights: dimension given twice: " + std::string(to_token(*dim)));
    seen[index_of(*dim)] = true;
    v[index_of(*dim)] = *value;
  }
  for (auto d : kDimensionOrder) {
    if (!seen[index_of(d)]) throw UsageError("--weights: missing dimension " + std::string(to_token(d)));
  }
  try {
    return ImportanceWeights(v, 0);
  } catch (const ValidationError& e) {
    throw UsageError(std::string("--weights: ") + e.what());
  }
}

std::vector<double> parse_means(const std::string& text) {
  std::vector<double> out;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    const auto part = trim(rest.substr(0, comma));
    const auto v = parse_real(part);
    if (!v) throw UsageError("--means: bad number '" + std::string(part) + "'");
    out.push_back(*v);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return out;
}

std::vector<OutputFormat> parse_formats(const std::vector<std::string>& tokens) {
  std::vector<OutputFormat> out;
  for (const auto& t : tokens) {
    std::string_view rest = t;
    while (true) {
      const auto comma = rest.find(',');
      const auto part = trim(rest.substr(0, comma));
      const auto f = parse_output_format(part);
      if (!f) throw UsageError("--format: unknown format '" + std::string(part) + "'");
      if (std::find(out.begin(), out.end(), *f) == out.end()) out.push_back(*f);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  }
  if (out.empty()) out = {OutputFormat::json, OutputFormat::csv, OutputFormat::markdown, OutputFormat::svg};
  return out;
}

std::string utc_now() {
  const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void emit_all(const AnalysisReport& report, const RunConfig& cfg, std::ostream& out) {
  EmitOptions opts{cfg.suppress_timestamp};
  for (auto fmt : parse_formats(cfg.formats)) {
    for (const auto& f : emit(report, fmt, cfg.out, opts)) {
      write_file(f.path, f.bytes);
      out << f.path << "\n";
    }
  }
}

// Importance weights from --weights or --importance, with tolerance handling.
ImportanceWeights resolve_weights(const RunConfig& cfg, const SurveyInstrument* instrument, MissingPolicy policy,
                                  std::optional<std::size_t>& n_importance, bool& normalized, std::ostream& err) {
  ImportanceWeights w;
  if (!cfg.weights.empty()) {
    w = parse_weights(cfg.weights);
  } else {
    if (!instrument) throw UsageError("--importance needs --instrument");
    const auto rs = load_responses(cfg.importance, *instrument, ResponseKind::importance, policy, err);
    n_importance = rs.respondents();
    w = importance_weights(rs);
  }
  normalized = false;
  if (cfg.normalize_weights && w.sum_of_means() != 100.0) {
    w = w.normalized();
    normalized = true;
  } else if (!w.within_tolerance(cfg.weight_tolerance)) {
    throw ValidationError("importance weights sum to " + format_double(w.sum_of_means()) +
                          ", outside 100 +/- " + format_double(cfg.weight_tolerance) +
                          " (use --normalize-weights to rescale)");
  }
  return w;
}

void print_gate(const ReliabilityReport& r, std::string_view survey, std::ostream& err) {
  err << survey << ": alpha=" << (r.alpha ? format_double(*r.alpha) : std::string("undefined"))
      << " threshold=" << format_double(r.threshold) << " gate=" << (r.passes_gate ? "pass" : "fail") << "\n";
}

void check_threshold(const RunConfig& cfg) {
  if (!(cfg.alpha_threshold >= 0.0 && cfg.alpha_threshold <= 1.0)) {
    throw UsageError("--alpha-threshold must lie in [0, 1]");
  }
}

int cmd_validate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto instrument = load_instrument(cfg.instrument);
  out << "instrument " << cfg.instrument << ": " << instrument.size() << " items, " << instrument.fingerprint()
      << "\n";
  for (auto d : instrument.missing_dimensions()) {
    err << cfg.instrument << ": no items for dimension " << to_token(d) << "\n";
  }
  bool ok = true;
  const std::pair<const std::string*, ResponseKind> files[] = {{&cfg.expect, ResponseKind::expectation},
                                                               {&cfg.perceive, ResponseKind::perception},
                                                               {&cfg.importance, ResponseKind::importance}};
  for (const auto& [path, kind] : files) {
    if (path->empty()) continue;
    try {
      auto parsed = parse_response_file(read_file(*path), instrument, kind, MissingPolicy::drop_row);
      for (const auto& e : parsed.report.row_errors) {
        err << *path << ": row " << e.row;
        if (!e.column.empty()) err << ", column " << e.column;
        err << ": " << e.code << ": " << e.message << "\n";
      }
      out << to_token(kind) << " " << *path << ": " << parsed.report.accepted_rows << " accepted, "
          << parsed.report.rejected_rows << " rejected\n";
      if (!parsed.report.clean()) ok = false;
    } catch (const RejectedDataError& e) {
      for (const auto& r : e.report().row_errors) {
        err << *path << ": row " << r.row;
        if (!r.column.empty()) err << ", column " << r.column;
        err << ": " << r.code << ": " << r.message << "\n";
      }
      err << *path << ": " << e.what() << "\n";
      ok = false;
    } catch (const ValidationError& e) {
      err << *path << ": " << e.what() << "\n";
      ok = false;
    }
  }
  if (!cfg.hoq.empty()) {
    try {
      const auto h = build_hoq(read_file(cfg.hoq));
      out << "hoq " << cfg.hoq << ": " << h.customer_reqs().size() << "x" << h.tech_reqs().size() << "\n";
    } catch (const ValidationError& e) {
      err << cfg.hoq << ": " << e.what() << "\n";
      ok = false;
    }
  }
  if (!cfg.fishbone.empty()) {
    try {
      const auto f = build_fishbone(read_file(cfg.fishbone));
      out << "fishbone " << cfg.fishbone << ": " << f.branches.size() << " branches\n";
    } catch (const ValidationError& e) {
      err << cfg.fishbone << ": " << e.what() << "\n";
      ok = false;
    }
  }
  return ok ? kOk : kDataError;
}

int cmd_descriptives(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.expect.empty() && cfg.perceive.empty()) throw UsageError("descriptives needs --expect and/or --perceive");
  const auto mode = parse_choice<VarianceMode>("--variance", cfg.variance, parse_variance_mode);
  const auto policy = parse_choice<MissingPolicy>("--missing-policy", cfg.missing_policy, parse_missing_policy);
  const auto instrument = load_instrument(cfg.instrument);
  std::vector<ItemDescriptives> e, p;
  if (!cfg.expect.empty()) {
    e = item_descriptives(load_responses(cfg.expect, instrument, ResponseKind::expectation, policy, err), instrument, mode);
  }
  if (!cfg.perceive.empty()) {
    p = item_descriptives(load_responses(cfg.perceive, instrument, ResponseKind::perception, policy, err), instrument, mode);
  }
  const auto text = descriptives_csv(e, p);
  if (cfg.out.empty()) {
    out << text;
  } else {
    write_file(cfg.out + ".descriptives.csv", text);
    out << cfg.out << ".descriptives.csv\n";
  }
  return kOk;
}

int cmd_reliability(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.expect.empty() && cfg.perceive.empty()) throw UsageError("reliability needs --expect and/or --perceive");
  check_threshold(cfg);
  const auto policy = parse_choice<MissingPolicy>("--missing-policy", cfg.missing_policy, parse_missing_policy);
  std::string fmt = cfg.formats.empty() ? "json" : cfg.formats.front();
  if (fmt != "json" && fmt != "csv") throw UsageError("reliability: --format must be json or csv");
  const auto instrument = load_instrument(cfg.instrument);

  std::vector<std::pair<std::string, ReliabilityReport>> reports;
  if (!cfg.expect.empty()) {
    reports.emplace_back("expectation", analyze_reliability(load_responses(cfg.expect, instrument,
                                                                           ResponseKind::expectation, policy, err),
                                                            instrument, cfg.alpha_threshold));
  }
  if (!cfg.perceive.empty()) {
    reports.emplace_back("perception", analyze_reliability(load_responses(cfg.perceive, instrument,
                                                                          ResponseKind::perception, policy, err),
                                                           instrument, cfg.alpha_threshold));
  }

  std::string text;
  if (fmt == "json") {
    ordered_json doc = ordered_json::object();
    for (const auto& [name, r] : reports) doc[name] = ordered_json::parse(reliability_json(r));
    text = doc.dump(2) + "\n";
  } else {
    bool first = true;
    for (const auto& [name, r] : reports) {
      auto body = reliability_csv(r, name);
      if (!first) body = body.substr(body.find('\n') + 1);
      text += body;
      first = false;
    }
  }
  bool all_pass = true;
  for (const auto& [name, r] : reports) {
    print_gate(r, name, err);
    all_pass = all_pass && r.passes_gate;
  }
  if (cfg.out.empty()) {
    out << text;
  } else {
    const auto path = cfg.out + ".reliability." + fmt;
    write_file(path, text);
    out << path << "\n";
  }
  if (!all_pass) {
    err << "warning: " << warnings::reliability_gate_failed << "\n";
    if (cfg.strict_gate) return kDataError;
  }
  return kOk;
}

int cmd_gap(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.importance.empty() == cfg.weights.empty()) throw UsageError("gap needs exactly one of --importance or --weights");
  check_threshold(cfg);
  if (!(cfg.pareto_threshold > 0.0 && cfg.pareto_threshold <= 100.0)) {
    throw UsageError("--pareto-threshold must lie in (0, 100]");
  }
  if (!(cfg.weight_tolerance >= 0.0)) throw UsageError("--weight-tolerance must be nonnegative");
  const auto mode = parse_choice<VarianceMode>("--variance", cfg.variance, parse_variance_mode);
  const auto policy = parse_choice<MissingPolicy>("--missing-policy", cfg.missing_policy, parse_missing_policy);
  KanoMultipliers multipliers;
  if (!cfg.kano_multipliers.empty()) {
    try {
      multipliers = parse_kano_multipliers(cfg.kano_multipliers);
    } catch (const ValidationError& e) {
      throw UsageError(std::string("--kano-multipliers: ") + e.what());
    }
  }
  parse_formats(cfg.formats);

  const auto instrument = load_instrument(cfg.instrument);
  const auto expect = load_responses(cfg.expect, instrument, ResponseKind::expectation, policy, err);
  const auto perceive = load_responses(cfg.perceive, instrument, ResponseKind::perception, policy, err);
  std::optional<std::size_t> n_importance;
  bool normalized = false;
  const auto weights = resolve_weights(cfg, &instrument, policy, n_importance, normalized, err);

  ReliabilityContext rel{analyze_reliability(expect, instrument, cfg.alpha_threshold),
                         analyze_reliability(perceive, instrument, cfg.alpha_threshold)};
  print_gate(rel.expectation, "expectation", err);
  print_gate(rel.perception, "perception", err);
  if (cfg.strict_gate && !(rel.expectation.passes_gate && rel.perception.passes_gate)) {
    throw Refusal("reliability gate failed under --strict-gate; no scores emitted");
  }

  DescriptivesSection desc{mode, item_descriptives(expect, instrument, mode), item_descriptives(perceive, instrument, mode)};
  auto gaps = analyze_gaps(desc.expectation, desc.perception, weights, instrument);
  gaps.reliability = rel;

  ReportParts parts;
  parts.instrument = &instrument;
  parts.kano_priorities = prioritize(gaps.item_gaps, weights, instrument, multipliers);
  parts.kano_multipliers = multipliers;
  const auto contribs = dissatisfaction_contributions(
      gaps.item_gaps, weights, instrument,
      cfg.pareto_unweighted ? ContributionWeighting::unweighted : ContributionWeighting::importance);
  parts.pareto = pareto(contribs, cfg.pareto_threshold);
  if (!cfg.hoq.empty()) parts.hoq = build_hoq(read_file(cfg.hoq)).with_dimension_importance(weights);
  if (!cfg.fishbone.empty()) {
    parts.fishbone = build_fishbone(read_file(cfg.fishbone));
    parts.branch_magnitudes = branch_magnitudes(*parts.fishbone, contribs);
  }
  parts.weights_normalized = normalized;

  auto& m = parts.metadata;
  m.n_expectation = expect.respondents();
  m.n_perception = perceive.respondents();
  m.n_importance = n_importance;
  if (!cfg.suppress_timestamp) m.generated_at = utc_now();
  m.process_notes = cfg.notes;
  m.config = {{"variance", std::string(to_token(mode))},
              {"alpha_threshold", format_double(cfg.alpha_threshold)},
              {"strict_gate", cfg.strict_gate ? "true" : "false"},
              {"kano_multipliers", format_kano_multipliers(multipliers)},
              {"pareto_threshold", format_double(cfg.pareto_threshold)},
              {"pareto_weighting", cfg.pareto_unweighted ? "unweighted" : "importance"},
              {"normalize_weights", cfg.normalize_weights ? "true" : "false"},
              {"weight_tolerance", format_double(cfg.weight_tolerance)},
              {"missing_policy", cfg.missing_policy},
              {"weights_source", cfg.weights.empty() ? "importance_file" : "explicit"}};
  parts.descriptives = std::move(desc);
  parts.gap_report = std::move(gaps);

  const auto report = assemble(std::move(parts));
  for (const auto& w : report.warnings) err << "warning: " << w.code << ": " << w.message << "\n";
  emit_all(report, cfg, out);
  return kOk;
}

int cmd_qfd(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.importance.empty() && !cfg.weights.empty()) throw UsageError("qfd takes at most one of --importance or --weights");
  std::string fmt = cfg.formats.empty() ? "csv" : cfg.formats.front();
  if (fmt != "json" && fmt != "csv") throw UsageError("qfd: --format must be json or csv");
  std::optional<SurveyInstrument> instrument;
  if (!cfg.instrument.empty()) instrument = load_instrument(cfg.instrument);
  auto hoq = build_hoq(read_file(cfg.hoq));
  if (!cfg.importance.empty() || !cfg.weights.empty()) {
    const auto policy = parse_choice<MissingPolicy>("--missing-policy", cfg.missing_policy, parse_missing_policy);
    std::optional<std::size_t> n;
    bool normalized = false;
    hoq = hoq.with_dimension_importance(
        resolve_weights(cfg, instrument ? &*instrument : nullptr, policy, n, normalized, err));
  }
  if (hoq.degenerate()) err << "warning: " << warnings::hoq_degenerate << "\n";
  for (const auto& [a, b] : roof_conflicts(hoq)) {
    err << "trade-off: " << hoq.tech_reqs()[a].name << " vs " << hoq.tech_reqs()[b].name << "\n";
  }
  std::string text;
  if (fmt == "csv") {
    text = hoq_csv(hoq);
  } else {
    ordered_json rows = ordered_json::array();
    for (std::size_t j = 0; j < hoq.tech_reqs().size(); ++j) {
      const auto& t = hoq.importance()[j];
      rows.push_back({{"id", t.tech_id}, {"name", hoq.tech_reqs()[j].name}, {"absolute", t.absolute},
                      {"relative_pct", t.relative_pct}, {"rank", t.rank}});
    }
    ordered_json conflicts = ordered_json::array();
    for (const auto& [a, b] : roof_conflicts(hoq)) conflicts.push_back({hoq.tech_reqs()[a].id, hoq.tech_reqs()[b].id});
    ordered_json doc{{"technical_importance", rows}, {"conflicts", conflicts}, {"degenerate", hoq.degenerate()}};
    text = doc.dump(2) + "\n";
  }
  if (cfg.out.empty()) {
    out << text;
  } else {
    const auto path = cfg.out + ".hoq." + fmt;
    write_file(path, text);
    out << path << "\n";
  }
  return kOk;
}

int cmd_synth(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const auto kind = parse_choice<ResponseKind>("--kind", cfg.kind, parse_response_kind);
  if (kind == ResponseKind::importance) throw UsageError("--kind must be expectation or perception");
  if (cfg.n == 0) throw UsageError("--n must be positive");
  const auto instrument = load_instrument(cfg.instrument);
  const auto means = parse_means(cfg.means);
  if (means.size() != instrument.size()) {
    throw UsageError("--means has " + std::to_string(means.size()) + " values for " +
                     std::to_string(instrument.size()) + " items");
  }
  const auto rs = generate_synthetic(means, cfg.n, instrument, cfg.seed, kind);
  const auto text = serialize_response_set(rs, instrument);
  if (cfg.out.empty()) {
    out << text;
  } else {
    write_file(cfg.out, text);
  }
  return kOk;
}

int cmd_report(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  parse_formats(cfg.formats);
  const auto report = report_from_json(read_file(cfg.from));
  emit_all(report, cfg, out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Service-quality survey analytics: reliability, SERVQUAL gaps, Kano, QFD and Pareto", "satmetric"};
  app.set_version_flag("--version", std::string(tool_version()));
  app.require_subcommand(1);

  auto add_instrument = [&](CLI::App* c, bool required) {
    auto* o = c->add_option("--instrument", cfg.instrument, "Survey instrument definition (JSON)");
    if (required) o->required();
  };
  auto add_policy = [&](CLI::App* c) {
    c->add_option("--missing-policy", cfg.missing_policy, "drop_row or fail")->capture_default_str();
  };
  auto add_output = [&](CLI::App* c, bool required) {
    auto* o = c->add_option("--out", cfg.out, "Output stem");
    if (required) o->required();
    c->add_option("--format", cfg.formats, "Output format(s)")->delimiter(',');
  };
  auto add_gate = [&](CLI::App* c) {
    c->add_option("--alpha-threshold", cfg.alpha_threshold, "Reliability gate: alpha must exceed this")
        ->capture_default_str();
    c->add_flag("--strict-gate", cfg.strict_gate, "Exit 1 when a survey fails the reliability gate");
  };

  auto* validate = app.add_subcommand("validate", "Check input files without analyzing them");
  add_instrument(validate, true);
  validate->add_option("--expect", cfg.expect, "Expectation responses (CSV)");
  validate->add_option("--perceive", cfg.perceive, "Perception responses (CSV)");
  validate->add_option("--importance", cfg.importance, "Importance allocations (CSV)");
  validate->add_option("--hoq", cfg.hoq, "House of quality (JSON)");
  validate->add_option("--fishbone", cfg.fishbone, "Cause-and-effect tree (JSON)");

  auto* descriptives = app.add_subcommand("descriptives", "Per-item means and variances");
  add_instrument(descriptives, true);
  descriptives->add_option("--expect", cfg.expect, "Expectation responses (CSV)");
  descriptives->add_option("--perceive", cfg.perceive, "Perception responses (CSV)");
  descriptives->add_option("--variance", cfg.variance, "population or sample")->capture_default_str();
  descriptives->add_option("--out", cfg.out, "Output stem (default: standard output)");
  add_policy(descriptives);

  auto* reliability = app.add_subcommand("reliability", "Cronbach's alpha and omitted-item statistics");
  add_instrument(reliability, true);
  reliability->add_option("--expect", cfg.expect, "Expectation responses (CSV)");
  reliability->add_option("--perceive", cfg.perceive, "Perception responses (CSV)");
  add_gate(reliability);
  add_policy(reliability);
  add_output(reliability, false);

  auto* gap = app.add_subcommand("gap", "Full pipeline: reliability, gaps, Kano, Pareto, optional QFD");
  add_instrument(gap, true);
  gap->add_option("--expect", cfg.expect, "Expectation responses (CSV)")->required();
  gap->add_option("--perceive", cfg.perceive, "Perception responses (CSV)")->required();
  gap->add_option("--importance", cfg.importance, "Importance allocations (CSV)");
  gap->add_option("--weights", cfg.weights, "Explicit dimension weights, e.g. reliability=3255/82,...");
  gap->add_option("--variance", cfg.variance, "population or sample")->capture_default_str();
  add_gate(gap);
  gap->add_option("--kano-multipliers", cfg.kano_multipliers, "e.g. must_be=2,performance=1,delighter=0,indifferent=0");
  gap->add_option("--pareto-threshold", cfg.pareto_threshold, "Vital-few cumulative percent")->capture_default_str();
  gap->add_flag("--pareto-unweighted", cfg.pareto_unweighted, "Rank dissatisfaction by |gap| alone");
  gap->add_flag("--normalize-weights", cfg.normalize_weights, "Rescale importance weights to sum to 100");
  gap->add_option("--weight-tolerance", cfg.weight_tolerance, "Allowed drift of the weight sum from 100")
      ->capture_default_str();
  gap->add_option("--hoq", cfg.hoq, "House of quality (JSON)");
  gap->add_option("--fishbone", cfg.fishbone, "Cause-and-effect tree (JSON)");
  gap->add_option("--notes", cfg.notes, "Free-text process description carried into the report");
  gap->add_flag("--suppress-timestamp", cfg.suppress_timestamp, "Omit the generation time");
  add_policy(gap);
  add_output(gap, true);

  auto* qfd = app.add_subcommand("qfd", "Technical importance from a house of quality");
  qfd->add_option("--hoq", cfg.hoq, "House of quality (JSON)")->required();
  add_instrument(qfd, false);
  qfd->add_option("--importance", cfg.importance, "Importance allocations (CSV) overriding dimension rows");
  qfd->add_option("--weights", cfg.weights, "Explicit dimension weights overriding dimension rows");
  qfd->add_flag("--normalize-weights", cfg.normalize_weights, "Rescale importance weights to sum to 100");
  qfd->add_option("--weight-tolerance", cfg.weight_tolerance, "Allowed drift of the weight sum from 100")
      ->capture_default_str();
  add_policy(qfd);
  add_output(qfd, false);

  auto* synth = app.add_subcommand("synth", "Generate Likert responses with exact target means");
  add_instrument(synth, true);
  synth->add_option("--means", cfg.means, "Comma-separated target means, one per item")->required();
  synth->add_option("--n", cfg.n, "Number of respondents")->required();
  synth->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  synth->add_option("--kind", cfg.kind, "expectation or perception")->capture_default_str();
  synth->add_option("--out", cfg.out, "Output CSV (default: standard output)");

  auto* report = app.add_subcommand("report", "Re-emit a saved JSON report");
  report->add_option("--from", cfg.from, "Saved report (JSON)")->required();
  report->add_flag("--suppress-timestamp", cfg.suppress_timestamp, "Omit the generation time");
  add_output(report, true);

  std::vector<const char*> argv{"satmetric"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    if (validate->parsed()) return cmd_validate(cfg, out, err);
    if (descriptives->parsed()) return cmd_descriptives(cfg, out, err);
    if (reliability->parsed()) return cmd_reliability(cfg, out, err);
    if (gap->parsed()) return cmd_gap(cfg, out, err);
    if (qfd->parsed()) return cmd_qfd(cfg, out, err);
    if (synth->parsed()) return cmd_synth(cfg, out, err);
    if (report->parsed()) return cmd_report(cfg, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\nRun with --help for more information.\n";
    return kUsageError;
  } catch (const Refusal& e) {
    err << "error: " << e.what() << "\n";
    return kDataError;
  } catch (const satmetric::Error& e) {
    err << "error: " << e.what() << "\n";
    return kDataError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDataError;
  }
  return kUsageError;
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace satmetric::cli
