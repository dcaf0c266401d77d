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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "alpha_oracle.hpp"
#include "cli.hpp"
#include "satmetric/report.hpp"
#include "xyz_fixture.hpp"

namespace {

namespace fs = std::filesystem;
using namespace satmetric;
using namespace satmetric::testing;

// Collects failed expectations for one criterion.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  void near(double got, double want, double tol, const std::string& what) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s: got %.12g want %.12g (tol %g)", what.c_str(), got, want, tol);
    expect(std::abs(got - want) <= tol, buf);
  }
  bool ok() const { return failed_ == 0; }
  std::string summary() const {
    std::string s = std::to_string(checks_ - failed_) + "/" + std::to_string(checks_) + " checks";
    for (const auto& f : failures_) s += "; " + f;
    return s;
  }

 private:
  int checks_ = 0;
  int failed_ = 0;
  std::vector<std::string> failures_;
};

std::string read(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cli_run(const std::vector<std::string>& args, std::string* err_text = nullptr) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  if (err_text) *err_text = err.str();
  return code;
}

const std::string kInstrumentPath = std::string(SATMETRIC_TEST_DATA_DIR) + "/xyz/instrument.json";

fs::path scratch(const std::string& name) {
  const auto p = fs::temp_directory_path() / ("satmetric_acceptance_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

GapReport fixture_gap_report() {
  const auto inst = xyz_instrument();
  return analyze_gaps(fixture_descriptives(kExpectSums), fixture_descriptives(kPerceiveSums), fixture_weights(),
                      inst);
}

void check_against_tables(const GapReport& r, Checker& c) {
  c.expect(r.item_gaps.size() == 17 && r.dimension_scores.size() == 5, "shape");
  if (r.item_gaps.size() != 17 || r.dimension_scores.size() != 5) return;
  for (std::size_t i = 0; i < 17; ++i) c.near(r.item_gaps[i].gap, kItemGaps[i], 1e-9, "gap item " + std::to_string(i + 1));
  for (std::size_t d = 0; d < 5; ++d) {
    const std::string name(to_token(kDimensionOrder[d]));
    c.near(r.dimension_scores[d].unweighted, kDimUnweighted[d], 1e-9, "Y_" + name);
    c.near(r.dimension_scores[d].weighted, kDimWeighted[d], 1e-9, "W_" + name);
  }
}

// 1. Per-item, unweighted and weighted dimension tables from the fixture.
void gap_tables(Checker& c) {
  const auto r = fixture_gap_report();
  check_against_tables(r, c);
  c.near(r.dimension_scores[0].unweighted, 0.037037037, 1e-9, "reliability Y_d");
  c.near(r.dimension_scores[0].weighted, 1.470189702, 1e-9, "reliability W_d");
  c.near(r.dimension_scores[1].weighted, -19.63765934, 1e-9, "responsiveness W_d");
}

// 2. Overall weighted score.
void overall_score(Checker& c) {
  const auto r = fixture_gap_report();
  c.near(r.overall.weighted_sum, -25.25148048, 1e-6, "weighted_sum");
  c.expect(std::lround(r.overall.weighted_sum) == -25, "rounds to -25");
}

// 3. Synthetic raw data through the full CLI reproduces criterion 1 exactly.
void raw_round_trip(Checker& c) {
  const auto dir = scratch("roundtrip");
  const auto file = [&](const char* n) { return (dir / n).string(); };
  c.expect(cli_run({"synth", "--instrument", kInstrumentPath, "--means", means_flag(kExpectSums), "--n", "81",
                    "--seed", "11", "--kind", "expectation", "--out", file("expect.csv")}) == 0,
           "synth expectation");
  c.expect(cli_run({"synth", "--instrument", kInstrumentPath, "--means", means_flag(kPerceiveSums), "--n", "81",
                    "--seed", "12", "--kind", "perception", "--out", file("perceive.csv")}) == 0,
           "synth perception");
  std::string err;
  const int code = cli_run({"gap", "--instrument", kInstrumentPath, "--expect", file("expect.csv"), "--perceive",
                            file("perceive.csv"), "--weights", weights_flag(), "--format", "json",
                            "--suppress-timestamp", "--out", file("run")},
                           &err);
  c.expect(code == 0, "gap exit code " + std::to_string(code) + " " + err);
  if (code != 0) return;
  const auto report = report_from_json(read(file("run.report.json")));
  check_against_tables(report.gap_report, c);
  const auto fixture = fixture_gap_report();
  c.expect(report.gap_report.item_gaps == fixture.item_gaps, "item gaps bit-identical to fixture");
  c.expect(report.gap_report.dimension_scores == fixture.dimension_scores, "dimension scores bit-identical");
  c.expect(report.gap_report.overall == fixture.overall, "overall bit-identical");
  fs::remove_all(dir);
}

// 4. Cronbach's alpha property suite.
void alpha_properties(Checker& c) {
  std::mt19937_64 rng(20240601);
  for (std::size_t k = 2; k <= 6; ++k) {
    Matrix m(8, k);
    for (std::size_t r = 0; r < 8; ++r) {
      // Rows 0 and 1 pin the extremes so the column always varies.
      const double v = r == 0 ? 1.0 : (r == 1 ? 5.0 : 1.0 + static_cast<double>(rng() % 5));
      for (std::size_t j = 0; j < k; ++j) m(r, j) = v;
    }
    c.near(cronbach_alpha(m), 1.0, 1e-12, "identical columns k=" + std::to_string(k));
  }

  int suite = 0;
  while (suite < 1000) {
    const auto m = random_matrix(rng, 5 + rng() % 6, 3 + rng() % 4);
    double alpha = 0.0;
    try {
      alpha = cronbach_alpha(m);
    } catch (const DomainError&) {
      continue;  // zero total variance: alpha undefined
    }
    ++suite;
    const std::string tag = "matrix " + std::to_string(suite);
    c.near(alpha, covariance_alpha(m), 1e-12, tag + " oracle");

    const auto stats = omitted_item_stats(m);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto reduced = m.without_column(j);
      std::optional<double> want;
      try {
        want = cronbach_alpha(reduced);
      } catch (const DomainError&) {
      }
      c.expect(stats[j].alpha_if_deleted.has_value() == want.has_value(), tag + " alpha_if_deleted defined");
      if (want && stats[j].alpha_if_deleted) {
        c.near(*stats[j].alpha_if_deleted, *want, 1e-12, tag + " alpha_if_deleted");
        c.near(*stats[j].alpha_if_deleted, covariance_alpha(reduced), 1e-12, tag + " alpha_if_deleted oracle");
      }
    }

    const double scale = 0.25 + static_cast<double>(rng() % 16) * 0.5;
    const double shift = static_cast<double>(rng() % 21) - 10.0;
    Matrix t(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t j = 0; j < m.cols(); ++j) t(r, j) = scale * m(r, j) + shift;
    }
    c.near(cronbach_alpha(t), alpha, 1e-12, tag + " affine invariance");
  }
}

// 5. Population variance of a column with sum 348 and sum of squares 1524.
void variance_convention(Checker& c) {
  // 6 threes, 45 fours, 30 fives.
  IntMatrix col(81, 1);
  for (std::size_t r = 0; r < 81; ++r) col(r, 0) = r < 6 ? 3 : (r < 51 ? 4 : 5);
  long long sum = 0, sq = 0;
  for (std::size_t r = 0; r < 81; ++r) {
    sum += col(r, 0);
    sq += static_cast<long long>(col(r, 0)) * col(r, 0);
  }
  c.expect(sum == 348 && sq == 1524, "column sums");
  const SurveyInstrument inst({{2, "item 2", Dimension::reliability, KanoCategory::performance, {}}}, LikertScale{});
  const ResponseSet rs(ResponseKind::expectation, "x", LikertScale{}, col);
  const auto d = item_descriptives(rs, inst, VarianceMode::population);
  c.near(d[0].variance, 0.356652949, 1e-9, "population variance");
  c.near(d[0].mean, 348.0 / 81.0, 1e-15, "mean");
}

// 6. QFD oracle, invariants and the shipped example's ordering.
void qfd(Checker& c) {
  const HouseOfQuality h({{"c1", "", 40}, {"c2", "", 60}}, {{"t1", ""}, {"t2", ""}},
                         {Strength::strong, Strength::medium, Strength::weak, Strength::strong});
  const auto& w = h.importance();
  c.near(w[0].absolute, 420.0, 1e-9, "absolute 1");
  c.near(w[1].absolute, 660.0, 1e-9, "absolute 2");
  c.near(w[0].relative_pct, 350.0 / 9.0, 1e-9, "relative 1");
  c.near(w[1].relative_pct, 550.0 / 9.0, 1e-9, "relative 2");

  static constexpr Strength kLevels[] = {Strength::none, Strength::weak, Strength::medium, Strength::strong};
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t nc = 1 + rng() % 7, nt = 1 + rng() % 9;
    std::vector<CustomerRequirement> cr, cr2;
    const double lambda = 0.5 + static_cast<double>(rng() % 8);
    for (std::size_t i = 0; i < nc; ++i) {
      const double imp = static_cast<double>(rng() % 40);
      cr.push_back({"c" + std::to_string(i), "", imp});
      cr2.push_back({"c" + std::to_string(i), "", lambda * imp});
    }
    std::vector<TechnicalRequirement> tr;
    for (std::size_t j = 0; j <= nt; ++j) tr.push_back({"t" + std::to_string(j), ""});
    std::vector<Strength> rel;
    for (std::size_t i = 0; i < nc; ++i) {
      for (std::size_t j = 0; j < nt; ++j) rel.push_back(kLevels[rng() % 4]);
      rel.push_back(Strength::none);  // zero column at index nt
    }
    const HouseOfQuality a(cr, tr, rel), b(cr2, tr, rel);
    const std::string tag = "hoq " + std::to_string(trial);
    c.expect(a.importance()[nt].absolute == 0.0 && a.importance()[nt].relative_pct == 0.0, tag + " zero column");
    for (std::size_t j = 0; j <= nt; ++j) {
      c.near(b.importance()[j].absolute, lambda * a.importance()[j].absolute,
             1e-9 * std::max(1.0, b.importance()[j].absolute), tag + " linearity");
      c.near(b.importance()[j].relative_pct, a.importance()[j].relative_pct, 1e-9, tag + " relative invariance");
    }
  }

  const auto xyz = build_hoq(read(std::string(SATMETRIC_TEST_DATA_DIR) + "/xyz/hoq.json"));
  std::string first, last;
  for (std::size_t j = 0; j < xyz.tech_reqs().size(); ++j) {
    if (xyz.importance()[j].rank == 1) first = xyz.tech_reqs()[j].id;
    if (xyz.importance()[j].rank == static_cast<int>(xyz.tech_reqs().size())) last = xyz.tech_reqs()[j].id;
  }
  c.expect(first == "quality-of-repair-work", "first is " + first);
  c.expect(last == "equipment-appearance", "last is " + last);
}

// 7. Pareto ranking of dissatisfaction on the fixture.
void pareto_check(Checker& c) {
  const auto inst = xyz_instrument();
  const auto r = fixture_gap_report();
  const auto contribs = dissatisfaction_contributions(r.item_gaps, r.weights, inst);
  const auto t = pareto(contribs);
  const std::vector<int> head{4, 3, 7, 5, 8, 14};
  c.expect(t.rows.size() >= head.size(), "enough rows");
  for (std::size_t i = 0; i < head.size() && i < t.rows.size(); ++i) {
    c.expect(t.rows[i].item_id == head[i], "rank " + std::to_string(i + 1) + " is item " +
                                               std::to_string(t.rows[i].item_id));
  }
  for (std::size_t i = 1; i < t.rows.size(); ++i) {
    c.expect(t.rows[i].cumulative_pct >= t.rows[i - 1].cumulative_pct, "nondecreasing");
  }
  c.near(t.rows.back().cumulative_pct, 100.0, 1e-9, "ends at 100");
  for (int th10 = 5; th10 <= 1000; th10 += 5) {
    const double th = th10 / 10.0;
    const auto s = pareto(contribs, th);
    const bool defined = s.vital_few_cutoff.has_value();
    c.expect(defined, "cutoff defined");
    if (!defined) continue;
    const auto k = *s.vital_few_cutoff;
    c.expect(s.rows[k - 1].cumulative_pct >= th, "cutoff reaches threshold");
    c.expect(k == 1 || s.rows[k - 2].cumulative_pct < th, "cutoff is the first such row");
  }
}

std::vector<int> order(const std::vector<KanoPriority>& v) {
  std::vector<int> ids;
  for (const auto& p : v) ids.push_back(p.item_id);
  return ids;
}

// 8. Kano: delighters zeroed by default, ranking invariant under scaling.
void kano(Checker& c) {
  const auto inst = xyz_instrument();
  const auto r = fixture_gap_report();
  const auto pr = prioritize(r.item_gaps, r.weights, inst);
  int delighters_with_gap = 0;
  for (const auto& p : pr) {
    if (p.category != KanoCategory::delighter) continue;
    if (p.raw_contribution > 0.0) ++delighters_with_gap;
    c.expect(p.priority_score == 0.0, "delighter item " + std::to_string(p.item_id) + " zeroed");
  }
  c.expect(delighters_with_gap > 0, "fixture has a dissatisfying delighter");

  std::mt19937_64 rng(8128);
  std::uniform_real_distribution<double> mean(1.0, 5.0), mult(0.0, 3.0), scale(0.01, 100.0);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<ItemGap> gaps;
    for (int i = 1; i <= 17; ++i) {
      const double e = mean(rng), p = mean(rng);
      gaps.push_back({i, e, p, p - e});
    }
    const KanoMultipliers m{mult(rng), mult(rng), mult(rng), mult(rng)};
    const auto a = prioritize(gaps, r.weights, inst, m);
    const auto b = prioritize(gaps, r.weights, inst, m.scaled(scale(rng)));
    c.expect(order(a) == order(b), "trial " + std::to_string(trial) + " ranking permuted");
  }
}

std::map<std::string, std::string> bundle(const fs::path& dir) {
  std::map<std::string, std::string> files;
  for (const auto& e : fs::recursive_directory_iterator(dir)) {
    if (e.is_regular_file()) files[fs::relative(e.path(), dir).string()] = read(e.path());
  }
  return files;
}

// 9. Two full runs give byte-identical bundles.
void determinism(Checker& c) {
  const auto dir = scratch("determinism");
  const auto in = [&](const char* n) { return (dir / n).string(); };
  cli_run({"synth", "--instrument", kInstrumentPath, "--means", means_flag(kExpectSums), "--n", "81", "--out",
           in("expect.csv")});
  cli_run({"synth", "--instrument", kInstrumentPath, "--means", means_flag(kPerceiveSums), "--n", "81", "--kind",
           "perception", "--out", in("perceive.csv")});
  std::vector<std::map<std::string, std::string>> runs;
  for (const char* name : {"run1", "run2"}) {
    const auto out = dir / name;
    fs::create_directories(out);
    const int code = cli_run({"gap", "--instrument", kInstrumentPath, "--expect", in("expect.csv"), "--perceive",
                              in("perceive.csv"), "--weights", weights_flag(), "--hoq",
                              std::string(SATMETRIC_TEST_DATA_DIR) + "/xyz/hoq.json", "--fishbone",
                              std::string(SATMETRIC_TEST_DATA_DIR) + "/xyz/fishbone.json", "--suppress-timestamp",
                              "--out", (out / "xyz").string()});
    c.expect(code == 0, std::string(name) + " exit code");
    runs.push_back(bundle(out));
  }
  c.expect(runs[0].size() >= 20, "bundle has " + std::to_string(runs[0].size()) + " files");
  c.expect(runs[0] == runs[1], "bundles differ");
  fs::remove_all(dir);
}

// 10. Row-level validation and the 0/1/2 exit contract.
void validation(Checker& c) {
  const auto inst = xyz_instrument();
  const std::string imp =
      "respondent_id,tangibles,reliability,responsiveness,assurance,empathy\n"
      "r1,10,40,20,20,10\n"
      "r2,5,40,20,20,10\n"
      "r3,10,42,18,20,10\n";
  const auto parsed = parse_response_file(imp, inst, ResponseKind::importance);
  c.expect(parsed.responses.respondents() == 1, "only the valid importance row kept");
  bool sum_row2 = false, mult_row3 = false;
  for (const auto& e : parsed.report.row_errors) {
    sum_row2 |= e.row == 2 && e.code == "sum_not_100";
    mult_row3 |= e.row == 3 && e.code == "not_multiple_of_5";
  }
  c.expect(sum_row2, "row 2 sum diagnostic");
  c.expect(mult_row3, "row 3 multiple-of-5 diagnostic");

  std::string likert = "respondent_id";
  for (int i = 1; i <= 17; ++i) likert += ",q" + std::to_string(i);
  likert += "\n";
  for (int r = 1; r <= 3; ++r) {
    likert += "r" + std::to_string(r);
    for (int i = 1; i <= 17; ++i) likert += (r == 2 && i == 5) ? ",6" : ",3";
    likert += "\n";
  }
  const auto dropped = parse_response_file(likert, inst, ResponseKind::expectation, MissingPolicy::drop_row);
  c.expect(dropped.responses.respondents() == 2, "drop_row keeps 2 rows");
  c.expect(dropped.report.row_errors.size() == 1 && dropped.report.row_errors[0].row == 2 &&
               dropped.report.row_errors[0].column == "q5" && dropped.report.row_errors[0].code == "out_of_range",
           "out-of-range diagnostic at row 2, q5");
  bool rejected = false;
  try {
    parse_response_file(likert, inst, ResponseKind::expectation, MissingPolicy::fail);
  } catch (const RejectedDataError& e) {
    rejected = e.report().row_errors.size() == 1;
  }
  c.expect(rejected, "fail policy rejects the file");

  const auto dir = scratch("validation");
  std::ofstream(dir / "likert.csv") << likert;
  std::ofstream(dir / "importance.csv") << imp;
  const auto p = [&](const char* n) { return (dir / n).string(); };
  cli_run({"synth", "--instrument", kInstrumentPath, "--means", means_flag(kExpectSums), "--n", "81", "--out",
           p("good.csv")});
  c.expect(cli_run({"validate", "--instrument", kInstrumentPath, "--expect", p("good.csv")}) == 0, "valid -> 0");
  c.expect(cli_run({"validate", "--instrument", kInstrumentPath, "--expect", p("likert.csv")}) == 1, "bad Likert -> 1");
  c.expect(cli_run({"validate", "--instrument", kInstrumentPath, "--importance", p("importance.csv")}) == 1,
           "bad importance -> 1");
  const std::vector<std::string> gap{"gap", "--instrument", kInstrumentPath, "--expect", p("likert.csv"),
                                     "--perceive", p("good.csv"), "--weights", weights_flag(), "--format", "json",
                                     "--out", p("policy")};
  auto drop = gap;
  drop.insert(drop.end(), {"--missing-policy", "drop_row"});
  c.expect(cli_run(drop) == 0, "drop_row policy -> 0");
  auto fail = gap;
  fail.insert(fail.end(), {"--missing-policy", "fail"});
  c.expect(cli_run(fail) == 1, "fail policy -> 1");
  c.expect(cli_run({"gap", "--instrument", kInstrumentPath, "--expect", p("good.csv")}) == 2, "missing flag -> 2");
  c.expect(cli_run({"no-such-command"}) == 2, "unknown subcommand -> 2");
  fs::remove_all(dir);
}

struct Criterion {
  const char* name;
  std::function<void(Checker&)> run;
  double budget_s;  // 0 = no runtime bound
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"gap-table reproduction", gap_tables, 1.0},
      {"overall weighted score", overall_score, 1.0},
      {"raw-data round trip through the CLI", raw_round_trip, 5.0},
      {"Cronbach's alpha properties", alpha_properties, 10.0},
      {"population variance convention", variance_convention, 0.0},
      {"QFD technical importance", qfd, 0.0},
      {"Pareto of dissatisfaction", pareto_check, 0.0},
      {"Kano prioritization", kano, 0.0},
      {"deterministic output bundle", determinism, 0.0},
      {"validation and exit codes", validation, 0.0},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Checker c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (criteria[i].budget_s > 0.0) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "runtime %.3f s over %.0f s", secs, criteria[i].budget_s);
      c.expect(secs < criteria[i].budget_s, buf);
    }
    const bool ok = c.ok();
    if (!ok) ++failed;
    std::printf("%s criterion %zu: %s (%.3f s; %s)\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].name, secs,
                c.summary().c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
