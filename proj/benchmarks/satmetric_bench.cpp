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

#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "satmetric/report.hpp"

namespace {

using namespace satmetric;

SurveyInstrument instrument() {
  return select_items(master_catalog(), xyz_case_study_keys(), LikertScale{}, "bench");
}

ResponseSet random_responses(const SurveyInstrument& inst, std::size_t n, std::uint64_t seed,
                             ResponseKind kind = ResponseKind::expectation) {
  std::mt19937_64 rng(seed);
  IntMatrix m(n, inst.size());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < inst.size(); ++c) m(r, c) = 1 + static_cast<int>(rng() % 5);
  }
  return ResponseSet(kind, "bench", LikertScale{}, std::move(m));
}

void BM_CronbachAlpha(benchmark::State& state) {
  const auto inst = instrument();
  const auto m = to_matrix(random_responses(inst, static_cast<std::size_t>(state.range(0)), 1).values());
  for (auto _ : state) benchmark::DoNotOptimize(cronbach_alpha(m));
}
BENCHMARK(BM_CronbachAlpha)->Arg(81)->Arg(1000)->Arg(10000);

void BM_OmittedItemStats(benchmark::State& state) {
  const auto inst = instrument();
  const auto m = to_matrix(random_responses(inst, static_cast<std::size_t>(state.range(0)), 2).values());
  for (auto _ : state) benchmark::DoNotOptimize(omitted_item_stats(m));
}
BENCHMARK(BM_OmittedItemStats)->Arg(81)->Arg(1000);

void BM_ParseResponses(benchmark::State& state) {
  const auto inst = instrument();
  const auto text = serialize_response_set(random_responses(inst, static_cast<std::size_t>(state.range(0)), 3), inst);
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse_response_file(text, inst, ResponseKind::expectation));
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_ParseResponses)->Arg(81)->Arg(10000);

void BM_FullPipeline(benchmark::State& state) {
  const auto inst = instrument();
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto e = random_responses(inst, n, 4);
  const auto p = random_responses(inst, n, 5, ResponseKind::perception);
  const ImportanceWeights w({40, 22, 17, 12, 9}, n);
  for (auto _ : state) {
    auto gaps = analyze_gaps(item_descriptives(e, inst), item_descriptives(p, inst), w, inst);
    gaps.reliability = ReliabilityContext{analyze_reliability(e, inst), analyze_reliability(p, inst)};
    ReportParts parts;
    parts.instrument = &inst;
    parts.kano_priorities = prioritize(gaps.item_gaps, w, inst);
    parts.pareto = pareto(dissatisfaction_contributions(gaps.item_gaps, w, inst));
    parts.gap_report = std::move(gaps);
    const auto report = assemble(std::move(parts));
    for (auto fmt : {OutputFormat::json, OutputFormat::csv, OutputFormat::markdown, OutputFormat::svg}) {
      benchmark::DoNotOptimize(emit(report, fmt, "bench"));
    }
  }
}
BENCHMARK(BM_FullPipeline)->Arg(81)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
