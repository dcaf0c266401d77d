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

#include <cmath>
#include <random>

#include "satmetric/ingest.hpp"
#include "satmetric/numfmt.hpp"

namespace satmetric {

IntMatrix synthesize_columns(std::span<const long long> column_sums, std::size_t n,
                             const LikertScale& scale, std::uint64_t seed) {
  if (n == 0) throw ValidationError("synthetic data needs at least one respondent");
  const auto rows = static_cast<long long>(n);
  IntMatrix m(n, column_sums.size());
  std::mt19937_64 rng(seed);

  for (std::size_t c = 0; c < column_sums.size(); ++c) {
    const long long sum = column_sums[c];
    if (sum < rows * scale.min || sum > rows * scale.max) {
      throw ValidationError("column " + std::to_string(c + 1) + ": sum " + std::to_string(sum) +
                            " infeasible for " + std::to_string(n) + " respondents on [" +
                            std::to_string(scale.min) + ", " + std::to_string(scale.max) + "]");
    }
    const int base = static_cast<int>(sum / rows);  // floor; sum >= 0 when min >= 0
    const int floor_value = (sum % rows != 0 && sum < 0) ? base - 1 : base;
    long long residual = sum - floor_value * rows;

    std::vector<std::size_t> open;  // rows still below scale.max
    for (std::size_t r = 0; r < n; ++r) {
      m(r, c) = floor_value;
      if (floor_value < scale.max) open.push_back(r);
    }
    while (residual > 0) {
      const auto pick = static_cast<std::size_t>(rng() % open.size());
      const auto r = open[pick];
      if (++m(r, c) == scale.max) {
        open[pick] = open.back();
        open.pop_back();
      }
      --residual;
    }
  }
  return m;
}

ResponseSet generate_synthetic(std::span<const double> target_means, std::size_t n,
                               const SurveyInstrument& instrument, std::uint64_t seed,
                               ResponseKind kind) {
  if (kind == ResponseKind::importance) {
    throw ValidationError("synthetic generation supports Likert kinds only");
  }
  if (target_means.size() != instrument.size()) {
    throw ValidationError("expected " + std::to_string(instrument.size()) +
                          " target means, got " + std::to_string(target_means.size()));
  }
  std::vector<long long> sums;
  sums.reserve(target_means.size());
  for (std::size_t i = 0; i < target_means.size(); ++i) {
    const double exact = target_means[i] * static_cast<double>(n);
    const double rounded = std::round(exact);
    if (!std::isfinite(exact) || std::abs(exact - rounded) > 1e-6) {
      throw ValidationError("item " + std::to_string(instrument.item(i).id) + ": target mean " +
                            format_double(target_means[i]) + " x " + std::to_string(n) + " = " +
                            format_double(exact) + " is not an integer sum");
    }
    sums.push_back(static_cast<long long>(rounded));
  }
  return ResponseSet(kind, instrument.fingerprint(), instrument.scale(),
                     synthesize_columns(sums, n, instrument.scale(), seed));
}

}  // namespace satmetric
