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

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "satmetric/error.hpp"
#include "satmetric/instrument.hpp"

namespace satmetric {

enum class ResponseKind { expectation, perception, importance };

std::string_view to_token(ResponseKind k);
std::optional<ResponseKind> parse_response_kind(std::string_view token);

enum class MissingPolicy { drop_row, fail };

std::optional<MissingPolicy> parse_missing_policy(std::string_view token);

/// Column order of the importance-allocation file.
inline constexpr std::array<Dimension, kDimensionCount> kImportanceColumnOrder{
    Dimension::tangibles, Dimension::reliability, Dimension::responsiveness,
    Dimension::assurance, Dimension::empathy};

inline constexpr int kImportanceTotal = 100;
inline constexpr int kImportanceStep = 5;

/// Dense row-major matrix of integer answers (respondents x columns).
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, int fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const int> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<int> column(std::size_t c) const;
  void append_row(std::span<const int> values);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<int> data_;
};

/// A validated, immutable matrix of answers of one kind. Likert kinds have
/// one column per instrument item; importance has the five dimensions in
/// kImportanceColumnOrder.
class ResponseSet {
 public:
  /// Throws ValidationError when any invariant of the kind is violated.
  /// Empty `respondent_ids` are replaced by r1..rN.
  ResponseSet(ResponseKind kind, std::string instrument_ref, LikertScale scale,
              IntMatrix values, std::vector<std::string> respondent_ids = {});

  ResponseKind kind() const { return kind_; }
  const std::string& instrument_ref() const { return instrument_ref_; }
  const LikertScale& scale() const { return scale_; }
  const IntMatrix& values() const { return values_; }
  std::size_t respondents() const { return values_.rows(); }
  std::size_t columns() const { return values_.cols(); }
  const std::vector<std::string>& respondent_ids() const { return ids_; }
  bool is_likert() const { return kind_ != ResponseKind::importance; }

  friend bool operator==(const ResponseSet&, const ResponseSet&) = default;

 private:
  ResponseKind kind_;
  std::string instrument_ref_;
  LikertScale scale_;
  IntMatrix values_;
  std::vector<std::string> ids_;
};

struct RowError {
  std::size_t row = 0;  // 1-based data row (header excluded)
  std::string column;
  std::string code;
  std::string message;

  friend bool operator==(const RowError&, const RowError&) = default;
};

struct ValidationReport {
  std::vector<RowError> row_errors;
  std::size_t accepted_rows = 0;
  std::size_t rejected_rows = 0;

  std::size_t raw_rows() const { return accepted_rows + rejected_rows; }
  bool clean() const { return row_errors.empty(); }
};

/// Thrown when rows are rejected under MissingPolicy::fail, or when no row
/// survives validation. Carries the full report.
class RejectedDataError : public ValidationError {
 public:
  RejectedDataError(const std::string& what, ValidationReport report)
      : ValidationError(what), report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

// Row-level diagnostic codes.
namespace codes {
inline constexpr std::string_view wrong_field_count = "wrong_field_count";
inline constexpr std::string_view missing_value = "missing_value";
inline constexpr std::string_view not_integer = "not_integer";
inline constexpr std::string_view out_of_range = "out_of_range";
inline constexpr std::string_view negative_value = "negative_value";
inline constexpr std::string_view sum_not_100 = "sum_not_100";
inline constexpr std::string_view not_multiple_of_5 = "not_multiple_of_5";
}  // namespace codes

enum class ImportanceCheck { ok, wrong_length, negative_value, sum_not_100, not_multiple_of_5 };

std::string_view to_token(ImportanceCheck c);

/// Checks one allocation row: five nonnegative multiples of five summing to
/// 100. Violations are reported in the order length, sign, sum, step.
ImportanceCheck validate_importance_row(std::span<const long long> row);

/// Expected header fields for a file of `kind`.
std::vector<std::string> expected_header(const SurveyInstrument& instrument, ResponseKind kind);

struct ParsedResponses {
  ResponseSet responses;
  ValidationReport report;
};

/// Parses a response CSV. Rows with defects are dropped and reported under
/// drop_row; under fail, any defect throws RejectedDataError. A header
/// mismatch or malformed CSV throws ValidationError.
ParsedResponses parse_response_file(std::string_view bytes, const SurveyInstrument& instrument,
                                    ResponseKind kind,
                                    MissingPolicy policy = MissingPolicy::drop_row);

/// Canonical CSV bytes for `rs` (LF line endings, trailing newline).
std::string serialize_response_set(const ResponseSet& rs, const SurveyInstrument& instrument);

/// Builds an integer answer matrix whose column sums are `column_sums`
/// exactly. Every cell starts at floor(sum / n); the residual is handed out one
/// unit at a time to pseudorandomly chosen cells still below scale.max.
/// Throws ValidationError when a sum is outside [n * min, n * max].
IntMatrix synthesize_columns(std::span<const long long> column_sums, std::size_t n,
                             const LikertScale& scale, std::uint64_t seed);

/// Likert ResponseSet whose per-item means equal `target_means`. Each
/// n * mean must be an integer (within 1e-6) and lie in range.
ResponseSet generate_synthetic(std::span<const double> target_means, std::size_t n,
                               const SurveyInstrument& instrument, std::uint64_t seed,
                               ResponseKind kind = ResponseKind::expectation);

}  // namespace satmetric
