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

#include "satmetric/ingest.hpp"

#include <numeric>

#include "satmetric/csv.hpp"
#include "satmetric/numfmt.hpp"

namespace satmetric {

std::string_view to_token(ResponseKind k) {
  switch (k) {
    case ResponseKind::expectation: return "expectation";
    case ResponseKind::perception: return "perception";
    case ResponseKind::importance: return "importance";
  }
  return "?";
}

std::optional<ResponseKind> parse_response_kind(std::string_view token) {
  for (auto k : {ResponseKind::expectation, ResponseKind::perception, ResponseKind::importance}) {
    if (token == to_token(k)) return k;
  }
  return std::nullopt;
}

std::optional<MissingPolicy> parse_missing_policy(std::string_view token) {
  if (token == "drop_row") return MissingPolicy::drop_row;
  if (token == "fail") return MissingPolicy::fail;
  return std::nullopt;
}

std::string_view to_token(ImportanceCheck c) {
  switch (c) {
    case ImportanceCheck::ok: return "ok";
    case ImportanceCheck::wrong_length: return "wrong_field_count";
    case ImportanceCheck::negative_value: return codes::negative_value;
    case ImportanceCheck::sum_not_100: return codes::sum_not_100;
    case ImportanceCheck::not_multiple_of_5: return codes::not_multiple_of_5;
  }
  return "?";
}

std::vector<int> IntMatrix::column(std::size_t c) const {
  std::vector<int> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

void IntMatrix::append_row(std::span<const int> values) {
  if (rows_ == 0 && data_.empty()) cols_ = values.size();
  if (values.size() != cols_) throw ValidationError("append_row: column count mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

ImportanceCheck validate_importance_row(std::span<const long long> row) {
  if (row.size() != kDimensionCount) return ImportanceCheck::wrong_length;
  for (auto v : row) {
    if (v < 0) return ImportanceCheck::negative_value;
  }
  if (std::accumulate(row.begin(), row.end(), 0LL) != kImportanceTotal) {
    return ImportanceCheck::sum_not_100;
  }
  for (auto v : row) {
    if (v % kImportanceStep != 0) return ImportanceCheck::not_multiple_of_5;
  }
  return ImportanceCheck::ok;
}

ResponseSet::ResponseSet(ResponseKind kind, std::string instrument_ref, LikertScale scale,
                         IntMatrix values, std::vector<std::string> respondent_ids)
    : kind_(kind),
      instrument_ref_(std::move(instrument_ref)),
      scale_(std::move(scale)),
      values_(std::move(values)),
      ids_(std::move(respondent_ids)) {
  const auto n = values_.rows();
  if (n == 0) throw ValidationError("response set has no respondents");
  if (ids_.empty()) {
    ids_.reserve(n);
    for (std::size_t r = 0; r < n; ++r) ids_.push_back("r" + std::to_string(r + 1));
  }
  if (ids_.size() != n) throw ValidationError("respondent id count does not match row count");

  if (kind_ == ResponseKind::importance) {
    if (values_.cols() != kDimensionCount) {
      throw ValidationError("importance responses need exactly five columns");
    }
    for (std::size_t r = 0; r < n; ++r) {
      const auto row = values_.row(r);
      std::vector<long long> wide(row.begin(), row.end());
      const auto check = validate_importance_row(wide);
      if (check != ImportanceCheck::ok) {
        throw ValidationError("importance row " + std::to_string(r + 1) + ": " +
                              std::string(to_token(check)));
      }
    }
    return;
  }
  if (values_.cols() == 0) throw ValidationError("response set has no items");
  for (std::size_t r = 0; r < n; ++r) {
    for (int v : values_.row(r)) {
      if (!scale_.contains(v)) {
        throw ValidationError("row " + std::to_string(r + 1) + ": value " + std::to_string(v) +
                              " outside scale");
      }
    }
  }
}

std::vector<std::string> expected_header(const SurveyInstrument& instrument, ResponseKind kind) {
  std::vector<std::string> h{"respondent_id"};
  if (kind == ResponseKind::importance) {
    for (auto d : kImportanceColumnOrder) h.emplace_back(to_token(d));
  } else {
    for (const auto& it : instrument.items()) h.push_back("q" + std::to_string(it.id));
  }
  return h;
}

namespace {

std::string join_header(const std::vector<std::string>& h) { return csv::join(h); }

}  // namespace

ParsedResponses parse_response_file(std::string_view bytes, const SurveyInstrument& instrument,
                                    ResponseKind kind, MissingPolicy policy) {
  const auto records = csv::parse(bytes);
  if (records.empty()) throw ValidationError("response file is empty (no header row)");

  const auto header = expected_header(instrument, kind);
  std::vector<std::string> got;
  for (const auto& f : records.front().fields) got.emplace_back(trim(f));
  if (got != header) {
    throw ValidationError("header mismatch: expected '" + join_header(header) + "', got '" +
                          join_header(records.front().fields) + "'");
  }

  const auto& scale = instrument.scale();
  const std::size_t width = header.size() - 1;
  ValidationReport report;
  IntMatrix values(0, width);
  std::vector<std::string> ids;

  for (std::size_t ri = 1; ri < records.size(); ++ri) {
    const auto& fields = records[ri].fields;
    const std::size_t row_no = ri;
    const auto errors_before = report.row_errors.size();
    auto reject = [&](std::string column, std::string_view code, std::string message) {
      report.row_errors.push_back(
          RowError{row_no, std::move(column), std::string(code),
                   "line " + std::to_string(records[ri].line) + ": " + std::move(message)});
    };

    if (fields.size() != header.size()) {
      reject("", codes::wrong_field_count,
             "expected " + std::to_string(header.size()) + " fields, found " +
                 std::to_string(fields.size()));
      ++report.rejected_rows;
      continue;
    }

    std::vector<int> row(width);
    std::vector<long long> wide(width);
    bool all_parsed = true;
    for (std::size_t c = 0; c < width; ++c) {
      const auto cell = trim(fields[c + 1]);
      const auto& col = header[c + 1];
      if (cell.empty()) {
        reject(col, codes::missing_value, "missing value");
        all_parsed = false;
        continue;
      }
      const auto v = parse_integer(cell);
      if (!v) {
        reject(col, codes::not_integer, "'" + std::string(cell) + "' is not an integer");
        all_parsed = false;
        continue;
      }
      wide[c] = *v;
      if (kind == ResponseKind::importance) {
        if (*v < 0) {
          reject(col, codes::negative_value, "negative allocation " + std::to_string(*v));
        } else if (*v % kImportanceStep != 0) {
          reject(col, codes::not_multiple_of_5,
                 std::to_string(*v) + " is not a multiple of " + std::to_string(kImportanceStep));
        }
      } else if (!scale.contains(*v)) {
        reject(col, codes::out_of_range,
               std::to_string(*v) + " outside [" + std::to_string(scale.min) + ", " +
                   std::to_string(scale.max) + "]");
      }
      if (*v >= INT32_MIN && *v <= INT32_MAX) row[c] = static_cast<int>(*v);
    }
    if (kind == ResponseKind::importance && all_parsed) {
      const auto sum = std::accumulate(wide.begin(), wide.end(), 0LL);
      if (sum != kImportanceTotal) {
        reject("", codes::sum_not_100,
               "allocations sum to " + std::to_string(sum) + ", expected " +
                   std::to_string(kImportanceTotal));
      }
    }
    if (report.row_errors.size() != errors_before) {
      ++report.rejected_rows;
      continue;
    }
    values.append_row(row);
    ids.emplace_back(fields[0]);
    ++report.accepted_rows;
  }

  if (policy == MissingPolicy::fail && !report.row_errors.empty()) {
    throw RejectedDataError(std::to_string(report.rejected_rows) +
                                " row(s) rejected under policy 'fail'",
                            std::move(report));
  }
  if (report.accepted_rows == 0) {
    throw RejectedDataError("no valid rows in response file", std::move(report));
  }
  ResponseSet rs(kind, instrument.fingerprint(), instrument.scale(), std::move(values),
                 std::move(ids));
  return ParsedResponses{std::move(rs), std::move(report)};
}

std::string serialize_response_set(const ResponseSet& rs, const SurveyInstrument& instrument) {
  const auto header = expected_header(instrument, rs.kind());
  if (header.size() != rs.columns() + 1) {
    throw ValidationError("response set does not match the instrument's column count");
  }
  std::string out = csv::join(header);
  out.push_back('\n');
  const auto& m = rs.values();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += csv::escape(rs.respondent_ids()[r]);
    for (int v : m.row(r)) {
      out.push_back(',');
      out += std::to_string(v);
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace satmetric
