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

#include "satmetric/psychometrics.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

namespace satmetric {

std::string_view to_token(VarianceMode m) {
  return m == VarianceMode::population ? "population" : "sample";
}

std::optional<VarianceMode> parse_variance_mode(std::string_view token) {
  if (token == "population") return VarianceMode::population;
  if (token == "sample") return VarianceMode::sample;
  return std::nullopt;
}

ItemDescriptives descriptives_from_sums(int item_id, long long sum, long long sum_sq,
                                        std::size_t n, VarianceMode mode) {
  if (n == 0) throw DomainError("descriptives need at least one respondent");
  if (mode == VarianceMode::sample && n < 2) {
    throw DomainError("sample variance needs at least two respondents");
  }
  const auto nn = static_cast<long long>(n);
  const long long dev = nn * sum_sq - sum * sum;  // n^2 * population variance, exact
  const long long denom = mode == VarianceMode::population ? nn * nn : nn * (nn - 1);
  return ItemDescriptives{item_id, static_cast<double>(sum) / static_cast<double>(nn),
                          static_cast<double>(dev) / static_cast<double>(denom), n};
}

std::vector<ItemDescriptives> item_descriptives(const ResponseSet& rs,
                                                const SurveyInstrument& instrument,
                                                VarianceMode mode) {
  if (!rs.is_likert()) throw ValidationError("descriptives need a Likert response set");
  if (rs.columns() != instrument.size()) {
    throw ValidationError("response set and instrument disagree on item count");
  }
  const auto& m = rs.values();
  std::vector<ItemDescriptives> out;
  out.reserve(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    long long sum = 0, sum_sq = 0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      const long long v = m(r, c);
      sum += v;
      sum_sq += v * v;
    }
    out.push_back(descriptives_from_sums(instrument.item(c).id, sum, sum_sq, m.rows(), mode));
  }
  return out;
}

Matrix to_matrix(const IntMatrix& m) {
  Matrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
  }
  return out;
}

namespace {

struct Moments {
  double mean = 0.0;
  double var = 0.0;  // sample
  bool degenerate = false;
};

Moments moments(std::span<const double> xs) {
  const double n = static_cast<double>(xs.size());
  double sum = 0.0, sq = 0.0;
  for (double x : xs) {
    sum += x;
    sq += x * x;
  }
  Moments m;
  m.mean = sum / n;
  double ss = 0.0;
  for (double x : xs) ss += (x - m.mean) * (x - m.mean);
  m.var = ss / (n - 1.0);
  // Relative floor so translated or rescaled constant columns still count as constant.
  m.degenerate = !(m.var > 1e-14 * (sq / n));
  return m;
}

std::vector<double> column(const Matrix& m, std::size_t c) {
  std::vector<double> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) out[r] = m(r, c);
  return out;
}

std::vector<double> row_totals(const Matrix& m, std::optional<std::size_t> skip = {}) {
  std::vector<double> out(m.rows(), 0.0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    double t = 0.0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (skip && *skip == c) continue;
      t += m(r, c);
    }
    out[r] = t;
  }
  return out;
}

double covariance(std::span<const double> x, double mx, std::span<const double> y, double my) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += (x[i] - mx) * (y[i] - my);
  return s / static_cast<double>(x.size() - 1);
}

std::optional<double> squared_multiple_corr(const Matrix& data, std::size_t target) {
  const std::size_t n = data.rows();
  const std::size_t p = data.cols() - 1;
  Eigen::MatrixXd others(n, p);
  Eigen::VectorXd y(n);
  for (std::size_t r = 0; r < n; ++r) {
    y(r) = data(r, target);
    for (std::size_t c = 0, k = 0; c < data.cols(); ++c) {
      if (c != target) others(r, k++) = data(r, c);
    }
  }
  const Eigen::RowVectorXd means = others.colwise().mean();
  const Eigen::MatrixXd centered = others.rowwise() - means;
  const Eigen::VectorXd yc = y.array() - y.mean();
  const double denom = static_cast<double>(n - 1);
  const double var_y = yc.squaredNorm() / denom;
  if (!(var_y > 0.0)) return std::nullopt;

  const Eigen::MatrixXd cov = centered.transpose() * centered / denom;
  const Eigen::VectorXd cxy = centered.transpose() * yc / denom;
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(cov);
  qr.setThreshold(1e-10);
  if (qr.rank() < static_cast<Eigen::Index>(p)) return std::nullopt;
  const Eigen::VectorXd beta = qr.solve(cxy);
  const double r2 = cxy.dot(beta) / var_y;
  return std::clamp(r2, 0.0, 1.0);
}

}  // namespace

double cronbach_alpha(const Matrix& data) {
  const std::size_t n = data.rows();
  const std::size_t k = data.cols();
  if (k < 2) throw DomainError("alpha needs at least two items");
  if (n < 2) throw DomainError("alpha needs at least two respondents");

  double item_var_sum = 0.0;
  for (std::size_t c = 0; c < k; ++c) item_var_sum += moments(column(data, c)).var;
  const auto totals = row_totals(data);
  const auto tm = moments(totals);
  if (tm.degenerate) throw DomainError("alpha undefined: total score has zero variance");

  const double kd = static_cast<double>(k);
  return kd / (kd - 1.0) * (1.0 - item_var_sum / tm.var);
}

std::vector<OmittedItemStats> omitted_item_stats(const Matrix& data, std::span<const int> item_ids) {
  const std::size_t k = data.cols();
  if (k < 3) throw DomainError("omitted-item statistics need at least three items");
  if (data.rows() < 2) throw DomainError("omitted-item statistics need at least two respondents");
  if (!item_ids.empty() && item_ids.size() != k) {
    throw ValidationError("item id count does not match column count");
  }

  std::vector<OmittedItemStats> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    OmittedItemStats s;
    s.item_id = item_ids.empty() ? static_cast<int>(i + 1) : item_ids[i];

    const auto adj = row_totals(data, i);
    const auto am = moments(adj);
    s.adj_total_mean = am.mean;
    s.adj_total_stdev = std::sqrt(am.var);

    const auto item = column(data, i);
    const auto im = moments(item);
    if (!im.degenerate && !am.degenerate) {
      const double r = covariance(item, im.mean, adj, am.mean) / std::sqrt(im.var * am.var);
      s.item_adj_total_corr = std::clamp(r, -1.0, 1.0);
    }
    if (!im.degenerate) s.squared_multiple_corr = squared_multiple_corr(data, i);
    try {
      s.alpha_if_deleted = cronbach_alpha(data.without_column(i));
    } catch (const DomainError&) {
    }
    out.push_back(s);
  }
  return out;
}

ReliabilityReport analyze_reliability(const ResponseSet& rs, const SurveyInstrument& instrument,
                                      double threshold) {
  if (!rs.is_likert()) throw ValidationError("reliability needs a Likert response set");
  if (rs.columns() != instrument.size()) {
    throw ValidationError("response set and instrument disagree on item count");
  }
  ReliabilityReport rep;
  rep.n_items = rs.columns();
  rep.n_respondents = rs.respondents();
  rep.threshold = threshold;
  const auto data = to_matrix(rs.values());
  try {
    rep.alpha = cronbach_alpha(data);
  } catch (const DomainError&) {
  }
  rep.passes_gate = rep.alpha && reliability_gate(*rep.alpha, threshold);
  if (rep.n_items >= 3 && rep.n_respondents >= 2) {
    std::vector<int> ids;
    for (const auto& it : instrument.items()) ids.push_back(it.id);
    rep.omitted = omitted_item_stats(data, ids);
  }
  return rep;
}

}  // namespace satmetric
