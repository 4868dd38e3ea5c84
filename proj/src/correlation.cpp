// Copyright 2026 The digraphlet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "digraphlet/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "digraphlet/errors.hpp"

namespace digraphlet {

std::vector<double> average_ranks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(n);
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

CorrelationMatrix correlation_matrix(const FeatureMatrix& features, CorrelationMethod method) {
  const std::size_t n = features.rows(), d = features.cols();
  if (n < 3) throw std::invalid_argument("correlation needs at least 3 rows, got " + std::to_string(n));

  // Centered columns; constant columns are detected on the raw values.
  std::vector<std::vector<double>> centered(d);
  std::vector<double> norm(d, 0.0);
  CorrelationMatrix m;
  m.names = features.column_names;
  m.constant_column.assign(d, false);
  for (std::size_t c = 0; c < d; ++c) {
    std::vector<double> col = features.column(c);
    m.constant_column[c] =
        std::all_of(col.begin(), col.end(), [&](double x) { return x == col.front(); });
    if (method == CorrelationMethod::Spearman) col = average_ranks(col);
    const double mean = std::accumulate(col.begin(), col.end(), 0.0) / static_cast<double>(n);
    for (double& x : col) x -= mean;
    double ss = 0.0;
    for (double x : col) ss += x * x;
    norm[c] = std::sqrt(ss);
    centered[c] = std::move(col);
  }

  m.r.assign(d * d, 0.0);
  for (std::size_t i = 0; i < d; ++i) {
    m.r[i * d + i] = 1.0;
    for (std::size_t j = i + 1; j < d; ++j) {
      double value = 0.0;
      if (!m.constant_column[i] && !m.constant_column[j]) {
        double cov = 0.0;
        for (std::size_t k = 0; k < n; ++k) cov += centered[i][k] * centered[j][k];
        value = std::clamp(cov / (norm[i] * norm[j]), -1.0, 1.0);
      }
      m.r[i * d + j] = m.r[j * d + i] = value;
    }
  }
  return m;
}

SignificanceMask significance_mask(const CorrelationMatrix& m, double theta) {
  if (!(theta > 0.0 && theta < 1.0)) throw std::invalid_argument("theta must be in (0, 1)");
  SignificanceMask mask;
  mask.names = m.names;
  const std::size_t d = m.dim();
  mask.sign.assign(d * d, 0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      if (i == j) continue;
      const double r = m.at(i, j);
      mask.sign[i * d + j] = r > theta ? 1 : (r < -theta ? -1 : 0);
    }
  return mask;
}

CohortStats cohort_stats(std::span<const CorrelationMatrix> subjects, double theta) {
  if (!(theta > 0.0 && theta < 1.0)) throw std::invalid_argument("theta must be in (0, 1)");
  if (subjects.empty()) throw std::invalid_argument("cohort needs at least one subject");
  CohortStats s;
  s.names = subjects.front().names;
  s.theta = theta;
  s.subjects = subjects.size();
  const std::size_t d = s.dim();
  std::vector<std::size_t> pos(d * d, 0), neg(d * d, 0);
  for (std::size_t k = 0; k < subjects.size(); ++k) {
    const auto& m = subjects[k];
    if (m.names != s.names)
      throw InputError("subject " + std::to_string(k) + " has a different column order");
    for (std::size_t e = 0; e < d * d; ++e) {
      pos[e] += m.r[e] > theta;
      neg[e] += m.r[e] < -theta;
    }
  }
  const double scale = 100.0 / static_cast<double>(subjects.size());
  s.pos_pct.resize(d * d);
  s.neg_pct.resize(d * d);
  for (std::size_t e = 0; e < d * d; ++e) {
    s.pos_pct[e] = static_cast<double>(pos[e]) * scale;
    s.neg_pct[e] = static_cast<double>(neg[e]) * scale;
  }
  return s;
}

}  // namespace digraphlet
