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

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "digraphlet/matrix.hpp"

namespace digraphlet {

enum class CorrelationMethod { Pearson, Spearman };

inline constexpr double kDefaultTheta = 0.7;

// Symmetric column-by-column correlation matrix of a feature matrix. Entries
// involving a constant column are 0 and the column is flagged; the diagonal
// is always 1.
struct CorrelationMatrix {
  std::vector<std::string> names;
  std::vector<double> r;  // row-major dim * dim
  std::vector<bool> constant_column;

  std::size_t dim() const { return names.size(); }
  double at(std::size_t i, std::size_t j) const { return r[i * dim() + j]; }
  bool flagged(std::size_t i, std::size_t j) const {
    return i != j && (constant_column[i] || constant_column[j]);
  }
};

// Throws std::invalid_argument for fewer than 3 rows.
CorrelationMatrix correlation_matrix(const FeatureMatrix& features,
                                     CorrelationMethod method = CorrelationMethod::Pearson);

// Average ranks (1-based) with ties sharing their mean rank.
std::vector<double> average_ranks(std::span<const double> values);

// +1 where r > theta, -1 where r < -theta, 0 otherwise and on the diagonal.
struct SignificanceMask {
  std::vector<std::string> names;
  std::vector<std::int8_t> sign;

  std::size_t dim() const { return names.size(); }
  int at(std::size_t i, std::size_t j) const { return sign[i * dim() + j]; }
};

// theta must lie in (0, 1).
SignificanceMask significance_mask(const CorrelationMatrix& m, double theta = kDefaultTheta);

// Percentage of subjects with r > theta (positive) and r < -theta (negative).
struct CohortStats {
  std::vector<std::string> names;
  std::vector<double> pos_pct;
  std::vector<double> neg_pct;
  std::size_t subjects = 0;
  double theta = kDefaultTheta;

  std::size_t dim() const { return names.size(); }
  double pos(std::size_t i, std::size_t j) const { return pos_pct[i * dim() + j]; }
  double neg(std::size_t i, std::size_t j) const { return neg_pct[i * dim() + j]; }
};

// Needs at least one matrix; all must share column names (InputError otherwise).
CohortStats cohort_stats(std::span<const CorrelationMatrix> subjects, double theta = kDefaultTheta);

}  // namespace digraphlet
