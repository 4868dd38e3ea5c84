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

#include "digraphlet/signature.hpp"

#include <stdexcept>

namespace digraphlet {

std::vector<std::string> signature_column_names() {
  return {kSignatureNames.begin(), kSignatureNames.end()};
}

Signature aggregate(const VertexCensus& c) {
  Signature s{};
  for (std::size_t k = 0; k < 3; ++k) s[kDegreeBlock + k] = c.degree[k];
  for (std::size_t w = 0; w < kWedgeTypes; ++w) s[static_cast<std::size_t>(kWedgeClass[w])] += c.wedges[w];
  for (std::size_t t = 0; t < kTriangleTypes; ++t)
    s[static_cast<std::size_t>(kTriangleClass[t])] += c.triangles[t];
  return s;
}

SignatureMatrix aggregate(const RawCensus& census, std::vector<std::string> labels) {
  if (labels.empty())
    for (std::size_t v = 0; v < census.size(); ++v) labels.push_back(std::to_string(v));
  if (labels.size() != census.size()) throw std::invalid_argument("label count mismatch");
  SignatureMatrix m;
  m.labels = std::move(labels);
  m.rows.reserve(census.size());
  for (const auto& c : census) m.rows.push_back(aggregate(c));
  return m;
}

FeatureMatrix SignatureMatrix::features() const {
  FeatureMatrix f;
  f.row_labels = labels;
  f.column_names = signature_column_names();
  f.values.reserve(rows.size() * kSignatureSize);
  for (const auto& r : rows)
    for (auto x : r) f.values.push_back(static_cast<double>(x));
  return f;
}

NormalizedSignatures normalize(const SignatureMatrix& sig) {
  static constexpr std::size_t kBlockStart[4] = {kDegreeBlock, kWedgeBlock, kTriangleBlock,
                                                 kSignatureSize};
  NormalizedSignatures out;
  out.labels = sig.labels;
  out.rows.reserve(sig.rows.size());
  out.zero_block.reserve(sig.rows.size());
  for (const auto& r : sig.rows) {
    std::array<double, kSignatureSize> row{};
    std::array<bool, 3> zero{};
    for (std::size_t b = 0; b < 3; ++b) {
      std::int64_t total = 0;
      for (std::size_t k = kBlockStart[b]; k < kBlockStart[b + 1]; ++k) total += r[k];
      zero[b] = total == 0;
      if (zero[b]) continue;
      for (std::size_t k = kBlockStart[b]; k < kBlockStart[b + 1]; ++k)
        row[k] = static_cast<double>(r[k]) / static_cast<double>(total);
    }
    out.rows.push_back(row);
    out.zero_block.push_back(zero);
  }
  return out;
}

FeatureMatrix NormalizedSignatures::features() const {
  FeatureMatrix f;
  f.row_labels = labels;
  f.column_names = signature_column_names();
  f.values.reserve(rows.size() * kSignatureSize);
  for (const auto& r : rows) f.values.insert(f.values.end(), r.begin(), r.end());
  return f;
}

std::array<double, kSignatureSize> uniform_orientation_expectation() {
  std::array<double, kSignatureSize> e{};
  for (std::size_t k = 0; k < 3; ++k) e[kDegreeBlock + k] = 1.0 / 3.0;
  for (auto c : kWedgeClass) e[static_cast<std::size_t>(c)] += 1.0 / kWedgeTypes;
  for (auto c : kTriangleClass) e[static_cast<std::size_t>(c)] += 1.0 / kTriangleTypes;
  return e;
}

}  // namespace digraphlet
