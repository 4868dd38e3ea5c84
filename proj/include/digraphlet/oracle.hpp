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
#include <string>
#include <utility>
#include <vector>

#include "digraphlet/census.hpp"
#include "digraphlet/signature.hpp"

namespace digraphlet {

inline constexpr std::size_t kDefaultOracleCap = 200;

// Brute-force census: visits every unordered vertex triple, classifies the
// induced subgraph from a dense arc matrix and accumulates the same per-vertex
// quantities as raw_census. O(n^3); verification only. Throws
// std::invalid_argument when n exceeds `cap`.
RawCensus oracle_census(const DirectedGraph& g, std::size_t cap = kDefaultOracleCap);

// Class membership spelled out as type patterns ("+-", "o+-", ...), one entry
// per signature class in column order.
const std::vector<std::pair<std::string, std::vector<std::string>>>& oracle_class_patterns();

// oracle_census aggregated through oracle_class_patterns().
SignatureMatrix oracle_signatures(const DirectedGraph& g, std::size_t cap = kDefaultOracleCap);

// First differing (vertex, quantity name) between two censuses, if any.
struct CensusMismatch {
  std::size_t vertex;
  std::string quantity;
  std::int64_t expected, actual;
};
std::vector<CensusMismatch> diff_census(const RawCensus& expected, const RawCensus& actual,
                                        std::size_t limit = 10);

}  // namespace digraphlet
