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

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "digraphlet/graph.hpp"
#include "digraphlet/null_model.hpp"

namespace digraphlet::testing {

inline DirectedGraph make_graph(std::size_t n, std::initializer_list<Arc> arcs) {
  std::vector<Arc> v(arcs);
  return DirectedGraph::from_arcs(n, v);
}

// Seeded random digraphs of mixed size, density and reciprocity.
struct CorpusGraph {
  DirectedGraph graph;
  std::size_t n;
  double p, reciprocal;
};

inline std::vector<CorpusGraph> random_corpus(std::size_t count, std::size_t min_n, std::size_t max_n,
                                              std::uint64_t seed) {
  DeterministicRng rng(seed);
  std::vector<CorpusGraph> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    std::size_t n = min_n + rng.below(max_n - min_n + 1);
    double p = 0.05 + 0.85 * rng.unit();
    double r = rng.unit();
    out.push_back({random_digraph(n, p, r, seed * 1000003 + k), n, p, r});
  }
  return out;
}

}  // namespace digraphlet::testing
