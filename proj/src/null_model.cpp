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

#include "digraphlet/null_model.hpp"

#include <limits>
#include <stdexcept>

namespace digraphlet {

std::uint64_t DeterministicRng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("below(0)");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

double DeterministicRng::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

namespace {

void push_state(std::vector<Arc>& arcs, VertexId i, VertexId j, std::uint64_t state) {
  if (state != 1) arcs.emplace_back(i, j);
  if (state != 0) arcs.emplace_back(j, i);
}

}  // namespace

DirectedGraph randomize_directions(const DirectedGraph& g, std::uint64_t seed) {
  DeterministicRng rng(seed);
  std::vector<Arc> arcs;
  arcs.reserve(2 * g.num_edges());
  for (VertexId i = 0; i < g.num_vertices(); ++i)
    for (const Neighbor& nb : g.adjacency(i))
      if (nb.vertex > i) push_state(arcs, i, nb.vertex, rng.below(3));
  return DirectedGraph::from_arcs(g.num_vertices(), arcs, g.labels());
}

DirectedGraph random_digraph(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must be in [0, 1]");
  if (n > kMaxVertices) throw std::invalid_argument("too many vertices");
  DeterministicRng rng(seed);
  std::vector<Arc> arcs;
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j)
      if (rng.unit() < p) push_state(arcs, i, j, rng.below(3));
  return DirectedGraph::from_arcs(n, arcs);
}

DirectedGraph random_digraph(std::size_t n, double p, double reciprocal_fraction,
                             std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must be in [0, 1]");
  if (!(reciprocal_fraction >= 0.0 && reciprocal_fraction <= 1.0))
    throw std::invalid_argument("reciprocal fraction must be in [0, 1]");
  if (n > kMaxVertices) throw std::invalid_argument("too many vertices");
  DeterministicRng rng(seed);
  std::vector<Arc> arcs;
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j) {
      if (!(rng.unit() < p)) continue;
      if (rng.unit() < reciprocal_fraction)
        push_state(arcs, i, j, 2);
      else
        push_state(arcs, i, j, rng.below(2));
    }
  return DirectedGraph::from_arcs(n, arcs);
}

}  // namespace digraphlet
