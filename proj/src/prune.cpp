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

#include "digraphlet/prune.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace digraphlet {
namespace {

double effective(double w, bool use_magnitude) { return use_magnitude ? std::abs(w) : w; }

VertexId find_root(std::vector<VertexId>& parent, VertexId v) {
  while (parent[v] != v) {
    parent[v] = parent[parent[v]];
    v = parent[v];
  }
  return v;
}

std::size_t criterion_degree(const DirectedGraph& g, VertexId v, DegreeCriterion c) {
  switch (c) {
    case DegreeCriterion::Out: return g.degree(v, EdgeType::Out) + g.degree(v, EdgeType::Recip);
    case DegreeCriterion::In: return g.degree(v, EdgeType::In) + g.degree(v, EdgeType::Recip);
    default: return g.total_degree(v);
  }
}

}  // namespace

DirectedGraph threshold_graph(const WeightedMatrix& w, double t, bool use_magnitude) {
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < w.n; ++i)
    for (std::size_t j = 0; j < w.n; ++j)
      if (i != j && effective(w.at(i, j), use_magnitude) > t)
        arcs.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
  return DirectedGraph::from_arcs(w.n, arcs, w.labels);
}

std::size_t largest_weak_component(const DirectedGraph& g) {
  const std::size_t n = g.num_vertices();
  if (n == 0) return 0;
  std::vector<VertexId> parent(n);
  std::iota(parent.begin(), parent.end(), VertexId{0});
  for (VertexId v = 0; v < n; ++v)
    for (const Neighbor& nb : g.adjacency(v)) {
      VertexId a = find_root(parent, v), b = find_root(parent, nb.vertex);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<std::size_t> size(n, 0);
  for (VertexId v = 0; v < n; ++v) ++size[find_root(parent, v)];
  return *std::max_element(size.begin(), size.end());
}

bool meets_pruning_criteria(const DirectedGraph& g, const PruneOptions& opts) {
  const std::size_t n = g.num_vertices();
  if (n == 0) return false;
  const double min_degree = opts.degree_factor * std::log(static_cast<double>(n));
  for (VertexId v = 0; v < n; ++v)
    if (static_cast<double>(criterion_degree(g, v, opts.degree)) < min_degree) return false;
  return static_cast<double>(largest_weak_component(g)) >=
         opts.connected_fraction * static_cast<double>(n);
}

PruneResult prune_weighted(const WeightedMatrix& w, const PruneOptions& opts) {
  if (w.n < 3) throw std::invalid_argument("pruning needs at least 3 vertices");

  std::vector<double> levels{0.0};
  for (std::size_t i = 0; i < w.n; ++i)
    for (std::size_t j = 0; j < w.n; ++j) {
      double e = effective(w.at(i, j), opts.use_magnitude);
      if (i != j && e > 0.0) levels.push_back(e);
    }
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  auto valid = [&](std::size_t k) {
    return meets_pruning_criteria(threshold_graph(w, levels[k], opts.use_magnitude), opts);
  };
  if (!valid(0))
    throw UnprunableError("no pruning threshold meets the connectivity and degree criteria");

  // Invariant: valid(lo), and hi is either past the end or invalid.
  std::size_t lo = 0, hi = levels.size();
  while (hi - lo > 1) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (valid(mid))
      lo = mid;
    else
      hi = mid;
  }

  PruneResult result;
  result.graph = threshold_graph(w, levels[lo], opts.use_magnitude);
  // The top level keeps no arcs, so hi is always in range for n >= 3.
  result.threshold = hi < levels.size() ? std::nextafter(levels[hi], 0.0) : levels[lo];
  return result;
}

}  // namespace digraphlet
