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

#include "digraphlet/graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "digraphlet/errors.hpp"

namespace digraphlet {

char symbol(EdgeType t) {
  switch (t) {
    case EdgeType::Out: return '+';
    case EdgeType::In: return '-';
    default: return 'o';
  }
}

DirectedGraph DirectedGraph::from_arcs(std::size_t n, std::span<const Arc> arcs,
                                       std::vector<std::string> labels) {
  if (n > kMaxVertices) throw InputError("graph too large: " + std::to_string(n) + " vertices");
  if (labels.empty()) {
    labels.reserve(n);
    for (std::size_t v = 0; v < n; ++v) labels.push_back(std::to_string(v));
  } else if (labels.size() != n) {
    throw std::invalid_argument("label count does not match vertex count");
  }

  // Canonical pairs (lo, hi) with bit 1 = lo->hi, bit 2 = hi->lo.
  struct Pair {
    VertexId lo, hi;
    unsigned bits;
  };
  std::vector<Pair> pairs;
  pairs.reserve(arcs.size());
  for (auto [s, d] : arcs) {
    if (s >= n || d >= n) throw std::out_of_range("arc endpoint out of range");
    if (s == d) continue;
    if (s < d)
      pairs.push_back({s, d, 1u});
    else
      pairs.push_back({d, s, 2u});
  }
  std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
    return a.lo != b.lo ? a.lo < b.lo : a.hi < b.hi;
  });
  std::vector<Pair> merged;
  merged.reserve(pairs.size());
  for (const Pair& p : pairs) {
    if (!merged.empty() && merged.back().lo == p.lo && merged.back().hi == p.hi)
      merged.back().bits |= p.bits;
    else
      merged.push_back(p);
  }

  DirectedGraph g;
  g.labels_ = std::move(labels);

  std::vector<std::vector<Neighbor>> adj(n);
  for (const Pair& p : merged) {
    EdgeType from_lo = p.bits == 3u ? EdgeType::Recip : (p.bits == 1u ? EdgeType::Out : EdgeType::In);
    adj[p.lo].push_back({p.hi, from_lo});
    adj[p.hi].push_back({p.lo, reverse(from_lo)});
    if (from_lo == EdgeType::Recip)
      ++g.num_reciprocal_;
    else
      ++g.num_arcs_;
  }

  g.adj_offsets_.assign(n + 1, 0);
  for (auto& o : g.offsets_) o.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(adj[v].begin(), adj[v].end(),
              [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
    g.adj_offsets_[v + 1] = g.adj_offsets_[v] + adj[v].size();
    for (const Neighbor& nb : adj[v]) ++g.offsets_[index(nb.type)][v + 1];
  }
  for (auto& o : g.offsets_)
    for (std::size_t v = 0; v < n; ++v) o[v + 1] += o[v];

  g.adj_.reserve(g.adj_offsets_[n]);
  for (std::size_t t = 0; t < kEdgeTypes; ++t) g.targets_[t].reserve(g.offsets_[t][n]);
  for (std::size_t v = 0; v < n; ++v) {
    for (const Neighbor& nb : adj[v]) {
      g.adj_.push_back(nb);
      g.targets_[index(nb.type)].push_back(nb.vertex);
    }
  }
  return g;
}

std::span<const VertexId> DirectedGraph::neighbors(VertexId v, EdgeType t) const {
  const auto& off = offsets_[index(t)];
  return {targets_[index(t)].data() + off[v], off[v + 1] - off[v]};
}

std::span<const Neighbor> DirectedGraph::adjacency(VertexId v) const {
  return {adj_.data() + adj_offsets_[v], adj_offsets_[v + 1] - adj_offsets_[v]};
}

std::optional<EdgeType> DirectedGraph::relation(VertexId from, VertexId to) const {
  auto adj = adjacency(from);
  auto it = std::lower_bound(adj.begin(), adj.end(), to,
                             [](const Neighbor& nb, VertexId x) { return nb.vertex < x; });
  if (it == adj.end() || it->vertex != to) return std::nullopt;
  return it->type;
}

std::vector<Arc> DirectedGraph::arcs() const {
  std::vector<Arc> out;
  out.reserve(num_arcs_ + 2 * num_reciprocal_);
  for (VertexId v = 0; v < num_vertices(); ++v) {
    for (const Neighbor& nb : adjacency(v))
      if (nb.type != EdgeType::In) out.emplace_back(v, nb.vertex);
  }
  return out;
}

void DirectedGraph::validate() const {
  const std::size_t n = num_vertices();
  auto fail = [](const std::string& what) { throw InvariantError("graph invariant: " + what); };
  std::size_t out_total = 0, in_total = 0, rec_total = 0;
  for (VertexId v = 0; v < n; ++v) {
    auto adj = adjacency(v);
    for (std::size_t k = 0; k < adj.size(); ++k) {
      if (adj[k].vertex == v) fail("self-loop at " + label(v));
      if (k > 0 && adj[k - 1].vertex >= adj[k].vertex) fail("unsorted or duplicate neighbor");
      auto back = relation(adj[k].vertex, v);
      if (!back || *back != reverse(adj[k].type)) fail("asymmetric relation");
    }
    std::size_t typed = 0;
    for (EdgeType t : kAllEdgeTypes) {
      auto s = neighbors(v, t);
      if (!std::is_sorted(s.begin(), s.end()) ||
          std::adjacent_find(s.begin(), s.end()) != s.end())
        fail("typed set not strictly sorted");
      for (VertexId u : s) {
        auto r = relation(v, u);
        if (!r || *r != t) fail("typed set disagrees with adjacency");
      }
      typed += s.size();
    }
    if (typed != adj.size()) fail("typed sets do not partition the neighborhood");
    out_total += degree(v, EdgeType::Out);
    in_total += degree(v, EdgeType::In);
    rec_total += degree(v, EdgeType::Recip);
  }
  if (out_total != num_arcs_ || in_total != num_arcs_ || rec_total != 2 * num_reciprocal_)
    fail("edge counters disagree with neighbor sets");
}

}  // namespace digraphlet
