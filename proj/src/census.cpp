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

#include "digraphlet/census.hpp"

#include <algorithm>
#include <numeric>

#include <omp.h>

#include "digraphlet/errors.hpp"

namespace digraphlet {

std::array<std::int64_t, kRawQuantities> VertexCensus::quantities() const {
  std::array<std::int64_t, kRawQuantities> q{};
  auto it = std::copy(degree.begin(), degree.end(), q.begin());
  it = std::copy(wedges.begin(), wedges.end(), it);
  std::copy(triangles.begin(), triangles.end(), it);
  return q;
}

VertexCensus& VertexCensus::operator+=(const VertexCensus& o) {
  for (std::size_t k = 0; k < degree.size(); ++k) degree[k] += o.degree[k];
  for (std::size_t k = 0; k < kWedgeTypes; ++k) {
    paths[k] += o.paths[k];
    wedges[k] += o.wedges[k];
  }
  for (std::size_t k = 0; k < kTriangleTypes; ++k) triangles[k] += o.triangles[k];
  return *this;
}

std::vector<std::string> raw_quantity_names() {
  std::vector<std::string> names;
  for (EdgeType a : kAllEdgeTypes) names.push_back(std::string("d_") + symbol(a));
  for (EdgeType a : kAllEdgeTypes)
    for (EdgeType b : kAllEdgeTypes) names.push_back(std::string("W_") + symbol(a) + symbol(b));
  for (EdgeType a : kAllEdgeTypes)
    for (EdgeType b : kAllEdgeTypes)
      for (EdgeType c : kAllEdgeTypes)
        names.push_back(std::string("T_") + symbol(a) + symbol(b) + symbol(c));
  return names;
}

namespace {

void finish_wedges(VertexCensus& c) {
  for (std::size_t w = 0; w < kWedgeTypes; ++w) {
    std::int64_t closed = 0;
    for (std::size_t g = 0; g < kEdgeTypes; ++g) closed += c.triangles[3 * w + g];
    c.wedges[w] = c.paths[w] - closed;
  }
}

// L(a,b) = sum over h in S^a(i) of #{j != i : h in S^b(j)}. h in S^b(j) iff
// j in S^rev(b)(h), and i itself is in S^rev(a)(h), so i is excluded exactly
// when a == b.
void count_paths(const DirectedGraph& g, VertexId i, VertexCensus& c) {
  for (const Neighbor& h : g.adjacency(i)) {
    for (EdgeType b : kAllEdgeTypes) {
      auto reach = static_cast<std::int64_t>(g.degree(h.vertex, reverse(b)));
      if (b == h.type) --reach;
      c.paths[wedge_index(h.type, b)] += reach;
    }
  }
}

std::int64_t intersection_size(std::span<const VertexId> a, std::span<const VertexId> b) {
  std::int64_t n = 0;
  auto x = a.begin(), y = b.begin();
  while (x != a.end() && y != b.end()) {
    if (*x < *y)
      ++x;
    else if (*y < *x)
      ++y;
    else {
      ++n;
      ++x;
      ++y;
    }
  }
  return n;
}

}  // namespace

VertexCensus census_vertex(const DirectedGraph& g, VertexId i) {
  VertexCensus c;
  for (EdgeType t : kAllEdgeTypes) c.degree[index(t)] = static_cast<std::int64_t>(g.degree(i, t));

  auto adj_i = g.adjacency(i);
  for (const Neighbor& j : adj_i) {
    auto adj_j = g.adjacency(j.vertex);
    const std::size_t gamma = index(j.type);
    auto x = adj_i.begin(), y = adj_j.begin();
    while (x != adj_i.end() && y != adj_j.end()) {
      if (x->vertex < y->vertex)
        ++x;
      else if (y->vertex < x->vertex)
        ++y;
      else {
        ++c.triangles[9 * index(x->type) + 3 * index(y->type) + gamma];
        ++x;
        ++y;
      }
    }
  }
  count_paths(g, i, c);
  finish_wedges(c);
  return c;
}

RawCensus raw_census(const DirectedGraph& g, int workers) {
  const auto n = static_cast<std::int64_t>(g.num_vertices());
  RawCensus out(static_cast<std::size_t>(n));
  const int threads = workers > 0 ? workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 64) num_threads(threads)
  for (std::int64_t v = 0; v < n; ++v)
    out[static_cast<std::size_t>(v)] = census_vertex(g, static_cast<VertexId>(v));
  return out;
}

RawCensus raw_census_serial(const DirectedGraph& g) {
  const std::size_t n = g.num_vertices();
  RawCensus out(n);
  std::vector<VertexId> candidates;
  for (VertexId i = 0; i < n; ++i) {
    VertexCensus& c = out[i];
    for (EdgeType t : kAllEdgeTypes) c.degree[index(t)] = static_cast<std::int64_t>(g.degree(i, t));

    for (EdgeType gamma : kAllEdgeTypes)
      for (VertexId j : g.neighbors(i, gamma))
        for (EdgeType a : kAllEdgeTypes)
          for (EdgeType b : kAllEdgeTypes)
            c.triangles[triangle_index(a, b, gamma)] +=
                intersection_size(g.neighbors(i, a), g.neighbors(j, b));

    // Terms with j outside the 2-hop neighborhood of i are zero.
    candidates.clear();
    for (const Neighbor& h : g.adjacency(i))
      for (const Neighbor& j : g.adjacency(h.vertex))
        if (j.vertex != i) candidates.push_back(j.vertex);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (VertexId j : candidates)
      for (EdgeType a : kAllEdgeTypes)
        for (EdgeType b : kAllEdgeTypes)
          c.paths[wedge_index(a, b)] += intersection_size(g.neighbors(i, a), g.neighbors(j, b));

    finish_wedges(c);
  }
  return out;
}

double triangle_ratio(const VertexCensus& c, EdgeType a, EdgeType b, EdgeType g) {
  const std::int64_t wedges = c.paths[wedge_index(a, b)];
  if (wedges == 0) return 0.0;
  return static_cast<double>(c.triangles[triangle_index(a, b, g)]) / static_cast<double>(wedges);
}

double triangle_ratio(const DirectedGraph& graph, VertexId v, EdgeType a, EdgeType b, EdgeType g) {
  if (v >= graph.num_vertices()) throw std::out_of_range("vertex out of range");
  return triangle_ratio(census_vertex(graph, v), a, b, g);
}

std::int64_t count_skeleton_triangles(const DirectedGraph& g) {
  // Each triangle is found once, from its lowest vertex via ordered u < v < w.
  std::int64_t total = 0;
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    auto adj_u = g.adjacency(u);
    for (const Neighbor& v : adj_u) {
      if (v.vertex <= u) continue;
      for (const Neighbor& w : g.adjacency(v.vertex))
        if (w.vertex > v.vertex && g.relation(u, w.vertex)) ++total;
    }
  }
  return total;
}

void check_census_invariants(const DirectedGraph& g, const RawCensus& census) {
  auto fail = [](const std::string& what) { throw InvariantError("census invariant: " + what); };
  if (census.size() != g.num_vertices()) fail("row count differs from vertex count");

  std::int64_t out_sum = 0, in_sum = 0, rec_sum = 0, tri_sum = 0, wedge_sum = 0;
  for (const VertexCensus& c : census) {
    out_sum += c.degree[index(EdgeType::Out)];
    in_sum += c.degree[index(EdgeType::In)];
    rec_sum += c.degree[index(EdgeType::Recip)];
    for (std::size_t w = 0; w < kWedgeTypes; ++w) {
      if (c.wedges[w] < 0) fail("negative induced wedge count");
      std::int64_t closed = 0;
      for (std::size_t k = 0; k < kEdgeTypes; ++k) closed += c.triangles[3 * w + k];
      if (c.wedges[w] != c.paths[w] - closed) fail("W != L - sum T");
      wedge_sum += c.wedges[w];
    }
    for (auto t : c.triangles) {
      if (t < 0) fail("negative triangle count");
      tri_sum += t;
    }
  }
  const auto arcs = static_cast<std::int64_t>(g.num_arcs());
  if (out_sum != arcs || in_sum != arcs) fail("directed degree sums differ from arc count");
  if (rec_sum != 2 * static_cast<std::int64_t>(g.num_reciprocal()))
    fail("reciprocal degree sum differs from twice the reciprocal edge count");

  const std::int64_t triangles = count_skeleton_triangles(g);
  if (tri_sum != 6 * triangles) fail("triangle total differs from 6 * skeleton triangles");

  // Open 2-paths centered at each vertex, minus the three per triangle.
  std::int64_t centered = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    auto d = static_cast<std::int64_t>(g.total_degree(v));
    centered += d * (d - 1) / 2;
  }
  if (wedge_sum != 2 * (centered - 3 * triangles)) fail("wedge total differs from 2 * induced wedges");
}

}  // namespace digraphlet
