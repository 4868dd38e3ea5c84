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

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "digraphlet/graph.hpp"

namespace digraphlet {

// Flat indices of the 9 ordered wedge types (a, b) and the 27 ordered
// triangle types (a, b, c); Out < In < Recip.
constexpr std::size_t wedge_index(EdgeType a, EdgeType b) { return 3 * index(a) + index(b); }
constexpr std::size_t triangle_index(EdgeType a, EdgeType b, EdgeType c) {
  return 9 * index(a) + 3 * index(b) + index(c);
}

inline constexpr std::size_t kWedgeTypes = 9;
inline constexpr std::size_t kTriangleTypes = 27;
inline constexpr std::size_t kRawQuantities = 3 + kWedgeTypes + kTriangleTypes;

// Per-vertex counts for a vertex i, with h and j ranging over other vertices:
//   degree[a]          |S^a(i)|
//   paths[(a,b)]       L: sum over j != i of |S^a(i) ∩ S^b(j)|
//   triangles[(a,b,c)] T: sum over j in S^c(i) of |S^a(i) ∩ S^b(j)|
//   wedges[(a,b)]      W = L - sum_c T, the induced (open) wedges
// A triangle at i is counted once per ordered choice of (h, j) among its two
// other vertices, so a fully reciprocal triangle gives T(o,o,o) = 2.
struct VertexCensus {
  std::array<std::int64_t, 3> degree{};
  std::array<std::int64_t, kWedgeTypes> paths{};
  std::array<std::int64_t, kWedgeTypes> wedges{};
  std::array<std::int64_t, kTriangleTypes> triangles{};

  // d, W, T concatenated: the 39 raw quantities.
  std::array<std::int64_t, kRawQuantities> quantities() const;

  VertexCensus& operator+=(const VertexCensus& o);
  friend VertexCensus operator+(VertexCensus a, const VertexCensus& b) { return a += b; }
  friend bool operator==(const VertexCensus&, const VertexCensus&) = default;
};

using RawCensus = std::vector<VertexCensus>;

// Column names of quantities(): d_+, d_-, d_o, W_++ ... W_oo, T_+++ ... T_ooo.
std::vector<std::string> raw_quantity_names();

// Counts for one vertex: one merge of sorted adjacencies per incident edge
// gives all 27 triangle buckets, and L comes from neighbor degrees.
VertexCensus census_vertex(const DirectedGraph& g, VertexId v);

// All vertices, OpenMP-parallel over vertices. workers <= 0 uses the OpenMP
// default. Output does not depend on the worker count.
RawCensus raw_census(const DirectedGraph& g, int workers = 0);

// Single-threaded reference that evaluates the defining set-intersection sums
// term by term on the typed neighbor sets. Kept for testing and benchmarks.
RawCensus raw_census_serial(const DirectedGraph& g);

// t_i(a,b,c) = T_i(a,b,c) / L_i(a,b); 0 when L_i(a,b) = 0.
double triangle_ratio(const VertexCensus& c, EdgeType a, EdgeType b, EdgeType g);
double triangle_ratio(const DirectedGraph& graph, VertexId v, EdgeType a, EdgeType b, EdgeType g);

// Global identities: sum d+ = sum d- = arcs, sum do = 2 * reciprocal edges,
// sum T = 6 * skeleton triangles, W >= 0 and W = L - sum_c T per vertex.
// Skeleton triangles are counted independently here. Throws InvariantError.
void check_census_invariants(const DirectedGraph& g, const RawCensus& census);

// Number of triangles of the undirected skeleton.
std::int64_t count_skeleton_triangles(const DirectedGraph& g);

}  // namespace digraphlet
