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
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace digraphlet {

using VertexId = std::uint32_t;

// Relation of a neighbor j as seen from vertex i:
//   Out   : i -> j only      (j in S+(i))
//   In    : j -> i only      (j in S-(i))
//   Recip : i <-> j          (j in So(i))
enum class EdgeType : std::uint8_t { Out = 0, In = 1, Recip = 2 };

inline constexpr std::size_t kEdgeTypes = 3;
inline constexpr EdgeType kAllEdgeTypes[kEdgeTypes] = {EdgeType::Out, EdgeType::In,
                                                       EdgeType::Recip};

constexpr std::size_t index(EdgeType t) { return static_cast<std::size_t>(t); }

// The same edge seen from the other endpoint.
constexpr EdgeType reverse(EdgeType t) {
  switch (t) {
    case EdgeType::Out: return EdgeType::In;
    case EdgeType::In: return EdgeType::Out;
    default: return EdgeType::Recip;
  }
}

// '+', '-' or 'o'.
char symbol(EdgeType t);

struct Neighbor {
  VertexId vertex;
  EdgeType type;
};

using Arc = std::pair<VertexId, VertexId>;

// Simple directed graph with mutual arc pairs collapsed into reciprocal
// edges. Immutable after construction; neighbor lists are sorted ascending.
class DirectedGraph {
 public:
  DirectedGraph() = default;

  // Builds from raw arcs (src, dst). Self-loops are dropped, duplicates are
  // merged, and {(i,j),(j,i)} becomes one reciprocal edge. When labels is
  // empty the vertices are labelled "0".."n-1".
  static DirectedGraph from_arcs(std::size_t n, std::span<const Arc> arcs,
                                 std::vector<std::string> labels = {});

  std::size_t num_vertices() const { return labels_.size(); }

  // Neighbors of v of one type: S+(v), S-(v) or So(v).
  std::span<const VertexId> neighbors(VertexId v, EdgeType t) const;
  // All neighbors of v with their types, sorted by vertex.
  std::span<const Neighbor> adjacency(VertexId v) const;

  std::size_t degree(VertexId v, EdgeType t) const { return neighbors(v, t).size(); }
  std::size_t total_degree(VertexId v) const { return adjacency(v).size(); }

  // Type of the (from, to) relation from `from`'s side, if connected.
  std::optional<EdgeType> relation(VertexId from, VertexId to) const;

  // Purely directed arcs.
  std::size_t num_arcs() const { return num_arcs_; }
  std::size_t num_reciprocal() const { return num_reciprocal_; }
  // Connected unordered pairs (the undirected skeleton's edge count).
  std::size_t num_edges() const { return num_arcs_ + num_reciprocal_; }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(VertexId v) const { return labels_[v]; }

  // Arcs in (src, dst) order with a reciprocal edge expanded to two arcs.
  std::vector<Arc> arcs() const;

  // Checks the partition, symmetry, sortedness and no-self-loop invariants.
  // Throws InvariantError on violation.
  void validate() const;

  friend bool operator==(const DirectedGraph&, const DirectedGraph&) = default;

 private:
  std::vector<std::string> labels_;
  // CSR per edge type, plus the merged typed adjacency.
  std::vector<std::size_t> offsets_[kEdgeTypes];
  std::vector<VertexId> targets_[kEdgeTypes];
  std::vector<std::size_t> adj_offsets_;
  std::vector<Neighbor> adj_;
  std::size_t num_arcs_ = 0;
  std::size_t num_reciprocal_ = 0;
};

inline bool operator==(const Neighbor& a, const Neighbor& b) {
  return a.vertex == b.vertex && a.type == b.type;
}

// Maximum vertex count. Keeps every per-vertex count below 2^62.
inline constexpr std::size_t kMaxVertices = (std::size_t{1} << 31) - 1;

}  // namespace digraphlet
