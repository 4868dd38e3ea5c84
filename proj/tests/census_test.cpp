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

#include <numeric>

#include <gtest/gtest.h>

#include "digraphlet/errors.hpp"
#include "support.hpp"

namespace digraphlet {
namespace {

using testing::make_graph;
constexpr EdgeType P = EdgeType::Out, M = EdgeType::In, O = EdgeType::Recip;

std::int64_t sum(const auto& a) { return std::accumulate(a.begin(), a.end(), std::int64_t{0}); }

TEST(CensusTest, ReciprocalTriangle) {
  auto g = make_graph(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {0, 2}, {2, 0}});
  for (const auto& c : raw_census(g)) {
    EXPECT_EQ(c.degree, (std::array<std::int64_t, 3>{0, 0, 2}));
    EXPECT_EQ(c.triangles[triangle_index(O, O, O)], 2);
    EXPECT_EQ(sum(c.triangles), 2);
    EXPECT_EQ(c.paths[wedge_index(O, O)], 2);
    EXPECT_EQ(sum(c.paths), 2);
    EXPECT_EQ(sum(c.wedges), 0);
  }
}

TEST(CensusTest, DirectedThreeCycle) {
  auto g = make_graph(3, {{0, 1}, {1, 2}, {2, 0}});
  for (const auto& c : raw_census(g)) {
    EXPECT_EQ(c.degree, (std::array<std::int64_t, 3>{1, 1, 0}));
    EXPECT_EQ(c.triangles[triangle_index(P, M, M)], 1);
    EXPECT_EQ(c.triangles[triangle_index(M, P, P)], 1);
    EXPECT_EQ(sum(c.triangles), 2);
    EXPECT_EQ(sum(c.wedges), 0);
  }
}

TEST(CensusTest, DirectedPath) {
  auto g = make_graph(3, {{0, 1}, {1, 2}});
  auto c = raw_census(g);
  EXPECT_EQ(c[0].wedges[wedge_index(P, M)], 1);
  EXPECT_EQ(sum(c[0].wedges), 1);
  EXPECT_EQ(c[2].wedges[wedge_index(M, P)], 1);
  EXPECT_EQ(sum(c[2].wedges), 1);
  EXPECT_EQ(sum(c[1].wedges), 0);
  EXPECT_EQ(c[1].degree, (std::array<std::int64_t, 3>{1, 1, 0}));
  for (const auto& v : c) EXPECT_EQ(sum(v.triangles), 0);
}

// i -> h, h -> j, i <-> j is the (+,-,o) triangle at i; the swapped
// assignment of h and j gives (o,+,+).
TEST(CensusTest, MixedTriangleLabels) {
  const VertexId i = 0, h = 1, j = 2;
  auto g = make_graph(3, {{i, h}, {h, j}, {i, j}, {j, i}});
  auto c = census_vertex(g, i);
  EXPECT_EQ(c.triangles[triangle_index(P, M, O)], 1);
  EXPECT_EQ(c.triangles[triangle_index(O, P, P)], 1);
  EXPECT_EQ(sum(c.triangles), 2);
}

TEST(CensusTest, IsolatedVertexIsAllZero) {
  auto g = make_graph(4, {{0, 1}, {1, 2}});
  EXPECT_EQ(census_vertex(g, 3), VertexCensus{});
}

TEST(CensusTest, KernelsAgree) {
  for (const auto& c : testing::random_corpus(120, 1, 70, 11)) {
    auto serial = raw_census_serial(c.graph);
    ASSERT_EQ(raw_census(c.graph, 1), serial);
    ASSERT_EQ(raw_census(c.graph, 4), serial);
  }
}

TEST(CensusTest, WorkerCountDoesNotChangeOutput) {
  auto g = random_digraph(2000, 0.01, 4);
  EXPECT_EQ(raw_census(g, 1), raw_census(g, 8));
}

TEST(CensusTest, SumIdentitiesOnRandomGraphs) {
  for (const auto& c : testing::random_corpus(200, 1, 60, 12)) {
    auto census = raw_census(c.graph);
    ASSERT_NO_THROW(check_census_invariants(c.graph, census));
    for (const auto& v : census)
      for (auto w : v.wedges) ASSERT_GE(w, 0);
  }
}

TEST(CensusTest, InvariantCheckCatchesCorruption) {
  auto g = random_digraph(30, 0.3, 2);
  auto census = raw_census(g);
  census[3].triangles[5] += 1;
  EXPECT_THROW(check_census_invariants(g, census), InvariantError);
}

TEST(CensusTest, IsomorphismInvariance) {
  DeterministicRng rng(77);
  for (const auto& c : testing::random_corpus(40, 2, 50, 13)) {
    const std::size_t n = c.graph.num_vertices();
    std::vector<VertexId> perm(n);
    std::iota(perm.begin(), perm.end(), VertexId{0});
    for (std::size_t k = n - 1; k > 0; --k) std::swap(perm[k], perm[rng.below(k + 1)]);
    std::vector<Arc> arcs;
    for (auto [s, d] : c.graph.arcs()) arcs.emplace_back(perm[s], perm[d]);
    auto relabeled = DirectedGraph::from_arcs(n, arcs);
    auto a = raw_census(c.graph), b = raw_census(relabeled);
    for (VertexId v = 0; v < n; ++v) ASSERT_EQ(a[v], b[perm[v]]);
  }
}

TEST(CensusTest, SkeletonTriangles) {
  EXPECT_EQ(count_skeleton_triangles(make_graph(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 1}})), 2);
  EXPECT_EQ(count_skeleton_triangles(random_digraph(10, 1.0, 1)), 120);
}

TEST(TriangleRatioTest, Examples) {
  auto rec = make_graph(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {0, 2}, {2, 0}});
  EXPECT_DOUBLE_EQ(triangle_ratio(rec, 1, O, O, O), 1.0);

  auto path = make_graph(3, {{0, 1}, {1, 2}});
  for (EdgeType g : kAllEdgeTypes) EXPECT_EQ(triangle_ratio(path, 0, P, M, g), 0.0);

  // L(+,+) = 0 at vertex 0 of the path: zero-denominator convention.
  EXPECT_EQ(census_vertex(path, 0).paths[wedge_index(P, P)], 0);
  EXPECT_EQ(triangle_ratio(path, 0, P, P, P), 0.0);
  EXPECT_THROW(triangle_ratio(path, 7, P, P, P), std::out_of_range);
}

TEST(TriangleRatioTest, RatiosOverGammaSumToClosedFraction) {
  auto g = random_digraph(40, 0.4, 21);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    auto c = census_vertex(g, v);
    for (EdgeType a : kAllEdgeTypes)
      for (EdgeType b : kAllEdgeTypes) {
        const auto l = c.paths[wedge_index(a, b)];
        double total = 0.0;
        for (EdgeType gm : kAllEdgeTypes) total += triangle_ratio(c, a, b, gm);
        if (l == 0)
          EXPECT_EQ(total, 0.0);
        else
          EXPECT_NEAR(total, 1.0 - static_cast<double>(c.wedges[wedge_index(a, b)]) / l, 1e-12);
      }
  }
}

TEST(CensusTest, QuantityNames) {
  auto names = raw_quantity_names();
  ASSERT_EQ(names.size(), kRawQuantities);
  EXPECT_EQ(names[0], "d_+");
  EXPECT_EQ(names[3 + wedge_index(P, M)], "W_+-");
  EXPECT_EQ(names[12 + triangle_index(O, M, P)], "T_o-+");
}

TEST(CensusTest, VertexCapGuardsCountWidth) {
  EXPECT_THROW(DirectedGraph::from_arcs(kMaxVertices + 1, std::vector<Arc>{}), InputError);
}

}  // namespace
}  // namespace digraphlet
