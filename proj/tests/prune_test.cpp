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
#include <limits>

#include <gtest/gtest.h>

#include "digraphlet/null_model.hpp"

namespace digraphlet {
namespace {

WeightedMatrix uniform_matrix(std::size_t n, double w) {
  WeightedMatrix m;
  m.n = n;
  m.values.assign(n * n, w);
  for (std::size_t i = 0; i < n; ++i) {
    m.values[i * n + i] = 0.0;
    m.labels.push_back("r" + std::to_string(i));
  }
  return m;
}

// Distinct positive |w| plus 0: every threshold that can change the graph.
std::vector<double> levels(const WeightedMatrix& w) {
  std::vector<double> out{0.0};
  for (std::size_t i = 0; i < w.n; ++i)
    for (std::size_t j = 0; j < w.n; ++j)
      if (i != j && std::abs(w.at(i, j)) > 0) out.push_back(std::abs(w.at(i, j)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TEST(PruneTest, UniformWeightsKeepEverything) {
  const auto w = uniform_matrix(116, 1.0);
  const auto r = prune_weighted(w);
  EXPECT_EQ(r.threshold, std::nextafter(1.0, 0.0));
  EXPECT_LT(r.threshold, 1.0);
  EXPECT_EQ(r.graph.num_reciprocal(), 116u * 115u / 2u);
  EXPECT_EQ(r.graph.total_degree(0), 115u);
  EXPECT_GE(115.0, 2.0 * std::log(116.0));
  EXPECT_EQ(r.graph.label(3), "r3");
}

TEST(PruneTest, NegativeWeightsCountByMagnitude) {
  const auto w = uniform_matrix(30, -0.5);
  const auto r = prune_weighted(w);
  EXPECT_EQ(r.graph.num_reciprocal(), 30u * 29u / 2u);
  PruneOptions signed_opts;
  signed_opts.use_magnitude = false;
  EXPECT_THROW(prune_weighted(w, signed_opts), UnprunableError);
}

// A 5-clique of strong weights in 20 regions; everything else is absent
// except a weak ring that leaves degree 2 < 2 ln 20.
TEST(PruneTest, DominantCliqueIsUnprunable) {
  WeightedMatrix w = uniform_matrix(20, 0.0);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      if (i != j) w.values[i * 20 + j] = 1.0;
  for (std::size_t i = 5; i < 20; ++i) {
    std::size_t j = i + 1 < 20 ? i + 1 : 5;
    w.values[i * 20 + j] = 1e-9;
  }
  // Exhaustive sweep: no threshold works.
  for (double t : levels(w)) ASSERT_FALSE(meets_pruning_criteria(threshold_graph(w, t)));
  EXPECT_THROW(prune_weighted(w), UnprunableError);
}

TEST(PruneTest, TooSmallMatrixIsRejected) {
  EXPECT_THROW(prune_weighted(uniform_matrix(2, 1.0)), std::invalid_argument);
}

TEST(PruneTest, LargestComponent) {
  std::vector<Arc> arcs{{0, 1}, {2, 1}, {3, 4}};
  auto g = DirectedGraph::from_arcs(6, arcs);
  EXPECT_EQ(largest_weak_component(g), 3u);
}

TEST(PruneTest, DegreeCriterionVariants) {
  // Star into vertex 0 from all others plus a directed ring: total degree is
  // high for 0 but every other vertex has out-degree 2, in-degree 1.
  const std::size_t n = 8;
  std::vector<Arc> arcs;
  for (VertexId v = 1; v < n; ++v) {
    arcs.emplace_back(v, 0);
    arcs.emplace_back(v, v + 1 < n ? v + 1 : 1);
  }
  auto g = DirectedGraph::from_arcs(n, arcs);
  PruneOptions o;
  o.degree_factor = 1.0;  // ln 8 = 2.08
  o.degree = DegreeCriterion::Total;
  EXPECT_TRUE(meets_pruning_criteria(g, o));
  o.degree = DegreeCriterion::Out;
  EXPECT_FALSE(meets_pruning_criteria(g, o));  // vertex 0 has out-degree 0
  o.degree = DegreeCriterion::In;
  EXPECT_FALSE(meets_pruning_criteria(g, o));
}

// The returned threshold is valid, and any larger threshold is not; checked
// against a linear sweep over all levels.
TEST(PruneTest, ThresholdIsMaximal) {
  DeterministicRng rng(17);
  int prunable = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 10 + rng.below(30);
    WeightedMatrix w = uniform_matrix(n, 0.0);
    const double density = 0.3 + 0.7 * rng.unit();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && rng.unit() < density) w.values[i * n + j] = rng.unit() * 2.0 - 1.0;

    const auto lv = levels(w);
    std::size_t last_valid = lv.size();
    for (std::size_t k = 0; k < lv.size(); ++k) {
      bool ok = meets_pruning_criteria(threshold_graph(w, lv[k]));
      if (ok) last_valid = k;
      // Monotone: once invalid, stays invalid.
      if (!ok) {
        for (std::size_t q = k + 1; q < lv.size(); ++q)
          ASSERT_FALSE(meets_pruning_criteria(threshold_graph(w, lv[q])));
        break;
      }
    }
    if (last_valid == lv.size()) {
      EXPECT_THROW(prune_weighted(w), UnprunableError);
      continue;
    }
    ++prunable;
    const auto r = prune_weighted(w);
    EXPECT_TRUE(meets_pruning_criteria(r.graph));
    EXPECT_GE(r.threshold, lv[last_valid]);
    ASSERT_LT(last_valid + 1, lv.size());
    EXPECT_LT(r.threshold, lv[last_valid + 1]);
    EXPECT_EQ(r.graph, threshold_graph(w, lv[last_valid]));
    const double above = std::nextafter(r.threshold, std::numeric_limits<double>::infinity());
    EXPECT_FALSE(meets_pruning_criteria(threshold_graph(w, above)));
  }
  EXPECT_GT(prunable, 10);
}

TEST(PruneTest, ReciprocalEdgesFormWhenBothArcsSurvive) {
  WeightedMatrix w = uniform_matrix(3, 0.0);
  w.values[0 * 3 + 1] = 0.9;
  w.values[1 * 3 + 0] = 0.8;
  w.values[1 * 3 + 2] = 0.5;
  auto g = threshold_graph(w, 0.6);
  EXPECT_EQ(g.relation(0, 1), EdgeType::Recip);
  EXPECT_EQ(g.relation(1, 2), std::nullopt);
  g = threshold_graph(w, 0.85);
  EXPECT_EQ(g.relation(0, 1), EdgeType::Out);
}

}  // namespace
}  // namespace digraphlet
