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

#include "digraphlet/signature.hpp"

#include <numeric>

#include <gtest/gtest.h>

#include "support.hpp"

namespace digraphlet {
namespace {

using testing::make_graph;

Signature row(std::initializer_list<std::int64_t> v) {
  Signature s{};
  std::copy(v.begin(), v.end(), s.begin());
  return s;
}

TEST(SignatureTest, DirectedCycleRows) {
  auto g = make_graph(3, {{0, 1}, {1, 2}, {2, 0}});
  auto sig = aggregate(raw_census(g), g.labels());
  for (const auto& r : sig.rows) EXPECT_EQ(r, row({1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0}));
}

TEST(SignatureTest, ReciprocalTriangleRows) {
  auto g = make_graph(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {0, 2}, {2, 0}});
  auto sig = aggregate(raw_census(g));
  for (const auto& r : sig.rows) EXPECT_EQ(r, row({0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2}));
  EXPECT_EQ(sig.labels, (std::vector<std::string>{"0", "1", "2"}));
}

TEST(SignatureTest, DirectedPathRows) {
  auto sig = aggregate(raw_census(make_graph(3, {{0, 1}, {1, 2}})));
  EXPECT_EQ(sig.rows[0][static_cast<std::size_t>(SignatureClass::WedgePath)], 1);
  EXPECT_EQ(sig.rows[1][static_cast<std::size_t>(SignatureClass::WedgePath)], 0);
  EXPECT_EQ(sig.rows[2][static_cast<std::size_t>(SignatureClass::WedgePath)], 1);
}

TEST(SignatureTest, TablesCoverEveryTypeOnce) {
  std::array<int, kSignatureSize> hits{};
  for (auto c : kWedgeClass) ++hits[static_cast<std::size_t>(c)];
  for (auto c : kTriangleClass) ++hits[static_cast<std::size_t>(c)];
  int wedge_classes = 0, triangle_classes = 0, total = 0;
  for (std::size_t k = 0; k < kSignatureSize; ++k) {
    total += hits[k];
    if (k >= kWedgeBlock && k < kTriangleBlock) wedge_classes += hits[k] > 0;
    if (k >= kTriangleBlock) triangle_classes += hits[k] > 0;
    if (k < kWedgeBlock) EXPECT_EQ(hits[k], 0);
  }
  EXPECT_EQ(total, 9 + 27);
  EXPECT_EQ(wedge_classes, 6);
  EXPECT_EQ(triangle_classes, 7);
}

TEST(SignatureTest, AggregateIsLinear) {
  auto corpus = testing::random_corpus(30, 5, 5, 31);
  for (std::size_t k = 0; k + 1 < corpus.size(); ++k) {
    auto a = raw_census(corpus[k].graph), b = raw_census(corpus[k + 1].graph);
    for (std::size_t v = 0; v < 5; ++v) {
      auto sum = aggregate(a[v] + b[v]);
      auto sa = aggregate(a[v]), sb = aggregate(b[v]);
      for (std::size_t c = 0; c < kSignatureSize; ++c) ASSERT_EQ(sum[c], sa[c] + sb[c]);
    }
  }
}

TEST(SignatureTest, EachEntryIsItsClassSum) {
  auto g = random_digraph(30, 0.5, 6);
  auto raw = raw_census(g);
  auto sig = aggregate(raw);
  for (std::size_t v = 0; v < raw.size(); ++v) {
    Signature expect{};
    for (std::size_t k = 0; k < 3; ++k) expect[k] = raw[v].degree[k];
    for (std::size_t w = 0; w < kWedgeTypes; ++w) expect[static_cast<std::size_t>(kWedgeClass[w])] += raw[v].wedges[w];
    for (std::size_t t = 0; t < kTriangleTypes; ++t)
      expect[static_cast<std::size_t>(kTriangleClass[t])] += raw[v].triangles[t];
    ASSERT_EQ(sig.rows[v], expect);
  }
}

TEST(NormalizeTest, DirectedCycleVertex) {
  auto g = make_graph(3, {{0, 1}, {1, 2}, {2, 0}});
  auto n = normalize(aggregate(raw_census(g)));
  const auto& r = n.rows[0];
  EXPECT_DOUBLE_EQ(r[0], 0.5);
  EXPECT_DOUBLE_EQ(r[1], 0.5);
  EXPECT_DOUBLE_EQ(r[2], 0.0);
  for (std::size_t k = kWedgeBlock; k < kTriangleBlock; ++k) EXPECT_EQ(r[k], 0.0);
  EXPECT_DOUBLE_EQ(r[static_cast<std::size_t>(SignatureClass::TriangleCycles)], 1.0);
  EXPECT_EQ(n.zero_block[0], (std::array<bool, 3>{false, true, false}));
}

TEST(NormalizeTest, IsolatedVertexIsFlagged) {
  auto n = normalize(aggregate(raw_census(make_graph(3, {{0, 1}}))));
  for (double x : n.rows[2]) EXPECT_EQ(x, 0.0);
  EXPECT_EQ(n.zero_block[2], (std::array<bool, 3>{true, true, true}));
}

TEST(NormalizeTest, NonzeroBlocksSumToOne) {
  for (const auto& c : testing::random_corpus(60, 3, 60, 14)) {
    auto n = normalize(aggregate(raw_census(c.graph)));
    for (std::size_t v = 0; v < n.rows.size(); ++v) {
      const std::size_t bounds[4] = {0, 3, 9, 16};
      for (std::size_t b = 0; b < 3; ++b) {
        double s = 0.0;
        for (std::size_t k = bounds[b]; k < bounds[b + 1]; ++k) {
          ASSERT_GE(n.rows[v][k], 0.0);
          ASSERT_LE(n.rows[v][k], 1.0);
          s += n.rows[v][k];
        }
        if (n.zero_block[v][b])
          ASSERT_EQ(s, 0.0);
        else
          ASSERT_NEAR(s, 1.0, 1e-12);
      }
    }
  }
}

TEST(NormalizeTest, UniformOrientationExpectation) {
  auto e = uniform_orientation_expectation();
  const double expected[kSignatureSize] = {1.0 / 3, 1.0 / 3, 1.0 / 3, 2.0 / 9, 1.0 / 9, 1.0 / 9,
                                           2.0 / 9, 2.0 / 9, 1.0 / 9, 6.0 / 27, 2.0 / 27, 3.0 / 27,
                                           6.0 / 27, 3.0 / 27, 6.0 / 27, 1.0 / 27};
  for (std::size_t k = 0; k < kSignatureSize; ++k) EXPECT_NEAR(e[k], expected[k], 1e-15);
}

TEST(SignatureTest, FeatureMatrixColumns) {
  auto sig = aggregate(raw_census(make_graph(3, {{0, 1}, {1, 2}, {2, 0}})));
  auto f = sig.features();
  EXPECT_EQ(f.rows(), 3u);
  EXPECT_EQ(f.cols(), kSignatureSize);
  EXPECT_EQ(f.column_names[15], "T_rec");
  EXPECT_EQ(f.at(1, 10), 2.0);
}

}  // namespace
}  // namespace digraphlet
