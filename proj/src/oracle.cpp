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

#include "digraphlet/oracle.hpp"

#include <stdexcept>

namespace digraphlet {
namespace {

// 0 none, 1 out, 2 in, 3 reciprocal, seen from the row vertex.
class RelationTable {
 public:
  explicit RelationTable(const DirectedGraph& g) : n_(g.num_vertices()), arc_(n_ * n_, 0) {
    for (auto [s, d] : g.arcs()) arc_[s * n_ + d] = 1;
  }
  int operator()(std::size_t x, std::size_t y) const {
    const bool fwd = arc_[x * n_ + y] != 0, bwd = arc_[y * n_ + x] != 0;
    return fwd && bwd ? 3 : fwd ? 1 : bwd ? 2 : 0;
  }

 private:
  std::size_t n_;
  std::vector<unsigned char> arc_;
};

// Relation code (1, 2, 3) to the census' type order (+, -, o) = (0, 1, 2).
std::size_t slot(int relation) { return static_cast<std::size_t>(relation - 1); }

int pattern_code(char ch) {
  switch (ch) {
    case '+': return 0;
    case '-': return 1;
    case 'o': return 2;
  }
  throw std::logic_error("bad pattern symbol");
}

}  // namespace

RawCensus oracle_census(const DirectedGraph& g, std::size_t cap) {
  const std::size_t n = g.num_vertices();
  if (n > cap)
    throw std::invalid_argument("oracle cap exceeded: " + std::to_string(n) + " > " +
                                std::to_string(cap) + " vertices");
  RelationTable rel(g);
  RawCensus out(n);

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (int r = rel(x, y)) ++out[x].degree[slot(r)];

  // (start, h, j): h is the middle of the wedge or the second triangle vertex.
  auto triangle = [&](std::size_t s, std::size_t h, std::size_t j) {
    std::size_t a = slot(rel(s, h)), b = slot(rel(j, h)), c = slot(rel(s, j));
    ++out[s].triangles[9 * a + 3 * b + c];
    ++out[s].paths[3 * a + b];
  };
  auto open_wedge = [&](std::size_t s, std::size_t h, std::size_t j) {
    std::size_t a = slot(rel(s, h)), b = slot(rel(j, h));
    ++out[s].wedges[3 * a + b];
    ++out[s].paths[3 * a + b];
  };

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      for (std::size_t z = y + 1; z < n; ++z) {
        const bool xy = rel(x, y) != 0, xz = rel(x, z) != 0, yz = rel(y, z) != 0;
        const int edges = xy + xz + yz;
        if (edges == 3) {
          triangle(x, y, z);
          triangle(x, z, y);
          triangle(y, x, z);
          triangle(y, z, x);
          triangle(z, x, y);
          triangle(z, y, x);
        } else if (edges == 2) {
          // The vertex on both edges is the middle; the other two are ends.
          if (!yz) {
            open_wedge(y, x, z);
            open_wedge(z, x, y);
          } else if (!xz) {
            open_wedge(x, y, z);
            open_wedge(z, y, x);
          } else {
            open_wedge(x, z, y);
            open_wedge(y, z, x);
          }
        }
      }
  return out;
}

const std::vector<std::pair<std::string, std::vector<std::string>>>& oracle_class_patterns() {
  static const std::vector<std::pair<std::string, std::vector<std::string>>> table = {
      {"d_out", {"+"}},
      {"d_in", {"-"}},
      {"d_rec", {"o"}},
      {"W_path", {"+-", "-+"}},
      {"W_in", {"++"}},
      {"W_out", {"--"}},
      {"W_in+", {"+o", "o+"}},
      {"W_out+", {"-o", "o-"}},
      {"W_rec", {"oo"}},
      {"T_acyclic", {"+-+", "++-", "+++", "---", "--+", "-+-"}},
      {"T_cycles", {"+--", "-++"}},
      {"T_out+", {"+o+", "--o", "o+-"}},
      {"T_cycles+", {"+-o", "+o-", "-+o", "-o+", "o--", "o++"}},
      {"T_in+", {"++o", "-o-", "o-+"}},
      {"T_cycles++", {"+oo", "-oo", "o-o", "o+o", "oo-", "oo+"}},
      {"T_rec", {"ooo"}},
  };
  return table;
}

SignatureMatrix oracle_signatures(const DirectedGraph& g, std::size_t cap) {
  const RawCensus census = oracle_census(g, cap);
  SignatureMatrix m;
  m.labels = g.labels();
  for (const VertexCensus& c : census) {
    Signature s{};
    std::size_t col = 0;
    for (const auto& [name, patterns] : oracle_class_patterns()) {
      for (const std::string& p : patterns) {
        if (p.size() == 1)
          s[col] += c.degree[pattern_code(p[0])];
        else if (p.size() == 2)
          s[col] += c.wedges[3 * pattern_code(p[0]) + pattern_code(p[1])];
        else
          s[col] += c.triangles[9 * pattern_code(p[0]) + 3 * pattern_code(p[1]) + pattern_code(p[2])];
      }
      ++col;
    }
    m.rows.push_back(s);
  }
  return m;
}

std::vector<CensusMismatch> diff_census(const RawCensus& expected, const RawCensus& actual,
                                        std::size_t limit) {
  std::vector<CensusMismatch> out;
  if (expected.size() != actual.size()) {
    out.push_back({0, "vertex count", static_cast<std::int64_t>(expected.size()),
                   static_cast<std::int64_t>(actual.size())});
    return out;
  }
  const auto names = raw_quantity_names();
  for (std::size_t v = 0; v < expected.size() && out.size() < limit; ++v) {
    auto e = expected[v].quantities(), a = actual[v].quantities();
    for (std::size_t k = 0; k < kRawQuantities && out.size() < limit; ++k)
      if (e[k] != a[k]) out.push_back({v, names[k], e[k], a[k]});
  }
  return out;
}

}  // namespace digraphlet
