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

#include "digraphlet/cluster.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace digraphlet {

FeatureMatrix standardize_columns(const FeatureMatrix& m) {
  FeatureMatrix out = m;
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < m.cols(); ++c) {
    double mean = 0.0;
    for (std::size_t r = 0; r < n; ++r) mean += m.at(r, c);
    mean /= static_cast<double>(n);
    double ss = 0.0;
    for (std::size_t r = 0; r < n; ++r) ss += (m.at(r, c) - mean) * (m.at(r, c) - mean);
    const double sd = n > 1 ? std::sqrt(ss / static_cast<double>(n - 1)) : 0.0;
    for (std::size_t r = 0; r < n; ++r) out.at(r, c) = sd > 0.0 ? (m.at(r, c) - mean) / sd : 0.0;
  }
  return out;
}

Dendrogram ward_cluster(const FeatureMatrix& input, bool standardize) {
  const std::size_t n = input.rows();
  if (n < 2) throw std::invalid_argument("clustering needs at least 2 rows");
  const FeatureMatrix m = standardize ? standardize_columns(input) : input;

  std::vector<double> d2(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      double s = 0.0;
      for (std::size_t c = 0; c < m.cols(); ++c) {
        const double diff = m.at(i, c) - m.at(j, c);
        s += diff * diff;
      }
      d2[i * n + j] = d2[j * n + i] = s;
    }

  std::vector<std::size_t> id(n), size(n, 1), nn(n, 0);
  std::iota(id.begin(), id.end(), std::size_t{0});
  std::vector<bool> active(n, true);

  // Strict order on candidate pairs of slots: cost, then cluster ids.
  auto key = [&](std::size_t a, std::size_t b) {
    return std::pair{std::min(id[a], id[b]), std::max(id[a], id[b])};
  };
  auto better = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t e) {
    const double x = d2[a * n + b], y = d2[c * n + e];
    if (x != y) return x < y;
    return key(a, b) < key(c, e);
  };
  auto refresh = [&](std::size_t a) {
    std::size_t best = n;
    for (std::size_t b = 0; b < n; ++b)
      if (b != a && active[b] && (best == n || better(a, b, a, best))) best = b;
    nn[a] = best;
  };
  for (std::size_t a = 0; a < n; ++a) refresh(a);

  Dendrogram tree;
  tree.labels = input.row_labels;
  tree.merges.reserve(n - 1);
  for (std::size_t step = 0; step + 1 < n; ++step) {
    std::size_t a = n;
    for (std::size_t k = 0; k < n; ++k)
      if (active[k] && (a == n || better(k, nn[k], a, nn[a]))) a = k;
    std::size_t b = nn[a];
    if (id[b] < id[a]) std::swap(a, b);

    const double dab = d2[a * n + b];
    tree.merges.push_back({id[a], id[b], std::sqrt(dab), size[a] + size[b]});

    for (std::size_t k = 0; k < n; ++k) {
      if (!active[k] || k == a || k == b) continue;
      const double nk = static_cast<double>(size[k]);
      const double na = static_cast<double>(size[a]), nb = static_cast<double>(size[b]);
      const double v = ((na + nk) * d2[k * n + a] + (nb + nk) * d2[k * n + b] - nk * dab) /
                       (na + nb + nk);
      d2[k * n + a] = d2[a * n + k] = std::max(v, 0.0);
    }
    active[b] = false;
    size[a] += size[b];
    id[a] = n + step;

    for (std::size_t k = 0; k < n; ++k) {
      if (!active[k] || k == a) continue;
      if (nn[k] == a || nn[k] == b)
        refresh(k);
      else if (better(k, a, k, nn[k]))
        nn[k] = a;
    }
    refresh(a);
  }
  return tree;
}

std::vector<std::size_t> Dendrogram::leaf_order() const {
  const std::size_t n = leaves();
  std::vector<std::size_t> order;
  if (n == 0) return order;
  if (merges.empty()) return {0};
  std::vector<std::size_t> stack{n + merges.size() - 1};
  while (!stack.empty()) {
    std::size_t c = stack.back();
    stack.pop_back();
    if (c < n) {
      order.push_back(c);
    } else {
      const Merge& m = merges[c - n];
      stack.push_back(m.right);
      stack.push_back(m.left);
    }
  }
  return order;
}

std::vector<std::size_t> Dendrogram::cut(std::size_t k) const {
  const std::size_t n = leaves();
  if (k == 0 || k > n) throw std::invalid_argument("cluster count must be in [1, n]");
  // Union of the first n - k merges.
  std::vector<std::size_t> parent(n + merges.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t s = 0; s < n - k; ++s) {
    parent[root(merges[s].left)] = n + s;
    parent[root(merges[s].right)] = n + s;
  }
  std::vector<std::size_t> label(n), number(parent.size(), std::numeric_limits<std::size_t>::max());
  std::size_t next = 0;
  for (std::size_t leaf : leaf_order()) {
    std::size_t r = root(leaf);
    if (number[r] == std::numeric_limits<std::size_t>::max()) number[r] = next++;
    label[leaf] = number[r];
  }
  return label;
}

namespace {

std::string newick_label(const std::string& s) {
  if (s.find_first_of(" ():;,[]'\t") == std::string::npos) return s;
  std::string q = "'";
  for (char ch : s) {
    if (ch == '\'') q += '\'';
    q += ch;
  }
  return q + "'";
}

std::string number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

}  // namespace

std::string Dendrogram::newick() const {
  const std::size_t n = leaves();
  if (n == 0) return ";";
  auto height = [&](std::size_t c) { return c < n ? 0.0 : merges[c - n].height; };
  std::string out;
  auto emit = [&](auto&& self, std::size_t c) -> void {
    if (c < n) {
      out += newick_label(labels[c]);
      return;
    }
    const Merge& m = merges[c - n];
    out += '(';
    self(self, m.left);
    out += ':' + number(m.height - height(m.left)) + ',';
    self(self, m.right);
    out += ':' + number(m.height - height(m.right)) + ')';
  };
  emit(emit, merges.empty() ? 0 : n + merges.size() - 1);
  return out + ";";
}

}  // namespace digraphlet
