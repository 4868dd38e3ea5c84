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
#include <string>
#include <vector>

#include "digraphlet/matrix.hpp"

namespace digraphlet {

// Merge k creates cluster id `leaves + k`; leaves are 0..leaves-1.
struct Merge {
  std::size_t left;   // smaller cluster id
  std::size_t right;  // larger cluster id
  double height;
  std::size_t size;
};

struct Dendrogram {
  std::vector<std::string> labels;
  std::vector<Merge> merges;

  std::size_t leaves() const { return labels.size(); }
  // Leaves visited left-first from the root.
  std::vector<std::size_t> leaf_order() const;
  // Flat clustering with k clusters (undo the last k-1 merges). Clusters are
  // numbered 0..k-1 by first appearance in leaf_order().
  std::vector<std::size_t> cut(std::size_t k) const;
  // "(a:0.5,b:0.5):0;" style text; branch length = parent height - child height.
  std::string newick() const;
};

// Column z-scores (sample standard deviation); constant columns become 0.
FeatureMatrix standardize_columns(const FeatureMatrix& m);

// Agglomerative clustering of rows with Ward linkage, "ward.D2" variant:
// squared Euclidean dissimilarities are updated with the Lance-Williams rule
//   d2(k, i+j) = ((n_i + n_k) d2(k,i) + (n_j + n_k) d2(k,j) - n_k d2(i,j))
//                / (n_i + n_j + n_k)
// and a merge is reported at height sqrt(d2(i,j)); two singletons therefore
// merge at their Euclidean distance. Among pairs of equal cost the one with
// the lexicographically smallest (id, id) is merged first.
// Needs at least 2 rows; O(n^2) memory.
Dendrogram ward_cluster(const FeatureMatrix& m, bool standardize = true);

}  // namespace digraphlet
