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

#include "digraphlet/errors.hpp"
#include "digraphlet/graph.hpp"
#include "digraphlet/io.hpp"

namespace digraphlet {

// Which degree the minimum-degree criterion looks at. A reciprocal edge
// counts once in every variant.
enum class DegreeCriterion {
  Total,  // |S+| + |S-| + |So|
  Out,    // |S+| + |So|
  In,     // |S-| + |So|
};

struct PruneOptions {
  double connected_fraction = 0.99;  // share of vertices in the largest weak component
  double degree_factor = 2.0;        // every vertex needs degree >= factor * ln(n)
  DegreeCriterion degree = DegreeCriterion::Total;
  bool use_magnitude = true;  // threshold |w|; otherwise only w > t survives
};

struct PruneResult {
  DirectedGraph graph;
  double threshold = 0.0;
};

class UnprunableError : public InputError {
 public:
  using InputError::InputError;
};

// Keeps arc i -> j when |w_ij| > t (or w_ij > t); diagonal ignored.
DirectedGraph threshold_graph(const WeightedMatrix& w, double t, bool use_magnitude = true);

std::size_t largest_weak_component(const DirectedGraph& g);

bool meets_pruning_criteria(const DirectedGraph& g, const PruneOptions& opts = {});

// Largest threshold whose thresholded graph still meets both criteria. The
// criteria are monotone in t, so a binary search over the sorted distinct
// weights finds the last valid weight v_k; the reported threshold is the
// largest double below the next weight v_{k+1}, which yields the same graph.
// Throws UnprunableError if t = 0 already fails.
PruneResult prune_weighted(const WeightedMatrix& w, const PruneOptions& opts = {});

}  // namespace digraphlet
