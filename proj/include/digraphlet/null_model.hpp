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

#include <cstdint>
#include <random>

#include "digraphlet/graph.hpp"

namespace digraphlet {

// mt19937_64 with platform-independent draws: the standard distributions are
// implementation-defined, so bounded integers and unit reals are derived
// here directly from the engine's output.
class DeterministicRng {
 public:
  explicit DeterministicRng(std::uint64_t seed) : engine_(seed) {}

  // Uniform integer in [0, bound), by rejection.
  std::uint64_t below(std::uint64_t bound);
  // Uniform real in [0, 1) with 53 random bits.
  double unit();

 private:
  std::mt19937_64 engine_;
};

// Resamples every connected pair {i, j} (visited with i < j ascending) to one
// of i->j, j->i, i<->j with probability 1/3 each. The undirected skeleton is
// unchanged; the result depends only on (g, seed).
DirectedGraph randomize_directions(const DirectedGraph& g, std::uint64_t seed);

// G(n, p) undirected skeleton with each edge made out/in/reciprocal uniformly.
DirectedGraph random_digraph(std::size_t n, double p, std::uint64_t seed);

// As above, but each edge is reciprocal with probability `reciprocal_fraction`
// and otherwise oriented either way with probability 1/2.
DirectedGraph random_digraph(std::size_t n, double p, double reciprocal_fraction,
                             std::uint64_t seed);

}  // namespace digraphlet
