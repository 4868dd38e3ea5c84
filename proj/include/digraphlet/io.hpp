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

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "digraphlet/graph.hpp"

namespace digraphlet {

enum class EdgeListFormat {
  Whitespace,  // "src dst"
  Csv,         // "src,dst"
  Auto,        // per line: comma-separated if the line holds a comma
};

struct LoadedGraph {
  DirectedGraph graph;
  std::vector<std::string> warnings;
};

// One "src dst" pair per line; '#' starts a comment, blank lines are skipped.
// Vertices are indexed in order of first appearance. Throws InputError on a
// malformed line (with its line number) or when no vertex is found.
LoadedGraph parse_edge_list(std::istream& in, EdgeListFormat format = EdgeListFormat::Auto,
                            const std::string& source = "<stream>");
LoadedGraph load_edge_list(const std::filesystem::path& path,
                           EdgeListFormat format = EdgeListFormat::Auto);

// Canonical text form: one "src dst" line per arc (a reciprocal edge gives
// two lines), lines sorted bytewise. An isolated vertex is written as a
// self-loop line "v v" so that it survives a reload.
std::string serialize_edge_list(const DirectedGraph& g);

// Square connectivity matrix; entry (i, j) weighs the arc i -> j.
struct WeightedMatrix {
  std::size_t n = 0;
  std::vector<double> values;  // row-major n * n
  std::vector<std::string> labels;

  double at(std::size_t i, std::size_t j) const { return values[i * n + j]; }
};

// CSV with an optional header row and optional label column around a square
// numeric body. Diagonal entries are kept as read; thresholding ignores them.
WeightedMatrix parse_weighted_matrix(std::istream& in, const std::string& source = "<stream>");
WeightedMatrix load_weighted_matrix(const std::filesystem::path& path);

}  // namespace digraphlet
