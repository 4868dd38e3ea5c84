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

#include "digraphlet/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "digraphlet/errors.hpp"

namespace digraphlet {
namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n\v\f";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_fields(std::string_view line, bool csv) {
  std::vector<std::string_view> out;
  if (csv) {
    std::size_t start = 0;
    while (true) {
      auto pos = line.find(',', start);
      out.push_back(trim(line.substr(start, pos == std::string_view::npos ? pos : pos - start)));
      if (pos == std::string_view::npos) break;
      start = pos + 1;
    }
  } else {
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) out.push_back(line.substr(i, j - i));
      i = j;
    }
  }
  return out;
}

std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return trim(hash == std::string_view::npos ? line : line.substr(0, hash));
}

bool parse_double(std::string_view s, double& out) {
  s = trim(s);
  if (s.empty()) return false;
  // from_chars rejects a leading '+'.
  if (s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read file: " + path.string());
  return in;
}

}  // namespace

LoadedGraph parse_edge_list(std::istream& in, EdgeListFormat format, const std::string& source) {
  LoadedGraph result;
  std::unordered_map<std::string, VertexId> ids;
  std::vector<std::string> labels;
  std::vector<Arc> arcs;
  auto intern = [&](std::string_view name) {
    auto [it, inserted] = ids.try_emplace(std::string(name), static_cast<VertexId>(labels.size()));
    if (inserted) labels.emplace_back(name);
    return it->second;
  };

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto line = strip_comment(raw);
    if (line.empty()) continue;
    bool csv = format == EdgeListFormat::Csv ||
               (format == EdgeListFormat::Auto && line.find(',') != std::string_view::npos);
    auto fields = split_fields(line, csv);
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty())
      throw InputError(source + ":" + std::to_string(line_no) +
                       ": expected exactly two vertex names, got '" + std::string(line) + "'");
    VertexId s = intern(fields[0]);
    VertexId d = intern(fields[1]);
    if (s == d) {
      result.warnings.push_back(source + ":" + std::to_string(line_no) + ": self-loop on '" +
                                std::string(fields[0]) + "' dropped");
    }
    arcs.emplace_back(s, d);
  }
  if (in.bad()) throw InputError("read error: " + source);
  if (labels.empty()) throw InputError("empty graph: " + source);
  const std::size_t n = labels.size();
  result.graph = DirectedGraph::from_arcs(n, arcs, std::move(labels));
  return result;
}

LoadedGraph load_edge_list(const std::filesystem::path& path, EdgeListFormat format) {
  auto in = open_or_throw(path);
  return parse_edge_list(in, format, path.string());
}

std::string serialize_edge_list(const DirectedGraph& g) {
  std::vector<std::string> lines;
  for (auto [s, d] : g.arcs()) lines.push_back(g.label(s) + ' ' + g.label(d));
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (g.total_degree(v) == 0) lines.push_back(g.label(v) + ' ' + g.label(v));
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& l : lines) {
    out += l;
    out += '\n';
  }
  return out;
}

WeightedMatrix parse_weighted_matrix(std::istream& in, const std::string& source) {
  std::vector<std::vector<std::string>> rows;
  std::string raw;
  while (std::getline(in, raw)) {
    auto line = strip_comment(raw);
    if (line.empty()) continue;
    std::vector<std::string> cells;
    for (auto f : split_fields(line, true)) cells.emplace_back(f);
    rows.push_back(std::move(cells));
  }
  if (rows.empty()) throw InputError("empty matrix: " + source);

  auto all_numeric = [](const std::vector<std::string>& cells, std::size_t from) {
    double tmp;
    for (std::size_t k = from; k < cells.size(); ++k)
      if (!parse_double(cells[k], tmp)) return false;
    return true;
  };

  std::vector<std::string> header;
  // A header row holds a non-numeric cell past the corner.
  if (!all_numeric(rows.front(), 1)) {
    header = rows.front();
    rows.erase(rows.begin());
  }
  if (rows.empty()) throw InputError("matrix has no numeric rows: " + source);

  double tmp;
  bool label_col = !parse_double(rows.front()[0], tmp);
  const std::size_t n = rows.size();
  WeightedMatrix m;
  m.n = n;
  m.values.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto& cells = rows[r];
    std::size_t first = label_col ? 1 : 0;
    if (cells.size() != n + first)
      throw InputError(source + ": row " + std::to_string(r + 1) + " has " +
                       std::to_string(cells.size() - first) + " values, expected " +
                       std::to_string(n) + " (matrix must be square)");
    for (std::size_t c = first; c < cells.size(); ++c) {
      double v;
      if (!parse_double(cells[c], v) || !std::isfinite(v))
        throw InputError(source + ": row " + std::to_string(r + 1) + ": bad value '" + cells[c] + "'");
      m.values.push_back(v);
    }
    m.labels.push_back(label_col ? cells[0] : std::string());
  }
  if (!label_col) {
    if (!header.empty()) {
      std::size_t skip = header.size() == n + 1 ? 1 : 0;
      if (header.size() != n + skip) throw InputError(source + ": header width does not match body");
      for (std::size_t c = 0; c < n; ++c) m.labels[c] = header[c + skip];
    } else {
      for (std::size_t c = 0; c < n; ++c) m.labels[c] = std::to_string(c);
    }
  }
  return m;
}

WeightedMatrix load_weighted_matrix(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return parse_weighted_matrix(in, path.string());
}

}  // namespace digraphlet
