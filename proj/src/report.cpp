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

#include "digraphlet/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "digraphlet/errors.hpp"

namespace digraphlet {

std::string format_number(double x) {
  if (x == 0.0) return "0";  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

namespace {

void write_header(std::ostream& out, const std::string& corner, const std::vector<std::string>& names) {
  out << corner;
  for (const auto& n : names) out << ',' << csv_field(n);
  out << '\n';
}

// Splits one CSV record, honoring double-quoted fields.
std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cells.back() += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        cells.back() += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      cells.emplace_back();
    } else if (ch != '\r') {
      cells.back() += ch;
    }
  }
  return cells;
}

}  // namespace

void write_signature_csv(std::ostream& out, const SignatureMatrix& sig) {
  write_header(out, "vertex", signature_column_names());
  for (std::size_t r = 0; r < sig.rows.size(); ++r) {
    out << csv_field(sig.labels[r]);
    for (auto x : sig.rows[r]) out << ',' << x;
    out << '\n';
  }
}

void write_normalized_csv(std::ostream& out, const NormalizedSignatures& sig) {
  write_header(out, "vertex", signature_column_names());
  for (std::size_t r = 0; r < sig.rows.size(); ++r) {
    out << csv_field(sig.labels[r]);
    for (auto x : sig.rows[r]) out << ',' << format_number(x);
    out << '\n';
  }
}

void write_raw_census_csv(std::ostream& out, const RawCensus& census,
                          const std::vector<std::string>& labels) {
  write_header(out, "vertex", raw_quantity_names());
  for (std::size_t r = 0; r < census.size(); ++r) {
    out << csv_field(labels[r]);
    for (auto x : census[r].quantities()) out << ',' << x;
    out << '\n';
  }
}

void write_square_csv(std::ostream& out, const std::vector<std::string>& names,
                      const std::vector<double>& values) {
  write_header(out, "", names);
  const std::size_t d = names.size();
  for (std::size_t i = 0; i < d; ++i) {
    out << csv_field(names[i]);
    for (std::size_t j = 0; j < d; ++j) out << ',' << format_number(values[i * d + j]);
    out << '\n';
  }
}

void write_mask_csv(std::ostream& out, const SignificanceMask& mask) {
  write_header(out, "", mask.names);
  for (std::size_t i = 0; i < mask.dim(); ++i) {
    out << csv_field(mask.names[i]);
    for (std::size_t j = 0; j < mask.dim(); ++j) out << ',' << mask.at(i, j);
    out << '\n';
  }
}

FeatureMatrix parse_feature_csv(std::istream& in, const std::string& source) {
  FeatureMatrix m;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    auto cells = split_csv(line);
    if (!have_header) {
      if (cells.size() < 2) throw InputError(source + ": header needs a label column and data columns");
      m.column_names.assign(cells.begin() + 1, cells.end());
      have_header = true;
      continue;
    }
    if (cells.size() != m.cols() + 1)
      throw InputError(source + ":" + std::to_string(line_no) + ": expected " +
                       std::to_string(m.cols() + 1) + " fields, got " + std::to_string(cells.size()));
    m.row_labels.push_back(cells[0]);
    for (std::size_t c = 1; c < cells.size(); ++c) {
      std::string_view s = cells[c];
      while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
      while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v))
        throw InputError(source + ":" + std::to_string(line_no) + ": bad number '" + cells[c] + "'");
      m.values.push_back(v);
    }
  }
  if (!have_header) throw InputError("empty table: " + source);
  return m;
}

nlohmann::ordered_json signature_json(const SignatureMatrix& sig) {
  nlohmann::ordered_json j;
  j["columns"] = signature_column_names();
  auto& rows = j["vertices"] = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < sig.rows.size(); ++r)
    rows.push_back({{"label", sig.labels[r]}, {"signature", sig.rows[r]}});
  return j;
}

nlohmann::ordered_json normalized_json(const NormalizedSignatures& sig) {
  nlohmann::ordered_json j;
  j["columns"] = signature_column_names();
  auto& rows = j["vertices"] = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < sig.rows.size(); ++r)
    rows.push_back({{"label", sig.labels[r]},
                    {"signature", sig.rows[r]},
                    {"zero_blocks", sig.zero_block[r]}});
  return j;
}

nlohmann::ordered_json raw_census_json(const RawCensus& census, const std::vector<std::string>& labels) {
  nlohmann::ordered_json j;
  j["columns"] = raw_quantity_names();
  auto& rows = j["vertices"] = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < census.size(); ++r)
    rows.push_back({{"label", labels[r]}, {"counts", census[r].quantities()}});
  return j;
}

nlohmann::ordered_json correlation_json(const CorrelationMatrix& m, const SignificanceMask& mask) {
  nlohmann::ordered_json j;
  j["columns"] = m.names;
  auto& rows = j["matrix"] = nlohmann::ordered_json::array();
  auto& signs = j["mask"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    std::vector<double> row(m.r.begin() + static_cast<std::ptrdiff_t>(i * m.dim()),
                            m.r.begin() + static_cast<std::ptrdiff_t>((i + 1) * m.dim()));
    rows.push_back(row);
    std::vector<int> srow;
    for (std::size_t k = 0; k < m.dim(); ++k) srow.push_back(mask.at(i, k));
    signs.push_back(srow);
  }
  std::vector<std::string> constant;
  for (std::size_t c = 0; c < m.dim(); ++c)
    if (m.constant_column[c]) constant.push_back(m.names[c]);
  j["constant_columns"] = constant;
  return j;
}

nlohmann::ordered_json cohort_json(const CohortStats& s, const std::vector<std::string>& subjects) {
  nlohmann::ordered_json j;
  j["columns"] = s.names;
  j["theta"] = s.theta;
  j["subjects"] = subjects;
  auto rows = [&](const std::vector<double>& v) {
    auto a = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < s.dim(); ++i)
      a.push_back(std::vector<double>(v.begin() + static_cast<std::ptrdiff_t>(i * s.dim()),
                                      v.begin() + static_cast<std::ptrdiff_t>((i + 1) * s.dim())));
    return a;
  };
  j["positive_percent"] = rows(s.pos_pct);
  j["negative_percent"] = rows(s.neg_pct);
  return j;
}

nlohmann::ordered_json dendrogram_json(const Dendrogram& d) {
  nlohmann::ordered_json j;
  j["labels"] = d.labels;
  auto& merges = j["merges"] = nlohmann::ordered_json::array();
  for (const Merge& m : d.merges)
    merges.push_back({{"left", m.left}, {"right", m.right}, {"height", m.height}, {"size", m.size}});
  j["leaf_order"] = d.leaf_order();
  j["newick"] = d.newick();
  return j;
}

}  // namespace digraphlet
