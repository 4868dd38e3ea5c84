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

#include "digraphlet/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>

namespace digraphlet {
namespace {

constexpr int kCell = 28;
constexpr int kMargin = 96;

int hex_byte(std::string_view s) { return std::stoi(std::string(s), nullptr, 16); }

std::string escape(std::string_view s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

// One labelled dim x dim grid at (x0, y0); `cell` returns fill and tooltip.
void draw_grid(std::string& out, const std::vector<std::string>& names, int x0, int y0,
               const std::function<std::pair<std::string, std::string>(std::size_t, std::size_t)>& cell) {
  const std::size_t d = names.size();
  for (std::size_t i = 0; i < d; ++i) {
    const int y = y0 + static_cast<int>(i) * kCell;
    out += "<text x=\"" + std::to_string(x0 - 4) + "\" y=\"" + std::to_string(y + kCell / 2 + 4) +
           "\" text-anchor=\"end\">" + escape(names[i]) + "</text>\n";
    const int x = x0 + static_cast<int>(i) * kCell + kCell / 2;
    out += "<text x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y0 - 4) +
           "\" transform=\"rotate(-60 " + std::to_string(x) + " " + std::to_string(y0 - 4) +
           ")\">" + escape(names[i]) + "</text>\n";
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      auto [fill, title] = cell(i, j);
      out += "<rect x=\"" + std::to_string(x0 + static_cast<int>(j) * kCell) + "\" y=\"" +
             std::to_string(y0 + static_cast<int>(i) * kCell) + "\" width=\"" +
             std::to_string(kCell) + "\" height=\"" + std::to_string(kCell) + "\" fill=\"" + fill +
             "\" stroke=\"#ffffff\"><title>" + escape(title) + "</title></rect>\n";
    }
}

std::string header(int width, int height) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
         "\" height=\"" + std::to_string(height) + "\" font-family=\"sans-serif\" font-size=\"10\">\n";
}

}  // namespace

std::string blend_from_white(std::string_view base, double t) {
  if (base.size() != 7 || base[0] != '#') throw std::invalid_argument("expected #rrggbb");
  t = std::clamp(t, 0.0, 1.0);
  char buf[8];
  int rgb[3];
  for (int k = 0; k < 3; ++k) {
    const int c = hex_byte(base.substr(1 + 2 * k, 2));
    rgb[k] = static_cast<int>(std::lround(255.0 + t * (c - 255.0)));
  }
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", rgb[0], rgb[1], rgb[2]);
  return buf;
}

std::string render_correlation_svg(const CorrelationMatrix& m, double theta) {
  const int side = kMargin + static_cast<int>(m.dim()) * kCell + 8;
  std::string out = header(side, side);
  draw_grid(out, m.names, kMargin, kMargin, [&](std::size_t i, std::size_t j) {
    const double r = m.at(i, j);
    std::string title = m.names[i] + " / " + m.names[j] + ": " + fmt("%.3f", r);
    if (i == j) return std::pair{std::string(kDiagonalColor), title};
    if (m.flagged(i, j)) return std::pair{std::string(kFlaggedColor), title + " (constant column)"};
    if (r > theta) return std::pair{blend_from_white(kPositiveColor, std::abs(r)), title};
    if (r < -theta) return std::pair{blend_from_white(kNegativeColor, std::abs(r)), title};
    return std::pair{std::string(kNeutralColor), title};
  });
  return out + "</svg>\n";
}

std::string render_cohort_svg(const CohortStats& s) {
  const int grid = static_cast<int>(s.dim()) * kCell;
  const int panel = kMargin + grid + 16;
  std::string out = header(2 * panel, kMargin + grid + 28);
  auto pct_cell = [&](const std::vector<double>& pct, std::string_view base, std::size_t i, std::size_t j) {
    const double p = pct[i * s.dim() + j];
    std::string title = s.names[i] + " / " + s.names[j] + ": " + fmt("%.1f%%", p);
    if (p <= 0.0) return std::pair{std::string(kNeutralColor), title};
    return std::pair{blend_from_white(base, p / 100.0), title};
  };
  draw_grid(out, s.names, kMargin, kMargin,
            [&](std::size_t i, std::size_t j) { return pct_cell(s.pos_pct, kPositiveColor, i, j); });
  draw_grid(out, s.names, panel + kMargin, kMargin,
            [&](std::size_t i, std::size_t j) { return pct_cell(s.neg_pct, kNegativeColor, i, j); });
  const int caption_y = kMargin + grid + 20;
  out += "<text x=\"" + std::to_string(kMargin) + "\" y=\"" + std::to_string(caption_y) +
         "\">r &gt; " + fmt("%g", s.theta) + " (" + std::to_string(s.subjects) + " subjects)</text>\n";
  out += "<text x=\"" + std::to_string(panel + kMargin) + "\" y=\"" + std::to_string(caption_y) +
         "\">r &lt; -" + fmt("%g", s.theta) + "</text>\n";
  return out + "</svg>\n";
}

}  // namespace digraphlet
