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

#include <string>
#include <string_view>

#include "digraphlet/correlation.hpp"

namespace digraphlet {

// Heat-map colors. Significant cells blend from white toward the base color
// in proportion to |r| (or percentage / 100 for cohort maps).
inline constexpr std::string_view kPositiveColor = "#b2182b";
inline constexpr std::string_view kNegativeColor = "#2166ac";
inline constexpr std::string_view kNeutralColor = "#d9d9d9";
inline constexpr std::string_view kFlaggedColor = "#fde725";
inline constexpr std::string_view kDiagonalColor = "#ffffff";

// Color of white blended toward `base` by t in [0, 1], as "#rrggbb".
std::string blend_from_white(std::string_view base, double t);

// Cells with r > theta in red, r < -theta in blue, constant-column cells in
// yellow, everything else grey.
std::string render_correlation_svg(const CorrelationMatrix& m, double theta);

// Two panels: percentage of subjects with significant positive (left) and
// negative (right) correlation; zero-percent cells are grey.
std::string render_cohort_svg(const CohortStats& s);

}  // namespace digraphlet
