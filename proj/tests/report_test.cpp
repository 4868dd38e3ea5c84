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

#include <sstream>

#include <gtest/gtest.h>

#include "digraphlet/errors.hpp"
#include "digraphlet/svg.hpp"
#include "support.hpp"

namespace digraphlet {
namespace {

TEST(ReportTest, NineSignificantDigits) {
  EXPECT_EQ(format_number(1.0 / 3.0), "0.333333333");
  EXPECT_EQ(format_number(-0.0), "0");
  EXPECT_EQ(format_number(123456789012.0), "1.23456789e+11");
  EXPECT_EQ(format_number(100.0), "100");
}

TEST(ReportTest, SignatureCsvGolden) {
  auto g = testing::make_graph(3, {{0, 1}, {1, 2}, {2, 0}});
  std::ostringstream out;
  write_signature_csv(out, aggregate(raw_census(g), g.labels()));
  EXPECT_EQ(out.str(),
            "vertex,d_out,d_in,d_rec,W_path,W_in,W_out,W_in+,W_out+,W_rec,T_acyclic,T_cycles,"
            "T_out+,T_cycles+,T_in+,T_cycles++,T_rec\n"
            "0,1,1,0,0,0,0,0,0,0,0,2,0,0,0,0,0\n"
            "1,1,1,0,0,0,0,0,0,0,0,2,0,0,0,0,0\n"
            "2,1,1,0,0,0,0,0,0,0,0,2,0,0,0,0,0\n");
}

TEST(ReportTest, SignatureCsvReadsBackAsFeatures) {
  auto g = random_digraph(25, 0.3, 5);
  auto sig = aggregate(raw_census(g), g.labels());
  std::ostringstream out;
  write_signature_csv(out, sig);
  std::istringstream in(out.str());
  auto f = parse_feature_csv(in);
  auto expected = sig.features();
  EXPECT_EQ(f.row_labels, expected.row_labels);
  EXPECT_EQ(f.column_names, expected.column_names);
  EXPECT_EQ(f.values, expected.values);
}

TEST(ReportTest, QuotedLabels) {
  EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_field("say \"x\""), "\"say \"\"x\"\"\"");
  std::istringstream in("vertex,a\n\"x,y\",1.5\n");
  auto f = parse_feature_csv(in);
  EXPECT_EQ(f.row_labels[0], "x,y");
  EXPECT_EQ(f.at(0, 0), 1.5);
}

TEST(ReportTest, FeatureCsvErrors) {
  std::istringstream empty("");
  EXPECT_THROW(parse_feature_csv(empty), InputError);
  std::istringstream ragged("vertex,a,b\nx,1\n");
  EXPECT_THROW(parse_feature_csv(ragged), InputError);
  std::istringstream bad("vertex,a\nx,abc\n");
  EXPECT_THROW(parse_feature_csv(bad), InputError);
}

TEST(ReportTest, SquareCsv) {
  std::ostringstream out;
  write_square_csv(out, {"a", "b"}, {1.0, 0.5, 0.5, 1.0});
  EXPECT_EQ(out.str(), ",a,b\na,1,0.5\nb,0.5,1\n");
}

TEST(ReportTest, JsonShapes) {
  auto g = testing::make_graph(3, {{0, 1}, {1, 2}, {2, 0}});
  auto j = signature_json(aggregate(raw_census(g), g.labels()));
  EXPECT_EQ(j["columns"].size(), 16u);
  EXPECT_EQ(j["vertices"][0]["signature"][10], 2);
  auto raw = raw_census_json(raw_census(g), g.labels());
  EXPECT_EQ(raw["columns"].size(), 39u);
}

FeatureMatrix with_duplicate_and_constant() {
  FeatureMatrix f;
  f.column_names = {"x", "x_copy", "flat", "noise"};
  for (int r = 0; r < 6; ++r) {
    f.row_labels.push_back(std::to_string(r));
    f.values.insert(f.values.end(), {double(r), double(r), 4.0, double((r * 7) % 5)});
  }
  return f;
}

TEST(SvgTest, BlendFromWhite) {
  EXPECT_EQ(blend_from_white("#b2182b", 0.0), "#ffffff");
  EXPECT_EQ(blend_from_white("#b2182b", 1.0), "#b2182b");
  EXPECT_EQ(blend_from_white("#000000", 0.5), "#808080");
}

TEST(SvgTest, CorrelationHeatmapColorsSignificantAndFlaggedCells) {
  auto m = correlation_matrix(with_duplicate_and_constant());
  const std::string svg = render_correlation_svg(m, 0.7);
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  // x vs x_copy is +1: full positive color.
  EXPECT_NE(svg.find(std::string("fill=\"") + std::string(kPositiveColor) + "\""), std::string::npos);
  EXPECT_NE(svg.find(std::string(kFlaggedColor)), std::string::npos);
  EXPECT_NE(svg.find("constant column"), std::string::npos);
  EXPECT_NE(svg.find(std::string(kNeutralColor)), std::string::npos);
  EXPECT_EQ(svg, render_correlation_svg(m, 0.7));
}

TEST(SvgTest, CohortHeatmap) {
  auto m = correlation_matrix(with_duplicate_and_constant());
  std::vector<CorrelationMatrix> subjects(3, m);
  const std::string svg = render_cohort_svg(cohort_stats(subjects, 0.7));
  EXPECT_NE(svg.find("3 subjects"), std::string::npos);
  EXPECT_NE(svg.find("100.0%"), std::string::npos);
}

}  // namespace
}  // namespace digraphlet
