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

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "digraphlet/census.hpp"
#include "digraphlet/cluster.hpp"
#include "digraphlet/correlation.hpp"
#include "digraphlet/matrix.hpp"
#include "digraphlet/signature.hpp"

namespace digraphlet {

// Real numbers are written with 9 significant digits ("%.9g").
std::string format_number(double x);

// CSV quoting for labels that contain commas, quotes or newlines.
std::string csv_field(const std::string& s);

// Header "vertex,<16 class names>", one row per vertex, label first.
void write_signature_csv(std::ostream& out, const SignatureMatrix& sig);
void write_normalized_csv(std::ostream& out, const NormalizedSignatures& sig);
// Header "vertex,<39 raw quantity names>".
void write_raw_census_csv(std::ostream& out, const RawCensus& census,
                          const std::vector<std::string>& labels);
// Square matrix with a header row and a name column.
void write_square_csv(std::ostream& out, const std::vector<std::string>& names,
                      const std::vector<double>& values);
void write_mask_csv(std::ostream& out, const SignificanceMask& mask);

// Reads a labelled table such as write_signature_csv produces: header row,
// row label in column 0, numeric body. Throws InputError.
FeatureMatrix parse_feature_csv(std::istream& in, const std::string& source = "<stream>");

nlohmann::ordered_json signature_json(const SignatureMatrix& sig);
nlohmann::ordered_json normalized_json(const NormalizedSignatures& sig);
nlohmann::ordered_json raw_census_json(const RawCensus& census, const std::vector<std::string>& labels);
nlohmann::ordered_json correlation_json(const CorrelationMatrix& m, const SignificanceMask& mask);
nlohmann::ordered_json cohort_json(const CohortStats& s, const std::vector<std::string>& subjects);
nlohmann::ordered_json dendrogram_json(const Dendrogram& d);

}  // namespace digraphlet
