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

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "digraphlet/census.hpp"
#include "digraphlet/matrix.hpp"

namespace digraphlet {

inline constexpr std::size_t kSignatureSize = 16;

// Column order of every signature-derived matrix.
enum class SignatureClass : std::uint8_t {
  DegreeOut,
  DegreeIn,
  DegreeRecip,
  WedgePath,
  WedgeIn,
  WedgeOut,
  WedgeInPlus,
  WedgeOutPlus,
  WedgeRecip,
  TriangleAcyclic,
  TriangleCycles,
  TriangleOutPlus,
  TriangleCyclesPlus,
  TriangleInPlus,
  TriangleCyclesPlusPlus,
  TriangleRecip,
};

inline constexpr std::array<std::string_view, kSignatureSize> kSignatureNames = {
    "d_out",     "d_in",     "d_rec",   "W_path",   "W_in",     "W_out",
    "W_in+",     "W_out+",   "W_rec",   "T_acyclic", "T_cycles", "T_out+",
    "T_cycles+", "T_in+",    "T_cycles++", "T_rec"};

inline constexpr std::size_t kDegreeBlock = 0, kWedgeBlock = 3, kTriangleBlock = 9;

namespace detail {
using C = SignatureClass;
}

// Class of each ordered wedge type, indexed by wedge_index(a, b).
inline constexpr std::array<SignatureClass, kWedgeTypes> kWedgeClass = {
    detail::C::WedgeIn,     detail::C::WedgePath,    detail::C::WedgeInPlus,   // (+,+) (+,-) (+,o)
    detail::C::WedgePath,   detail::C::WedgeOut,     detail::C::WedgeOutPlus,  // (-,+) (-,-) (-,o)
    detail::C::WedgeInPlus, detail::C::WedgeOutPlus, detail::C::WedgeRecip,    // (o,+) (o,-) (o,o)
};

// Class of each ordered triangle type, indexed by triangle_index(a, b, c).
inline constexpr std::array<SignatureClass, kTriangleTypes> kTriangleClass = {
    // a = +
    detail::C::TriangleAcyclic, detail::C::TriangleAcyclic, detail::C::TriangleInPlus,
    detail::C::TriangleAcyclic, detail::C::TriangleCycles, detail::C::TriangleCyclesPlus,
    detail::C::TriangleOutPlus, detail::C::TriangleCyclesPlus, detail::C::TriangleCyclesPlusPlus,
    // a = -
    detail::C::TriangleCycles, detail::C::TriangleAcyclic, detail::C::TriangleCyclesPlus,
    detail::C::TriangleAcyclic, detail::C::TriangleAcyclic, detail::C::TriangleOutPlus,
    detail::C::TriangleCyclesPlus, detail::C::TriangleInPlus, detail::C::TriangleCyclesPlusPlus,
    // a = o
    detail::C::TriangleCyclesPlus, detail::C::TriangleOutPlus, detail::C::TriangleCyclesPlusPlus,
    detail::C::TriangleInPlus, detail::C::TriangleCyclesPlus, detail::C::TriangleCyclesPlusPlus,
    detail::C::TriangleCyclesPlusPlus, detail::C::TriangleCyclesPlusPlus, detail::C::TriangleRecip,
};

namespace detail {
template <std::size_t N>
constexpr std::size_t class_members(const std::array<SignatureClass, N>& table, SignatureClass c) {
  std::size_t n = 0;
  for (auto x : table) n += x == c;
  return n;
}
}  // namespace detail

static_assert(detail::class_members(kWedgeClass, SignatureClass::WedgePath) == 2);
static_assert(detail::class_members(kWedgeClass, SignatureClass::WedgeIn) == 1);
static_assert(detail::class_members(kWedgeClass, SignatureClass::WedgeOut) == 1);
static_assert(detail::class_members(kWedgeClass, SignatureClass::WedgeInPlus) == 2);
static_assert(detail::class_members(kWedgeClass, SignatureClass::WedgeOutPlus) == 2);
static_assert(detail::class_members(kWedgeClass, SignatureClass::WedgeRecip) == 1);
static_assert(detail::class_members(kTriangleClass, SignatureClass::TriangleAcyclic) == 6);
static_assert(detail::class_members(kTriangleClass, SignatureClass::TriangleCycles) == 2);
static_assert(detail::class_members(kTriangleClass, SignatureClass::TriangleOutPlus) == 3);
static_assert(detail::class_members(kTriangleClass, SignatureClass::TriangleCyclesPlus) == 6);
static_assert(detail::class_members(kTriangleClass, SignatureClass::TriangleInPlus) == 3);
static_assert(detail::class_members(kTriangleClass, SignatureClass::TriangleCyclesPlusPlus) == 6);
static_assert(detail::class_members(kTriangleClass, SignatureClass::TriangleRecip) == 1);

using Signature = std::array<std::int64_t, kSignatureSize>;

struct SignatureMatrix {
  std::vector<std::string> labels;
  std::vector<Signature> rows;

  FeatureMatrix features() const;
};

Signature aggregate(const VertexCensus& c);
// Labels default to "0".."n-1".
SignatureMatrix aggregate(const RawCensus& census, std::vector<std::string> labels = {});

// Each block (degrees, wedges, triangles) divided by its sum. A block that
// sums to zero stays all-zero and is flagged in zero_block.
struct NormalizedSignatures {
  std::vector<std::string> labels;
  std::vector<std::array<double, kSignatureSize>> rows;
  std::vector<std::array<bool, 3>> zero_block;

  FeatureMatrix features() const;
};

NormalizedSignatures normalize(const SignatureMatrix& sig);

// Share of each class among the 9 wedge / 27 triangle types. This is what a
// uniformly random orientation of every edge gives in expectation for the
// normalized signature: (1/3 x3, class sizes / 9, class sizes / 27).
std::array<double, kSignatureSize> uniform_orientation_expectation();

std::vector<std::string> signature_column_names();

}  // namespace digraphlet
