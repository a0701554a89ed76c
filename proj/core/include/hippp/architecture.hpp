// Copyright 2026 The HiPPP Authors
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

#ifndef HIPPP_ARCHITECTURE_HPP_
#define HIPPP_ARCHITECTURE_HPP_

#include <optional>
#include <string_view>
#include <vector>

#include "hippp/supply.hpp"

namespace hippp {

enum class ArchitectureKind { kFPP, kCPPP, kLSHiPPP };

std::string_view to_string(ArchitectureKind kind);
// Accepts the canonical names and the hyphenated spellings ("C-PPP",
// "LS-HiPPP"), case-insensitively. Throws ParameterError otherwise.
ArchitectureKind parse_architecture_kind(std::string_view name);

// A bidirectional differential converter between two batteries of the
// string. Positive flow leaves `from_battery` and enters `to_battery`.
struct ConverterEdge {
  int from_battery = 0;
  int to_battery = 1;
  double rating = 0.0;  // max |flow|; +inf for an unrated design edge

  friend bool operator==(const ConverterEdge&, const ConverterEdge&) = default;
};

// Sparse heavy converters chosen on the expected set.
struct Layer1Design {
  std::vector<ConverterEdge> edges;
  int rating_partitions = 1;
  std::vector<double> processed_at_design;  // p*_i, same order as edges
};

// Dense lite converters between every pair of adjacent batteries, all with
// the same rating.
struct Layer2Design {
  double rating = 0.0;
  int count = 0;
};

struct Architecture {
  ArchitectureKind kind = ArchitectureKind::kCPPP;
  int battery_count = 0;
  // Sum of the design-time expected set; normalizes aggregate ratings.
  double intrinsic_power = 0.0;

  std::optional<Layer1Design> layer1;  // LS-HiPPP
  std::optional<Layer2Design> layer2;  // LS-HiPPP
  std::optional<double> cppp_rating;   // per ladder converter
  std::optional<double> fpp_rating;    // per battery converter

  // Throws StructuralError when fields do not match the kind or edges are
  // out of range, ParameterError on negative or non-finite ratings.
  void validate() const;

  // Battery-to-battery converters in solver order: Layer 1 then Layer 2 for
  // LS-HiPPP, the ladder for C-PPP, nothing for FPP.
  std::vector<ConverterEdge> converter_edges() const;
};

// Edges (j, j+1) for j = 0..count-2, all with the given rating.
std::vector<ConverterEdge> adjacent_ladder(int count, double rating);

// Sum of converter ratings over the intrinsic battery power.
double aggregate_rating(const Architecture& arch);

// Baselines at a given normalized rating budget; the budget is split evenly
// across their identical converters.
Architecture cppp_from_budget(double budget, const ExpectedSet& expected);
Architecture fpp_from_budget(double budget, const ExpectedSet& expected);

Architecture make_lshippp(Layer1Design layer1, double layer2_rating,
                          const ExpectedSet& expected);

}  // namespace hippp

#endif  // HIPPP_ARCHITECTURE_HPP_
