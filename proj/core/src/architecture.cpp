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

#include "hippp/architecture.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include <fmt/format.h>

#include "hippp/errors.hpp"

namespace hippp {

namespace {

void check_edge(const ConverterEdge& edge, int count) {
  if (edge.from_battery < 0 || edge.from_battery >= count || edge.to_battery < 0 ||
      edge.to_battery >= count || edge.from_battery == edge.to_battery) {
    throw StructuralError(fmt::format("converter edge ({}, {}) invalid for {} batteries",
                                      edge.from_battery, edge.to_battery, count));
  }
  if (!(edge.rating >= 0.0) || !std::isfinite(edge.rating)) {
    throw ParameterError(fmt::format("converter rating {} must be finite and >= 0",
                                     edge.rating));
  }
}

void check_rating(double rating, std::string_view what) {
  if (!(rating >= 0.0) || !std::isfinite(rating)) {
    throw ParameterError(fmt::format("{} rating {} must be finite and >= 0", what, rating));
  }
}

void check_budget(double budget) {
  if (!(budget >= 0.0) || !std::isfinite(budget)) {
    throw ParameterError(fmt::format("rating budget {} must be finite and >= 0", budget));
  }
}

}  // namespace

std::string_view to_string(ArchitectureKind kind) {
  switch (kind) {
    case ArchitectureKind::kFPP:
      return "FPP";
    case ArchitectureKind::kCPPP:
      return "CPPP";
    case ArchitectureKind::kLSHiPPP:
      return "LSHiPPP";
  }
  return "unknown";
}

ArchitectureKind parse_architecture_kind(std::string_view name) {
  std::string key;
  for (char c : name) {
    if (c == '-' || c == '_' || std::isspace(static_cast<unsigned char>(c))) continue;
    key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (key == "fpp") return ArchitectureKind::kFPP;
  if (key == "cppp") return ArchitectureKind::kCPPP;
  if (key == "lshippp") return ArchitectureKind::kLSHiPPP;
  throw ParameterError(fmt::format("unknown architecture kind '{}'", name));
}

void Architecture::validate() const {
  if (battery_count < 1) {
    throw StructuralError(fmt::format("battery count {} must be >= 1", battery_count));
  }
  if (!(intrinsic_power > 0.0) || !std::isfinite(intrinsic_power)) {
    throw StructuralError(
        fmt::format("intrinsic battery power {} must be positive", intrinsic_power));
  }
  const bool has_ls = layer1.has_value() || layer2.has_value();
  switch (kind) {
    case ArchitectureKind::kLSHiPPP: {
      if (!layer1 || !layer2 || cppp_rating || fpp_rating) {
        throw StructuralError("LS-HiPPP needs exactly a Layer 1 and a Layer 2 design");
      }
      if (static_cast<int>(layer1->edges.size()) > std::max(0, battery_count - 1)) {
        throw StructuralError(fmt::format("{} Layer 1 converters exceed N-1 = {}",
                                          layer1->edges.size(), battery_count - 1));
      }
      for (const auto& edge : layer1->edges) check_edge(edge, battery_count);
      if (layer2->count != battery_count - 1) {
        throw StructuralError(fmt::format("Layer 2 has {} converters, expected {}",
                                          layer2->count, battery_count - 1));
      }
      check_rating(layer2->rating, "Layer 2");
      break;
    }
    case ArchitectureKind::kCPPP:
      if (!cppp_rating || has_ls || fpp_rating) {
        throw StructuralError("C-PPP needs exactly a ladder rating");
      }
      check_rating(*cppp_rating, "C-PPP");
      break;
    case ArchitectureKind::kFPP:
      if (!fpp_rating || has_ls || cppp_rating) {
        throw StructuralError("FPP needs exactly a per-battery rating");
      }
      check_rating(*fpp_rating, "FPP");
      break;
  }
}

std::vector<ConverterEdge> Architecture::converter_edges() const {
  switch (kind) {
    case ArchitectureKind::kLSHiPPP: {
      std::vector<ConverterEdge> edges = layer1->edges;
      const auto ladder = adjacent_ladder(battery_count, layer2->rating);
      edges.insert(edges.end(), ladder.begin(), ladder.end());
      return edges;
    }
    case ArchitectureKind::kCPPP:
      return adjacent_ladder(battery_count, *cppp_rating);
    case ArchitectureKind::kFPP:
      return {};
  }
  return {};
}

std::vector<ConverterEdge> adjacent_ladder(int count, double rating) {
  std::vector<ConverterEdge> edges;
  for (int j = 0; j + 1 < count; ++j) edges.push_back({j, j + 1, rating});
  return edges;
}

double aggregate_rating(const Architecture& arch) {
  arch.validate();
  double total = 0.0;
  switch (arch.kind) {
    case ArchitectureKind::kLSHiPPP:
      for (const auto& edge : arch.layer1->edges) total += edge.rating;
      total += arch.layer2->count * arch.layer2->rating;
      break;
    case ArchitectureKind::kCPPP:
      total = (arch.battery_count - 1) * *arch.cppp_rating;
      break;
    case ArchitectureKind::kFPP:
      total = arch.battery_count * *arch.fpp_rating;
      break;
  }
  return total / arch.intrinsic_power;
}

Architecture cppp_from_budget(double budget, const ExpectedSet& expected) {
  check_budget(budget);
  if (expected.size() < 2) {
    throw StructuralError("C-PPP needs at least two batteries");
  }
  Architecture arch;
  arch.kind = ArchitectureKind::kCPPP;
  arch.battery_count = expected.size();
  arch.intrinsic_power = expected.total();
  arch.cppp_rating = budget * arch.intrinsic_power / (arch.battery_count - 1);
  return arch;
}

Architecture fpp_from_budget(double budget, const ExpectedSet& expected) {
  check_budget(budget);
  Architecture arch;
  arch.kind = ArchitectureKind::kFPP;
  arch.battery_count = expected.size();
  arch.intrinsic_power = expected.total();
  arch.fpp_rating = budget * arch.intrinsic_power / arch.battery_count;
  return arch;
}

Architecture make_lshippp(Layer1Design layer1, double layer2_rating,
                          const ExpectedSet& expected) {
  Architecture arch;
  arch.kind = ArchitectureKind::kLSHiPPP;
  arch.battery_count = expected.size();
  arch.intrinsic_power = expected.total();
  arch.layer1 = std::move(layer1);
  arch.layer2 = Layer2Design{layer2_rating, expected.size() - 1};
  arch.validate();
  return arch;
}

}  // namespace hippp
