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

#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "hippp/errors.hpp"

namespace hippp {
namespace {

ExpectedSet unit_set(int n) {
  ExpectedSet set;
  set.capabilities.assign(n, 1.0);
  return set;
}

TEST(AggregateRating, LsHipppArithmetic) {
  Layer1Design layer1;
  layer1.edges = {{0, 8, 0.9}, {1, 7, 0.45}, {2, 6, 0.45}};
  layer1.processed_at_design = {0.9, 0.45, 0.3};
  layer1.rating_partitions = 2;
  const Architecture arch = make_lshippp(layer1, 0.0, unit_set(9));
  EXPECT_EQ(arch.layer2->count, 8);
  EXPECT_NEAR(aggregate_rating(arch), 0.2, 1e-12);
}

TEST(AggregateRating, FullRatedFpp) {
  EXPECT_NEAR(aggregate_rating(fpp_from_budget(1.0, unit_set(9))), 1.0, 1e-12);
  Architecture arch = fpp_from_budget(0.0, unit_set(9));
  arch.fpp_rating = 1.0;
  EXPECT_NEAR(aggregate_rating(arch), 1.0, 1e-12);
}

TEST(AggregateRating, CpppInversion) {
  Architecture arch = cppp_from_budget(0.0, unit_set(9));
  arch.cppp_rating = 0.16875;
  EXPECT_NEAR(aggregate_rating(arch), 0.15, 1e-12);
}

TEST(AggregateRating, MissingFieldsAreStructuralErrors) {
  Architecture arch;
  arch.kind = ArchitectureKind::kLSHiPPP;
  arch.battery_count = 3;
  arch.intrinsic_power = 3.0;
  EXPECT_THROW(aggregate_rating(arch), StructuralError);
  arch.kind = ArchitectureKind::kCPPP;
  EXPECT_THROW(aggregate_rating(arch), StructuralError);
  arch.kind = ArchitectureKind::kFPP;
  EXPECT_THROW(aggregate_rating(arch), StructuralError);
}

TEST(Budget, CpppSplitsEvenly) {
  const Architecture zero = cppp_from_budget(0.0, unit_set(5));
  for (const auto& e : zero.converter_edges()) EXPECT_EQ(e.rating, 0.0);
  const Architecture arch = cppp_from_budget(0.15, unit_set(9));
  EXPECT_NEAR(*arch.cppp_rating, 0.16875, 1e-12);
  const auto edges = arch.converter_edges();
  ASSERT_EQ(edges.size(), 8u);
  for (int j = 0; j < 8; ++j) {
    EXPECT_EQ(edges[j].from_battery, j);
    EXPECT_EQ(edges[j].to_battery, j + 1);
  }
}

TEST(Budget, FppPerBattery) {
  ExpectedSet set;
  set.capabilities = {0.5, 1.0, 1.5, 1.0};
  const Architecture arch = fpp_from_budget(0.2, set);
  EXPECT_NEAR(*arch.fpp_rating, 0.2 * 4.0 / 4, 1e-12);
  EXPECT_TRUE(arch.converter_edges().empty());
}

TEST(Architecture, LsHipppEdgeOrder) {
  Layer1Design layer1;
  layer1.edges = {{0, 3, 0.2}};
  layer1.processed_at_design = {0.2};
  const auto edges = make_lshippp(layer1, 0.05, unit_set(4)).converter_edges();
  ASSERT_EQ(edges.size(), 4u);
  EXPECT_EQ(edges[0], (ConverterEdge{0, 3, 0.2}));
  EXPECT_EQ(edges[1], (ConverterEdge{0, 1, 0.05}));
  EXPECT_EQ(edges[3], (ConverterEdge{2, 3, 0.05}));
}

TEST(Architecture, ValidateRejectsBadDesigns) {
  Layer1Design layer1;
  layer1.edges = {{0, 5, 0.2}};
  layer1.processed_at_design = {0.2};
  EXPECT_THROW(make_lshippp(layer1, 0.0, unit_set(4)), StructuralError);
  layer1.edges = {{1, 1, 0.2}};
  EXPECT_THROW(make_lshippp(layer1, 0.0, unit_set(4)), StructuralError);
  layer1.edges = {{0, 1, -0.2}};
  EXPECT_THROW(make_lshippp(layer1, 0.0, unit_set(4)), ParameterError);
  layer1.edges = {{0, 1, 0.2}};
  EXPECT_THROW(make_lshippp(layer1, std::nan(""), unit_set(4)), ParameterError);
  EXPECT_THROW(cppp_from_budget(-0.1, unit_set(4)), ParameterError);

  Architecture arch = cppp_from_budget(0.1, unit_set(4));
  arch.fpp_rating = 0.1;
  EXPECT_THROW(arch.validate(), StructuralError);
}

TEST(Architecture, AdjacentLadder) {
  EXPECT_TRUE(adjacent_ladder(1, 0.3).empty());
  const auto ladder = adjacent_ladder(3, 0.3);
  ASSERT_EQ(ladder.size(), 2u);
  EXPECT_EQ(ladder[1], (ConverterEdge{1, 2, 0.3}));
}

TEST(Kind, ParsesCommonSpellings) {
  EXPECT_EQ(parse_architecture_kind("FPP"), ArchitectureKind::kFPP);
  EXPECT_EQ(parse_architecture_kind("c-ppp"), ArchitectureKind::kCPPP);
  EXPECT_EQ(parse_architecture_kind("LS-HiPPP"), ArchitectureKind::kLSHiPPP);
  EXPECT_EQ(parse_architecture_kind("ls_hippp"), ArchitectureKind::kLSHiPPP);
  EXPECT_THROW(parse_architecture_kind("hippp"), ParameterError);
  for (auto kind : {ArchitectureKind::kFPP, ArchitectureKind::kCPPP, ArchitectureKind::kLSHiPPP}) {
    EXPECT_EQ(parse_architecture_kind(to_string(kind)), kind);
  }
}

}  // namespace
}  // namespace hippp
