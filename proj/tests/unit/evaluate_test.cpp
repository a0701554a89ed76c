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

#include "hippp/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <gtest/gtest.h>

#include "hippp/errors.hpp"

namespace hippp {
namespace {

TEST(SystemEfficiency, PointValues) {
  EXPECT_NEAR(system_efficiency(1.0, 1.0, 0.85), 0.85, 1e-12);
  EXPECT_NEAR(system_efficiency(0.08, 1.0, 0.85), 0.988, 1e-12);
  EXPECT_NEAR(system_efficiency(0.8, 10.0, 0.85), 0.988, 1e-12);
  for (double eta : {0.5, 0.85, 0.99}) EXPECT_EQ(system_efficiency(0.0, 3.0, eta), 1.0);
  EXPECT_THROW(system_efficiency(0.1, 0.0, 0.85), UndefinedMetricError);
}

TEST(SystemEfficiency, AffineInProcessedFraction) {
  const double a = system_efficiency(0.0, 1.0, 0.9);
  const double b = system_efficiency(0.1, 1.0, 0.9);
  const double c = system_efficiency(0.2, 1.0, 0.9);
  EXPECT_NEAR(a - b, b - c, 1e-12);
  EXPECT_GT(a, b);
}

EvaluationOptions options(int trials, std::uint64_t seed = 5) {
  EvaluationOptions o;
  o.trials = trials;
  o.seed = seed;
  return o;
}

TEST(Evaluate, ZeroVarianceLsHipppIsFullyUsed) {
  const BatterySupply supply{1.0, 0.0, 9};
  const ExpectedSet set = flatten(supply);
  DesignConfig cfg;
  const Layer1Design layer1 = design_layer1(set, cfg);
  const MetricsRecord r =
      evaluate_architecture(lshippp_from_budget(layer1, 0.15, set), supply, options(50));
  EXPECT_EQ(r.util_mean, 1.0);
  EXPECT_EQ(r.util_std, 0.0);
  EXPECT_EQ(r.heterogeneity, 0.0);
}

TEST(Evaluate, FppNearItsRating) {
  const BatterySupply supply{1.0, 0.2, 9};
  const ExpectedSet set = flatten(supply);
  const MetricsRecord r = evaluate_architecture(fpp_from_budget(0.15, set), supply, options(500));
  EXPECT_NEAR(r.util_mean, 0.15, 0.01);
  EXPECT_NEAR(r.eff_mean, 0.85, 1e-12);
  EXPECT_EQ(r.kind, ArchitectureKind::kFPP);
  EXPECT_NEAR(r.rating_norm, 0.15, 1e-12);
}

TEST(Evaluate, CpppNearReportedUtilization) {
  const BatterySupply supply{1.0, 0.2, 9};
  const ExpectedSet set = flatten(supply);
  const MetricsRecord r =
      evaluate_architecture(cppp_from_budget(0.15, set), supply, options(1000, 1));
  EXPECT_NEAR(r.util_mean, 0.81, 0.03);
  EXPECT_EQ(r.trials, 1000);
  EXPECT_EQ(r.seed, 1u);
}

// Mean over trials of N min(P) / sum(P), drawn straight from the sampler.
double bare_string_utilization(const BatterySupply& supply, int trials, std::uint64_t seed) {
  double sum = 0.0;
  for (int t = 0; t < trials; ++t) {
    const auto caps = sample_battery_set(supply, seed + t).capabilities;
    const double total = std::accumulate(caps.begin(), caps.end(), 0.0);
    sum += supply.count * *std::min_element(caps.begin(), caps.end()) / total;
  }
  return sum / trials;
}

SweepSettings all_kinds(int trials) {
  SweepSettings s;
  s.kinds = {ArchitectureKind::kLSHiPPP, ArchitectureKind::kCPPP, ArchitectureKind::kFPP};
  s.evaluation = options(trials, 3);
  return s;
}

TEST(SweepRating, ZeroBudgetIsTheBareString) {
  const BatterySupply supply{1.0, 0.2, 9};
  const std::vector<double> grid = {0.0};
  const auto records = sweep_rating(all_kinds(200), supply, grid);
  const double oracle = bare_string_utilization(supply, 200, 3);
  ASSERT_EQ(records.size(), 3u);
  for (const auto& r : records) {
    if (r.kind == ArchitectureKind::kFPP) {
      EXPECT_EQ(r.util_mean, 0.0);
      EXPECT_TRUE(std::isnan(r.eff_mean));
    } else {
      EXPECT_NEAR(r.util_mean, oracle, 1e-12);
      EXPECT_EQ(r.proc_mean, 0.0);
    }
  }
}

TEST(SweepRating, RecordLayout) {
  const BatterySupply supply{1.0, 0.2, 9};
  const std::vector<double> grid = {0.05, 0.1};
  const auto records = sweep_rating(all_kinds(20), supply, grid);
  ASSERT_EQ(records.size(), 6u);
  EXPECT_EQ(records[0].kind, ArchitectureKind::kLSHiPPP);
  EXPECT_EQ(records[1].kind, ArchitectureKind::kCPPP);
  EXPECT_EQ(records[2].kind, ArchitectureKind::kFPP);
  EXPECT_EQ(records[3].rating_norm, 0.1);
  for (const auto& r : records) EXPECT_NEAR(r.heterogeneity, 0.2, 1e-15);
}

TEST(SweepRating, ThreadCountDoesNotChangeResults) {
  const BatterySupply supply{1.0, 0.2, 9};
  const std::vector<double> grid = {0.05, 0.15, 0.3};
  SweepSettings settings = all_kinds(150);
  const auto one = sweep_rating(settings, supply, grid);
  settings.evaluation.threads = 4;
  settings.design.threads = 4;
  const auto four = sweep_rating(settings, supply, grid);
  ASSERT_EQ(one.size(), four.size());
  for (size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(one[i].util_mean, four[i].util_mean);
    EXPECT_EQ(one[i].util_std, four[i].util_std);
    EXPECT_EQ(one[i].proc_mean, four[i].proc_mean);
    EXPECT_EQ(one[i].out_mean, four[i].out_mean);
  }
}

TEST(SweepHeterogeneity, ZeroSpreadIsFullyUsed) {
  SweepSettings settings = all_kinds(30);
  settings.kinds = {ArchitectureKind::kLSHiPPP, ArchitectureKind::kCPPP};
  const std::vector<double> sigmas = {0.0, 0.1};
  const auto records = sweep_heterogeneity(settings, 1.0, 9, sigmas, 0.15);
  ASSERT_EQ(records.size(), 4u);
  EXPECT_EQ(records[0].util_mean, 1.0);
  EXPECT_EQ(records[1].util_mean, 1.0);
  EXPECT_EQ(records[2].heterogeneity, 0.1);
  for (const auto& r : records) EXPECT_NEAR(r.rating_norm, 0.15, 1e-12);
}

TEST(Frontier, ZeroBudgetProcessesNothing) {
  const BatterySupply supply{1.0, 0.2, 9};
  const std::vector<double> grid = {0.0, 0.1};
  const auto points = tradeoff_frontier(ArchitectureKind::kLSHiPPP, all_kinds(50), supply, grid);
  ASSERT_EQ(points.size(), 2u);
  EXPECT_EQ(points[0].processed_norm, 0.0);
  EXPECT_EQ(points[0].system_efficiency, 1.0);
  EXPECT_GT(points[1].utilization, points[0].utilization);
}

// Processed power needed to reach utilization u, by linear interpolation
// along a frontier sorted by rating.
double processed_at(const std::vector<FrontierPoint>& frontier, double u) {
  for (size_t i = 0; i + 1 < frontier.size(); ++i) {
    const auto& a = frontier[i];
    const auto& b = frontier[i + 1];
    if (a.utilization <= u && u <= b.utilization && b.utilization > a.utilization) {
      const double t = (u - a.utilization) / (b.utilization - a.utilization);
      return a.processed_norm + t * (b.processed_norm - a.processed_norm);
    }
  }
  return std::nan("");
}

TEST(Frontier, LsHipppProcessesLessForEqualUtilization) {
  const BatterySupply supply{1.0, 0.2, 9};
  std::vector<double> grid;
  for (int i = 0; i <= 60; ++i) grid.push_back(0.01 * i);
  const SweepSettings settings = all_kinds(300);
  const auto ls = tradeoff_frontier(ArchitectureKind::kLSHiPPP, settings, supply, grid);
  const auto c = tradeoff_frontier(ArchitectureKind::kCPPP, settings, supply, grid);
  int compared = 0;
  for (double u = 0.72; u <= 0.9; u += 0.02) {
    const double pl = processed_at(ls, u);
    const double pc = processed_at(c, u);
    if (std::isnan(pl) || std::isnan(pc)) continue;
    EXPECT_LT(pl, pc) << "utilization " << u;
    ++compared;
  }
  EXPECT_GT(compared, 3);
}

TEST(Frontier, LsHipppProcessedPowerNearFullUtilization) {
  const BatterySupply supply{1.0, 0.2, 9};
  std::vector<double> grid;
  for (int i = 0; i <= 50; ++i) grid.push_back(0.01 * i);
  const auto ls = tradeoff_frontier(ArchitectureKind::kLSHiPPP, all_kinds(500), supply, grid);
  const auto first = std::find_if(ls.begin(), ls.end(),
                                  [](const FrontierPoint& p) { return p.utilization >= 0.99; });
  ASSERT_NE(first, ls.end());
  EXPECT_LE(first->processed_norm, 0.13);
}

TEST(ArchitectureForBudget, NeedsLayer1ForLsHippp) {
  const ExpectedSet set = flatten(BatterySupply{1.0, 0.2, 9});
  EXPECT_THROW(architecture_for_budget(ArchitectureKind::kLSHiPPP, 0.1, set, nullptr),
               StructuralError);
  EXPECT_EQ(architecture_for_budget(ArchitectureKind::kCPPP, 0.1, set, nullptr).kind,
            ArchitectureKind::kCPPP);
}

}  // namespace
}  // namespace hippp
