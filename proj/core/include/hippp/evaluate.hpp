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

#ifndef HIPPP_EVALUATE_HPP_
#define HIPPP_EVALUATE_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "hippp/architecture.hpp"
#include "hippp/design.hpp"
#include "hippp/supply.hpp"

namespace hippp {

inline constexpr double kDefaultConverterEfficiency = 0.85;

// Monte Carlo averages for one architecture on one supply. Power figures
// are normalized by the design-time intrinsic battery power.
struct MetricsRecord {
  ArchitectureKind kind = ArchitectureKind::kCPPP;
  double rating_norm = 0.0;    // aggregate converter rating
  double heterogeneity = 0.0;  // supply std / supply mean
  int trials = 0;
  std::uint64_t seed = 0;
  double util_mean = 0.0;
  double util_std = 0.0;
  double eff_mean = 0.0;  // NaN when the output power is zero
  double eff_std = 0.0;
  double proc_mean = 0.0;  // processed power
  double out_mean = 0.0;   // output power
};

// 1 - (processed / output) (1 - converter_efficiency).
// Throws UndefinedMetricError when output is not positive.
double system_efficiency(double processed, double output, double converter_efficiency);

struct EvaluationOptions {
  int trials = 1000;
  std::uint64_t seed = 1;  // trial t draws with seed + t
  double converter_efficiency = kDefaultConverterEfficiency;
  int threads = 1;
};

// Samples `trials` battery sets, solves each for its optimal flow and
// averages the metrics. Flow invariants are checked on every trial.
MetricsRecord evaluate_architecture(const Architecture& arch, const BatterySupply& supply,
                                    const EvaluationOptions& options);

struct SweepSettings {
  std::vector<ArchitectureKind> kinds;
  EvaluationOptions evaluation;
  DesignConfig design;  // LS-HiPPP Layer 1 search parameters
};

// Architecture of the given kind spending `budget` (normalized aggregate
// rating). LS-HiPPP takes its Layer 1 from `layer1`.
Architecture architecture_for_budget(ArchitectureKind kind, double budget,
                                     const ExpectedSet& expected, const Layer1Design* layer1);

// One record per (budget, kind), budgets in grid order. The LS-HiPPP Layer 1
// is designed once on the supply's expected set.
std::vector<MetricsRecord> sweep_rating(const SweepSettings& settings,
                                        const BatterySupply& supply,
                                        std::span<const double> rating_grid);

// One record per (sigma, kind) at a fixed budget. Sigma values are
// heterogeneities relative to `mean`.
std::vector<MetricsRecord> sweep_heterogeneity(const SweepSettings& settings, double mean,
                                               int count, std::span<const double> sigma_grid,
                                               double budget);

struct FrontierPoint {
  double rating_norm = 0.0;
  double utilization = 0.0;
  double processed_norm = 0.0;
  double system_efficiency = 0.0;
};

std::vector<FrontierPoint> tradeoff_frontier(ArchitectureKind kind, const SweepSettings& settings,
                                             const BatterySupply& supply,
                                             std::span<const double> rating_grid);

}  // namespace hippp

#endif  // HIPPP_EVALUATE_HPP_
