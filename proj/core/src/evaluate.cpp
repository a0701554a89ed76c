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
#include <limits>
#include <numeric>
#include <optional>

#include <fmt/format.h>

#include "hippp/errors.hpp"
#include "hippp/parallel.hpp"
#include "hippp/powerflow.hpp"

namespace hippp {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct TrialResult {
  double utilization = 0.0;
  double processed = 0.0;
  double output = 0.0;
  double efficiency = kNaN;
};

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;
};

MeanStd mean_std(const std::vector<TrialResult>& trials, double TrialResult::*field) {
  MeanStd out;
  const double n = static_cast<double>(trials.size());
  for (const auto& t : trials) out.mean += t.*field;
  out.mean /= n;
  if (trials.size() > 1) {
    double ss = 0.0;
    for (const auto& t : trials) ss += (t.*field - out.mean) * (t.*field - out.mean);
    out.std = std::sqrt(ss / (n - 1.0));
  }
  return out;
}

void check_fpp_trial(std::span<const double> capabilities, double rating,
                     const PowerFlowSolution& flow) {
  double total = 0.0;
  for (size_t j = 0; j < capabilities.size(); ++j) {
    const double p = flow.converter_flows[j];
    if (p < -kFlowTolerance || p > std::min(capabilities[j], rating) + kFlowTolerance) {
      throw InternalError(fmt::format("FPP converter {} delivers {} beyond its limits", j, p));
    }
    total += p;
  }
  if (std::abs(total - flow.output_power) > kFlowTolerance ||
      flow.processed_power != flow.output_power) {
    throw InternalError("FPP output does not match its converters");
  }
}

void check_grid(std::span<const double> grid, const char* what) {
  if (grid.empty()) throw ParameterError(fmt::format("{} grid is empty", what));
  for (size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] >= 0.0) || !std::isfinite(grid[i]) || (i > 0 && grid[i] < grid[i - 1])) {
      throw ParameterError(
          fmt::format("{} grid must be finite, non-negative and ascending", what));
    }
  }
}

bool needs_layer1(std::span<const ArchitectureKind> kinds) {
  return std::find(kinds.begin(), kinds.end(), ArchitectureKind::kLSHiPPP) != kinds.end();
}

}  // namespace

double system_efficiency(double processed, double output, double converter_efficiency) {
  if (!(output > 0.0)) {
    throw UndefinedMetricError(
        fmt::format("system efficiency is undefined for output power {}", output));
  }
  if (!(converter_efficiency > 0.0 && converter_efficiency <= 1.0)) {
    throw ParameterError(
        fmt::format("converter efficiency {} must lie in (0, 1]", converter_efficiency));
  }
  if (!(processed >= 0.0)) {
    throw ParameterError(fmt::format("processed power {} must be >= 0", processed));
  }
  return 1.0 - (processed / output) * (1.0 - converter_efficiency);
}

MetricsRecord evaluate_architecture(const Architecture& arch, const BatterySupply& supply,
                                    const EvaluationOptions& options) {
  supply.validate();
  arch.validate();
  if (arch.battery_count != supply.count) {
    throw StructuralError(fmt::format("architecture has {} batteries, supply draws {}",
                                      arch.battery_count, supply.count));
  }
  if (options.trials < 1) throw ParameterError("evaluation needs at least one trial");
  // Validates the efficiency argument up front.
  system_efficiency(0.0, 1.0, options.converter_efficiency);

  const ExpectedSet expected = flatten(supply);
  const auto edges = arch.converter_edges();
  double rating_sum = 0.0;
  for (const auto& e : edges) rating_sum += e.rating;

  std::vector<TrialResult> results(options.trials);
  parallel_for(options.trials, options.threads, [&](int t) {
    const BatterySample sample = sample_battery_set(supply, expected, options.seed + t);
    const auto& caps = sample.capabilities;
    const PowerFlowSolution flow = optimal_flow(caps, arch);
    const double total = std::accumulate(caps.begin(), caps.end(), 0.0);

    if (arch.kind == ArchitectureKind::kFPP) {
      check_fpp_trial(caps, *arch.fpp_rating, flow);
    } else {
      check_flow_invariants(caps, edges, flow);
      if (flow.processed_power > rating_sum + kFlowTolerance) {
        throw InternalError("processed power exceeds the installed converter rating");
      }
      const double floor = arch.battery_count * caps.front() / total;
      const double u = flow.output_power / total;
      if (u < floor - kFlowTolerance || u > 1.0 + kFlowTolerance) {
        throw InternalError(fmt::format("utilization {} outside [{}, 1]", u, floor));
      }
    }

    TrialResult& r = results[t];
    r.utilization = flow.output_power / total;
    r.processed = flow.processed_power;
    r.output = flow.output_power;
    if (flow.output_power > 0.0) {
      r.efficiency = system_efficiency(flow.processed_power, flow.output_power,
                                       options.converter_efficiency);
    }
  });

  // Sampling must be a pure function of the seed.
  if (sample_battery_set(supply, expected, options.seed).capabilities !=
      sample_battery_set(supply, expected, options.seed).capabilities) {
    throw InternalError("battery sampling is not deterministic");
  }

  MetricsRecord record;
  record.kind = arch.kind;
  record.rating_norm = aggregate_rating(arch);
  record.heterogeneity = supply.std_power / supply.mean_power;
  record.trials = options.trials;
  record.seed = options.seed;
  const MeanStd util = mean_std(results, &TrialResult::utilization);
  record.util_mean = util.mean;
  record.util_std = util.std;
  const MeanStd eff = mean_std(results, &TrialResult::efficiency);
  record.eff_mean = eff.mean;
  record.eff_std = eff.std;
  record.proc_mean = mean_std(results, &TrialResult::processed).mean / arch.intrinsic_power;
  record.out_mean = mean_std(results, &TrialResult::output).mean / arch.intrinsic_power;
  return record;
}

Architecture architecture_for_budget(ArchitectureKind kind, double budget,
                                     const ExpectedSet& expected, const Layer1Design* layer1) {
  switch (kind) {
    case ArchitectureKind::kFPP:
      return fpp_from_budget(budget, expected);
    case ArchitectureKind::kCPPP:
      return cppp_from_budget(budget, expected);
    case ArchitectureKind::kLSHiPPP:
      if (layer1 == nullptr) throw StructuralError("LS-HiPPP needs a Layer 1 design");
      return lshippp_from_budget(*layer1, budget, expected);
  }
  throw StructuralError("unknown architecture kind");
}

std::vector<MetricsRecord> sweep_rating(const SweepSettings& settings,
                                        const BatterySupply& supply,
                                        std::span<const double> rating_grid) {
  if (settings.kinds.empty()) throw ParameterError("no architecture kinds to sweep");
  check_grid(rating_grid, "rating");
  supply.validate();
  const ExpectedSet expected = flatten(supply);

  std::optional<Layer1Design> layer1;
  if (needs_layer1(settings.kinds)) {
    DesignConfig cfg = settings.design;
    cfg.threads = settings.evaluation.threads;
    layer1 = design_layer1(expected, cfg);
  }

  std::vector<MetricsRecord> records;
  for (double budget : rating_grid) {
    for (ArchitectureKind kind : settings.kinds) {
      const Architecture arch =
          architecture_for_budget(kind, budget, expected, layer1 ? &*layer1 : nullptr);
      records.push_back(evaluate_architecture(arch, supply, settings.evaluation));
    }
  }
  return records;
}

std::vector<MetricsRecord> sweep_heterogeneity(const SweepSettings& settings, double mean,
                                               int count, std::span<const double> sigma_grid,
                                               double budget) {
  check_grid(sigma_grid, "heterogeneity");
  std::vector<MetricsRecord> records;
  const double grid[] = {budget};
  for (double sigma : sigma_grid) {
    const BatterySupply supply{mean, sigma * mean, count};
    const auto cell = sweep_rating(settings, supply, grid);
    records.insert(records.end(), cell.begin(), cell.end());
  }
  return records;
}

std::vector<FrontierPoint> tradeoff_frontier(ArchitectureKind kind, const SweepSettings& settings,
                                             const BatterySupply& supply,
                                             std::span<const double> rating_grid) {
  SweepSettings single = settings;
  single.kinds = {kind};
  std::vector<FrontierPoint> points;
  for (const auto& r : sweep_rating(single, supply, rating_grid)) {
    points.push_back({r.rating_norm, r.util_mean, r.proc_mean, r.eff_mean});
  }
  return points;
}

}  // namespace hippp
