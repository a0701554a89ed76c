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

#include "hippp/powerflow.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <fmt/format.h>

#include "hippp/errors.hpp"

namespace hippp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_inputs(std::span<const double> capabilities, std::span<const ConverterEdge> edges) {
  const int n = static_cast<int>(capabilities.size());
  if (n < 1) throw StructuralError("power flow needs at least one battery");
  for (int j = 0; j < n; ++j) {
    if (!(capabilities[j] > 0.0) || !std::isfinite(capabilities[j])) {
      throw ParameterError(
          fmt::format("battery {} capability {} must be positive", j, capabilities[j]));
    }
  }
  for (const auto& e : edges) {
    if (e.from_battery < 0 || e.from_battery >= n || e.to_battery < 0 || e.to_battery >= n ||
        e.from_battery == e.to_battery) {
      throw StructuralError(fmt::format("edge ({}, {}) invalid for {} batteries",
                                        e.from_battery, e.to_battery, n));
    }
    if (!(e.rating >= 0.0)) {
      throw ParameterError(fmt::format("edge rating {} must be >= 0", e.rating));
    }
  }
}

// Stage two: same constraints with f = f+ - f-, the string current held at
// `current_floor` or above, and the objective -sum(f+ + f-).
LinearProgram build_min_processing_lp(std::span<const double> capabilities,
                                      std::span<const ConverterEdge> edges,
                                      double current_floor) {
  const int n = static_cast<int>(capabilities.size());
  const int m = static_cast<int>(edges.size());
  const auto plus = [](int e) { return 1 + e; };
  const auto minus = [m](int e) { return 1 + m + e; };
  const auto battery = [m](int j) { return 1 + 2 * m + j; };
  const int vars = 1 + 2 * m + n;

  LinearProgram lp;
  lp.objective.assign(vars, 0.0);
  lp.lower.assign(vars, 0.0);
  lp.upper.assign(vars, kInf);
  lp.equality_matrix = DenseMatrix(n, vars);
  lp.equality_rhs.assign(n, 0.0);

  lp.lower[0] = current_floor;
  for (int e = 0; e < m; ++e) {
    lp.objective[plus(e)] = -1.0;
    lp.objective[minus(e)] = -1.0;
    lp.upper[plus(e)] = edges[e].rating;
    lp.upper[minus(e)] = edges[e].rating;
  }
  for (int j = 0; j < n; ++j) {
    lp.lower[battery(j)] = -capabilities[j];
    lp.upper[battery(j)] = capabilities[j];
    lp.equality_matrix(j, battery(j)) = 1.0;
    lp.equality_matrix(j, 0) = -1.0;
  }
  for (int e = 0; e < m; ++e) {
    lp.equality_matrix(edges[e].from_battery, plus(e)) -= 1.0;
    lp.equality_matrix(edges[e].from_battery, minus(e)) += 1.0;
    lp.equality_matrix(edges[e].to_battery, plus(e)) += 1.0;
    lp.equality_matrix(edges[e].to_battery, minus(e)) -= 1.0;
  }
  return lp;
}

double min_capability(std::span<const double> capabilities) {
  return *std::min_element(capabilities.begin(), capabilities.end());
}

}  // namespace

LinearProgram build_flow_lp(std::span<const double> capabilities,
                            std::span<const ConverterEdge> edges) {
  check_inputs(capabilities, edges);
  const FlowLpLayout layout{static_cast<int>(capabilities.size()),
                            static_cast<int>(edges.size())};
  const int vars = layout.num_variables();
  const int n = layout.num_batteries;

  LinearProgram lp;
  lp.objective.assign(vars, 0.0);
  lp.objective[FlowLpLayout::current()] = n;
  lp.lower.assign(vars, 0.0);
  lp.upper.assign(vars, kInf);
  lp.equality_matrix = DenseMatrix(n, vars);
  lp.equality_rhs.assign(n, 0.0);

  for (int e = 0; e < layout.num_edges; ++e) {
    lp.lower[layout.flow(e)] = -edges[e].rating;
    lp.upper[layout.flow(e)] = edges[e].rating;
  }
  // p_j - I - sum_e s(j,e) f_e = 0
  for (int j = 0; j < n; ++j) {
    lp.lower[layout.battery(j)] = -capabilities[j];
    lp.upper[layout.battery(j)] = capabilities[j];
    lp.equality_matrix(j, layout.battery(j)) = 1.0;
    lp.equality_matrix(j, FlowLpLayout::current()) = -1.0;
  }
  for (int e = 0; e < layout.num_edges; ++e) {
    lp.equality_matrix(edges[e].from_battery, layout.flow(e)) -= 1.0;
    lp.equality_matrix(edges[e].to_battery, layout.flow(e)) += 1.0;
  }
  return lp;
}

PowerFlowSolution solve_flow(std::span<const double> capabilities,
                             std::span<const ConverterEdge> edges) {
  check_inputs(capabilities, edges);
  const int n = static_cast<int>(capabilities.size());
  const int m = static_cast<int>(edges.size());

  PowerFlowSolution result;
  result.converter_flows.assign(m, 0.0);
  const bool any_capacity =
      std::any_of(edges.begin(), edges.end(), [](const auto& e) { return e.rating > 0.0; });
  if (!any_capacity) {
    // Bare series string: the weakest battery sets the current.
    result.string_current = min_capability(capabilities);
    result.battery_powers.assign(n, result.string_current);
    result.output_power = n * result.string_current;
    return result;
  }

  const LpSolution stage1 = solve(build_flow_lp(capabilities, edges));
  if (stage1.status != LpStatus::kOptimal) {
    // I = 0, f = 0 is always feasible and I is capped by the capabilities.
    throw InternalError(fmt::format("power-flow LP reported {}", to_string(stage1.status)));
  }
  const double current = stage1.values[FlowLpLayout::current()];

  LpSolution stage2 = solve(build_min_processing_lp(capabilities, edges, current));
  if (stage2.status == LpStatus::kInfeasible) {
    // Round-off in stage one can leave the exact optimum a hair outside the
    // region; give up the last few ulps of current instead.
    const double floor = std::max(0.0, current - 1e-10 * std::max(1.0, current));
    stage2 = solve(build_min_processing_lp(capabilities, edges, floor));
  }
  if (stage2.status != LpStatus::kOptimal) {
    throw InternalError(
        fmt::format("processed-power LP reported {}", to_string(stage2.status)));
  }
  result.string_current = stage2.values[0];
  for (int e = 0; e < m; ++e) {
    result.converter_flows[e] = stage2.values[1 + e] - stage2.values[1 + m + e];
    result.processed_power += std::abs(result.converter_flows[e]);
  }
  result.battery_powers.assign(stage2.values.begin() + 1 + 2 * m, stage2.values.end());
  result.output_power = n * result.string_current;
  return result;
}

PowerFlowSolution optimal_flow(std::span<const double> capabilities, const Architecture& arch) {
  arch.validate();
  if (static_cast<int>(capabilities.size()) != arch.battery_count) {
    throw StructuralError(fmt::format("{} capabilities for an architecture of {} batteries",
                                      capabilities.size(), arch.battery_count));
  }
  if (arch.kind != ArchitectureKind::kFPP) {
    const auto edges = arch.converter_edges();
    return solve_flow(capabilities, edges);
  }

  check_inputs(capabilities, {});
  PowerFlowSolution result;
  for (double cap : capabilities) {
    const double delivered = std::min(cap, *arch.fpp_rating);
    result.converter_flows.push_back(delivered);
    result.battery_powers.push_back(delivered);
    result.output_power += delivered;
  }
  result.processed_power = result.output_power;
  return result;
}

Layer1FlowResult layer1_design_lp(const ExpectedSet& expected,
                                  std::span<const ConverterEdge> edges) {
  const int n = expected.size();
  if (static_cast<int>(edges.size()) > std::max(0, n - 1)) {
    throw StructuralError(
        fmt::format("{} Layer 1 edges exceed N-1 = {}", edges.size(), n - 1));
  }
  std::vector<ConverterEdge> unrated(edges.begin(), edges.end());
  for (auto& e : unrated) e.rating = kInf;

  const PowerFlowSolution flow = solve_flow(expected.capabilities, unrated);
  Layer1FlowResult result;
  result.flows = flow.converter_flows;
  result.output_power = flow.output_power;
  for (double f : result.flows) result.processed.push_back(std::abs(f));
  return result;
}

void check_flow_invariants(std::span<const double> capabilities,
                           std::span<const ConverterEdge> edges,
                           const PowerFlowSolution& solution) {
  const int n = static_cast<int>(capabilities.size());
  const int m = static_cast<int>(edges.size());
  if (static_cast<int>(solution.battery_powers.size()) != n ||
      static_cast<int>(solution.converter_flows.size()) != m) {
    throw InternalError("power-flow solution has the wrong shape");
  }
  std::vector<double> net(n, solution.string_current);
  double processed = 0.0;
  for (int e = 0; e < m; ++e) {
    const double f = solution.converter_flows[e];
    if (std::abs(f) > edges[e].rating + kFlowTolerance) {
      throw InternalError(
          fmt::format("edge {} carries {} above its rating {}", e, f, edges[e].rating));
    }
    net[edges[e].from_battery] += f;
    net[edges[e].to_battery] -= f;
    processed += std::abs(f);
  }
  for (int j = 0; j < n; ++j) {
    if (std::abs(solution.battery_powers[j]) > capabilities[j] + kFlowTolerance) {
      throw InternalError(fmt::format("battery {} delivers {} beyond its capability {}", j,
                                      solution.battery_powers[j], capabilities[j]));
    }
    if (std::abs(solution.battery_powers[j] - net[j]) > kFlowTolerance) {
      throw InternalError(fmt::format("power is not conserved at battery {} (residual {:.3g})",
                                      j, solution.battery_powers[j] - net[j]));
    }
  }
  if (std::abs(processed - solution.processed_power) > kFlowTolerance) {
    throw InternalError("processed power does not match the flows");
  }
  if (solution.string_current < -kFlowTolerance ||
      std::abs(solution.output_power - n * solution.string_current) > kFlowTolerance * n) {
    throw InternalError("output power does not match the string current");
  }
}

}  // namespace hippp
