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

#ifndef HIPPP_POWERFLOW_HPP_
#define HIPPP_POWERFLOW_HPP_

#include <span>
#include <vector>

#include "hippp/architecture.hpp"
#include "hippp/lp.hpp"
#include "hippp/supply.hpp"

namespace hippp {

// Optimal operating point of a string. All battery voltages are normalized
// to one, so every battery delivers `string_current` directly to the bus.
struct PowerFlowSolution {
  double string_current = 0.0;
  // Signed flow per converter edge (positive = from -> to). For FPP: the
  // output of each battery's own converter.
  std::vector<double> converter_flows;
  // Net power drawn from each battery (negative when it is being charged).
  std::vector<double> battery_powers;
  double output_power = 0.0;
  double processed_power = 0.0;  // sum of |converter_flows|
};

// Column layout of the programs produced by build_flow_lp.
struct FlowLpLayout {
  int num_batteries = 0;
  int num_edges = 0;

  static constexpr int current() { return 0; }
  int flow(int edge) const { return 1 + edge; }
  int battery(int j) const { return 1 + num_edges + j; }
  int num_variables() const { return 1 + num_edges + num_batteries; }
};

// maximize N * I  s.t.  p_j = I + sum_e s(j,e) f_e,  -P_j <= p_j <= P_j,
// -rating_e <= f_e <= rating_e,  I >= 0.
// s(j,e) is +1 when j is the edge's source and -1 when it is the sink. The
// battery powers p_j are explicit columns tied to I and f by the equality
// rows. An infinite rating leaves that flow free.
LinearProgram build_flow_lp(std::span<const double> capabilities,
                            std::span<const ConverterEdge> edges);

// Two-stage solve: maximizes the output power, then, holding that output,
// minimizes the total processed power so that the reported flows do not
// depend on which optimal vertex the simplex lands on.
PowerFlowSolution solve_flow(std::span<const double> capabilities,
                             std::span<const ConverterEdge> edges);

// Optimal flow for an architecture. FPP is closed form: each battery
// delivers min(P_j, rating) through its own converter.
PowerFlowSolution optimal_flow(std::span<const double> capabilities, const Architecture& arch);

struct Layer1FlowResult {
  std::vector<double> processed;  // p*_i = |f_i|
  std::vector<double> flows;      // signed
  double output_power = 0.0;
};

// Flow LP with unrated edges on the expected set; the resulting processed
// powers become the Layer 1 ratings.
Layer1FlowResult layer1_design_lp(const ExpectedSet& expected,
                                  std::span<const ConverterEdge> edges);

inline constexpr double kFlowTolerance = 1e-8;

// Throws InternalError if the solution breaks a capability, rating or
// conservation constraint by more than kFlowTolerance.
void check_flow_invariants(std::span<const double> capabilities,
                           std::span<const ConverterEdge> edges,
                           const PowerFlowSolution& solution);

}  // namespace hippp

#endif  // HIPPP_POWERFLOW_HPP_
