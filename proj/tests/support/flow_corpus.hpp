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

#ifndef HIPPP_TESTS_SUPPORT_FLOW_CORPUS_HPP_
#define HIPPP_TESTS_SUPPORT_FLOW_CORPUS_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "hippp/architecture.hpp"
#include "support/oracles.hpp"

namespace hippp::testing {

struct FlowInstance {
  std::vector<double> caps;
  std::vector<ConverterEdge> edges;

  std::vector<GridEdge> grid_edges() const {
    std::vector<GridEdge> out;
    for (const auto& e : edges) out.push_back({e.from_battery, e.to_battery, e.rating});
    return out;
  }
};

// Strings of one to three batteries with up to two converters. Optimal
// vertices of these programs have denominators of at most 3 in the input
// data, so inputs are multiples of 6e-3 and every optimum lies on the 1e-3
// grid of the oracle.
inline FlowInstance small_flow_instance(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int n = 1 + static_cast<int>(rng() % 3);
  constexpr double kQuantum = 6e-3;
  std::uniform_int_distribution<int> cap_steps(50, 283);
  std::uniform_int_distribution<int> rating_steps(0, 66);
  FlowInstance inst;
  for (int j = 0; j < n; ++j) inst.caps.push_back(cap_steps(rng) * kQuantum);
  if (n >= 2) {
    const int edges = 1 + static_cast<int>(rng() % 2);
    for (int e = 0; e < edges; ++e) {
      int a = static_cast<int>(rng() % n);
      int b = static_cast<int>(rng() % (n - 1));
      if (b >= a) ++b;
      inst.edges.push_back({a, b, rating_steps(rng) * kQuantum});
    }
  }
  return inst;
}

}  // namespace hippp::testing

#endif  // HIPPP_TESTS_SUPPORT_FLOW_CORPUS_HPP_
