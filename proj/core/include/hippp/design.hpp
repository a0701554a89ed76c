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

#ifndef HIPPP_DESIGN_HPP_
#define HIPPP_DESIGN_HPP_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "hippp/architecture.hpp"
#include "hippp/supply.hpp"

namespace hippp {

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

struct DesignConfig {
  int num_layer1 = 3;       // M
  int num_rating_sets = 1;  // K
  std::vector<double> layer2_trial_ratings = {0.0,  0.025, 0.05, 0.075, 0.1, 0.125,
                                              0.15, 0.175, 0.2,  0.25,  0.3};
  int monte_carlo_trials = 1000;
  std::uint64_t base_seed = 1;
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
  int threads = 1;

  // Throws ParameterError unless 1 <= M <= N-1, 1 <= K <= M, trials >= 1
  // and the trial ratings are non-negative and ascending.
  void validate(int battery_count) const;
};

struct Layer2CurvePoint {
  double rating = 0.0;
  double utilization = 0.0;
};

// Expected utilization of the LS-HiPPP string against the Layer 2 rating.
struct Layer2Curve {
  std::vector<Layer2CurvePoint> points;
};

// C(C(n,2), m), saturating at UINT64_MAX.
std::uint64_t count_interconnections(int n, int m);

// Visits every m-subset of the n(n-1)/2 battery pairs in lexicographic
// order, each pair oriented from the lower to the higher index, with zero
// ratings. Throws EnumerationCapError if the count exceeds `cap`.
void for_each_interconnection(int n, int m,
                              const std::function<void(std::span<const ConverterEdge>)>& visit,
                              std::uint64_t cap = kDefaultEnumerationCap);

std::vector<std::vector<ConverterEdge>> enumerate_interconnections(
    int n, int m, std::uint64_t cap = kDefaultEnumerationCap);

// Ratings for at most k converter types with the smallest total. Every
// converter is rated at least its processed power and each type at the
// largest processed power it covers. Output follows the input order.
std::vector<double> partition_ratings(std::span<const double> processed, int k);

// Exhaustive Layer 1 search on the expected set. The winner maximizes the
// output power; ties go to the smaller total processed power, then to the
// lexicographically smallest edge list.
Layer1Design design_layer1(const ExpectedSet& expected, const DesignConfig& cfg);

// Layer 2 rating implied by a normalized budget once Layer 1 is paid for.
// When Layer 1 alone exceeds the budget, its ratings are scaled down to fit
// and Layer 2 is zero.
Architecture lshippp_from_budget(const Layer1Design& layer1, double budget,
                                 const ExpectedSet& expected);

struct Layer2Result {
  Layer2Design design;  // rating chosen by the caller's budget
  Layer2Curve curve;
};

// Monte Carlo sweep over cfg.layer2_trial_ratings. Trial t uses seed
// base_seed + t for every rating (common random numbers).
Layer2Result design_layer2(const Layer1Design& layer1, const BatterySupply& supply,
                           const DesignConfig& cfg, double budget);

}  // namespace hippp

#endif  // HIPPP_DESIGN_HPP_
