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

#include "hippp/design.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <fmt/format.h>

#include "hippp/errors.hpp"
#include "hippp/parallel.hpp"
#include "hippp/powerflow.hpp"

namespace hippp {

namespace {

constexpr double kTieTolerance = 1e-9;
constexpr double kCurveTolerance = 1e-9;

std::vector<std::pair<int, int>> battery_pairs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  }
  return pairs;
}

struct Candidate {
  std::vector<ConverterEdge> edges;
  std::vector<double> processed;
  double output = -1.0;
  double total_processed = 0.0;
};

bool lexicographically_less(std::span<const ConverterEdge> a, std::span<const ConverterEdge> b) {
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(), [](const auto& x, const auto& y) {
        return std::pair(x.from_battery, x.to_battery) < std::pair(y.from_battery, y.to_battery);
      });
}

bool better(const Candidate& c, const Candidate& incumbent) {
  const double scale = std::max(1.0, std::abs(incumbent.output));
  if (c.output > incumbent.output + kTieTolerance * scale) return true;
  if (c.output < incumbent.output - kTieTolerance * scale) return false;
  if (c.total_processed < incumbent.total_processed - kTieTolerance * scale) return true;
  if (c.total_processed > incumbent.total_processed + kTieTolerance * scale) return false;
  return lexicographically_less(c.edges, incumbent.edges);
}

}  // namespace

void DesignConfig::validate(int battery_count) const {
  if (num_layer1 < 1 || num_layer1 > battery_count - 1) {
    throw ParameterError(fmt::format("num_layer1 = {} must lie in [1, N-1 = {}]", num_layer1,
                                     battery_count - 1));
  }
  if (num_rating_sets < 1 || num_rating_sets > num_layer1) {
    throw ParameterError(fmt::format("num_rating_sets = {} must lie in [1, num_layer1 = {}]",
                                     num_rating_sets, num_layer1));
  }
  if (monte_carlo_trials < 1) {
    throw ParameterError(fmt::format("monte_carlo_trials = {} must be >= 1", monte_carlo_trials));
  }
  for (size_t i = 0; i < layer2_trial_ratings.size(); ++i) {
    const double r = layer2_trial_ratings[i];
    if (!(r >= 0.0) || !std::isfinite(r) || (i > 0 && r < layer2_trial_ratings[i - 1])) {
      throw ParameterError("layer2 trial ratings must be finite, non-negative and ascending");
    }
  }
}

std::uint64_t count_interconnections(int n, int m) {
  if (n < 2 || m < 0) return m == 0 ? 1 : 0;
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  if (static_cast<std::uint64_t>(m) > pairs) return 0;
  // C(pairs, m) built incrementally; each partial product is itself a
  // binomial coefficient, so the division is exact.
  unsigned __int128 result = 1;
  for (int i = 1; i <= m; ++i) {
    result = result * (pairs - m + i) / i;
    if (result > std::numeric_limits<std::uint64_t>::max()) {
      return std::numeric_limits<std::uint64_t>::max();
    }
  }
  return static_cast<std::uint64_t>(result);
}

void for_each_interconnection(int n, int m,
                              const std::function<void(std::span<const ConverterEdge>)>& visit,
                              std::uint64_t cap) {
  if (m < 1 || m > n - 1) {
    throw ParameterError(fmt::format("cannot place {} converters among {} batteries", m, n));
  }
  const std::uint64_t total = count_interconnections(n, m);
  if (total > cap) {
    throw EnumerationCapError(fmt::format(
        "{} candidate interconnections for N = {}, M = {} exceed the cap of {}; reduce the "
        "number of Layer 1 converters (num_layer1) or raise enumeration_cap",
        total, n, m, cap));
  }
  const auto pairs = battery_pairs(n);
  const int p = static_cast<int>(pairs.size());
  std::vector<int> index(m);
  std::iota(index.begin(), index.end(), 0);
  std::vector<ConverterEdge> edges(m);
  for (;;) {
    for (int i = 0; i < m; ++i) {
      edges[i] = ConverterEdge{pairs[index[i]].first, pairs[index[i]].second, 0.0};
    }
    visit(edges);
    int i = m - 1;
    while (i >= 0 && index[i] == p - m + i) --i;
    if (i < 0) break;
    ++index[i];
    for (int k = i + 1; k < m; ++k) index[k] = index[k - 1] + 1;
  }
}

std::vector<std::vector<ConverterEdge>> enumerate_interconnections(int n, int m,
                                                                   std::uint64_t cap) {
  std::vector<std::vector<ConverterEdge>> sets;
  for_each_interconnection(
      n, m, [&](std::span<const ConverterEdge> e) { sets.emplace_back(e.begin(), e.end()); },
      cap);
  return sets;
}

std::vector<double> partition_ratings(std::span<const double> processed, int k) {
  const int m = static_cast<int>(processed.size());
  if (k < 1 || k > m) {
    throw ParameterError(fmt::format("partition count {} must lie in [1, {}]", k, m));
  }
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return processed[a] > processed[b]; });

  // Each type covers a run of the descending order and is rated at the
  // run's first entry. cost[g][i]: cheapest cover of positions i.. with at
  // most g types. Ties keep the shortest leading run.
  const double kInfCost = std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> cost(k + 1, std::vector<double>(m + 1, kInfCost));
  std::vector<std::vector<int>> cut(k + 1, std::vector<int>(m + 1, m));
  for (int g = 0; g <= k; ++g) cost[g][m] = 0.0;
  for (int g = 1; g <= k; ++g) {
    for (int i = m - 1; i >= 0; --i) {
      const double top = processed[order[i]];
      for (int j = i + 1; j <= m; ++j) {
        const double c = top * (j - i) + cost[g - 1][j];
        if (c < cost[g][i]) {
          cost[g][i] = c;
          cut[g][i] = j;
        }
      }
    }
  }
  std::vector<double> ratings(m);
  for (int i = 0, g = k; i < m; --g) {
    const int j = cut[g][i];
    for (int t = i; t < j; ++t) ratings[order[t]] = processed[order[i]];
    i = j;
  }
  return ratings;
}

Layer1Design design_layer1(const ExpectedSet& expected, const DesignConfig& cfg) {
  const int n = expected.size();
  cfg.validate(n);
  auto candidates = enumerate_interconnections(n, cfg.num_layer1, cfg.enumeration_cap);

  std::vector<Candidate> evaluated(candidates.size());
  parallel_for(static_cast<int>(candidates.size()), cfg.threads, [&](int i) {
    const Layer1FlowResult flow = layer1_design_lp(expected, candidates[i]);
    Candidate& c = evaluated[i];
    c.edges = std::move(candidates[i]);
    c.processed = flow.processed;
    c.output = flow.output_power;
    c.total_processed = std::accumulate(flow.processed.begin(), flow.processed.end(), 0.0);
  });

  const Candidate* best = &evaluated.front();
  for (const auto& c : evaluated) {
    if (better(c, *best)) best = &c;
  }

  Layer1Design design;
  design.edges = best->edges;
  design.processed_at_design = best->processed;
  design.rating_partitions = cfg.num_rating_sets;
  const auto ratings = partition_ratings(best->processed, cfg.num_rating_sets);
  for (size_t i = 0; i < ratings.size(); ++i) design.edges[i].rating = ratings[i];
  return design;
}

Architecture lshippp_from_budget(const Layer1Design& layer1, double budget,
                                 const ExpectedSet& expected) {
  if (!(budget >= 0.0) || !std::isfinite(budget)) {
    throw ParameterError(fmt::format("rating budget {} must be finite and >= 0", budget));
  }
  const int n = expected.size();
  if (n < 2) throw StructuralError("LS-HiPPP needs at least two batteries");
  const double allowance = budget * expected.total();
  double layer1_total = 0.0;
  for (const auto& e : layer1.edges) layer1_total += e.rating;

  Layer1Design scaled = layer1;
  double layer2_rating = 0.0;
  if (layer1_total <= allowance) {
    layer2_rating = (allowance - layer1_total) / (n - 1);
  } else {
    const double factor = allowance / layer1_total;
    for (auto& e : scaled.edges) e.rating *= factor;
  }
  return make_lshippp(std::move(scaled), layer2_rating, expected);
}

Layer2Result design_layer2(const Layer1Design& layer1, const BatterySupply& supply,
                           const DesignConfig& cfg, double budget) {
  supply.validate();
  cfg.validate(supply.count);
  const ExpectedSet expected = flatten(supply);
  const auto& ratings = cfg.layer2_trial_ratings;
  const int r_count = static_cast<int>(ratings.size());
  const int trials = cfg.monte_carlo_trials;

  std::vector<Architecture> archs;
  for (double r : ratings) archs.push_back(make_lshippp(layer1, r, expected));

  // utilization[t * r_count + r]
  std::vector<double> utilization(static_cast<size_t>(trials) * r_count);
  parallel_for(trials, cfg.threads, [&](int t) {
    const BatterySample sample = sample_battery_set(supply, expected, cfg.base_seed + t);
    const double total = std::accumulate(sample.capabilities.begin(),
                                         sample.capabilities.end(), 0.0);
    for (int r = 0; r < r_count; ++r) {
      const auto edges = archs[r].converter_edges();
      const PowerFlowSolution flow = optimal_flow(sample.capabilities, archs[r]);
      check_flow_invariants(sample.capabilities, edges, flow);
      utilization[static_cast<size_t>(t) * r_count + r] = flow.output_power / total;
    }
  });

  Layer2Result result;
  for (int r = 0; r < r_count; ++r) {
    double sum = 0.0;
    for (int t = 0; t < trials; ++t) sum += utilization[static_cast<size_t>(t) * r_count + r];
    result.curve.points.push_back({ratings[r], sum / trials});
  }
  for (int r = 1; r < r_count; ++r) {
    const double prev = result.curve.points[r - 1].utilization;
    if (result.curve.points[r].utilization < prev - kCurveTolerance) {
      throw InternalError(fmt::format("Layer 2 curve decreases between ratings {} and {}",
                                      ratings[r - 1], ratings[r]));
    }
  }
  const Architecture chosen = lshippp_from_budget(layer1, budget, expected);
  result.design = *chosen.layer2;
  return result;
}

}  // namespace hippp
