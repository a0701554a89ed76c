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

#include "hippp/supply.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include <boost/math/distributions/normal.hpp>
#include <fmt/format.h>

#include "hippp/errors.hpp"

namespace hippp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kMassTolerance = 1e-12;

double standard_pdf(double z) {
  if (std::isinf(z)) return 0.0;
  return std::exp(-0.5 * z * z) / std::sqrt(2.0 * M_PI);
}

}  // namespace

void BatterySupply::validate() const {
  if (!(mean_power > 0.0) || !std::isfinite(mean_power)) {
    throw ParameterError(
        fmt::format("supply mean must be positive, got {}", mean_power));
  }
  if (!(std_power >= 0.0) || !std::isfinite(std_power)) {
    throw ParameterError(
        fmt::format("supply std must be non-negative, got {}", std_power));
  }
  if (std_power >= mean_power) {
    throw ParameterError(fmt::format(
        "supply std ({}) must be below the mean ({})", std_power, mean_power));
  }
  if (count < 1) {
    throw ParameterError(
        fmt::format("battery count must be at least 1, got {}", count));
  }
}

GaussianDistribution::GaussianDistribution(double mean, double std_dev)
    : mean_(mean), std_dev_(std_dev) {
  if (!std::isfinite(mean) || !(std_dev > 0.0) || !std::isfinite(std_dev)) {
    throw ParameterError(
        fmt::format("invalid Gaussian parameters ({}, {})", mean, std_dev));
  }
}

double GaussianDistribution::cdf(double power) const {
  if (power == -kInf) return 0.0;
  if (power == kInf) return 1.0;
  return boost::math::cdf(boost::math::normal(mean_, std_dev_), power);
}

double GaussianDistribution::quantile(double probability) const {
  if (!(probability > 0.0 && probability < 1.0)) {
    throw ParameterError(
        fmt::format("quantile probability {} outside (0, 1)", probability));
  }
  return boost::math::quantile(boost::math::normal(mean_, std_dev_),
                               probability);
}

double GaussianDistribution::partial_moment(double lower, double upper) const {
  // int_a^b P p(P) dP = mu (Phi(beta) - Phi(alpha)) + sigma (phi(alpha) - phi(beta))
  const double alpha = (lower - mean_) / std_dev_;
  const double beta = (upper - mean_) / std_dev_;
  const double mass = cdf(upper) - cdf(lower);
  return mean_ * mass + std_dev_ * (standard_pdf(alpha) - standard_pdf(beta));
}

double ExpectedSet::total() const {
  return std::accumulate(capabilities.begin(), capabilities.end(), 0.0);
}

ExpectedSet flatten(const SupplyDistribution& distribution, int count) {
  if (count < 1) {
    throw ParameterError(
        fmt::format("battery count must be at least 1, got {}", count));
  }
  ExpectedSet set;
  set.bounds.resize(count + 1);
  set.bounds.front() = -kInf;
  set.bounds.back() = kInf;
  for (int n = 1; n < count; ++n) {
    set.bounds[n] = distribution.quantile(static_cast<double>(n) / count);
  }

  const double expected_mass = 1.0 / count;
  set.capabilities.resize(count);
  for (int n = 0; n < count; ++n) {
    const double lower = set.bounds[n];
    const double upper = set.bounds[n + 1];
    const double mass = distribution.cdf(upper) - distribution.cdf(lower);
    if (std::abs(mass - expected_mass) > kMassTolerance) {
      throw InternalError(fmt::format(
          "interval {} holds probability {} instead of {}", n, mass,
          expected_mass));
    }
    set.capabilities[n] = count * distribution.partial_moment(lower, upper);
  }
  return set;
}

ExpectedSet flatten(const BatterySupply& supply) {
  supply.validate();
  if (supply.std_power == 0.0) {
    ExpectedSet set;
    set.capabilities.assign(supply.count, supply.mean_power);
    set.bounds.assign(supply.count + 1, supply.mean_power);
    set.bounds.front() = -kInf;
    set.bounds.back() = kInf;
    return set;
  }
  return flatten(GaussianDistribution(supply.mean_power, supply.std_power),
                 supply.count);
}

std::vector<double> draw_capabilities(const BatterySupply& supply,
                                      std::uint64_t seed) {
  supply.validate();
  std::vector<double> draws(supply.count, supply.mean_power);
  if (supply.std_power == 0.0) return draws;

  std::mt19937_64 engine(seed);
  std::normal_distribution<double> normal(supply.mean_power, supply.std_power);
  for (double& value : draws) {
    do {
      value = normal(engine);
    } while (!(value > 0.0));
  }
  return draws;
}

BatterySample sample_battery_set(const BatterySupply& supply,
                                 std::uint64_t seed) {
  return sample_battery_set(supply, flatten(supply), seed);
}

BatterySample sample_battery_set(const BatterySupply& supply,
                                 const ExpectedSet& expected,
                                 std::uint64_t seed) {
  if (expected.size() != supply.count) {
    throw StructuralError(fmt::format(
        "expected set has {} entries for a supply of {} batteries",
        expected.size(), supply.count));
  }
  BatterySample sample;
  sample.seed = seed;
  sample.capabilities = draw_capabilities(supply, seed);
  std::sort(sample.capabilities.begin(), sample.capabilities.end());
  sample.deviations.resize(supply.count);
  for (int j = 0; j < supply.count; ++j) {
    sample.deviations[j] = sample.capabilities[j] - expected.capabilities[j];
  }
  return sample;
}

}  // namespace hippp
