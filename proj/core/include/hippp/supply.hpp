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

#ifndef HIPPP_SUPPLY_HPP_
#define HIPPP_SUPPLY_HPP_

#include <cstdint>
#include <span>
#include <vector>

namespace hippp {

// Statistical model of the battery supply: normalized power capability is
// Gaussian with the given mean and standard deviation; `count` batteries
// are drawn per string.
struct BatterySupply {
  double mean_power = 1.0;
  double std_power = 0.0;
  int count = 1;

  // Throws ParameterError unless mean > 0, 0 <= std < mean and count >= 1.
  void validate() const;
};

// Extension point for non-Gaussian supplies. Only the Gaussian is provided.
class SupplyDistribution {
 public:
  virtual ~SupplyDistribution() = default;

  virtual double cdf(double power) const = 0;
  // Inverse CDF on the open interval (0, 1).
  virtual double quantile(double probability) const = 0;
  // Partial first moment: integral of p(P) * P over [lower, upper]. Either
  // limit may be infinite.
  virtual double partial_moment(double lower, double upper) const = 0;
};

// Requires std_dev > 0; a zero-variance supply is handled by flatten(BatterySupply).
class GaussianDistribution final : public SupplyDistribution {
 public:
  GaussianDistribution(double mean, double std_dev);

  double cdf(double power) const override;
  double quantile(double probability) const override;
  double partial_moment(double lower, double upper) const override;

  double mean() const { return mean_; }
  double std_dev() const { return std_dev_; }

 private:
  double mean_;
  double std_dev_;
};

// Equal-probability interval means of the supply distribution, ascending.
// `bounds` holds the N+1 interval edges; the outer two are infinite.
struct ExpectedSet {
  std::vector<double> capabilities;
  std::vector<double> bounds;

  int size() const { return static_cast<int>(capabilities.size()); }
  // Aggregate intrinsic battery power: the sum of all entries.
  double total() const;
};

// Distribution Flattening: splits the distribution into `count` intervals
// of probability 1/count and assigns each its conditional mean.
ExpectedSet flatten(const SupplyDistribution& distribution, int count);
ExpectedSet flatten(const BatterySupply& supply);

struct BatterySample {
  std::vector<double> capabilities;  // ascending
  std::vector<double> deviations;    // capabilities[j] - expected[j]
  std::uint64_t seed = 0;
};

// Raw i.i.d. draws in generation order. Non-positive draws are rejected and
// redrawn from the same stream.
std::vector<double> draw_capabilities(const BatterySupply& supply,
                                      std::uint64_t seed);

BatterySample sample_battery_set(const BatterySupply& supply,
                                 std::uint64_t seed);
// Same as above with the expected set precomputed by the caller.
BatterySample sample_battery_set(const BatterySupply& supply,
                                 const ExpectedSet& expected,
                                 std::uint64_t seed);

}  // namespace hippp

#endif  // HIPPP_SUPPLY_HPP_
