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

#ifndef HIPPP_TOOLS_CLI_CONFIG_HPP_
#define HIPPP_TOOLS_CLI_CONFIG_HPP_

#include <cstdint>
#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hippp/architecture.hpp"
#include "hippp/design.hpp"
#include "hippp/evaluate.hpp"

namespace hippp::cli {

// Malformed or invalid experiment configuration. `key` names the offending
// "section.key" when one can be identified.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& message)
      : std::runtime_error(key.empty() ? message : key + ": " + message), key_(std::move(key)) {}

  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

// Experiment description read from an INI file:
//
//   [supply]    mean, sigma (list), count
//   [design]    num_layer1, num_rating_sets, layer2_trial_ratings, budget,
//               trials, seed, enumeration_cap
//   [evaluate]  kinds, ratings, heterogeneity, heterogeneity_budgets,
//               frontier_ratings, converter_efficiency
//   [output]    directory
//
// Lists are comma separated; an item "a:step:b" expands to an inclusive
// range. Absent keys keep their defaults, unknown keys are errors.
struct ExperimentConfig {
  double mean = 1.0;
  std::vector<double> sigmas = {0.2};  // relative to the mean
  int count = 9;

  std::vector<ArchitectureKind> kinds = {ArchitectureKind::kLSHiPPP, ArchitectureKind::kCPPP,
                                         ArchitectureKind::kFPP};
  std::vector<double> rating_grid = {0.05, 0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.45, 0.5};
  std::vector<double> heterogeneity_grid = {0.05, 0.1, 0.15, 0.2, 0.25, 0.3};
  std::vector<double> heterogeneity_budgets = {0.15, 0.2};
  std::vector<double> frontier_grid;  // defaults to 0:0.01:0.5
  double converter_efficiency = kDefaultConverterEfficiency;

  DesignConfig design;
  double design_budget = 0.15;

  std::filesystem::path output_directory = "out";

  ExperimentConfig();

  // Throws ConfigError naming the first invalid key.
  void validate() const;

  BatterySupply supply(double sigma) const { return {mean, sigma * mean, count}; }
  SweepSettings sweep_settings(int threads) const;
};

ExperimentConfig parse_config(std::istream& in);
ExperimentConfig load_config(const std::filesystem::path& path);

// "0.1, 0.2, 0:0.05:0.5" -> values. Throws ConfigError tagged with `key`.
std::vector<double> parse_number_list(const std::string& text, const std::string& key);

}  // namespace hippp::cli

#endif  // HIPPP_TOOLS_CLI_CONFIG_HPP_
