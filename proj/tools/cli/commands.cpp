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

#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include <fmt/format.h>
#include <fmt/ostream.h>
#include <spdlog/spdlog.h>

#include "cli/csv.hpp"
#include "cli/design_file.hpp"
#include "hippp/errors.hpp"
#include "hippp/evaluate.hpp"
#include "hippp/powerflow.hpp"

namespace hippp::cli {

namespace {

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ConfigError& e) {
    fmt::print(err, "config error: {}\n", e.what());
    return kExitConfigError;
  } catch (const DesignFileError& e) {
    fmt::print(err, "input error: {}\n", e.what());
    return kExitConfigError;
  } catch (const ParameterError& e) {
    fmt::print(err, "invalid input: {}\n", e.what());
    return kExitConfigError;
  } catch (const StructuralError& e) {
    fmt::print(err, "invalid input: {}\n", e.what());
    return kExitConfigError;
  } catch (const EnumerationCapError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitRuntimeError;
  } catch (const std::exception& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitRuntimeError;
  }
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error(fmt::format("cannot write {}", path.string()));
  return file;
}

std::filesystem::path prepare_directory(const ExperimentConfig& config) {
  std::filesystem::create_directories(config.output_directory);
  return config.output_directory;
}

bool is_ppp(ArchitectureKind kind) { return kind != ArchitectureKind::kFPP; }

}  // namespace

ExperimentConfig resolve_config(const CommandOptions& options) {
  ExperimentConfig config = options.config.empty() ? ExperimentConfig{}
                                                    : load_config(options.config);
  if (options.out) config.output_directory = *options.out;
  if (options.seed) config.design.base_seed = *options.seed;
  if (options.trials) config.design.monte_carlo_trials = *options.trials;
  if (options.threads < 1) throw ConfigError("threads", "must be at least 1");
  config.design.threads = options.threads;
  config.validate();
  return config;
}

int cmd_design(const CommandOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ExperimentConfig config = resolve_config(options);
    const double sigma = config.sigmas.front();
    const BatterySupply supply = config.supply(sigma);
    const ExpectedSet expected = flatten(supply);
    spdlog::info("designing Layer 1: N={} M={} K={}", config.count, config.design.num_layer1,
                 config.design.num_rating_sets);

    const Layer1Design layer1 = design_layer1(expected, config.design);
    spdlog::info("Layer 2 sweep over {} ratings, {} trials", config.design.layer2_trial_ratings.size(),
                 config.design.monte_carlo_trials);
    const Layer2Result layer2 = design_layer2(layer1, supply, config.design, config.design_budget);
    const Architecture arch = lshippp_from_budget(layer1, config.design_budget, expected);

    DesignArtifact artifact;
    artifact.mean = config.mean;
    artifact.sigma = sigma;
    artifact.expected = expected;
    artifact.layer1 = *arch.layer1;
    artifact.budget = config.design_budget;
    artifact.layer2 = layer2.design;
    artifact.curve = layer2.curve;

    const auto path = prepare_directory(config) / "design.ini";
    auto file = open_output(path);
    write_design(file, artifact);
    file.close();

    fmt::print(out, "Layer 1 edges:");
    for (const auto& e : artifact.layer1.edges) {
      fmt::print(out, " {}-{} ({:.4f})", e.from_battery, e.to_battery, e.rating);
    }
    fmt::print(out, "\nLayer 2 rating: {:.4f} x {}\nwrote {}\n", artifact.layer2.rating,
               artifact.layer2.count, path.string());
    return kExitSuccess;
  });
}

int cmd_sweep(const CommandOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ExperimentConfig config = resolve_config(options);
    const SweepSettings settings = config.sweep_settings(options.threads);
    const auto dir = prepare_directory(config);

    std::vector<MetricsRecord> by_rating;
    for (double sigma : config.sigmas) {
      spdlog::info("rating sweep at sigma {}", sigma);
      const auto records = sweep_rating(settings, config.supply(sigma), config.rating_grid);
      by_rating.insert(by_rating.end(), records.begin(), records.end());
    }
    write_records_csv(dir / "utilization_vs_rating.csv", by_rating);

    std::vector<MetricsRecord> efficiency;
    std::copy_if(by_rating.begin(), by_rating.end(), std::back_inserter(efficiency),
                 [](const MetricsRecord& r) { return is_ppp(r.kind); });
    write_records_csv(dir / "efficiency_vs_rating.csv", efficiency);

    std::vector<MetricsRecord> by_heterogeneity;
    for (double budget : config.heterogeneity_budgets) {
      spdlog::info("heterogeneity sweep at budget {}", budget);
      const auto records = sweep_heterogeneity(settings, config.mean, config.count,
                                               config.heterogeneity_grid, budget);
      by_heterogeneity.insert(by_heterogeneity.end(), records.begin(), records.end());
    }
    write_records_csv(dir / "utilization_vs_heterogeneity.csv", by_heterogeneity);

    SweepSettings frontier_settings = settings;
    frontier_settings.kinds.clear();
    std::copy_if(settings.kinds.begin(), settings.kinds.end(),
                 std::back_inserter(frontier_settings.kinds), is_ppp);
    std::vector<MetricsRecord> frontier;
    if (!frontier_settings.kinds.empty()) {
      spdlog::info("frontier sweep over {} ratings", config.frontier_grid.size());
      frontier = sweep_rating(frontier_settings, config.supply(config.sigmas.front()),
                              config.frontier_grid);
    }
    write_records_csv(dir / "frontier.csv", frontier);

    const std::vector<double> budget = {config.design_budget};
    const auto summary = sweep_rating(settings, config.supply(config.sigmas.front()), budget);
    for (const auto& r : summary) {
      fmt::print(out, "{:<8} rating {:.3f} sigma {:.3f}: utilization {:.4f}  efficiency {:.4f}  "
                      "processed {:.4f}\n",
                 to_string(r.kind), r.rating_norm, r.heterogeneity, r.util_mean, r.eff_mean,
                 r.proc_mean);
    }
    fmt::print(out, "wrote CSV files to {}\n", dir.string());
    return kExitSuccess;
  });
}

std::vector<double> read_capabilities(std::istream& in) {
  std::vector<double> values;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    line = line.substr(0, line.find('#'));
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream tokens(line);
    std::string token;
    while (tokens >> token) {
      char* end = nullptr;
      const double v = std::strtod(token.c_str(), &end);
      if (end != token.c_str() + token.size() || !std::isfinite(v)) {
        throw DesignFileError(fmt::format("capabilities line {}: '{}' is not a number",
                                          line_number, token));
      }
      if (v < 0.0) {
        throw DesignFileError(fmt::format("capabilities line {}: {} is negative", line_number,
                                          token));
      }
      values.push_back(v);
    }
  }
  return values;
}

int cmd_flow(const std::filesystem::path& design_file,
             const std::filesystem::path& capabilities_file, std::ostream& out,
             std::ostream& err) {
  return guarded(err, [&] {
    std::ifstream design_in(design_file);
    if (!design_in) throw DesignFileError(fmt::format("cannot read {}", design_file.string()));
    const DesignArtifact design = read_design(design_in);

    std::ifstream caps_in(capabilities_file);
    if (!caps_in) {
      throw DesignFileError(fmt::format("cannot read {}", capabilities_file.string()));
    }
    std::vector<double> caps = read_capabilities(caps_in);
    if (static_cast<int>(caps.size()) != design.expected.size()) {
      throw DesignFileError(fmt::format("design has {} batteries but {} capabilities were given",
                                        design.expected.size(), caps.size()));
    }
    // Batteries occupy string slots in ascending order of capability.
    std::sort(caps.begin(), caps.end());

    const Architecture arch = design.architecture();
    const PowerFlowSolution sol = optimal_flow(caps, arch);
    const auto edges = arch.converter_edges();
    double total = 0.0;
    for (double p : caps) total += p;

    fmt::print(out, "string current: {:.6f}\n", sol.string_current);
    fmt::print(out, "converter flows:\n");
    for (size_t e = 0; e < edges.size(); ++e) {
      fmt::print(out, "  {}-{}  rating {:.6f}  flow {:.6f}\n", edges[e].from_battery,
                 edges[e].to_battery, edges[e].rating, sol.converter_flows[e]);
    }
    fmt::print(out, "battery powers:\n");
    for (size_t j = 0; j < caps.size(); ++j) {
      fmt::print(out, "  {}  capability {:.6f}  power {:.6f}\n", j, caps[j],
                 sol.battery_powers[j]);
    }
    fmt::print(out, "output power: {:.6f}\n", sol.output_power);
    fmt::print(out, "utilization: {:.6f}\n", total > 0.0 ? sol.output_power / total : 0.0);
    fmt::print(out, "processed power: {:.6f}\n", sol.processed_power);
    return kExitSuccess;
  });
}

}  // namespace hippp::cli
