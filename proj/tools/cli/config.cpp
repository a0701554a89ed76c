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

#include "cli/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <boost/algorithm/string.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <fmt/format.h>

#include "hippp/errors.hpp"

namespace hippp::cli {

namespace {

namespace pt = boost::property_tree;

const std::map<std::string, std::set<std::string>>& known_keys() {
  static const std::map<std::string, std::set<std::string>> keys = {
      {"supply", {"mean", "sigma", "count"}},
      {"design",
       {"num_layer1", "num_rating_sets", "layer2_trial_ratings", "budget", "trials", "seed",
        "enumeration_cap"}},
      {"evaluate",
       {"kinds", "ratings", "heterogeneity", "heterogeneity_budgets", "frontier_ratings",
        "converter_efficiency"}},
      {"output", {"directory"}},
  };
  return keys;
}

double parse_double(const std::string& raw, const std::string& key) {
  const std::string text = boost::algorithm::trim_copy(raw);
  double value = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || text.empty() ||
      !std::isfinite(value)) {
    throw ConfigError(key, fmt::format("'{}' is not a finite number", text));
  }
  return value;
}

template <class Int>
Int parse_integer(const std::string& raw, const std::string& key) {
  const std::string text = boost::algorithm::trim_copy(raw);
  Int value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || text.empty()) {
    throw ConfigError(key, fmt::format("'{}' is not an integer", text));
  }
  return value;
}

void check_grid(const std::vector<double>& grid, const std::string& key, bool allow_empty) {
  if (grid.empty() && !allow_empty) throw ConfigError(key, "list must not be empty");
  for (size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] >= 0.0) || !std::isfinite(grid[i])) {
      throw ConfigError(key, fmt::format("value {} must be finite and >= 0", grid[i]));
    }
    if (i > 0 && grid[i] < grid[i - 1]) throw ConfigError(key, "values must be ascending");
  }
}

}  // namespace

ExperimentConfig::ExperimentConfig() {
  frontier_grid = parse_number_list("0:0.01:0.5", "evaluate.frontier_ratings");
}

std::vector<double> parse_number_list(const std::string& text, const std::string& key) {
  std::vector<std::string> items;
  boost::algorithm::split(items, text, boost::algorithm::is_any_of(","));
  std::vector<double> values;
  for (auto& item : items) {
    boost::algorithm::trim(item);
    if (item.empty()) continue;
    std::vector<std::string> parts;
    boost::algorithm::split(parts, item, boost::algorithm::is_any_of(":"));
    if (parts.size() == 1) {
      values.push_back(parse_double(parts[0], key));
      continue;
    }
    if (parts.size() != 3) {
      throw ConfigError(key, fmt::format("range '{}' must look like start:step:stop", item));
    }
    const double start = parse_double(parts[0], key);
    const double step = parse_double(parts[1], key);
    const double stop = parse_double(parts[2], key);
    if (!(step > 0.0) || stop < start) {
      throw ConfigError(key, fmt::format("range '{}' needs step > 0 and stop >= start", item));
    }
    // Index-based so that 0:0.01:0.5 yields exactly 51 points.
    const auto n = static_cast<long>(std::floor((stop - start) / step + 1e-9));
    for (long i = 0; i <= n; ++i) {
      // Rounded to 12 digits so grid values print cleanly.
      values.push_back(std::round((start + i * step) * 1e12) / 1e12);
    }
  }
  return values;
}

void ExperimentConfig::validate() const {
  if (!(mean > 0.0) || !std::isfinite(mean)) throw ConfigError("supply.mean", "must be > 0");
  if (count < 1) throw ConfigError("supply.count", "must be >= 1");
  check_grid(sigmas, "supply.sigma", false);
  for (double s : sigmas) {
    if (s >= 1.0) throw ConfigError("supply.sigma", "relative sigma must be below 1");
  }
  if (kinds.empty()) throw ConfigError("evaluate.kinds", "no architecture kinds given");
  const bool ppp = std::any_of(kinds.begin(), kinds.end(),
                               [](auto k) { return k != ArchitectureKind::kFPP; });
  if (ppp && count < 2) {
    throw ConfigError("supply.count", "partial power processing needs at least 2 batteries");
  }
  check_grid(rating_grid, "evaluate.ratings", false);
  check_grid(heterogeneity_grid, "evaluate.heterogeneity", false);
  for (double s : heterogeneity_grid) {
    if (s >= 1.0) throw ConfigError("evaluate.heterogeneity", "relative sigma must be below 1");
  }
  check_grid(heterogeneity_budgets, "evaluate.heterogeneity_budgets", false);
  check_grid(frontier_grid, "evaluate.frontier_ratings", false);
  if (!(converter_efficiency > 0.0 && converter_efficiency <= 1.0)) {
    throw ConfigError("evaluate.converter_efficiency", "must lie in (0, 1]");
  }
  if (!(design_budget >= 0.0) || !std::isfinite(design_budget)) {
    throw ConfigError("design.budget", "must be finite and >= 0");
  }
  check_grid(design.layer2_trial_ratings, "design.layer2_trial_ratings", false);
  if (count >= 2) {
    if (design.num_layer1 < 1 || design.num_layer1 > count - 1) {
      throw ConfigError("design.num_layer1", fmt::format("must lie in [1, {}]", count - 1));
    }
    if (design.num_rating_sets < 1 || design.num_rating_sets > design.num_layer1) {
      throw ConfigError("design.num_rating_sets",
                        fmt::format("must lie in [1, {}]", design.num_layer1));
    }
  }
  if (design.monte_carlo_trials < 1) throw ConfigError("design.trials", "must be >= 1");
  if (output_directory.empty()) throw ConfigError("output.directory", "must not be empty");
}

SweepSettings ExperimentConfig::sweep_settings(int threads) const {
  SweepSettings settings;
  settings.kinds = kinds;
  settings.evaluation.trials = design.monte_carlo_trials;
  settings.evaluation.seed = design.base_seed;
  settings.evaluation.converter_efficiency = converter_efficiency;
  settings.evaluation.threads = threads;
  settings.design = design;
  settings.design.threads = threads;
  return settings;
}

ExperimentConfig parse_config(std::istream& in) {
  pt::ptree tree;
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError("", fmt::format("malformed config (line {}): {}", e.line(), e.message()));
  }

  ExperimentConfig cfg;
  for (const auto& [section, body] : tree) {
    const auto known = known_keys().find(section);
    if (known == known_keys().end() || body.empty()) {
      throw ConfigError(section, "unknown section");
    }
    for (const auto& [name, node] : body) {
      const std::string key = section + "." + name;
      if (!known->second.count(name)) throw ConfigError(key, "unknown key");
      const std::string value = node.get_value<std::string>();

      if (key == "supply.mean") {
        cfg.mean = parse_double(value, key);
      } else if (key == "supply.sigma") {
        cfg.sigmas = parse_number_list(value, key);
      } else if (key == "supply.count") {
        cfg.count = parse_integer<int>(value, key);
      } else if (key == "design.num_layer1") {
        cfg.design.num_layer1 = parse_integer<int>(value, key);
      } else if (key == "design.num_rating_sets") {
        cfg.design.num_rating_sets = parse_integer<int>(value, key);
      } else if (key == "design.layer2_trial_ratings") {
        cfg.design.layer2_trial_ratings = parse_number_list(value, key);
      } else if (key == "design.budget") {
        cfg.design_budget = parse_double(value, key);
      } else if (key == "design.trials") {
        cfg.design.monte_carlo_trials = parse_integer<int>(value, key);
      } else if (key == "design.seed") {
        cfg.design.base_seed = parse_integer<std::uint64_t>(value, key);
      } else if (key == "design.enumeration_cap") {
        cfg.design.enumeration_cap = parse_integer<std::uint64_t>(value, key);
      } else if (key == "evaluate.kinds") {
        std::vector<std::string> names;
        boost::algorithm::split(names, value, boost::algorithm::is_any_of(","));
        cfg.kinds.clear();
        for (auto& name_text : names) {
          boost::algorithm::trim(name_text);
          if (name_text.empty()) continue;
          try {
            cfg.kinds.push_back(parse_architecture_kind(name_text));
          } catch (const ParameterError& e) {
            throw ConfigError(key, e.what());
          }
        }
      } else if (key == "evaluate.ratings") {
        cfg.rating_grid = parse_number_list(value, key);
      } else if (key == "evaluate.heterogeneity") {
        cfg.heterogeneity_grid = parse_number_list(value, key);
      } else if (key == "evaluate.heterogeneity_budgets") {
        cfg.heterogeneity_budgets = parse_number_list(value, key);
      } else if (key == "evaluate.frontier_ratings") {
        cfg.frontier_grid = parse_number_list(value, key);
      } else if (key == "evaluate.converter_efficiency") {
        cfg.converter_efficiency = parse_double(value, key);
      } else if (key == "output.directory") {
        cfg.output_directory = boost::algorithm::trim_copy(value);
      }
    }
  }
  cfg.validate();
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("", fmt::format("cannot open config file '{}'", path.string()));
  return parse_config(in);
}

}  // namespace hippp::cli
