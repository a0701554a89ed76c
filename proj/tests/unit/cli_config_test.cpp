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

#include <sstream>

#include <gtest/gtest.h>

namespace hippp::cli {
namespace {

ExperimentConfig parse(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

std::string error_key(const std::string& text) {
  try {
    parse(text);
  } catch (const ConfigError& e) {
    return e.key();
  }
  return "<no error>";
}

TEST(NumberList, ValuesAndRanges) {
  EXPECT_EQ(parse_number_list("0.1, 0.2", "k"), (std::vector<double>{0.1, 0.2}));
  const auto grid = parse_number_list("0:0.01:0.5", "k");
  ASSERT_EQ(grid.size(), 51u);
  EXPECT_EQ(grid[15], 0.15);
  EXPECT_EQ(grid.back(), 0.5);
  EXPECT_EQ(parse_number_list("1, 2:1:4", "k"), (std::vector<double>{1, 2, 3, 4}));
  EXPECT_TRUE(parse_number_list("", "k").empty());
}

TEST(NumberList, ErrorsNameTheKey) {
  for (const char* bad : {"0.1, x", "1:2", "1:0:2", "2:1:1", "nan"}) {
    try {
      parse_number_list(bad, "evaluate.ratings");
      ADD_FAILURE() << bad;
    } catch (const ConfigError& e) {
      EXPECT_EQ(e.key(), "evaluate.ratings") << bad;
    }
  }
}

TEST(Config, DefaultsDescribeTheBaselineStudy) {
  const ExperimentConfig cfg = parse("");
  EXPECT_EQ(cfg.count, 9);
  EXPECT_EQ(cfg.sigmas, (std::vector<double>{0.2}));
  EXPECT_EQ(cfg.design.num_layer1, 3);
  EXPECT_EQ(cfg.kinds.size(), 3u);
  EXPECT_EQ(cfg.rating_grid.size(), 10u);
  EXPECT_EQ(cfg.frontier_grid.size(), 51u);
  EXPECT_EQ(cfg.converter_efficiency, 0.85);
}

TEST(Config, ParsesEverySection) {
  const ExperimentConfig cfg = parse(R"(
[supply]
mean = 2
sigma = 0.1, 0.3
count = 6
[design]
num_layer1 = 2
num_rating_sets = 1
layer2_trial_ratings = 0:0.1:0.3
budget = 0.2
trials = 50
seed = 99
enumeration_cap = 5000
[evaluate]
kinds = C-PPP, ls-hippp
ratings = 0.1, 0.2
heterogeneity = 0.1
heterogeneity_budgets = 0.3
frontier_ratings = 0:0.1:0.2
converter_efficiency = 0.9
[output]
directory = results
)");
  EXPECT_EQ(cfg.mean, 2.0);
  EXPECT_EQ(cfg.sigmas, (std::vector<double>{0.1, 0.3}));
  EXPECT_EQ(cfg.count, 6);
  EXPECT_EQ(cfg.design.num_layer1, 2);
  EXPECT_EQ(cfg.design.num_rating_sets, 1);
  EXPECT_EQ(cfg.design.layer2_trial_ratings, (std::vector<double>{0, 0.1, 0.2, 0.3}));
  EXPECT_EQ(cfg.design_budget, 0.2);
  EXPECT_EQ(cfg.design.monte_carlo_trials, 50);
  EXPECT_EQ(cfg.design.base_seed, 99u);
  EXPECT_EQ(cfg.design.enumeration_cap, 5000u);
  EXPECT_EQ(cfg.kinds, (std::vector<ArchitectureKind>{ArchitectureKind::kCPPP,
                                                       ArchitectureKind::kLSHiPPP}));
  EXPECT_EQ(cfg.heterogeneity_budgets, (std::vector<double>{0.3}));
  EXPECT_EQ(cfg.frontier_grid.size(), 3u);
  EXPECT_EQ(cfg.converter_efficiency, 0.9);
  EXPECT_EQ(cfg.output_directory, "results");
  EXPECT_EQ(cfg.supply(0.3).std_power, 0.6);

  const SweepSettings s = cfg.sweep_settings(3);
  EXPECT_EQ(s.evaluation.trials, 50);
  EXPECT_EQ(s.evaluation.seed, 99u);
  EXPECT_EQ(s.evaluation.threads, 3);
  EXPECT_EQ(s.design.threads, 3);
}

TEST(Config, ErrorsNameTheOffendingKey) {
  EXPECT_EQ(error_key("[supply]\nmean = -1\n"), "supply.mean");
  EXPECT_EQ(error_key("[supply]\nmean = abc\n"), "supply.mean");
  EXPECT_EQ(error_key("[supply]\ncount = 1\n"), "supply.count");
  EXPECT_EQ(error_key("[supply]\ncount = 2.5\n"), "supply.count");
  EXPECT_EQ(error_key("[supply]\nsigma = 1.2\n"), "supply.sigma");
  EXPECT_EQ(error_key("[supply]\ncolour = red\n"), "supply.colour");
  EXPECT_EQ(error_key("[plots]\nwidth = 3\n"), "plots");
  EXPECT_EQ(error_key("[evaluate]\nkinds =\n"), "evaluate.kinds");
  EXPECT_EQ(error_key("[evaluate]\nkinds = FPP, DPP\n"), "evaluate.kinds");
  EXPECT_EQ(error_key("[evaluate]\nratings =\n"), "evaluate.ratings");
  EXPECT_EQ(error_key("[evaluate]\nratings = 0.1, -0.2\n"), "evaluate.ratings");
  EXPECT_EQ(error_key("[evaluate]\nconverter_efficiency = 1.5\n"),
            "evaluate.converter_efficiency");
  EXPECT_EQ(error_key("[design]\nnum_layer1 = 9\n"), "design.num_layer1");
  EXPECT_EQ(error_key("[design]\nnum_rating_sets = 4\n"), "design.num_rating_sets");
  EXPECT_EQ(error_key("[design]\ntrials = 0\n"), "design.trials");
  EXPECT_EQ(error_key("[design]\nseed = -3\n"), "design.seed");
  EXPECT_EQ(error_key("[design]\nlayer2_trial_ratings = 0.2, 0.1\n"),
            "design.layer2_trial_ratings");
  EXPECT_EQ(error_key("[output]\ndirectory =\n"), "output.directory");
}

TEST(Config, FppOnlyAllowsASingleBattery) {
  const ExperimentConfig cfg = parse("[supply]\ncount = 1\n[evaluate]\nkinds = FPP\n");
  EXPECT_EQ(cfg.count, 1);
}

TEST(Config, MalformedTextIsAConfigError) {
  EXPECT_THROW(parse("[supply\nmean = 1\n"), ConfigError);
  EXPECT_THROW(load_config("/nonexistent/hippp.ini"), ConfigError);
}

}  // namespace
}  // namespace hippp::cli
