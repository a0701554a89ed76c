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

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <spdlog/cfg/helpers.h>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "cli/commands.hpp"

namespace {

void setup_logging() {
  auto logger = spdlog::stderr_color_mt("hippp");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::warn);
  if (const char* level = std::getenv("HIPPP_LOG")) {
    spdlog::cfg::helpers::load_levels(level);
  }
}

}  // namespace

int main(int argc, char** argv) {
  setup_logging();

  CLI::App app{"LS-HiPPP converter design and evaluation"};
  app.require_subcommand(1);

  hippp::cli::CommandOptions options;
  std::string out_dir;
  std::uint64_t seed = 0;
  int trials = 0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", options.config, "experiment config (INI)");
    cmd->add_option("--out", out_dir, "output directory (overrides config)");
    cmd->add_option("--seed", seed, "base seed (overrides config)");
    cmd->add_option("--trials", trials, "Monte Carlo trials (overrides config)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--threads", options.threads, "worker threads")->check(CLI::PositiveNumber);
  };

  auto* design = app.add_subcommand("design", "design the Layer 1 and Layer 2 converters");
  add_common(design);
  auto* sweep = app.add_subcommand("sweep", "run the rating, heterogeneity and frontier sweeps");
  add_common(sweep);

  std::string design_file;
  std::string capabilities_file;
  auto* flow = app.add_subcommand("flow", "optimal power flow for one battery set");
  flow->add_option("--design", design_file, "design file written by `design`")->required();
  flow->add_option("--capabilities", capabilities_file, "battery power capabilities")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : hippp::cli::kExitConfigError;
  }

  for (auto* cmd : {design, sweep}) {
    if (cmd->count("--out")) options.out = out_dir;
    if (cmd->count("--seed")) options.seed = seed;
    if (cmd->count("--trials")) options.trials = trials;
  }

  if (*design) return hippp::cli::cmd_design(options, std::cout, std::cerr);
  if (*sweep) return hippp::cli::cmd_sweep(options, std::cout, std::cerr);
  return hippp::cli::cmd_flow(design_file, capabilities_file, std::cout, std::cerr);
}
