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

#ifndef HIPPP_TOOLS_CLI_COMMANDS_HPP_
#define HIPPP_TOOLS_CLI_COMMANDS_HPP_

#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <ostream>
#include <vector>

#include "cli/config.hpp"

namespace hippp::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitRuntimeError = 3;

struct CommandOptions {
  std::filesystem::path config;  // empty: built-in defaults
  std::optional<std::filesystem::path> out;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  int threads = 1;
};

// Config file plus command-line overrides. Throws ConfigError.
ExperimentConfig resolve_config(const CommandOptions& options);

// Each command returns an exit code and reports failures on `err`.
int cmd_design(const CommandOptions& options, std::ostream& out, std::ostream& err);
int cmd_sweep(const CommandOptions& options, std::ostream& out, std::ostream& err);
int cmd_flow(const std::filesystem::path& design_file,
             const std::filesystem::path& capabilities_file, std::ostream& out,
             std::ostream& err);

// Whitespace or comma separated positive reals; '#' starts a comment.
std::vector<double> read_capabilities(std::istream& in);

}  // namespace hippp::cli

#endif  // HIPPP_TOOLS_CLI_COMMANDS_HPP_
