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

#ifndef HIPPP_TOOLS_CLI_CSV_HPP_
#define HIPPP_TOOLS_CLI_CSV_HPP_

#include <filesystem>
#include <istream>
#include <ostream>
#include <span>
#include <string_view>
#include <vector>

#include "hippp/evaluate.hpp"

namespace hippp::cli {

inline constexpr std::string_view kCsvHeader =
    "arch,rating_norm,heterogeneity,trials,seed,util_mean,util_std,eff_mean,proc_mean,out_mean";

// One header row, then one row per record; reals use 6 significant digits.
void write_records_csv(std::ostream& out, std::span<const MetricsRecord> records);
void write_records_csv(const std::filesystem::path& path, std::span<const MetricsRecord> records);

// Inverse of write_records_csv. eff_std is not part of the schema and
// reads back as zero. Throws std::runtime_error on malformed input.
std::vector<MetricsRecord> read_records_csv(std::istream& in);

// The record as it survives a CSV round trip.
MetricsRecord round_for_csv(const MetricsRecord& record);

}  // namespace hippp::cli

#endif  // HIPPP_TOOLS_CLI_CSV_HPP_
