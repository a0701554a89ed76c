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

#include "cli/csv.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <string>

#include <boost/algorithm/string.hpp>
#include <fmt/format.h>

namespace hippp::cli {

namespace {

std::string real(double v) { return fmt::format("{:.6g}", v); }

double parse_real(const std::string& text, int line) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size()) {
    throw std::runtime_error(fmt::format("CSV line {}: '{}' is not a number", line, text));
  }
  return v;
}

}  // namespace

void write_records_csv(std::ostream& out, std::span<const MetricsRecord> records) {
  out << kCsvHeader << '\n';
  for (const auto& r : records) {
    out << fmt::format("{},{},{},{},{},{},{},{},{},{}\n", to_string(r.kind), real(r.rating_norm),
                       real(r.heterogeneity), r.trials, r.seed, real(r.util_mean),
                       real(r.util_std), real(r.eff_mean), real(r.proc_mean), real(r.out_mean));
  }
}

void write_records_csv(const std::filesystem::path& path,
                       std::span<const MetricsRecord> records) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(fmt::format("cannot write '{}'", path.string()));
  write_records_csv(out, records);
}

std::vector<MetricsRecord> read_records_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || boost::algorithm::trim_copy(line) != kCsvHeader) {
    throw std::runtime_error("CSV header does not match the metrics schema");
  }
  std::vector<MetricsRecord> records;
  int number = 1;
  while (std::getline(in, line)) {
    ++number;
    boost::algorithm::trim(line);
    if (line.empty()) continue;
    std::vector<std::string> cells;
    boost::algorithm::split(cells, line, boost::algorithm::is_any_of(","));
    if (cells.size() != 10) {
      throw std::runtime_error(fmt::format("CSV line {}: expected 10 fields", number));
    }
    MetricsRecord r;
    try {
      r.kind = parse_architecture_kind(cells[0]);
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error(fmt::format("CSV line {}: {}", number, e.what()));
    }
    r.rating_norm = parse_real(cells[1], number);
    r.heterogeneity = parse_real(cells[2], number);
    r.trials = std::stoi(cells[3]);
    r.seed = std::stoull(cells[4]);
    r.util_mean = parse_real(cells[5], number);
    r.util_std = parse_real(cells[6], number);
    r.eff_mean = parse_real(cells[7], number);
    r.proc_mean = parse_real(cells[8], number);
    r.out_mean = parse_real(cells[9], number);
    records.push_back(r);
  }
  return records;
}

MetricsRecord round_for_csv(const MetricsRecord& record) {
  const auto round6 = [](double v) { return std::strtod(real(v).c_str(), nullptr); };
  MetricsRecord r = record;
  r.rating_norm = round6(r.rating_norm);
  r.heterogeneity = round6(r.heterogeneity);
  r.util_mean = round6(r.util_mean);
  r.util_std = round6(r.util_std);
  r.eff_mean = round6(r.eff_mean);
  r.eff_std = 0.0;
  r.proc_mean = round6(r.proc_mean);
  r.out_mean = round6(r.out_mean);
  return r;
}

}  // namespace hippp::cli
