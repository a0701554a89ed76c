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

#include <cmath>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

namespace hippp::cli {
namespace {

MetricsRecord random_record(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  MetricsRecord r;
  r.kind = static_cast<ArchitectureKind>(rng() % 3);
  r.rating_norm = u(rng);
  r.heterogeneity = u(rng) * 0.3;
  r.trials = 1 + static_cast<int>(rng() % 5000);
  r.seed = rng();
  r.util_mean = u(rng);
  r.util_std = u(rng) * 1e-3;
  r.eff_mean = rng() % 7 == 0 ? std::nan("") : 0.85 + 0.15 * u(rng);
  r.proc_mean = u(rng) * 1e-5;
  r.out_mean = u(rng) * 12345.678;
  return r;
}

void expect_same(const MetricsRecord& a, const MetricsRecord& b) {
  EXPECT_EQ(a.kind, b.kind);
  EXPECT_EQ(a.rating_norm, b.rating_norm);
  EXPECT_EQ(a.heterogeneity, b.heterogeneity);
  EXPECT_EQ(a.trials, b.trials);
  EXPECT_EQ(a.seed, b.seed);
  EXPECT_EQ(a.util_mean, b.util_mean);
  EXPECT_EQ(a.util_std, b.util_std);
  if (std::isnan(a.eff_mean)) EXPECT_TRUE(std::isnan(b.eff_mean));
  else EXPECT_EQ(a.eff_mean, b.eff_mean);
  EXPECT_EQ(a.proc_mean, b.proc_mean);
  EXPECT_EQ(a.out_mean, b.out_mean);
}

TEST(Csv, HeaderAndRows) {
  MetricsRecord r;
  r.kind = ArchitectureKind::kLSHiPPP;
  r.rating_norm = 0.15;
  r.heterogeneity = 0.2;
  r.trials = 1000;
  r.seed = 1;
  r.util_mean = 0.961234567;
  r.eff_mean = 0.98;
  std::ostringstream out;
  write_records_csv(out, std::vector<MetricsRecord>{r});
  EXPECT_EQ(out.str(), std::string(kCsvHeader) +
                           "\nLSHiPPP,0.15,0.2,1000,1,0.961235,0,0.98,0,0\n");
}

TEST(Csv, RoundTripRecoversRoundedRecords) {
  std::mt19937_64 rng(17);
  std::vector<MetricsRecord> records;
  for (int i = 0; i < 200; ++i) records.push_back(round_for_csv(random_record(rng)));
  std::stringstream buffer;
  write_records_csv(buffer, records);
  const auto back = read_records_csv(buffer);
  ASSERT_EQ(back.size(), records.size());
  for (size_t i = 0; i < records.size(); ++i) expect_same(records[i], back[i]);
}

TEST(Csv, RoundingIsIdempotent) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 100; ++i) {
    const MetricsRecord once = round_for_csv(random_record(rng));
    expect_same(once, round_for_csv(once));
  }
}

TEST(Csv, RejectsMalformedInput) {
  std::istringstream no_header("LSHiPPP,0.15\n");
  EXPECT_THROW(read_records_csv(no_header), std::runtime_error);
  std::istringstream short_row(std::string(kCsvHeader) + "\nLSHiPPP,0.15\n");
  EXPECT_THROW(read_records_csv(short_row), std::runtime_error);
  std::istringstream bad_kind(std::string(kCsvHeader) + "\nXPP,0,0,1,1,0,0,0,0,0\n");
  EXPECT_THROW(read_records_csv(bad_kind), std::runtime_error);
}

}  // namespace
}  // namespace hippp::cli
