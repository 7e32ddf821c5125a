// Copyright 2026 The clsc-tkem Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "clsc/bench.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

namespace clsc {
namespace {

TEST(Bench, MeasuredRowsEqualReference) {
  for (Protocol p : {Protocol::kLsw, Protocol::kDktuts}) {
    EXPECT_EQ(count_sender(p).online, reference_row(p, Role::kSender).counts)
        << protocol_name(p);
    EXPECT_EQ(count_recipient(p).online, reference_row(p, Role::kRecipient).counts)
        << protocol_name(p);
  }
}

TEST(Bench, CombinedKeyIsOfflineWork) {
  EXPECT_EQ(count_sender(Protocol::kLsw).precompute.em_offline, 1u);
  EXPECT_EQ(count_recipient(Protocol::kLsw).precompute.em_offline, 1u);
  EXPECT_TRUE(count_recipient(Protocol::kDktuts).precompute.is_zero());
}

TEST(Bench, CountsDoNotDependOnSeed) {
  for (std::uint64_t seed : {2u, 3u, 99u}) {
    EXPECT_EQ(count_sender(Protocol::kDktuts, seed).online,
              count_sender(Protocol::kDktuts).online);
  }
}

TEST(Bench, ReferenceRowsAreComplete) {
  EXPECT_EQ(reference_rows().size(), 8u);
  int measured = 0;
  for (const auto& r : reference_rows()) measured += r.measured;
  EXPECT_EQ(measured, 4);
}

TEST(Bench, TimingReport) {
  EXPECT_TRUE(timing_bench(Protocol::kLsw, 0).phases.empty());
  TimingReport r = timing_bench(Protocol::kDktuts, 5);
  EXPECT_EQ(r.iterations, 5u);
  ASSERT_EQ(r.phases.size(), 3u);
  for (const auto& p : r.phases) EXPECT_LE(p.median_us, p.p95_us);
}

TEST(Bench, JsonTableMarksMatches) {
  auto doc = nlohmann::json::parse(cost_table_json());
  int matches = 0;
  for (const auto& row : doc["rows"]) {
    if (row.contains("match")) matches += row["match"].get<bool>();
  }
  EXPECT_EQ(matches, 4);
  EXPECT_NE(cost_table_text().find("match"), std::string::npos);
}

}  // namespace
}  // namespace clsc
