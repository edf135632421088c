// Copyright 2026 The polardeg Authors
//
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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "polardeg/error.hpp"
#include "polardeg/profile_json.hpp"
#include "support/fixtures.hpp"
#include "support/random_profile.hpp"

namespace polardeg {
namespace {

using nlohmann::json;

TEST(ProfileJson, ParsesDocumentedSchema) {
  const auto j = json::parse(R"({
    "n": 3, "d": 3,
    "isolated": [],
    "curves": [{"genus": 0, "degree": 1, "mu_transversal": 1,
                "special_points": [{"chi_fiber": 2, "branch_count": 1, "mu_section": 2},
                                   {"chi_fiber": 2, "branch_count": 1, "branch_multiplicities": [1],
                                    "mu_section": 2}]}]})");
  const auto p = profile_from_json(j);
  EXPECT_EQ(p.n, 3);
  ASSERT_EQ(p.curves.size(), 1u);
  EXPECT_EQ(p.curves[0].gamma(), 2);
  EXPECT_EQ(pol_one_dim(p).pol, 2);
}

TEST(ProfileJson, RejectsUnknownKeysAndNonIntegers) {
  EXPECT_THROW(profile_from_json(json::parse(R"({"n": 3, "d": 3, "extra": 1})")), SchemaError);
  EXPECT_THROW(profile_from_json(json::parse(R"({"n": 3.0, "d": 3})")), SchemaError);
  EXPECT_THROW(profile_from_json(json::parse(R"({"n": 3})")), SchemaError);
  EXPECT_THROW(profile_from_json(json::parse(R"({"n": 3, "d": 3, "isolated": [{"mu": 1, "nu": 2}]})")), SchemaError);
  EXPECT_THROW(profile_from_json(json::parse(R"({"n": 3, "d": 3, "isolated": [{"mu": 0}]})")), SchemaError);
  EXPECT_THROW(profile_from_json(json::parse(
                   R"({"n": 3, "d": 3, "curves": [{"genus": 0, "degree": 1, "mu_transversal": 1,
                       "special_points": [{"chi_fiber": 2, "branch_count": 2, "branch_multiplicities": [1]}]}]})")),
               SchemaError);
  EXPECT_THROW(profile_from_json(json::parse("[]")), SchemaError);
}

TEST(ProfileJson, RoundTripRandomProfiles) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = testing::random_profile(rng);
    const auto text = profile_to_json(p).dump();
    EXPECT_EQ(profile_from_json(json::parse(text)), p);
  }
}

TEST(ProfileJson, LoadFromFile) {
  const auto path = std::filesystem::temp_directory_path() / "polardeg_profile_test.json";
  {
    std::ofstream out(path);
    out << profile_to_json(testing::qt_profile()).dump(2);
  }
  EXPECT_EQ(load_profile(path), testing::qt_profile());
  {
    std::ofstream out(path);
    out << "{not json";
  }
  EXPECT_THROW(load_profile(path), SchemaError);
  std::filesystem::remove(path);
  EXPECT_THROW(load_profile(path), SchemaError);
}

TEST(ProfileJson, PolResultRoundTrip) {
  const auto r = pol_one_dim(testing::e1_profile());
  const auto back = pol_result_from_json(json::parse(pol_result_to_json(r).dump()));
  EXPECT_EQ(back.pol, r.pol);
  EXPECT_EQ(back.method, r.method);
  EXPECT_EQ(back.breakdown, r.breakdown);
}

}  // namespace
}  // namespace polardeg
