// Copyright 2026 The Poisson Prophet Authors.
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

#include "pprophet/dist_spec.hpp"

#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "pprophet/json_io.hpp"
#include "pprophet/rng.hpp"

namespace pprophet {
namespace {

TEST(DistSpecTest, ParsesAndNormalizes) {
  const FiniteDist d = parse_dist_spec(" 2:1, 1:3 ");
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d.atom(0), 1.0);
  EXPECT_EQ(d.prob(0), 0.75);
  EXPECT_EQ(d.prob(1), 0.25);
  EXPECT_EQ(parse_dist_spec("1:1"), FiniteDist::point_mass(1.0));
  EXPECT_EQ(parse_dist_spec("1e-3:2,+5:2").atom(0), 1e-3);
}

TEST(DistSpecTest, RejectsMalformed) {
  for (const char* bad : {"", "1", "1:", ":1", "a:1", "1:1,", "1:1;2:1", "1:-1",
                          "-1:1", "0:1", "1:0", "1:1x", "nan:1", "inf:1"}) {
    EXPECT_THROW(parse_dist_spec(bad), DomainError) << bad;
  }
  EXPECT_NO_THROW(parse_dist_spec("0:1,1:1", Law::kGeneral));
}

TEST(DistSpecTest, RoundTripIsExact) {
  UniformSource u(Xoshiro256(71));
  for (int i = 0; i < 500; ++i) {
    const FiniteDist d = testing::random_law(u, 1, 10);
    const std::string s = format_dist_spec(d);
    EXPECT_EQ(parse_dist_spec(s), d) << s;
    EXPECT_EQ(format_dist_spec(parse_dist_spec(s)), s);
  }
}

TEST(DistSpecTest, JsonRoundTrip) {
  UniformSource u(Xoshiro256(72));
  for (int i = 0; i < 200; ++i) {
    const FiniteDist d = testing::random_law(u, 1, 10);
    const nlohmann::json j = nlohmann::json::parse(dist_to_json(d).dump());
    EXPECT_EQ(dist_from_json(j), d);
  }
  EXPECT_THROW(dist_from_json(nlohmann::json::parse(R"({"atoms":[1,2],"probs":[0.5,0.4]})")),
               DomainError);
  EXPECT_THROW(dist_from_json(nlohmann::json::parse(R"({"atoms":[1]})")), DomainError);
}

TEST(DistSpecTest, Numbers) {
  EXPECT_EQ(parse_int("1e6"), 1'000'000);
  EXPECT_EQ(parse_int(" 42 "), 42);
  EXPECT_THROW(parse_int("1.5"), DomainError);
  EXPECT_THROW(parse_double("1.0.0"), DomainError);
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(parse_double(format_double(1.0 / 3.0)), 1.0 / 3.0);
}

TEST(RenewalSpecTest, RoundTrip) {
  const RenewalDist t = parse_renewal_spec("1:1,5:3");
  EXPECT_EQ(t.support(), (std::vector<std::int64_t>{1, 5}));
  EXPECT_EQ(t.probs()[1], 0.75);
  const RenewalDist back = parse_renewal_spec(format_renewal_spec(t));
  EXPECT_EQ(back.support(), t.support());
  EXPECT_EQ(back.probs(), t.probs());
  EXPECT_THROW(parse_renewal_spec("0:1"), DomainError);
  EXPECT_THROW(parse_renewal_spec("1.5:1"), DomainError);
  EXPECT_THROW(parse_renewal_spec("x"), DomainError);
}

}  // namespace
}  // namespace pprophet
