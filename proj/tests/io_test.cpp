// Copyright 2026 The Authors.
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

#include "support.hpp"

namespace {

namespace fd = fairdual;
using namespace testing_support;

const std::string kFixtures = FAIRDUAL_FIXTURE_DIR;
const std::string kSamples = FAIRDUAL_SAMPLE_DIR;

TEST(JsonIo, InstanceRoundTrip) {
  fd::Rng rng(101);
  for (int round = 0; round < 100; ++round) {
    const fd::Instance in = fd::RandomInstance(rng, {1, 5, 1, 6, 9, 0}, round % 2 == 1);
    const fd::Json j = fd::InstanceToJson(in);
    const auto back = fd::InstanceFromJson(fd::ParseJsonText(j.dump(), "mem"));
    EXPECT_EQ(back.instance, in);
    const fd::Allocation a = fd::RandomAllocation(rng, in);
    EXPECT_EQ(fd::AllocationFromJson(fd::AllocationToJson(in, a), in), a);
  }
}

TEST(JsonIo, HeldTypesSurviveTwoDualizations) {
  const auto doc = fd::InstanceFromJson(fd::ParseJsonText(
      R"({"agents": 2, "types": [{"name": "x", "copies": 1, "values": ["1/2", 3]},
                                 {"name": "h", "copies": 2, "values": {"shared": 4}}]})",
      "mem"));
  const auto dual = fd::Dualize(doc);
  const fd::Json j = fd::InstanceToJson(dual.dual);
  EXPECT_EQ(j["types"][1]["copies"], 0);
  const auto again = fd::Dualize(fd::InstanceFromJson(j));
  EXPECT_EQ(again.dual, doc);
  EXPECT_EQ(fd::InstanceToJson(again.dual)["types"][0]["values"][0], "1/2");
}

TEST(JsonIo, RejectsFloatsAndReportsPaths) {
  try {
    fd::InstanceFromJson(fd::ParseJsonText(
        R"({"agents": 1, "types": [{"name": "x", "copies": 1, "values": [0.5]}]})", "mem"));
    FAIL();
  } catch (const fd::InputError& e) {
    EXPECT_NE(std::string(e.what()).find("$.types[0].values[0]"), std::string::npos);
  }
  EXPECT_THROW(fd::InstanceFromJson(fd::ParseJsonText(
                   R"({"agents": 2, "types": [{"name": "x", "copies": 3, "values": [1, 1]}]})",
                   "mem")),
               fd::InputError);
  EXPECT_THROW(fd::InstanceFromJson(fd::ParseJsonText(R"({"types": []})", "mem")),
               fd::InputError);
}

TEST(JsonIo, MalformedTextNamesTheLine) {
  try {
    fd::ParseJsonText("{\n  \"agents\": 1,\n  \"types\": [\n}", "bad.json");
    FAIL();
  } catch (const fd::InputError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("bad.json:4:", 0), 0u) << e.what();
  }
}

TEST(JsonIo, AllocationErrors) {
  const auto in = Copies1239();
  EXPECT_THROW(fd::AllocationFromJson(fd::ParseJsonText(R"({"bundles": [["zz"]]})", "m"), in),
               fd::InputError);
  EXPECT_THROW(
      fd::AllocationFromJson(fd::ParseJsonText(R"({"bundles": [["t1", "t1"]]})", "m"), in),
      fd::InputError);
}

TEST(JsonIo, SamplesLoad) {
  const auto in = fd::ReadInstanceFile(kSamples + "/copies-1239.json");
  const auto a = fd::ReadAllocationFile(kSamples + "/copies-1239-efxwc.json", in.instance);
  EXPECT_TRUE(fd::IsFair(in.instance, a, {fd::Base::kEFX, fd::Orientation::kGoods, true}).fair);
  EXPECT_THROW(fd::ReadInstanceFile(kSamples + "/missing.json"), fd::InputError);
}

TEST(Fixtures, EveryFixturePasses) {
  const auto registry = fd::FixtureRegistry(kFixtures);
  EXPECT_EQ(registry.size(), 14u);
  for (const auto& [id, path] : registry) {
    const auto r = fd::Replicate(id, kFixtures);
    EXPECT_TRUE(r.passed) << id;
    EXPECT_FALSE(r.claims.empty()) << id;
    for (const auto& c : r.claims) EXPECT_TRUE(c.passed) << id << ": " << c.summary << " " << c.detail;
  }
  EXPECT_THROW(fd::Replicate("no-such-fixture", kFixtures), fd::InputError);
}

TEST(Fixtures, WrongExpectationFails) {
  fd::Json j = fd::ReadJsonFile(kFixtures + "/tps-not-linear.json");
  j["claims"][0]["expect"] = 3;
  const auto r = fd::RunFixture(j);
  EXPECT_FALSE(r.passed);
  EXPECT_FALSE(r.claims[0].passed);
  EXPECT_TRUE(r.claims[1].passed);
}

TEST(Sweep, DeterministicForSeed) {
  fd::SweepConfig config;
  config.seed = 7;
  config.instances = 40;
  const std::string a = fd::SweepReportToJson(fd::Sweep(config)).dump();
  const std::string b = fd::SweepReportToJson(fd::Sweep(config)).dump();
  EXPECT_EQ(a, b);
  config.seed = 8;
  EXPECT_NE(fd::SweepReportToJson(fd::Sweep(config)).dump(), a);
}

TEST(Sweep, ZeroInstancesIsEmptyAndOk) {
  fd::SweepConfig config;
  config.instances = 0;
  const auto r = fd::Sweep(config);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.allocations, 0u);
  EXPECT_EQ(fd::SweepReportToJson(r)["ok"], true);
}

// Lattice edges and the ratio bounds, cross-checked on counts by the oracle.
TEST(Sweep, LatticeHoldsAndCountsMatchOracle) {
  fd::SweepConfig config;
  config.seed = 3;
  config.instances = 60;
  const auto r = fd::Sweep(config);
  EXPECT_TRUE(r.ok());
  fd::Rng rng(3);
  std::map<std::string, std::uint64_t> counts;
  std::uint64_t allocations = 0;
  for (long k = 0; k < config.instances; ++k) {
    const fd::Instance in = fd::RandomInstance(rng, config.shape);
    const auto p = ToProblem(in);
    for (const auto& a : oracle::AllAllocations(p)) {
      ++allocations;
      for (const auto& n : fd::LatticeNotions()) {
        const fd::Criterion c = n.For(fd::Orientation::kGoods);
        counts[c.Name()] += oracle::Fair(p, a, ToNotion(c.base), false, c.without_commons) ? 1 : 0;
      }
    }
  }
  EXPECT_EQ(r.allocations, allocations);
  for (const auto& [name, count] : counts) EXPECT_EQ(r.fair_counts.at(name), count) << name;
}

}  // namespace
