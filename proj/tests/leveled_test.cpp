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

#include "support.hpp"

namespace {

namespace fd = fairdual;
using namespace testing_support;

TEST(RoundRobin, SizesDifferByAtMostOne) {
  const auto in = Make(3, {{"a", 2, {"1"}}, {"b", 2, {"1"}}, {"c", 3, {"1"}}, {"d", 1, {"1"}}});
  const auto a = fd::RoundRobinInit(in);
  EXPECT_EQ(a.bundle(0).size(), 3u);
  EXPECT_EQ(a.bundle(1).size(), 3u);
  EXPECT_EQ(a.bundle(2).size(), 2u);
  const auto full = Make(3, {{"a", 3, {"1"}}, {"b", 3, {"1"}}});
  const auto f = fd::RoundRobinInit(full);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(f.bundle(i), full.AllTypes());
  EXPECT_EQ(fd::Potential(full, f), 0);
}

TEST(RoundRobin, AlwaysValid) {
  fd::Rng rng(91);
  for (int round = 0; round < 1000; ++round) {
    const fd::Instance in = fd::RandomInstance(rng, {1, 6, 1, 10, 3, 0});
    const auto a = fd::RoundRobinInit(in);
    EXPECT_TRUE(fd::IsValidAllocation(in, a));
    std::size_t lo = SIZE_MAX, hi = 0;
    for (const auto& b : a.bundles()) {
      lo = std::min(lo, b.size());
      hi = std::max(hi, b.size());
    }
    EXPECT_LE(hi - lo, 1u);
  }
}

TEST(Leveled, UniformValuesNeedNoSwaps) {
  const auto in = Make(3, {{"a", 2, {"1"}}, {"b", 1, {"1"}}, {"c", 2, {"1"}}, {"d", 1, {"1"}}});
  const auto r = fd::SolveLeveledEfxWc(in);
  EXPECT_TRUE(r.trace.empty());
  EXPECT_EQ(r.allocation, r.initial);
}

TEST(Leveled, RejectsUnleveledAndChores) {
  EXPECT_THROW(fd::SolveLeveledEfxWc(Copies1239()), fd::PreconditionError);
  EXPECT_THROW(fd::SolveLeveledEfxWc(Make(2, {{"x", 1, {"-1"}}})), fd::OrientationError);
}

TEST(Leveled, SampleNeedsSwaps) {
  const auto in = fd::ReadInstanceFile(std::string(FAIRDUAL_SAMPLE_DIR) + "/leveled.json");
  const auto r = fd::SolveLeveledEfxWc(in.instance);
  EXPECT_EQ(r.trace.size(), 4u);
  EXPECT_TRUE(OracleFair(in.instance, r.allocation, {fd::Base::kEFX, fd::Orientation::kGoods, true}));
}

// Output certified by the definition-level oracle; potential strictly
// increases and stays within n |T|^2.
TEST(Leveled, RandomInstancesAreCertified) {
  fd::Rng rng(92);
  std::size_t swaps = 0;
  for (int round = 0; round < 600; ++round) {
    const int n = static_cast<int>(rng.Between(1, 5));
    const int m = static_cast<int>(rng.Between(1, 8));
    const fd::Instance in = fd::RandomLeveledInstance(rng, n, m);
    const auto r = fd::SolveLeveledEfxWc(in);
    const long bound = static_cast<long>(n) * m * m;
    EXPECT_TRUE(fd::IsValidAllocation(in, r.allocation));
    EXPECT_TRUE(OracleFair(in, r.allocation, {fd::Base::kEFX, fd::Orientation::kGoods, true}));
    EXPECT_LE(static_cast<long>(r.trace.size()), bound);
    long previous = fd::Potential(in, r.initial);
    for (const auto& s : r.trace) {
      EXPECT_EQ(s.psi_before, previous);
      EXPECT_GT(s.psi_after, s.psi_before);
      EXPECT_LE(s.psi_after, bound);
      previous = s.psi_after;
    }
    // The dual allocation is EFX_WC for the dual chores.
    const auto d = fd::Dualize(in, r.allocation);
    EXPECT_TRUE(OracleFair(d.dual.instance, *d.allocation,
                           {fd::Base::kEFX, fd::Orientation::kChores, true}));
    swaps += r.trace.size();
  }
  EXPECT_GT(swaps, 0u);
}

TEST(Potential, RanksAndLevels) {
  const auto in = Make(2, {{"a", 1, {"3", "1"}}, {"b", 1, {"2", "2"}}, {"c", 1, {"1", "3"}}});
  EXPECT_EQ(fd::OrdinalRanks(in, 0), (std::vector<long>{3, 2, 1}));
  EXPECT_EQ(fd::OrdinalRanks(in, 1), (std::vector<long>{1, 2, 3}));
  // Agent 1 holds one item on the lower level.
  const auto a = Bundles(in, {{"a", "b"}, {"c"}});
  EXPECT_EQ(fd::LowerLevel(a), (std::vector<bool>{false, true}));
  EXPECT_EQ(fd::Potential(in, a), 3);
  EXPECT_THROW(fd::LowerLevel(fd::Allocation({fd::Bundle::Of({0}), fd::Bundle::Of({0, 1}),
                                              fd::Bundle::Of({0, 1, 2})})),
               fd::PreconditionError);
}

}  // namespace
