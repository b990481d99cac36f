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

std::vector<fd::Criterion> GoodsCriteria() {
  std::vector<fd::Criterion> out;
  for (fd::Base b : {fd::Base::kEF, fd::Base::kEF1, fd::Base::kEFX, fd::Base::kEFL}) {
    for (bool wc : {false, true}) out.push_back({b, fd::Orientation::kGoods, wc});
  }
  return out;
}

TEST(ExistsFair, CopiesInstanceHasNoEfxButHasEfxWc) {
  const auto in = Copies1239();
  const auto efx = fd::ExistsFair(in, {fd::Base::kEFX, fd::Orientation::kGoods, false}, {}, true);
  EXPECT_FALSE(efx.exists);
  EXPECT_EQ(efx.checked, 81u);
  EXPECT_EQ(*efx.fair_count, 0u);
  const auto wc = fd::ExistsFair(in, {fd::Base::kEFX, fd::Orientation::kGoods, true});
  ASSERT_TRUE(wc.exists);
  EXPECT_TRUE(OracleFair(in, *wc.witness, {fd::Base::kEFX, fd::Orientation::kGoods, true}));
}

// Fair counts and first witnesses against a recursive brute force.
TEST(ExistsFair, CountsAgreeWithOracle) {
  fd::Rng rng(81);
  for (int round = 0; round < 60; ++round) {
    const bool chores = round % 2 == 1;
    const fd::Instance in = fd::RandomInstance(rng, {1, 3, 1, 4, 4, 0}, chores);
    const auto o = oracle::AllAllocations(ToProblem(in));
    const fd::Orientation orient = in.InferOrientation();
    for (fd::Criterion c : GoodsCriteria()) {
      c.orientation = orient;
      const auto cert = fd::ExistsFair(in, c, {}, true);
      std::uint64_t expected = 0;
      for (const auto& a : o) {
        expected += oracle::Fair(ToProblem(in), a, ToNotion(c.base),
                                 orient == fd::Orientation::kChores, c.without_commons)
                        ? 1
                        : 0;
      }
      EXPECT_EQ(*cert.fair_count, expected) << c.Name();
      EXPECT_EQ(cert.exists, expected > 0);
      EXPECT_EQ(cert.plan_count, o.size());
      if (cert.exists) {
        EXPECT_TRUE(OracleFair(in, *cert.witness, c));
        EXPECT_EQ(cert.checked, cert.witness_index + 1);
      }
    }
  }
}

TEST(ExistsFair, WitnessIndexIndependentOfJobs) {
  fd::Rng rng(82);
  for (int round = 0; round < 30; ++round) {
    const fd::Instance in = fd::RandomInstance(rng, {3, 4, 3, 5, 6, 2});
    const fd::Criterion c{fd::Base::kEFX, fd::Orientation::kGoods, false};
    const auto one = fd::ExistsFair(in, c, {fd::kDefaultEnumerationCap, 1}, true);
    const auto four = fd::ExistsFair(in, c, {fd::kDefaultEnumerationCap, 4}, true);
    EXPECT_EQ(one.exists, four.exists);
    EXPECT_EQ(one.witness_index, four.witness_index);
    EXPECT_EQ(one.fair_count, four.fair_count);
  }
}

TEST(ExistsFair, BudgetAndOrientation) {
  const auto in = Copies1239();
  EXPECT_THROW(fd::ExistsFair(in, {fd::Base::kEFX, fd::Orientation::kGoods, false}, {10, 1}),
               fd::BudgetExceeded);
  EXPECT_THROW(fd::ExistsFair(in, {fd::Base::kEFX, fd::Orientation::kChores, false}),
               fd::OrientationError);
}

TEST(ChoresCharacterization, RandomSingleCopyChores) {
  fd::Rng rng(83);
  for (int round = 0; round < 80; ++round) {
    const fd::Instance in = fd::RandomInstance(rng, {3, 3, 1, 5, 6, 1}, true);
    const auto r = fd::CheckChoresCharacterization(in);
    EXPECT_TRUE(r.holds);
    const bool oracle_exists = [&] {
      for (const auto& a : oracle::AllAllocations(ToProblem(in))) {
        if (oracle::Fair(ToProblem(in), a, oracle::Notion::kEFX, true, false)) return true;
      }
      return false;
    }();
    EXPECT_EQ(r.chores.exists, oracle_exists);
  }
}

TEST(ChoresCharacterization, SingleAgentAndPreconditions) {
  const auto one = Make(1, {{"x", 1, {"-3"}}, {"y", 1, {"-1"}}});
  const auto r = fd::CheckChoresCharacterization(one);
  EXPECT_TRUE(r.holds);
  EXPECT_TRUE(r.chores.exists);
  EXPECT_THROW(fd::CheckChoresCharacterization(Copies1239()), fd::OrientationError);
  EXPECT_THROW(fd::CheckChoresCharacterization(Make(2, {{"x", 2, {"-1"}}})),
               fd::PreconditionError);
}

TEST(MaxNashWelfare, AgreesWithOracleAndTakesEarliestTie) {
  fd::Rng rng(84);
  for (int round = 0; round < 80; ++round) {
    const fd::Instance in = fd::RandomInstance(rng, {1, 3, 1, 4, 4, 0});
    const auto best = fd::MaxNashWelfare(in);
    const auto p = ToProblem(in);
    oracle::Q max = -1;
    for (const auto& a : oracle::AllAllocations(p)) max = std::max(max, oracle::NashProduct(p, a));
    EXPECT_EQ(ToQ(best.welfare), max);
    const fd::EnumerationPlan plan(in);
    for (std::uint64_t k = 0; k < best.index; ++k) {
      EXPECT_LT(fd::NashWelfare(in, plan.Decode(k)), best.welfare);
    }
    EXPECT_EQ(fd::MaxNashWelfare(in, {fd::kDefaultEnumerationCap, 4}).index, best.index);
  }
}

TEST(MaxNashWelfare, SmallEpsilonInstance) {
  const auto in = Make(3, {{"a", 2, {"1", "1", "1/1000000"}},
                           {"b", 1, {"1", "1/1000000", "1/1000000"}},
                           {"c", 1, {"1", "1/1000000", "1/1000000"}},
                           {"d", 1, {"1/1000000", "1/1000000", "1"}}});
  const auto best = fd::MaxNashWelfare(in);
  EXPECT_EQ(best.welfare, fd::Rational(3));
  EXPECT_EQ(best.allocation, Bundles(in, {{"a", "b", "c"}, {"a"}, {"d"}}));
  EXPECT_THROW(fd::MaxNashWelfare(Make(1, {{"x", 1, {"-1"}}})), fd::OrientationError);
}

}  // namespace
