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

constexpr fd::Base kBases[] = {fd::Base::kEF, fd::Base::kEF1, fd::Base::kEFX,
                               fd::Base::kEFL};

fd::Instance CycleInstance() {
  return Make(3, {{"H", 2, {"5/2", "2", "2"}},
                  {"a", 1, {"1", "3/2", "1"}},
                  {"b", 1, {"1", "1", "1/2"}},
                  {"c", 2, {"1", "7/10", "1/2"}},
                  {"d", 2, {"1", "7/10", "1/10"}},
                  {"e", 2, {"1/10", "7/10", "1/10"}},
                  {"f", 1, {"1/10", "7/10", "1/10"}}});
}

fd::Allocation CycleAllocation(const fd::Instance& in) {
  return Bundles(in, {{"b", "c", "d", "e", "f"}, {"H", "a"}, {"H", "c", "d", "e"}});
}

TEST(Notion, NamesRoundTrip) {
  for (const char* text : {"ef", "ef1", "efx", "efl", "ef_wc", "ef1_wc", "efx_wc", "efl_wc"}) {
    const fd::Criterion c = fd::ParseNotion(text).For(fd::Orientation::kGoods);
    EXPECT_EQ(c.Name(), text);
  }
  EXPECT_THROW(fd::ParseNotion("efy"), fd::InputError);
  EXPECT_THROW(fd::ParseOrientation("both"), fd::InputError);
  const fd::Criterion c{fd::Base::kEFX, fd::Orientation::kGoods, true};
  EXPECT_EQ(c.FullName(), "efx_wc/goods");
  EXPECT_EQ(c.Complement().orientation, fd::Orientation::kChores);
  EXPECT_EQ(c.Complement().Complement(), c);
}

TEST(CriterionEval, EflInstanceAgentOneEnviesUpToOne) {
  const auto in = Make(3, {{"H", 1, {"1000"}}, {"a", 2, {"100"}}, {"b", 1, {"1"}},
                           {"c", 1, {"2"}}, {"d", 1, {"2"}}});
  const fd::Bundle own = fd::Bundle::Of({1, 2});        // {a, b}
  const fd::Bundle other = fd::Bundle::Of({1, 3, 4});   // {a, c, d}
  const fd::Criterion ef1_wc{fd::Base::kEF1, fd::Orientation::kGoods, true};
  EXPECT_FALSE(fd::CriterionHolds(ef1_wc, in.values(0), own, other));
  const fd::Criterion efl{fd::Base::kEFL, fd::Orientation::kGoods, false};
  EXPECT_TRUE(fd::CriterionHolds(efl, in.values(0), own, other));
}

TEST(CriterionEval, EqualBundlesAreAlwaysFair) {
  const auto in = Copies1239();
  const fd::Bundle b = fd::Bundle::Of({0, 3});
  for (fd::Base base : kBases) {
    for (bool wc : {false, true}) {
      EXPECT_TRUE(fd::CriterionHolds({base, fd::Orientation::kGoods, wc}, in.values(0), b, b));
    }
  }
}

TEST(CriterionEval, ChoresEfxSingleChoreBundle) {
  const auto in = Make(1, {{"t3", 1, {"-3"}}, {"t4", 1, {"-9"}}});
  const fd::Criterion efx{fd::Base::kEFX, fd::Orientation::kChores, false};
  EXPECT_TRUE(fd::CriterionHolds(efx, in.values(0), fd::Bundle::Of({1}), fd::Bundle::Of({0})));
  const fd::Criterion ef{fd::Base::kEF, fd::Orientation::kChores, false};
  EXPECT_FALSE(fd::CriterionHolds(ef, in.values(0), fd::Bundle::Of({1}), fd::Bundle::Of({0})));
}

TEST(IsFair, WitnessAllocationOfCopiesInstance) {
  const auto in = Copies1239();
  const auto a = Copies1239Witness(in);
  EXPECT_TRUE(fd::IsFair(in, a, {fd::Base::kEFX, fd::Orientation::kGoods, true}).fair);
  const auto efx = fd::IsFair(in, a, {fd::Base::kEFX, fd::Orientation::kGoods, false});
  EXPECT_FALSE(efx.fair);
  ASSERT_FALSE(efx.witnesses.empty());
  for (const auto& w : efx.witnesses) EXPECT_EQ(w.envious, 2);
  EXPECT_TRUE(efx.HasWitness(2, 0) || efx.HasWitness(2, 1));
  // EFX_WC does not imply EFL.
  EXPECT_FALSE(fd::IsFair(in, a, {fd::Base::kEFL, fd::Orientation::kGoods, false}).fair);
}

TEST(IsFair, SingleAgentIsFair) {
  const auto in = Make(1, {{"x", 1, {"3"}}});
  const fd::Allocation a({fd::Bundle::Of({0})});
  for (fd::Base base : kBases) {
    EXPECT_TRUE(fd::IsFair(in, a, {base, fd::Orientation::kGoods, false}).fair);
  }
}

TEST(IsFair, OrientationMismatchThrows) {
  const auto in = Copies1239();
  EXPECT_THROW(fd::IsFair(in, Copies1239Witness(in),
                          {fd::Base::kEFX, fd::Orientation::kChores, false}),
               fd::OrientationError);
}

TEST(IsFair, InvalidAllocationThrows) {
  const auto in = Copies1239();
  const auto bad = Bundles(in, {{"t1"}, {"t2"}, {"t3"}});
  EXPECT_THROW(fd::IsFair(in, bad, {fd::Base::kEF, fd::Orientation::kGoods, false}),
               fd::InputError);
}

// Every criterion, both orientations, against the definition-level oracle.
TEST(IsFair, AgreesWithOracleOnRandomInstances) {
  fd::Rng rng(2024);
  int compared = 0;
  for (int round = 0; round < 150; ++round) {
    const bool chores = round % 2 == 1;
    const fd::Instance in = fd::RandomInstance(rng, {2, 4, 1, 5, 4, 0}, chores);
    const auto problem = ToProblem(in);
    for (int k = 0; k < 6; ++k) {
      const fd::Allocation a = fd::RandomAllocation(rng, in);
      const auto alloc = ToAlloc(a);
      for (fd::Base base : kBases) {
        for (bool wc : {false, true}) {
          const fd::Orientation o = chores ? fd::Orientation::kChores : fd::Orientation::kGoods;
          if (!in.Admits(o)) continue;
          const fd::FairnessReport r = fd::IsFair(in, a, {base, o, wc});
          const auto expected = oracle::Violations(problem, alloc, ToNotion(base), chores, wc);
          ASSERT_EQ(r.witnesses.size(), expected.size());
          for (std::size_t w = 0; w < expected.size(); ++w) {
            EXPECT_EQ(r.witnesses[w].envious, expected[w].first);
            EXPECT_EQ(r.witnesses[w].envied, expected[w].second);
          }
          ++compared;
        }
      }
    }
  }
  EXPECT_GT(compared, 5000);
}

TEST(IsFair, EfxWitnessItemIsAnOffendingGood) {
  const auto in = Copies1239();
  const auto a = Copies1239Witness(in);
  const auto r = fd::IsFair(in, a, {fd::Base::kEFX, fd::Orientation::kGoods, false});
  for (const auto& w : r.witnesses) {
    ASSERT_TRUE(w.item.has_value());
    fd::Bundle rest = a.bundle(w.envied);
    rest.Erase(*w.item);
    EXPECT_LT(fd::BundleValue(in, w.envious, a.bundle(w.envious)),
              fd::BundleValue(in, w.envious, rest));
  }
}

TEST(EnvyGraph, CycleInstanceHasTwoCycle) {
  const auto in = CycleInstance();
  const fd::EnvyGraph g(in, CycleAllocation(in));
  EXPECT_TRUE(g.HasEdge(0, 1));
  EXPECT_TRUE(g.HasEdge(1, 0));
  EXPECT_TRUE(g.IsCycle({0, 1}));
  const auto cycle = g.FindCycle();
  ASSERT_TRUE(cycle.has_value());
  EXPECT_EQ(*cycle, (std::vector<int>{0, 1}));
}

TEST(EnvyGraph, IdenticalValueBundlesGiveEmptyGraph) {
  const auto in = Make(3, {{"x", 3, {"2"}}, {"y", 3, {"5"}}});
  const fd::EnvyGraph g(in, Bundles(in, {{"x", "y"}, {"x", "y"}, {"x", "y"}}));
  EXPECT_EQ(g.EdgeCount(), 0u);
  EXPECT_FALSE(g.FindCycle().has_value());
}

TEST(CancelEnvyCycle, CycleTableOutcome) {
  const auto in = CycleInstance();
  const auto before = CycleAllocation(in);
  EXPECT_TRUE(fd::IsFair(in, before, {fd::Base::kEFX, fd::Orientation::kGoods, true}).fair);
  const auto after = fd::CancelEnvyCycle(in, before, {0, 1});
  EXPECT_EQ(after, Bundles(in, {{"H", "a"}, {"b", "c", "d", "e", "f"}, {"H", "c", "d", "e"}}));
  const auto r = fd::IsFair(in, after, {fd::Base::kEF1, fd::Orientation::kGoods, true});
  EXPECT_FALSE(r.fair);
  EXPECT_TRUE(r.HasWitness(0, 2));
  // Values (7/2, 19/5, 27/10) against (16/5, 7/2, 27/10).
  EXPECT_EQ(fd::AgentValues(in, after),
            (std::vector<fd::Rational>{fd::Rational(7, 2), fd::Rational(19, 5),
                                       fd::Rational(27, 10)}));
  EXPECT_EQ(fd::AgentValues(in, before),
            (std::vector<fd::Rational>{fd::Rational(16, 5), fd::Rational(7, 2),
                                       fd::Rational(27, 10)}));
  EXPECT_TRUE(fd::ParetoDominates(in, after, before));
  EXPECT_FALSE(fd::ParetoDominates(in, before, after));
  // The cancelled cycle does not reappear among the same bundles.
  const fd::EnvyGraph g(in, after);
  EXPECT_FALSE(g.HasEdge(0, 1) && g.HasEdge(1, 0));
}

TEST(CancelEnvyCycle, EmptyCycleIsIdentityAndNonCycleThrows) {
  const auto in = CycleInstance();
  const auto a = CycleAllocation(in);
  EXPECT_EQ(fd::CancelEnvyCycle(in, a, {}), a);
  EXPECT_THROW(fd::CancelEnvyCycle(in, a, {0, 2}), fd::PreconditionError);
}

// Rotating bundles along an envy cycle keeps an EF1 allocation EF1.
TEST(CancelEnvyCycle, PreservesEf1OnSingleCopyGoods) {
  fd::Rng rng(99);
  const fd::Criterion ef1{fd::Base::kEF1, fd::Orientation::kGoods, false};
  int cancelled = 0;
  for (int round = 0; round < 400; ++round) {
    const fd::Instance in = fd::RandomInstance(rng, {2, 4, 2, 6, 6, 1});
    const fd::Allocation a = fd::RandomAllocation(rng, in);
    if (!OracleFair(in, a, ef1)) continue;
    const auto cycle = fd::EnvyGraph(in, a).FindCycle();
    if (!cycle) continue;
    const auto b = fd::CancelEnvyCycle(in, a, *cycle);
    EXPECT_TRUE(OracleFair(in, b, ef1));
    EXPECT_TRUE(fd::IsFair(in, b, ef1).fair);
    ++cancelled;
  }
  EXPECT_GT(cancelled, 10);
}

TEST(Pareto, SimpleCases) {
  const auto in = CycleInstance();
  const auto a = CycleAllocation(in);
  EXPECT_FALSE(fd::ParetoDominates(in, a, a));
  const auto two = Make(2, {{"x", 1, {"1"}}, {"y", 1, {"1"}}});
  const auto xy = Bundles(two, {{"x"}, {"y"}});
  const auto both = Bundles(two, {{"x", "y"}, {}});
  EXPECT_FALSE(fd::ParetoDominates(two, xy, both));
  EXPECT_FALSE(fd::ParetoDominates(two, both, xy));
}

TEST(Pareto, SingleAgentAndIdenticalValuations) {
  const auto one = Make(1, {{"x", 1, {"4"}}});
  EXPECT_TRUE(fd::IsParetoOptimal(one, fd::Allocation({fd::Bundle::Of({0})})).optimal);
  const auto in = Copies1239();
  for (const auto& a : fd::EnumerateAllocations(in)) {
    EXPECT_TRUE(fd::IsParetoOptimal(in, a).optimal);
  }
}

TEST(Pareto, OptimalityMatchesOracleAndDuality) {
  fd::Rng rng(8);
  for (int round = 0; round < 60; ++round) {
    const fd::Instance in = fd::RandomInstance(rng, {3, 3, 1, 4, 4, 0});
    const auto problem = ToProblem(in);
    const auto all = oracle::AllAllocations(problem);
    const fd::Allocation a = fd::RandomAllocation(rng, in);
    bool dominated = false;
    for (const auto& x : all) dominated = dominated || oracle::Dominates(problem, x, ToAlloc(a));
    const auto r = fd::IsParetoOptimal(in, a);
    EXPECT_EQ(r.optimal, !dominated);
    if (!r.optimal) {
      EXPECT_TRUE(fd::ParetoDominates(in, *r.dominating, a));
    }
    const auto dual = fd::Dualize(in, a);
    EXPECT_EQ(fd::IsParetoOptimal(dual.dual.instance, *dual.allocation).optimal, r.optimal);
  }
}

}  // namespace
