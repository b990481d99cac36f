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

// Exhaustive existence certificates and Nash welfare maximization.

#ifndef FAIRDUAL_SEARCH_HPP_
#define FAIRDUAL_SEARCH_HPP_

#include <atomic>
#include <cstdint>
#include <optional>
#include <vector>

#include "fairdual/criteria.hpp"
#include "fairdual/duality.hpp"
#include "fairdual/enumeration.hpp"
#include "fairdual/errors.hpp"
#include "fairdual/model.hpp"

namespace fairdual {

struct ExistenceCertificate {
  bool exists = false;
  std::optional<Allocation> witness;  // first fair allocation in plan order
  std::uint64_t witness_index = 0;
  // Allocations examined: witness index + 1 when one exists, else all.
  std::uint64_t checked = 0;
  std::uint64_t plan_count = 0;
  // Number of fair allocations; set only by a full sweep.
  std::optional<std::uint64_t> fair_count;
};

inline ExistenceCertificate ExistsFair(
    const Instance& instance, const Criterion& criterion,
    const EnumerationOptions& options = EnumerationOptions::FromEnv(),
    bool count_all = false) {
  RequireOrientation(instance, criterion.orientation);
  const EnumerationPlan plan(instance);
  ExistenceCertificate out;
  out.plan_count = plan.count();
  auto fair = [&](const Allocation& a) {
    return IsFairUnchecked(instance, a, criterion);
  };
  if (count_all) {
    plan.RequireWithin(options.cap);
    std::atomic<std::uint64_t> total{0};
    internal::RunRanges(
        plan.count(), options.jobs,
        [&](std::uint64_t begin, std::uint64_t end, std::size_t) {
          std::uint64_t mine = 0;
          plan.ForRange(begin, end, [&](std::uint64_t, const Allocation& a) {
            mine += fair(a) ? 1 : 0;
            return true;
          });
          total += mine;
        });
    out.fair_count = total.load();
  }
  const auto hit = FindFirst(plan, options, fair);
  if (hit) {
    out.exists = true;
    out.witness = plan.Decode(*hit);
    out.witness_index = *hit;
    out.checked = *hit + 1;
  } else {
    out.checked = plan.count();
  }
  return out;
}

struct ChoresCharacterization {
  bool holds = true;
  ExistenceCertificate chores;  // EFX on the chores instance
  ExistenceCertificate goods;   // EFX_WC on its dual, n - 1 copies per type
};

// EFX for single-copy chores exists iff EFX_WC exists for the dual goods.
inline ChoresCharacterization CheckChoresCharacterization(
    const Instance& instance,
    const EnumerationOptions& options = EnumerationOptions::FromEnv()) {
  if (!instance.IsNonPositive()) {
    throw OrientationError("characterization needs a chores instance");
  }
  for (std::size_t t = 0; t < instance.type_count(); ++t) {
    if (instance.copies(t) != 1) {
      throw PreconditionError("characterization needs single copies");
    }
  }
  ChoresCharacterization out;
  out.chores = ExistsFair(instance, {Base::kEFX, Orientation::kChores, false},
                          options);
  const DualResult dual = Dualize(instance);
  out.goods = ExistsFair(dual.dual.instance,
                         {Base::kEFX, Orientation::kGoods, true}, options);
  out.holds = out.chores.exists == out.goods.exists;
  return out;
}

struct NashWelfareResult {
  Allocation allocation;
  Rational welfare;
  std::uint64_t index = 0;
};

inline Rational NashWelfare(const Instance& instance,
                            const Allocation& allocation) {
  Rational product(1);
  for (int i = 0; i < instance.agent_count(); ++i) {
    product *= BundleValue(instance.values(i), allocation.bundle(i));
  }
  return product;
}

// Maximizes prod_i v_i(A_i); ties go to the first allocation in plan order.
inline NashWelfareResult MaxNashWelfare(
    const Instance& instance,
    const EnumerationOptions& options = EnumerationOptions::FromEnv()) {
  if (!instance.IsNonNegative()) {
    throw OrientationError("Nash welfare is defined for goods");
  }
  const EnumerationPlan plan(instance);
  auto [index, welfare] = FindBest(
      plan, options,
      [&](const Allocation& a) { return NashWelfare(instance, a); },
      [](const Rational& a, const Rational& b) { return a > b; });
  return {plan.Decode(index), std::move(welfare), index};
}

}  // namespace fairdual

#endif  // FAIRDUAL_SEARCH_HPP_
