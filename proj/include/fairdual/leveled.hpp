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

// EFX_WC for goods with copies when every agent has leveled preferences.
//
// Round robin leaves bundle sizes on at most two levels. While some agent i
// EFX_WC-envies some j, i is on the lower level; i swaps its worst good in
// A_i \ A_j for its best good in A_j \ A_i. Sizes never change, and the sum
// of lower-level agents' ordinal ranks strictly grows, bounding the number
// of swaps by n |T|^2.

#ifndef FAIRDUAL_LEVELED_HPP_
#define FAIRDUAL_LEVELED_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fairdual/criteria.hpp"
#include "fairdual/errors.hpp"
#include "fairdual/model.hpp"

namespace fairdual {

// Copies of each type go to the next k_t agents cyclically; the cursor
// carries over from one type to the next.
inline Allocation RoundRobinInit(const Instance& instance) {
  const int n = instance.agent_count();
  std::vector<Bundle> bundles(static_cast<std::size_t>(n));
  int cursor = 0;
  for (std::size_t t = 0; t < instance.type_count(); ++t) {
    for (int c = 0; c < instance.copies(t); ++c) {
      bundles[static_cast<std::size_t>((cursor + c) % n)].Insert(t);
    }
    cursor = (cursor + instance.copies(t)) % n;
  }
  return Allocation(std::move(bundles));
}

// Rank 1..|T| of each type for the agent, by (value, type index) ascending.
inline std::vector<long> OrdinalRanks(const Instance& instance, int agent) {
  const std::size_t m = instance.type_count();
  std::vector<std::size_t> order(m);
  for (std::size_t t = 0; t < m; ++t) order[t] = t;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return instance.value(agent, a) < instance.value(agent, b);
  });
  std::vector<long> rank(m);
  for (std::size_t r = 0; r < m; ++r) rank[order[r]] = static_cast<long>(r) + 1;
  return rank;
}

// Agents on the lower level, or none when all sizes agree. Throws
// PreconditionError on three or more distinct sizes.
inline std::vector<bool> LowerLevel(const Allocation& allocation) {
  std::size_t lo = SIZE_MAX;
  std::size_t hi = 0;
  for (const Bundle& b : allocation.bundles()) {
    lo = std::min(lo, b.size());
    hi = std::max(hi, b.size());
  }
  std::vector<bool> lower;
  for (const Bundle& b : allocation.bundles()) {
    if (b.size() != lo && b.size() != hi) {
      throw PreconditionError("allocation has more than two bundle sizes");
    }
    lower.push_back(lo != hi && b.size() == lo);
  }
  return lower;
}

inline long Potential(const Instance& instance, const Allocation& allocation) {
  RequireValidAllocation(instance, allocation);
  const std::vector<bool> lower = LowerLevel(allocation);
  long psi = 0;
  for (int i = 0; i < instance.agent_count(); ++i) {
    if (!lower[static_cast<std::size_t>(i)]) continue;
    const std::vector<long> rank = OrdinalRanks(instance, i);
    allocation.bundle(i).ForEach([&](std::size_t t) { psi += rank[t]; });
  }
  return psi;
}

struct SwapStep {
  int envious = 0;
  int envied = 0;
  std::size_t g_max = 0;  // moves to the envious agent
  std::size_t g_min = 0;  // moves to the envied agent
  long psi_before = 0;
  long psi_after = 0;
};

struct LeveledSolution {
  Allocation allocation;
  Allocation initial;
  std::vector<SwapStep> trace;
};

inline LeveledSolution SolveLeveledEfxWc(const Instance& instance) {
  if (!instance.IsNonNegative()) {
    throw OrientationError("leveled solver needs a goods instance");
  }
  for (int i = 0; i < instance.agent_count(); ++i) {
    const LeveledCheck c = CheckLeveled(instance.values(i));
    if (!c.leveled) {
      throw PreconditionError(
          "agent " + std::to_string(i + 1) +
          " is not leveled: some bundle of size " + std::to_string(c.size) +
          " is worth at least as much as some bundle of size " +
          std::to_string(c.size + 1));
    }
  }
  const Criterion efx_wc{Base::kEFX, Orientation::kGoods, true};
  const long n = instance.agent_count();
  const long m = static_cast<long>(instance.type_count());
  const long bound = n * m * m;

  LeveledSolution out;
  out.initial = RoundRobinInit(instance);
  Allocation a = out.initial;
  long psi = Potential(instance, a);
  while (true) {
    std::optional<std::pair<int, int>> pair;
    for (int i = 0; i < n && !pair; ++i) {
      for (int j = 0; j < n && !pair; ++j) {
        if (i != j && !CriterionHolds(efx_wc, instance.values(i), a.bundle(i),
                                      a.bundle(j))) {
          pair.emplace(i, j);
        }
      }
    }
    if (!pair) break;
    const auto [i, j] = *pair;
    if (a.bundle(i).size() >= a.bundle(j).size()) {
      throw std::logic_error("envious agent is not on the lower level");
    }
    const auto values = instance.values(i);
    std::optional<std::size_t> g_max;
    a.bundle(j).Minus(a.bundle(i)).ForEach([&](std::size_t t) {
      if (!g_max || values[t] > values[*g_max]) g_max = t;
    });
    std::optional<std::size_t> g_min;
    a.bundle(i).Minus(a.bundle(j)).ForEach([&](std::size_t t) {
      if (!g_min || values[t] < values[*g_min]) g_min = t;
    });
    if (!g_max || !g_min || !(values[*g_max] > values[*g_min])) {
      throw std::logic_error("swap does not improve the envious agent");
    }
    a.bundle(i).Erase(*g_min);
    a.bundle(i).Insert(*g_max);
    a.bundle(j).Erase(*g_max);
    a.bundle(j).Insert(*g_min);
    const long next = Potential(instance, a);
    if (next <= psi) throw std::logic_error("potential did not increase");
    out.trace.push_back({i, j, *g_max, *g_min, psi, next});
    psi = next;
    if (static_cast<long>(out.trace.size()) > bound) {
      throw std::logic_error("swap count exceeds n |T|^2");
    }
  }
  out.allocation = std::move(a);
  return out;
}

}  // namespace fairdual

#endif  // FAIRDUAL_LEVELED_HPP_
