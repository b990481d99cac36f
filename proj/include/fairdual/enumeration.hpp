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

// Exhaustive enumeration of exclusive allocations. An allocation is a choice,
// per type t, of the k_t agents holding a copy. Choices are ordered
// lexicographically by sorted agent list and combined as an odometer with
// type 0 as the most significant digit, which fixes a global index for every
// allocation.

#ifndef FAIRDUAL_ENUMERATION_HPP_
#define FAIRDUAL_ENUMERATION_HPP_

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "fairdual/errors.hpp"
#include "fairdual/model.hpp"

namespace fairdual {

inline constexpr std::uint64_t kDefaultEnumerationCap = 50'000'000;

// The cap from FAIRDUAL_ENUM_CAP when set to a positive integer, else the
// default.
inline std::uint64_t EnumerationCapFromEnv() {
  const char* env = std::getenv("FAIRDUAL_ENUM_CAP");
  if (env == nullptr || *env == '\0') return kDefaultEnumerationCap;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (end == nullptr || *end != '\0' || v == 0) {
    throw InputError("FAIRDUAL_ENUM_CAP must be a positive integer, got '" +
                     std::string(env) + "'");
  }
  return v;
}

struct EnumerationOptions {
  std::uint64_t cap = kDefaultEnumerationCap;
  int jobs = 1;

  static EnumerationOptions FromEnv(int jobs = 1) {
    return {EnumerationCapFromEnv(), jobs};
  }
};

// All agent subsets of the given size as bitmasks, in lexicographic order of
// their sorted member lists.
inline std::vector<std::uint64_t> AgentSubsets(int agents, int size) {
  std::vector<std::uint64_t> out;
  std::vector<int> pick(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) pick[static_cast<std::size_t>(i)] = i;
  while (true) {
    std::uint64_t mask = 0;
    for (int a : pick) mask |= std::uint64_t{1} << a;
    out.push_back(mask);
    int pos = size - 1;
    while (pos >= 0 &&
           pick[static_cast<std::size_t>(pos)] == agents - size + pos) {
      --pos;
    }
    if (pos < 0) break;
    ++pick[static_cast<std::size_t>(pos)];
    for (int q = pos + 1; q < size; ++q) {
      pick[static_cast<std::size_t>(q)] = pick[static_cast<std::size_t>(q - 1)] + 1;
    }
  }
  return out;
}

inline std::uint64_t SaturatingMultiply(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

inline std::uint64_t Binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return r;
}

class EnumerationPlan {
 public:
  explicit EnumerationPlan(const Instance& instance)
      : agents_(instance.agent_count()) {
    count_ = 1;
    for (std::size_t t = 0; t < instance.type_count(); ++t) {
      count_ = SaturatingMultiply(
          count_, Binomial(agents_, instance.copies(t)));
    }
    if (count_ == std::numeric_limits<std::uint64_t>::max()) return;
    choices_.reserve(instance.type_count());
    for (std::size_t t = 0; t < instance.type_count(); ++t) {
      choices_.push_back(AgentSubsets(agents_, instance.copies(t)));
    }
  }

  int agent_count() const { return agents_; }
  std::size_t type_count() const { return choices_.size(); }
  // Number of exclusive allocations; saturates at 2^64 - 1.
  std::uint64_t count() const { return count_; }
  const std::vector<std::uint64_t>& choices(std::size_t t) const {
    return choices_[t];
  }

  void RequireWithin(std::uint64_t cap) const {
    if (count_ > cap) throw BudgetExceeded(count_, cap);
  }

  // Per-type choice digits of the allocation at `index`.
  std::vector<std::size_t> Digits(std::uint64_t index) const {
    std::vector<std::size_t> digits(choices_.size());
    for (std::size_t t = choices_.size(); t-- > 0;) {
      const std::uint64_t radix = choices_[t].size();
      digits[t] = static_cast<std::size_t>(index % radix);
      index /= radix;
    }
    return digits;
  }

  Allocation Decode(std::uint64_t index) const {
    return FromDigits(Digits(index));
  }

  Allocation FromDigits(const std::vector<std::size_t>& digits) const {
    std::vector<Bundle> bundles(static_cast<std::size_t>(agents_));
    for (std::size_t t = 0; t < choices_.size(); ++t) {
      const std::uint64_t mask = choices_[t][digits[t]];
      for (int a = 0; a < agents_; ++a) {
        if ((mask >> a) & 1U) bundles[static_cast<std::size_t>(a)].Insert(t);
      }
    }
    return Allocation(std::move(bundles));
  }

  // Global index of a valid allocation.
  std::uint64_t IndexOf(const Allocation& allocation) const {
    std::uint64_t index = 0;
    for (std::size_t t = 0; t < choices_.size(); ++t) {
      std::uint64_t mask = 0;
      for (int a = 0; a < agents_; ++a) {
        if (allocation.bundle(a).Contains(t)) mask |= std::uint64_t{1} << a;
      }
      const auto& c = choices_[t];
      const auto it = std::find(c.begin(), c.end(), mask);
      if (it == c.end()) throw InputError("allocation not in plan");
      index = index * c.size() + static_cast<std::uint64_t>(it - c.begin());
    }
    return index;
  }

  // Calls visit(index, allocation) for indices in [begin, end) in order;
  // stops early when visit returns false. Returns the number visited.
  template <typename Visit>
  std::uint64_t ForRange(std::uint64_t begin, std::uint64_t end,
                         Visit&& visit) const {
    if (begin >= end) return 0;
    std::vector<std::size_t> digits = Digits(begin);
    Allocation current = FromDigits(digits);
    std::uint64_t visited = 0;
    for (std::uint64_t index = begin;; ++index) {
      ++visited;
      if (!visit(index, static_cast<const Allocation&>(current))) break;
      if (index + 1 >= end) break;
      // Odometer step; flip only the agents whose membership changes.
      for (std::size_t t = choices_.size(); t-- > 0;) {
        const auto& c = choices_[t];
        const std::uint64_t before = c[digits[t]];
        const bool wrap = digits[t] + 1 == c.size();
        digits[t] = wrap ? 0 : digits[t] + 1;
        const std::uint64_t changed = before ^ c[digits[t]];
        for (int a = 0; a < agents_; ++a) {
          if ((changed >> a) & 1U) {
            Bundle& b = current.bundle(a);
            if (b.Contains(t)) {
              b.Erase(t);
            } else {
              b.Insert(t);
            }
          }
        }
        if (!wrap) break;
      }
    }
    return visited;
  }

  template <typename Visit>
  std::uint64_t ForEach(Visit&& visit) const {
    return ForRange(0, count_, std::forward<Visit>(visit));
  }

 private:
  int agents_;
  std::uint64_t count_ = 0;
  std::vector<std::vector<std::uint64_t>> choices_;
};

// Every exclusive allocation of the instance, in plan order.
inline std::vector<Allocation> EnumerateAllocations(
    const Instance& instance, std::uint64_t cap = kDefaultEnumerationCap) {
  const EnumerationPlan plan(instance);
  plan.RequireWithin(cap);
  std::vector<Allocation> out;
  out.reserve(static_cast<std::size_t>(plan.count()));
  plan.ForEach([&](std::uint64_t, const Allocation& a) {
    out.push_back(a);
    return true;
  });
  return out;
}

namespace internal {

// Splits [0, count) into `jobs` contiguous ranges and runs work(begin, end,
// worker) on each.
template <typename Work>
void RunRanges(std::uint64_t count, int jobs, Work&& work) {
  const auto workers = static_cast<std::uint64_t>(std::max(1, jobs));
  if (workers == 1 || count < 2 * workers) {
    work(std::uint64_t{0}, count, std::size_t{0});
    return;
  }
  std::vector<std::thread> threads;
  const std::uint64_t chunk = count / workers;
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t begin = w * chunk;
    const std::uint64_t end = w + 1 == workers ? count : begin + chunk;
    threads.emplace_back(
        [&work, begin, end, w] { work(begin, end, static_cast<std::size_t>(w)); });
  }
  for (auto& t : threads) t.join();
}

}  // namespace internal

// Index of the first allocation satisfying `pred`, if any. Workers abandon
// their range once a smaller hit is known, so the answer does not depend on
// the job count.
template <typename Pred>
std::optional<std::uint64_t> FindFirst(const EnumerationPlan& plan,
                                       const EnumerationOptions& options,
                                       Pred&& pred) {
  plan.RequireWithin(options.cap);
  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  std::atomic<std::uint64_t> best{kNone};
  internal::RunRanges(
      plan.count(), options.jobs,
      [&](std::uint64_t begin, std::uint64_t end, std::size_t) {
        plan.ForRange(begin, end, [&](std::uint64_t index, const Allocation& a) {
          if (index >= best.load(std::memory_order_relaxed)) return false;
          if (pred(a)) {
            std::uint64_t seen = best.load();
            while (index < seen && !best.compare_exchange_weak(seen, index)) {
            }
            return false;
          }
          return true;
        });
      });
  if (best.load() == kNone) return std::nullopt;
  return best.load();
}

// Best allocation under `better(score_a, score_b)` (strictly better), keeping
// the earliest index on ties. `score` maps an allocation to a comparable value.
template <typename Score, typename Better>
auto FindBest(const EnumerationPlan& plan, const EnumerationOptions& options,
              Score&& score, Better&& better)
    -> std::pair<std::uint64_t, decltype(score(std::declval<const Allocation&>()))> {
  using Value = decltype(score(std::declval<const Allocation&>()));
  plan.RequireWithin(options.cap);
  const auto workers = static_cast<std::size_t>(std::max(1, options.jobs));
  std::vector<std::optional<std::pair<std::uint64_t, Value>>> local(workers);
  internal::RunRanges(
      plan.count(), options.jobs,
      [&](std::uint64_t begin, std::uint64_t end, std::size_t w) {
        auto& mine = local[w];
        plan.ForRange(begin, end, [&](std::uint64_t index, const Allocation& a) {
          Value v = score(a);
          if (!mine || better(v, mine->second)) mine.emplace(index, std::move(v));
          return true;
        });
      });
  std::optional<std::pair<std::uint64_t, Value>> result;
  for (auto& m : local) {
    if (!m) continue;
    if (!result || better(m->second, result->second) ||
        (!better(result->second, m->second) && m->first < result->first)) {
      result = std::move(m);
    }
  }
  if (!result) throw PreconditionError("empty enumeration");
  return *std::move(result);
}

}  // namespace fairdual

#endif  // FAIRDUAL_ENUMERATION_HPP_
