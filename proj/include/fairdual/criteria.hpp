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

// Envy-based comparison criteria and fairness predicates.
//
// A criterion compares an agent's own bundle I against another bundle U. The
// goods forms are
//   EF   v(I) >= v(U)
//   EF1  U empty, or v(I) >= v(U \ {g}) for some g in U
//   EFX  v(I) >= v(U \ {g}) for every g in U
//   EFL  |U| <= 1, or v(I) >= max(v(U \ {g}), v(g)) for some g in U
// The chores form of f is its complement f^c(v, I, U) = f(-v, U, I), and the
// without-commons form evaluates on (I \ U, U \ I).

#ifndef FAIRDUAL_CRITERIA_HPP_
#define FAIRDUAL_CRITERIA_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fairdual/enumeration.hpp"
#include "fairdual/errors.hpp"
#include "fairdual/model.hpp"
#include "fairdual/rational.hpp"

namespace fairdual {

enum class Base { kEF, kEF1, kEFX, kEFL };

inline const char* ToString(Base base) {
  switch (base) {
    case Base::kEF: return "ef";
    case Base::kEF1: return "ef1";
    case Base::kEFX: return "efx";
    case Base::kEFL: return "efl";
  }
  return "?";
}

struct Criterion {
  Base base = Base::kEF;
  Orientation orientation = Orientation::kGoods;
  bool without_commons = false;

  // The complementary criterion: same base and lift, other orientation.
  Criterion Complement() const {
    return {base,
            orientation == Orientation::kGoods ? Orientation::kChores
                                               : Orientation::kGoods,
            without_commons};
  }
  Criterion WithoutCommons() const { return {base, orientation, true}; }

  // "efx_wc" style name; orientation is not part of it.
  std::string Name() const {
    return std::string(ToString(base)) + (without_commons ? "_wc" : "");
  }
  std::string FullName() const {
    return Name() + "/" + ToString(orientation);
  }

  friend bool operator==(const Criterion&, const Criterion&) = default;
};

// A notion name without orientation, e.g. {kEFX, true} for "efx_wc".
struct NotionName {
  Base base;
  bool without_commons;

  Criterion For(Orientation o) const { return {base, o, without_commons}; }
};

inline NotionName ParseNotion(std::string_view text) {
  bool wc = false;
  if (text.size() > 3 && text.substr(text.size() - 3) == "_wc") {
    wc = true;
    text.remove_suffix(3);
  }
  if (text == "ef") return {Base::kEF, wc};
  if (text == "ef1") return {Base::kEF1, wc};
  if (text == "efx") return {Base::kEFX, wc};
  if (text == "efl") return {Base::kEFL, wc};
  throw InputError("unknown notion '" + std::string(text) +
                   (wc ? "_wc" : "") + "'; expected ef, ef1, efx or efl with "
                   "optional _wc");
}

inline Orientation ParseOrientation(std::string_view text) {
  if (text == "goods") return Orientation::kGoods;
  if (text == "chores") return Orientation::kChores;
  throw InputError("unknown orientation '" + std::string(text) + "'");
}

// Outcome of one comparison. `item` is the offending item when there is one:
// for goods EFX the first g in U whose removal leaves envy; for chores EFX
// the first chore in I whose removal still leaves envy.
struct Comparison {
  bool fair = true;
  std::optional<std::size_t> item;
};

namespace internal {

// Goods form over an arbitrary value vector (possibly negated).
template <typename ValueAt>
Comparison EvaluateGoods(Base base, const ValueAt& value, Bundle own,
                         Bundle other) {
  Rational v_own;
  own.ForEach([&](std::size_t t) { v_own += value(t); });
  Rational v_other;
  other.ForEach([&](std::size_t t) { v_other += value(t); });
  // v(I) >= v(U) - v(g)  <=>  v(g) >= diff.
  const Rational diff = v_other - v_own;
  switch (base) {
    case Base::kEF:
      return {diff.sign() <= 0, std::nullopt};
    case Base::kEF1: {
      if (other.empty()) return {};
      bool ok = false;
      other.ForEach([&](std::size_t t) { ok = ok || value(t) >= diff; });
      return {ok, std::nullopt};
    }
    case Base::kEFX: {
      std::optional<std::size_t> bad;
      other.ForEach([&](std::size_t t) {
        if (!bad && value(t) < diff) bad = t;
      });
      return {!bad.has_value(), bad};
    }
    case Base::kEFL: {
      if (other.size() <= 1) return {};
      bool ok = false;
      other.ForEach([&](std::size_t t) {
        ok = ok || (value(t) >= diff && value(t) <= v_own);
      });
      return {ok, std::nullopt};
    }
  }
  return {};
}

}  // namespace internal

// Evaluates the criterion for an agent with per-type values `values`, own
// bundle `own` and compared bundle `other`. No sign checks.
inline Comparison EvaluateCriterion(const Criterion& c,
                                    std::span<const Rational> values,
                                    Bundle own, Bundle other) {
  if (c.without_commons) {
    const Bundle common = own.Intersect(other);
    own = own.Minus(common);
    other = other.Minus(common);
  }
  if (c.orientation == Orientation::kGoods) {
    return internal::EvaluateGoods(
        c.base, [&](std::size_t t) -> const Rational& { return values[t]; },
        own, other);
  }
  return internal::EvaluateGoods(
      c.base, [&](std::size_t t) { return -values[t]; }, other, own);
}

inline bool CriterionHolds(const Criterion& c, std::span<const Rational> values,
                           Bundle own, Bundle other) {
  return EvaluateCriterion(c, values, own, other).fair;
}

struct Witness {
  int envious = 0;
  int envied = 0;
  std::optional<std::size_t> item;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct FairnessReport {
  bool fair = true;
  Criterion criterion;
  // Ordered by (envious, envied).
  std::vector<Witness> witnesses;

  bool HasWitness(int envious, int envied) const {
    for (const auto& w : witnesses) {
      if (w.envious == envious && w.envied == envied) return true;
    }
    return false;
  }
};

// Throws OrientationError unless every value has the sign the criterion needs.
inline void RequireOrientation(const Instance& instance, Orientation o) {
  if (instance.sign() == InstanceSign::kMixed &&
      !instance.IsNonNegative() && !instance.IsNonPositive()) {
    throw OrientationError(
        "instance mixes goods and chores; envy criteria need a sign-pure "
        "instance");
  }
  if (!instance.Admits(o)) {
    throw OrientationError(std::string(ToString(o)) +
                           " criterion applied to a " +
                           (o == Orientation::kGoods ? "chores" : "goods") +
                           " instance");
  }
}

inline FairnessReport IsFair(const Instance& instance,
                             const Allocation& allocation,
                             const Criterion& criterion) {
  RequireOrientation(instance, criterion.orientation);
  RequireValidAllocation(instance, allocation);
  FairnessReport report;
  report.criterion = criterion;
  const int n = instance.agent_count();
  for (int i = 0; i < n; ++i) {
    const auto values = instance.values(i);
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const Comparison c = EvaluateCriterion(criterion, values,
                                             allocation.bundle(i),
                                             allocation.bundle(j));
      if (!c.fair) report.witnesses.push_back({i, j, c.item});
    }
  }
  report.fair = report.witnesses.empty();
  return report;
}

// Same verdict as IsFair without checks or witness collection; stops at the
// first violation. For enumeration loops over already validated data.
inline bool IsFairUnchecked(const Instance& instance,
                            const Allocation& allocation,
                            const Criterion& criterion) {
  const int n = instance.agent_count();
  for (int i = 0; i < n; ++i) {
    const auto values = instance.values(i);
    for (int j = 0; j < n; ++j) {
      if (i != j && !CriterionHolds(criterion, values, allocation.bundle(i),
                                    allocation.bundle(j))) {
        return false;
      }
    }
  }
  return true;
}

// Edge i -> j when v_i(A_i) < v_i(A_j).
class EnvyGraph {
 public:
  EnvyGraph(const Instance& instance, const Allocation& allocation)
      : n_(instance.agent_count()),
        edges_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_)) {
    RequireValidAllocation(instance, allocation);
    for (int i = 0; i < n_; ++i) {
      const auto values = instance.values(i);
      const Rational own = BundleValue(values, allocation.bundle(i));
      for (int j = 0; j < n_; ++j) {
        if (i != j && own < BundleValue(values, allocation.bundle(j))) {
          edges_[Index(i, j)] = true;
        }
      }
    }
  }

  int agent_count() const { return n_; }
  bool HasEdge(int i, int j) const { return edges_[Index(i, j)]; }
  std::size_t EdgeCount() const {
    std::size_t c = 0;
    for (bool e : edges_) c += e ? 1 : 0;
    return c;
  }
  std::vector<std::pair<int, int>> Edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        if (HasEdge(i, j)) out.emplace_back(i, j);
      }
    }
    return out;
  }

  bool IsCycle(const std::vector<int>& cycle) const {
    if (cycle.empty()) return true;
    std::vector<bool> seen(static_cast<std::size_t>(n_));
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const int a = cycle[k];
      const int b = cycle[(k + 1) % cycle.size()];
      if (a < 0 || a >= n_ || seen[static_cast<std::size_t>(a)]) return false;
      seen[static_cast<std::size_t>(a)] = true;
      if (b < 0 || b >= n_ || !HasEdge(a, b)) return false;
    }
    return true;
  }

  // A shortest cycle through the smallest agent that lies on any cycle, as
  // an agent list where each agent envies the next.
  std::optional<std::vector<int>> FindCycle() const {
    for (int s = 0; s < n_; ++s) {
      std::vector<int> parent(static_cast<std::size_t>(n_), -1);
      std::vector<int> queue{s};
      std::vector<bool> seen(static_cast<std::size_t>(n_));
      seen[static_cast<std::size_t>(s)] = true;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const int u = queue[head];
        for (int v = 0; v < n_; ++v) {
          if (!HasEdge(u, v)) continue;
          if (v == s) {
            std::vector<int> cycle;
            for (int w = u; w != -1; w = parent[static_cast<std::size_t>(w)]) {
              cycle.push_back(w);
            }
            std::reverse(cycle.begin(), cycle.end());
            return cycle;
          }
          if (!seen[static_cast<std::size_t>(v)]) {
            seen[static_cast<std::size_t>(v)] = true;
            parent[static_cast<std::size_t>(v)] = u;
            queue.push_back(v);
          }
        }
      }
    }
    return std::nullopt;
  }

 private:
  std::size_t Index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(j);
  }

  int n_;
  std::vector<bool> edges_;
};

// Each agent on the cycle takes the bundle of the agent it envies.
inline Allocation CancelEnvyCycle(const Instance& instance,
                                  const Allocation& allocation,
                                  const std::vector<int>& cycle) {
  const EnvyGraph graph(instance, allocation);
  if (!graph.IsCycle(cycle)) {
    throw PreconditionError("agent list is not a cycle of the envy graph");
  }
  Allocation out = allocation;
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    out.bundle(cycle[k]) = allocation.bundle(cycle[(k + 1) % cycle.size()]);
  }
  return out;
}

inline std::vector<Rational> AgentValues(const Instance& instance,
                                         const Allocation& allocation) {
  std::vector<Rational> out;
  for (int i = 0; i < instance.agent_count(); ++i) {
    out.push_back(BundleValue(instance.values(i), allocation.bundle(i)));
  }
  return out;
}

// True when `better` gives every agent at least as much as `base` and some
// agent strictly more.
inline bool ParetoDominates(const Instance& instance, const Allocation& better,
                            const Allocation& base) {
  RequireValidAllocation(instance, better);
  RequireValidAllocation(instance, base);
  bool strict = false;
  for (int i = 0; i < instance.agent_count(); ++i) {
    const auto values = instance.values(i);
    const Rational a = BundleValue(values, better.bundle(i));
    const Rational b = BundleValue(values, base.bundle(i));
    if (a < b) return false;
    strict = strict || a > b;
  }
  return strict;
}

struct ParetoResult {
  bool optimal = true;
  std::optional<Allocation> dominating;  // first in plan order
};

inline ParetoResult IsParetoOptimal(
    const Instance& instance, const Allocation& allocation,
    const EnumerationOptions& options = EnumerationOptions::FromEnv()) {
  RequireValidAllocation(instance, allocation);
  const std::vector<Rational> base = AgentValues(instance, allocation);
  const EnumerationPlan plan(instance);
  const auto hit = FindFirst(plan, options, [&](const Allocation& a) {
    bool strict = false;
    for (int i = 0; i < instance.agent_count(); ++i) {
      const Rational v = BundleValue(instance.values(i), a.bundle(i));
      const auto& b = base[static_cast<std::size_t>(i)];
      if (v < b) return false;
      strict = strict || v > b;
    }
    return strict;
  });
  if (!hit) return {};
  return {false, plan.Decode(*hit)};
}

}  // namespace fairdual

#endif  // FAIRDUAL_CRITERIA_HPP_
