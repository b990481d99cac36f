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

// Share-based notions: proportional, maximin, truncated proportional and
// any-price shares, and the duality checks that relate them.

#ifndef FAIRDUAL_SHARES_HPP_
#define FAIRDUAL_SHARES_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fairdual/criteria.hpp"
#include "fairdual/duality.hpp"
#include "fairdual/enumeration.hpp"
#include "fairdual/errors.hpp"
#include "fairdual/exact_lp.hpp"
#include "fairdual/model.hpp"
#include "fairdual/rational.hpp"

namespace fairdual {

enum class ShareKind { kProp, kMms, kTps, kAps };

inline const char* ToString(ShareKind k) {
  switch (k) {
    case ShareKind::kProp: return "prop";
    case ShareKind::kMms: return "mms";
    case ShareKind::kTps: return "tps";
    case ShareKind::kAps: return "aps";
  }
  return "?";
}

inline ShareKind ParseShareKind(std::string_view text) {
  if (text == "prop") return ShareKind::kProp;
  if (text == "mms") return ShareKind::kMms;
  if (text == "tps") return ShareKind::kTps;
  if (text == "aps") return ShareKind::kAps;
  throw InputError("unknown share '" + std::string(text) +
                   "'; expected prop, mms, tps or aps");
}

inline void RequireAgent(const Instance& instance, int agent) {
  if (agent < 0 || agent >= instance.agent_count()) {
    throw InputError("agent " + std::to_string(agent + 1) + " out of range");
  }
}

// (1/n) sum_t k_t v_i(t).
inline Rational Prop(const Instance& instance, int agent) {
  RequireAgent(instance, agent);
  return TotalItemValue(instance, agent) / Rational(instance.agent_count());
}

// ---------------------------------------------------------------------------
// Maximin share.

struct MmsResult {
  Rational value;
  Allocation allocation;  // first maximizer in plan order
  std::uint64_t index = 0;
};

inline Rational MinBundleValue(const Instance& instance, int agent,
                               const Allocation& allocation) {
  const auto values = instance.values(agent);
  Rational worst = BundleValue(values, allocation.bundle(0));
  for (int j = 1; j < instance.agent_count(); ++j) {
    const Rational v = BundleValue(values, allocation.bundle(j));
    if (v < worst) worst = v;
  }
  return worst;
}

inline MmsResult Mms(const Instance& instance, int agent,
                     const EnumerationOptions& options =
                         EnumerationOptions::FromEnv()) {
  RequireAgent(instance, agent);
  const EnumerationPlan plan(instance);
  auto [index, value] = FindBest(
      plan, options,
      [&](const Allocation& a) { return MinBundleValue(instance, agent, a); },
      [](const Rational& a, const Rational& b) { return a > b; });
  return {std::move(value), plan.Decode(index), index};
}

// min_j v_i(A_j) for a valid witness: a certified lower bound on the MMS.
inline Rational VerifyMmsLowerBound(const Instance& instance, int agent,
                                    const Allocation& witness) {
  RequireAgent(instance, agent);
  RequireValidAllocation(instance, witness);
  return MinBundleValue(instance, agent, witness);
}

struct MmsBound {
  Rational value;
  // True when `value` is the MMS itself, false for a lower bound.
  bool exact = false;
  enum class Source { kExhaustive, kWitnessAtProp, kWitness } source =
      Source::kExhaustive;
};

inline const char* ToString(MmsBound::Source s) {
  switch (s) {
    case MmsBound::Source::kExhaustive: return "exhaustive";
    case MmsBound::Source::kWitnessAtProp: return "witness=prop";
    case MmsBound::Source::kWitness: return "witness";
  }
  return "?";
}

// Exact MMS when the plan fits the cap, otherwise the witness bound. For goods
// MMS <= PROP, so a witness reaching PROP is exact as well.
inline MmsBound MmsBoundFor(const Instance& instance, int agent,
                            const std::optional<Allocation>& witness,
                            const EnumerationOptions& options) {
  const EnumerationPlan plan(instance);
  if (plan.count() <= options.cap) {
    return {Mms(instance, agent, options).value, true,
            MmsBound::Source::kExhaustive};
  }
  if (!witness) throw BudgetExceeded(plan.count(), options.cap);
  Rational lower = VerifyMmsLowerBound(instance, agent, *witness);
  const bool at_prop =
      instance.IsNonNegative() && lower == Prop(instance, agent);
  return {std::move(lower), at_prop,
          at_prop ? MmsBound::Source::kWitnessAtProp
                  : MmsBound::Source::kWitness};
}

enum class Verdict { kSatisfied, kViolated, kUndetermined };

inline const char* ToString(Verdict v) {
  switch (v) {
    case Verdict::kSatisfied: return "satisfied";
    case Verdict::kViolated: return "violated";
    case Verdict::kUndetermined: return "undetermined";
  }
  return "?";
}

struct AlphaMmsAgent {
  Rational value;
  MmsBound mms;
  // value / MMS when the bound is positive; an upper bound on the true ratio
  // when the MMS is only bounded from below.
  std::optional<Rational> ratio;
  Verdict verdict = Verdict::kSatisfied;
};

struct AlphaMmsReport {
  Rational alpha;
  Verdict verdict = Verdict::kSatisfied;
  std::vector<AlphaMmsAgent> agents;
};

// v_i(A_i) >= alpha * MMS_i for every agent. `bounds` supplies one MmsBound
// per agent.
inline AlphaMmsReport CheckAlphaMms(const Instance& instance,
                                    const Allocation& allocation,
                                    const Rational& alpha,
                                    const std::vector<MmsBound>& bounds) {
  RequireValidAllocation(instance, allocation);
  if (alpha.sign() <= 0) throw InputError("alpha must be positive");
  if (instance.IsNonNegative() && alpha > Rational(1)) {
    throw InputError("alpha above 1 is only meaningful for chores");
  }
  if (bounds.size() != static_cast<std::size_t>(instance.agent_count())) {
    throw InputError("need one MMS bound per agent");
  }
  AlphaMmsReport report;
  report.alpha = alpha;
  bool undetermined = false;
  for (int i = 0; i < instance.agent_count(); ++i) {
    AlphaMmsAgent a;
    a.value = BundleValue(instance.values(i), allocation.bundle(i));
    a.mms = bounds[static_cast<std::size_t>(i)];
    if (a.mms.value.sign() > 0) a.ratio = a.value / a.mms.value;
    const Rational target = alpha * a.mms.value;
    if (a.value < target) {
      // MMS >= bound, so the requirement is at least as strict.
      a.verdict = Verdict::kViolated;
    } else {
      a.verdict = a.mms.exact ? Verdict::kSatisfied : Verdict::kUndetermined;
    }
    if (a.verdict == Verdict::kViolated) report.verdict = Verdict::kViolated;
    undetermined = undetermined || a.verdict == Verdict::kUndetermined;
    report.agents.push_back(std::move(a));
  }
  if (report.verdict != Verdict::kViolated && undetermined) {
    report.verdict = Verdict::kUndetermined;
  }
  return report;
}

inline AlphaMmsReport CheckAlphaMms(
    const Instance& instance, const Allocation& allocation,
    const Rational& alpha, const std::optional<Allocation>& witness = {},
    const EnumerationOptions& options = EnumerationOptions::FromEnv()) {
  std::vector<MmsBound> bounds;
  for (int i = 0; i < instance.agent_count(); ++i) {
    bounds.push_back(MmsBoundFor(instance, i, witness, options));
  }
  return CheckAlphaMms(instance, allocation, alpha, bounds);
}

// ---------------------------------------------------------------------------
// Truncated proportional share.

struct TpsResult {
  Rational value;
  // Goods: number of item copies truncated at `value`. Chores: zero.
  long truncated = 0;
};

inline TpsResult Tps(const Instance& instance, int agent) {
  RequireAgent(instance, agent);
  const Rational n(instance.agent_count());
  if (instance.IsNonPositive() && !instance.IsNonNegative()) {
    TpsResult out{Prop(instance, agent), 0};
    for (std::size_t t = 0; t < instance.type_count(); ++t) {
      out.value = Min(out.value, instance.value(agent, t));
    }
    return out;
  }
  if (!instance.IsNonNegative()) {
    throw OrientationError("truncated proportional share needs a sign-pure "
                           "instance");
  }
  // Largest z with (1/n) sum_g min(v(g), z) = z. With values a_1 >= a_2 >=
  // ... and the top j truncated, z = (sum_{i > j} a_i) / (n - j), which must
  // lie in [a_{j+1}, a_j].
  std::vector<Rational> items;
  for (std::size_t t = 0; t < instance.type_count(); ++t) {
    for (int c = 0; c < instance.copies(t); ++c) {
      items.push_back(instance.value(agent, t));
    }
  }
  std::sort(items.begin(), items.end(), std::greater<>());
  const long count = static_cast<long>(items.size());
  const long agents = instance.agent_count();
  std::vector<Rational> suffix(items.size() + 1);
  for (long i = count; i-- > 0;) {
    suffix[static_cast<std::size_t>(i)] =
        suffix[static_cast<std::size_t>(i + 1)] + items[static_cast<std::size_t>(i)];
  }
  auto at = [&](long i) -> Rational {  // a_{i+1} in 0-based terms, 0 past end
    return i < count ? items[static_cast<std::size_t>(i)] : Rational();
  };
  TpsResult best{Rational(), count};
  bool found = false;
  for (long j = 0; j < agents && j <= count; ++j) {
    const Rational z =
        suffix[static_cast<std::size_t>(j)] / Rational(agents - j);
    const bool below_top = j == 0 || z <= at(j - 1);
    const bool above_next = z >= at(j);
    if (below_top && above_next && (!found || z > best.value)) {
      best = {z, j};
      found = true;
    }
  }
  // Exactly n truncated: the rest must sum to zero, and any z <= a_n works.
  if (count >= agents && suffix[static_cast<std::size_t>(agents)].is_zero()) {
    const Rational z = at(agents - 1);
    if (!found || z > best.value) {
      best = {z, agents};
      found = true;
    }
  }
  if (!found) best = {Rational(), count};
  return best;
}

// ---------------------------------------------------------------------------
// Any-price share.
//
// Goods:  APS = min over prices p of max{ v(S) : p(S) <= b }.
// Chores: APS = min over prices p of max{ v(S) : p(S) >= b }.
// S ranges over subsets of the type set and p(S) = sum_{t in S} p_t. The
// minimum is attained at a bundle value tau; tau is achievable iff some
// normalized p prices every bundle worth more than tau out of reach, which
// is an LP with a slack delta to be maximized: goods p(S) - delta >= b,
// chores p(S) + delta <= b, and tau is achievable iff delta > 0.

enum class PriceNormalization {
  kPerType,  // sum_t p_t = 1
  kPerCopy,  // sum_t k_t p_t = 1
};

inline const char* ToString(PriceNormalization p) {
  return p == PriceNormalization::kPerType ? "per_type" : "per_copy";
}

inline PriceNormalization ParsePriceNormalization(std::string_view text) {
  if (text == "per_type") return PriceNormalization::kPerType;
  if (text == "per_copy") return PriceNormalization::kPerCopy;
  throw InputError("unknown price normalization '" + std::string(text) + "'");
}

inline constexpr std::size_t kMaxApsTypes = 16;

struct ApsResult {
  Rational value;
  std::vector<Rational> prices;
  Rational slack;
  Rational entitlement;
  PriceNormalization normalization = PriceNormalization::kPerType;
};

namespace internal {

struct ApsProblem {
  Orientation orientation;
  std::size_t types;
  std::vector<Rational> bundle_values;  // indexed by mask
  std::vector<Rational> weights;        // normalization coefficients
  Rational b;
};

// Maximizes delta; returns prices when delta > 0. `tau` absent means every
// nonempty or empty bundle must be excluded.
inline std::optional<std::pair<std::vector<Rational>, Rational>> ApsExcludes(
    const ApsProblem& p, const std::optional<Rational>& tau) {
  const std::size_t masks = p.bundle_values.size();
  auto above = [&](std::uint64_t s) {
    return !tau || p.bundle_values[s] > *tau;
  };
  LinearProgram lp;
  lp.variable_count = p.types + 1;
  lp.objective.assign(p.types + 1, Rational());
  lp.objective[p.types] = 1;
  {
    LinearRow norm;
    norm.coefficients = p.weights;
    norm.coefficients.push_back(Rational());
    norm.sense = RowSense::kEqual;
    norm.rhs = 1;
    lp.rows.push_back(std::move(norm));
    LinearRow cap;
    cap.coefficients.assign(p.types + 1, Rational());
    cap.coefficients[p.types] = 1;
    cap.rhs = 1;
    lp.rows.push_back(std::move(cap));
  }
  const bool goods = p.orientation == Orientation::kGoods;
  for (std::uint64_t s = 0; s < masks; ++s) {
    if (!above(s)) continue;
    // Goods: the excluded family is closed upward, so minimal members suffice
    // (prices are nonnegative). Chores: closed downward, maximal members.
    bool extreme = true;
    for (std::size_t t = 0; t < p.types && extreme; ++t) {
      const std::uint64_t bit = std::uint64_t{1} << t;
      if (goods && (s & bit) && above(s & ~bit)) extreme = false;
      if (!goods && !(s & bit) && above(s | bit)) extreme = false;
    }
    if (!extreme) continue;
    LinearRow row;
    row.coefficients.assign(p.types + 1, Rational());
    for (std::size_t t = 0; t < p.types; ++t) {
      if ((s >> t) & 1U) row.coefficients[t] = 1;
    }
    row.coefficients[p.types] = goods ? -1 : 1;
    row.sense = goods ? RowSense::kGreaterEqual : RowSense::kLessEqual;
    row.rhs = p.b;
    lp.rows.push_back(std::move(row));
  }
  const LpSolution sol = SolveLp(lp);
  if (sol.status != LpStatus::kOptimal || sol.objective.sign() <= 0) {
    return std::nullopt;
  }
  std::vector<Rational> prices(sol.x.begin(), sol.x.begin() + static_cast<std::ptrdiff_t>(p.types));
  return std::make_pair(std::move(prices), sol.objective);
}

}  // namespace internal

// The best bundle value the agent can reach at the given prices:
// max{v(S) : p(S) <= b} for goods, max{v(S) : p(S) >= b} for chores.
inline std::optional<Rational> ApsResponse(const Instance& instance, int agent,
                                           const std::vector<Rational>& prices,
                                           const Rational& b,
                                           Orientation orientation) {
  const std::size_t types = instance.type_count();
  std::optional<Rational> best;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << types); ++s) {
    Rational price;
    Rational value;
    for (std::size_t t = 0; t < types; ++t) {
      if ((s >> t) & 1U) {
        price += prices[t];
        value += instance.value(agent, t);
      }
    }
    const bool affordable =
        orientation == Orientation::kGoods ? price <= b : price >= b;
    if (affordable && (!best || value > *best)) best = value;
  }
  return best;
}

inline ApsResult Aps(const Instance& instance, int agent, const Rational& b,
                     PriceNormalization normalization =
                         PriceNormalization::kPerType) {
  RequireAgent(instance, agent);
  if (b.sign() <= 0 || b > Rational(1)) {
    throw InputError("entitlement must lie in (0, 1]");
  }
  const Orientation o = instance.InferOrientation();
  const std::size_t types = instance.type_count();
  if (types > kMaxApsTypes) {
    throw BudgetExceeded(std::uint64_t{1} << types,
                         std::uint64_t{1} << kMaxApsTypes);
  }
  internal::ApsProblem p{o, types, {}, {}, b};
  const std::uint64_t masks = std::uint64_t{1} << types;
  p.bundle_values.reserve(masks);
  for (std::uint64_t s = 0; s < masks; ++s) {
    p.bundle_values.push_back(BundleValue(instance.values(agent), Bundle(s)));
  }
  for (std::size_t t = 0; t < types; ++t) {
    p.weights.push_back(normalization == PriceNormalization::kPerType
                            ? Rational(1)
                            : Rational(instance.copies(t)));
  }
  if (types == 0 && normalization == PriceNormalization::kPerType) {
    throw InputError("any-price share needs at least one item type");
  }
  if (o == Orientation::kChores && internal::ApsExcludes(p, std::nullopt)) {
    throw PreconditionError(
        "any-price share undefined: some prices leave no bundle of weight "
        "at least the entitlement");
  }
  std::vector<Rational> thresholds = p.bundle_values;
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()),
                   thresholds.end());
  // Smallest achievable threshold; the largest is always achievable.
  std::size_t lo = 0;
  std::size_t hi = thresholds.size() - 1;
  auto best = internal::ApsExcludes(p, thresholds[hi]);
  if (!best) throw Error("any-price share: no feasible price vector");
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (auto r = internal::ApsExcludes(p, thresholds[mid])) {
      hi = mid;
      best = std::move(r);
    } else {
      lo = mid + 1;
    }
  }
  ApsResult out{thresholds[hi], std::move(best->first), std::move(best->second),
                b, normalization};
  const auto check = ApsResponse(instance, agent, out.prices, b, o);
  if (!check || *check != out.value) {
    throw Error("any-price share certificate failed to re-verify");
  }
  return out;
}

struct ApsDualityAgent {
  Rational aps;
  Rational dual_aps;
  Rational shift;  // v_i(T)
  bool identity = true;
};

struct ApsDualityCheck {
  bool holds = true;
  bool original_fair = true;
  bool dual_fair = true;
  std::vector<ApsDualityAgent> agents;
};

// APS-fairness of A at entitlement b against APS-fairness of the dual
// allocation at 1 - b, plus APS = dual APS + v_i(T) per agent. Needs every
// type to keep a copy on both sides.
inline ApsDualityCheck CheckApsEntitlementDuality(
    const Instance& instance, const Allocation& allocation, const Rational& b,
    PriceNormalization normalization = PriceNormalization::kPerType) {
  RequireValidAllocation(instance, allocation);
  const int n = instance.agent_count();
  for (std::size_t t = 0; t < instance.type_count(); ++t) {
    if (instance.copies(t) >= n) {
      throw PreconditionError("type '" + instance.type(t).name +
                              "' has n copies; its dual has none");
    }
  }
  if (b.sign() <= 0 || b >= Rational(1)) {
    throw InputError("entitlement must lie in (0, 1)");
  }
  const DualResult dual = Dualize(instance, allocation);
  const Rational dual_b = Rational(1) - b;
  ApsDualityCheck out;
  for (int i = 0; i < n; ++i) {
    ApsDualityAgent a;
    a.aps = Aps(instance, i, b, normalization).value;
    a.dual_aps = Aps(dual.dual.instance, i, dual_b, normalization).value;
    a.shift = dual.shifts[static_cast<std::size_t>(i)];
    a.identity = a.aps == a.dual_aps + a.shift;
    out.holds = out.holds && a.identity;
    out.original_fair =
        out.original_fair &&
        BundleValue(instance.values(i), allocation.bundle(i)) >= a.aps;
    out.dual_fair = out.dual_fair &&
                    BundleValue(dual.dual.instance.values(i),
                                dual.allocation->bundle(i)) >= a.dual_aps;
    out.agents.push_back(std::move(a));
  }
  out.holds = out.holds && out.original_fair == out.dual_fair;
  return out;
}

struct ApsCopyShift {
  bool holds = true;
  Rational before;
  Rational after;
  Rational good_value;
};

// Adds a type with n copies worth `good_value` to every agent and compares
// the agent's APS before and after.
inline ApsCopyShift ApsCopyShiftCheck(
    const Instance& instance, int agent, const Rational& good_value,
    const Rational& b,
    PriceNormalization normalization = PriceNormalization::kPerCopy) {
  RequireAgent(instance, agent);
  if (!instance.IsNonNegative() || good_value.sign() < 0) {
    throw OrientationError("copy shift is defined for goods");
  }
  std::string name = "g";
  while (instance.FindType(name)) name += "'";
  std::vector<ItemType> types = instance.types();
  types.push_back({name, instance.agent_count()});
  std::vector<std::vector<Rational>> values = instance.value_matrix();
  for (auto& row : values) row.push_back(good_value);
  const Instance extended(instance.agent_count(), std::move(types),
                          std::move(values));
  ApsCopyShift out;
  out.good_value = good_value;
  out.before = Aps(instance, agent, b, normalization).value;
  out.after = Aps(extended, agent, b, normalization).value;
  out.holds = out.after == out.before + good_value;
  return out;
}

// ---------------------------------------------------------------------------
// Share duality for PROP and MMS.

struct ShareDualityAgent {
  Rational share;
  Rational dual_share;
  Rational shift;
  bool identity = true;
};

struct ShareDualityCheck {
  bool holds = true;
  bool identity = true;
  bool original_fair = true;
  bool dual_fair = true;
  std::vector<ShareDualityAgent> agents;
};

inline Rational ShareOf(const Instance& instance, int agent, ShareKind kind,
                        const EnumerationOptions& options) {
  switch (kind) {
    case ShareKind::kProp: return Prop(instance, agent);
    case ShareKind::kMms: return Mms(instance, agent, options).value;
    default:
      throw InputError(std::string(ToString(kind)) +
                       " is not a linear share; duality check covers prop "
                       "and mms");
  }
}

// Per-agent shares on both sides and the shift identity. Depends only on
// the instance, so exhaustive checks compute it once.
inline std::vector<ShareDualityAgent> ShareDualityShares(
    const Instance& instance, ShareKind kind,
    const EnumerationOptions& options = EnumerationOptions::FromEnv()) {
  const DualResult dual = Dualize(instance);
  std::vector<ShareDualityAgent> out;
  for (int i = 0; i < instance.agent_count(); ++i) {
    ShareDualityAgent a;
    a.share = ShareOf(instance, i, kind, options);
    a.dual_share = ShareOf(dual.dual.instance, i, kind, options);
    a.shift = dual.shifts[static_cast<std::size_t>(i)];
    a.identity = a.share == a.dual_share + a.shift;
    out.push_back(std::move(a));
  }
  return out;
}

inline ShareDualityCheck CheckShareDuality(
    const Instance& instance, const Allocation& allocation,
    const std::vector<ShareDualityAgent>& shares) {
  RequireValidAllocation(instance, allocation);
  if (shares.size() != static_cast<std::size_t>(instance.agent_count())) {
    throw InputError("one share per agent expected");
  }
  const DualResult dual = Dualize(instance, allocation);
  ShareDualityCheck out;
  out.agents = shares;
  for (int i = 0; i < instance.agent_count(); ++i) {
    const ShareDualityAgent& a = shares[static_cast<std::size_t>(i)];
    out.identity = out.identity && a.identity;
    out.original_fair =
        out.original_fair &&
        BundleValue(instance.values(i), allocation.bundle(i)) >= a.share;
    out.dual_fair = out.dual_fair &&
                    BundleValue(dual.dual.instance.values(i),
                                dual.allocation->bundle(i)) >= a.dual_share;
  }
  out.holds = out.identity && out.original_fair == out.dual_fair;
  return out;
}

// s(v, M) = s(-v, dual M) + v(T) per agent, and s-fairness of A against
// s(v, M) matches s-fairness of the dual allocation.
inline ShareDualityCheck CheckShareDuality(
    const Instance& instance, const Allocation& allocation, ShareKind kind,
    const EnumerationOptions& options = EnumerationOptions::FromEnv()) {
  RequireValidAllocation(instance, allocation);
  return CheckShareDuality(instance, allocation,
                           ShareDualityShares(instance, kind, options));
}

}  // namespace fairdual

#endif  // FAIRDUAL_SHARES_HPP_
