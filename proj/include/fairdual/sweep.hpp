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

// Seeded random instances and the notion-lattice / MMS-ratio sweep.
//
// Generation scheme "fairdual-gen-v1": std::mt19937_64 seeded with the sweep
// seed, bounded draws by rejection on the raw 64-bit output. Standard
// distributions are avoided because their output is not specified across
// library implementations.

#ifndef FAIRDUAL_SWEEP_HPP_
#define FAIRDUAL_SWEEP_HPP_

#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fairdual/criteria.hpp"
#include "fairdual/enumeration.hpp"
#include "fairdual/json_io.hpp"
#include "fairdual/model.hpp"
#include "fairdual/shares.hpp"

namespace fairdual {

inline constexpr const char* kGenerationScheme = "fairdual-gen-v1";

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, bound).
  std::uint64_t Below(std::uint64_t bound) {
    if (bound == 0) throw PreconditionError("empty range");
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - (max % bound + 1) % bound;
    while (true) {
      const std::uint64_t r = engine_();
      if (r <= limit) return r % bound;
    }
  }
  // Uniform in [lo, hi].
  long Between(long lo, long hi) {
    return lo + static_cast<long>(Below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::mt19937_64 engine_;
};

struct InstanceShape {
  int min_agents = 1;
  int max_agents = 3;
  int min_types = 1;
  int max_types = 4;
  long max_value = 4;  // values drawn from {0, ..., max_value}
  int max_copies = 0;  // 0 means up to the agent count
};

// Random goods instance; negate for chores.
inline Instance RandomInstance(Rng& rng, const InstanceShape& shape,
                               bool chores = false) {
  const int n = static_cast<int>(rng.Between(shape.min_agents, shape.max_agents));
  const int m = static_cast<int>(rng.Between(shape.min_types, shape.max_types));
  const int max_copies = shape.max_copies > 0 ? std::min(shape.max_copies, n) : n;
  std::vector<ItemType> types;
  std::vector<std::vector<Rational>> values(static_cast<std::size_t>(n));
  for (int t = 0; t < m; ++t) {
    types.push_back({"t" + std::to_string(t + 1),
                     static_cast<int>(rng.Between(1, max_copies))});
    for (int i = 0; i < n; ++i) {
      const long v = rng.Between(0, shape.max_value);
      values[static_cast<std::size_t>(i)].push_back(Rational(chores ? -v : v));
    }
  }
  return Instance(n, std::move(types), std::move(values));
}

inline Allocation RandomAllocation(Rng& rng, const Instance& instance) {
  const int n = instance.agent_count();
  std::vector<Bundle> bundles(static_cast<std::size_t>(n));
  for (std::size_t t = 0; t < instance.type_count(); ++t) {
    const auto subsets = AgentSubsets(n, instance.copies(t));
    const std::uint64_t mask = subsets[rng.Below(subsets.size())];
    for (int a = 0; a < n; ++a) {
      if ((mask >> a) & 1U) bundles[static_cast<std::size_t>(a)].Insert(t);
    }
  }
  return Allocation(std::move(bundles));
}

// Values 1 + r / (|T| * resolution) with r in [0, resolution): every value
// lies in [1, 1 + 1/|T|), which makes each agent leveled.
inline Instance RandomLeveledInstance(Rng& rng, int agents, int types,
                                      long resolution = 1000) {
  std::vector<ItemType> list;
  std::vector<std::vector<Rational>> values(static_cast<std::size_t>(agents));
  for (int t = 0; t < types; ++t) {
    list.push_back({"t" + std::to_string(t + 1),
                    static_cast<int>(rng.Between(1, agents))});
    for (int i = 0; i < agents; ++i) {
      const long r = rng.Between(0, resolution - 1);
      values[static_cast<std::size_t>(i)].push_back(
          Rational(1) + Rational(r, static_cast<long>(types) * resolution));
    }
  }
  return Instance(agents, std::move(list), std::move(values));
}

// The goods lattice: each pair (a, b) means a implies b.
inline const std::vector<std::pair<NotionName, NotionName>>& LatticeEdges() {
  static const std::vector<std::pair<NotionName, NotionName>> edges = {
      {{Base::kEF, false}, {Base::kEFX, false}},
      {{Base::kEFX, false}, {Base::kEFX, true}},
      {{Base::kEFX, true}, {Base::kEFL, true}},
      {{Base::kEFL, true}, {Base::kEF1, true}},
      {{Base::kEF1, true}, {Base::kEF1, false}},
      {{Base::kEFX, false}, {Base::kEFL, false}},
      {{Base::kEFL, false}, {Base::kEF1, false}},
  };
  return edges;
}

inline const std::vector<NotionName>& LatticeNotions() {
  static const std::vector<NotionName> notions = {
      {Base::kEF, false},  {Base::kEFX, false}, {Base::kEFX, true},
      {Base::kEFL, false}, {Base::kEFL, true},  {Base::kEF1, false},
      {Base::kEF1, true},
  };
  return notions;
}

struct SweepConfig {
  std::uint64_t seed = 1;
  long instances = 1000;
  InstanceShape shape;
  EnumerationOptions enumeration;
};

struct SweepViolation {
  std::string kind;  // "lattice" or "bound"
  std::string message;
  Instance instance;
  Allocation allocation;
};

struct SweepReport {
  SweepConfig config;
  std::uint64_t allocations = 0;
  std::map<std::string, std::uint64_t> fair_counts;
  // Smallest min_i v_i(A_i) / MMS_i over allocations passing each notion,
  // agents with MMS_i = 0 skipped.
  std::map<std::string, std::optional<Rational>> min_ratio;
  std::vector<SweepViolation> violations;

  bool ok() const { return violations.empty(); }
};

// MMS-ratio guarantees checked by the sweep.
inline const std::vector<std::pair<NotionName, Rational>>& RatioBounds() {
  static const std::vector<std::pair<NotionName, Rational>> bounds = {
      {{Base::kEFX, true}, Rational(4, 11)},
      {{Base::kEFL, true}, Rational(1, 3)},
  };
  return bounds;
}

inline SweepReport Sweep(const SweepConfig& config) {
  SweepReport report;
  report.config = config;
  for (const auto& n : LatticeNotions()) {
    const std::string name = n.For(Orientation::kGoods).Name();
    report.fair_counts[name] = 0;
    report.min_ratio[name] = std::nullopt;
  }
  Rng rng(config.seed);
  for (long k = 0; k < config.instances; ++k) {
    const Instance instance = RandomInstance(rng, config.shape);
    std::vector<Rational> mms;
    for (int i = 0; i < instance.agent_count(); ++i) {
      mms.push_back(Mms(instance, i, config.enumeration).value);
    }
    const EnumerationPlan plan(instance);
    plan.RequireWithin(config.enumeration.cap);
    plan.ForEach([&](std::uint64_t, const Allocation& a) {
      ++report.allocations;
      std::map<std::string, bool> fair;
      for (const auto& n : LatticeNotions()) {
        const Criterion c = n.For(Orientation::kGoods);
        fair[c.Name()] = IsFairUnchecked(instance, a, c);
        if (fair[c.Name()]) ++report.fair_counts[c.Name()];
      }
      for (const auto& [from, to] : LatticeEdges()) {
        const std::string f = from.For(Orientation::kGoods).Name();
        const std::string t = to.For(Orientation::kGoods).Name();
        if (fair[f] && !fair[t]) {
          report.violations.push_back(
              {"lattice", f + " holds but " + t + " fails", instance, a});
        }
      }
      std::optional<Rational> ratio;
      for (int i = 0; i < instance.agent_count(); ++i) {
        const Rational& m = mms[static_cast<std::size_t>(i)];
        if (m.sign() <= 0) continue;
        const Rational r = BundleValue(instance.values(i), a.bundle(i)) / m;
        if (!ratio || r < *ratio) ratio = r;
      }
      if (!ratio) return true;
      for (const auto& [name, holds] : fair) {
        if (!holds) continue;
        auto& best = report.min_ratio[name];
        if (!best || *ratio < *best) best = *ratio;
      }
      for (const auto& [notion, bound] : RatioBounds()) {
        const std::string name = notion.For(Orientation::kGoods).Name();
        if (fair[name] && *ratio < bound) {
          report.violations.push_back(
              {"bound", name + " allocation below " + bound.ToString() +
                            "-MMS (ratio " + ratio->ToString() + ")",
               instance, a});
        }
      }
      return true;
    });
  }
  return report;
}

inline Json SweepReportToJson(const SweepReport& r) {
  Json out;
  out["scheme"] = kGenerationScheme;
  out["seed"] = r.config.seed;
  out["instances"] = r.config.instances;
  Json shape;
  shape["agents"] = {r.config.shape.min_agents, r.config.shape.max_agents};
  shape["types"] = {r.config.shape.min_types, r.config.shape.max_types};
  shape["max_value"] = r.config.shape.max_value;
  out["shape"] = shape;
  out["allocations"] = r.allocations;
  Json counts = Json::object();
  for (const auto& [k, v] : r.fair_counts) counts[k] = v;
  out["fair_counts"] = counts;
  Json ratios = Json::object();
  for (const auto& [k, v] : r.min_ratio) {
    ratios[k] = v ? RationalToJson(*v) : Json(nullptr);
  }
  out["min_mms_ratio"] = ratios;
  Json bounds = Json::object();
  for (const auto& [notion, bound] : RatioBounds()) {
    bounds[notion.For(Orientation::kGoods).Name()] = RationalToJson(bound);
  }
  out["ratio_bounds"] = bounds;
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    Json j;
    j["kind"] = v.kind;
    j["message"] = v.message;
    j["instance"] = InstanceToJson(v.instance);
    j["allocation"] = AllocationToJson(v.instance, v.allocation);
    violations.push_back(std::move(j));
  }
  out["violations"] = violations;
  out["ok"] = r.ok();
  return out;
}

}  // namespace fairdual

#endif  // FAIRDUAL_SWEEP_HPP_
