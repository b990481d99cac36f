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

// The dual of (instance, allocation): values negated, k_t copies become
// n - k_t, and each bundle becomes its complement in the type set.
//
// A type with k_t = n has no copies in the dual. It is removed from the dual
// instance and kept as a HeldType so that dualizing again restores it.

#ifndef FAIRDUAL_DUALITY_HPP_
#define FAIRDUAL_DUALITY_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fairdual/criteria.hpp"
#include "fairdual/errors.hpp"
#include "fairdual/model.hpp"
#include "fairdual/rational.hpp"

namespace fairdual {

// A zero-copy type: its position in the full type order, and per-agent values.
struct HeldType {
  std::size_t position = 0;
  std::string name;
  std::vector<Rational> values;

  friend bool operator==(const HeldType&, const HeldType&) = default;
};

// An instance together with the zero-copy types it carries.
struct InstanceDocument {
  Instance instance;
  std::vector<HeldType> held;

  std::size_t full_type_count() const {
    return instance.type_count() + held.size();
  }

  friend bool operator==(const InstanceDocument&,
                         const InstanceDocument&) = default;
};

struct DualResult {
  InstanceDocument dual;
  std::optional<Allocation> allocation;
  // d_i = v_i(T) over the full type set, zero-copy types included.
  std::vector<Rational> shifts;
  // Names of types that were dropped because k_t = n.
  std::vector<std::string> dropped;
};

namespace internal {

struct FullType {
  std::string name;
  int copies;
  std::vector<Rational> values;
  std::optional<std::size_t> present_index;
};

inline std::vector<FullType> FullTypes(const InstanceDocument& doc) {
  const Instance& in = doc.instance;
  const std::size_t total = doc.full_type_count();
  std::vector<std::optional<const HeldType*>> held_at(total);
  for (const auto& h : doc.held) {
    if (h.position >= total || held_at[h.position]) {
      throw InputError("held type '" + h.name + "' has a bad position");
    }
    if (h.values.size() != static_cast<std::size_t>(in.agent_count())) {
      throw InputError("held type '" + h.name + "' needs a value per agent");
    }
    held_at[h.position] = &h;
  }
  std::vector<FullType> out;
  std::size_t next = 0;
  for (std::size_t p = 0; p < total; ++p) {
    if (held_at[p]) {
      const HeldType& h = **held_at[p];
      out.push_back({h.name, 0, h.values, std::nullopt});
      continue;
    }
    std::vector<Rational> values;
    for (int i = 0; i < in.agent_count(); ++i) values.push_back(in.value(i, next));
    out.push_back({in.type(next).name, in.copies(next), std::move(values), next});
    ++next;
  }
  return out;
}

}  // namespace internal

inline DualResult Dualize(const InstanceDocument& doc,
                          const std::optional<Allocation>& allocation = {}) {
  const Instance& in = doc.instance;
  const int n = in.agent_count();
  if (allocation) RequireValidAllocation(in, *allocation);
  const auto full = internal::FullTypes(doc);

  DualResult out;
  out.shifts.assign(static_cast<std::size_t>(n), Rational());
  std::vector<ItemType> types;
  std::vector<std::vector<Rational>> values(static_cast<std::size_t>(n));
  std::vector<std::vector<std::size_t>> dual_bundles(static_cast<std::size_t>(n));
  for (std::size_t p = 0; p < full.size(); ++p) {
    const auto& ft = full[p];
    for (int i = 0; i < n; ++i) {
      out.shifts[static_cast<std::size_t>(i)] += ft.values[static_cast<std::size_t>(i)];
    }
    const int dual_copies = n - ft.copies;
    if (dual_copies == 0) {
      HeldType h{p, ft.name, {}};
      for (const auto& v : ft.values) h.values.push_back(-v);
      out.dual.held.push_back(std::move(h));
      out.dropped.push_back(ft.name);
      continue;
    }
    const std::size_t dual_index = types.size();
    types.push_back({ft.name, dual_copies});
    for (int i = 0; i < n; ++i) {
      values[static_cast<std::size_t>(i)].push_back(-ft.values[static_cast<std::size_t>(i)]);
      const bool holds = ft.present_index &&
                         allocation &&
                         allocation->bundle(i).Contains(*ft.present_index);
      if (!holds) dual_bundles[static_cast<std::size_t>(i)].push_back(dual_index);
    }
  }
  out.dual.instance = Instance(n, std::move(types), std::move(values));
  if (allocation) {
    std::vector<Bundle> bundles;
    for (const auto& list : dual_bundles) {
      Bundle b;
      for (std::size_t t : list) b.Insert(t);
      bundles.push_back(b);
    }
    out.allocation = Allocation(std::move(bundles));
  }
  return out;
}

inline DualResult Dualize(const Instance& instance,
                          const std::optional<Allocation>& allocation = {}) {
  return Dualize(InstanceDocument{instance, {}}, allocation);
}

// v_i(T) over the full type set.
inline Rational FullValue(const InstanceDocument& doc, int agent) {
  Rational total;
  for (std::size_t t = 0; t < doc.instance.type_count(); ++t) {
    total += doc.instance.value(agent, t);
  }
  for (const auto& h : doc.held) total += h.values.at(static_cast<std::size_t>(agent));
  return total;
}

inline Rational FullValue(const Instance& instance, int agent) {
  return FullValue(InstanceDocument{instance, {}}, agent);
}

// The criterion to test on the original side, given its orientation.
inline Criterion WithoutCommonsFor(const Instance& instance, Base base) {
  return Criterion{base, instance.InferOrientation(), true};
}

struct EnvyDualityCheck {
  bool holds = true;
  bool original_fair = true;
  bool dual_fair = true;
  Criterion original_criterion;
  Criterion dual_criterion;
};

// Compares f_WC-fairness of A under v with f^c_WC-fairness of the dual
// allocation under the negated values.
inline EnvyDualityCheck CheckEnvyDuality(const Instance& instance,
                                         const Allocation& allocation,
                                         Base base) {
  const Criterion c = WithoutCommonsFor(instance, base);
  const DualResult dual = Dualize(instance, allocation);
  EnvyDualityCheck out;
  out.original_criterion = c;
  out.dual_criterion = c.Complement();
  out.original_fair = IsFair(instance, allocation, c).fair;
  out.dual_fair =
      IsFair(dual.dual.instance, *dual.allocation, out.dual_criterion).fair;
  out.holds = out.original_fair == out.dual_fair;
  return out;
}

}  // namespace fairdual

#endif  // FAIRDUAL_DUALITY_HPP_
