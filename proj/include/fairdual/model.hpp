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

// Instances of indivisible items with copies, bundles, and exclusive
// allocations. Agents and item types are identified by their 0-based position
// in the instance; names exist for I/O.

#ifndef FAIRDUAL_MODEL_HPP_
#define FAIRDUAL_MODEL_HPP_

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "fairdual/errors.hpp"
#include "fairdual/rational.hpp"

namespace fairdual {

// Bundles and agent subsets are 64-bit masks.
inline constexpr std::size_t kMaxTypes = 64;
inline constexpr std::size_t kMaxAgents = 64;

// A set of item types, at most one copy of each. Exclusivity of allocations is
// structural: a bundle cannot hold two copies of a type.
class Bundle {
 public:
  constexpr Bundle() = default;
  constexpr explicit Bundle(std::uint64_t bits) : bits_(bits) {}
  static Bundle Of(std::initializer_list<std::size_t> types) {
    Bundle b;
    for (std::size_t t : types) b.Insert(t);
    return b;
  }
  // The full type set {0, ..., count-1}.
  static constexpr Bundle FirstN(std::size_t count) {
    return Bundle(count >= 64 ? ~std::uint64_t{0}
                              : (std::uint64_t{1} << count) - 1);
  }

  constexpr bool Contains(std::size_t type) const {
    return type < 64 && ((bits_ >> type) & 1U) != 0;
  }
  constexpr void Insert(std::size_t type) { bits_ |= std::uint64_t{1} << type; }
  constexpr void Erase(std::size_t type) {
    bits_ &= ~(std::uint64_t{1} << type);
  }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint64_t bits() const { return bits_; }

  constexpr Bundle Minus(Bundle other) const {
    return Bundle(bits_ & ~other.bits_);
  }
  constexpr Bundle Intersect(Bundle other) const {
    return Bundle(bits_ & other.bits_);
  }
  constexpr Bundle Union(Bundle other) const {
    return Bundle(bits_ | other.bits_);
  }
  constexpr bool IsSubsetOf(Bundle other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  // Type indices in increasing order.
  std::vector<std::size_t> Types() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    }
    return out;
  }

  template <typename F>
  void ForEach(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      f(static_cast<std::size_t>(std::countr_zero(b)));
    }
  }

  friend constexpr bool operator==(Bundle, Bundle) = default;
  friend constexpr auto operator<=>(Bundle, Bundle) = default;

 private:
  std::uint64_t bits_ = 0;
};

struct ItemType {
  std::string name;
  int copies = 1;

  friend bool operator==(const ItemType&, const ItemType&) = default;
};

// Good or chore tag of a single item type.
enum class ItemKind { kGood, kChore };

// Sign structure of a whole instance, from its type tags.
enum class InstanceSign { kGoods, kChores, kMixed };

// Which envy criteria an instance admits, decided by value signs: goods
// criteria need every value >= 0, chores criteria every value <= 0.
enum class Orientation { kGoods, kChores };

inline const char* ToString(Orientation o) {
  return o == Orientation::kGoods ? "goods" : "chores";
}

class Instance {
 public:
  Instance() = default;

  // values[i][t] is agent i's value for one copy of type t. Throws InputError
  // when any invariant fails: 1 <= agents <= 64, at most 64 types, unique
  // non-empty names, 1 <= copies <= agents, a value row per agent, and every
  // type a good (all >= 0, one > 0) or a chore (all <= 0).
  Instance(int agent_count, std::vector<ItemType> types,
           std::vector<std::vector<Rational>> values)
      : agent_count_(agent_count),
        types_(std::move(types)),
        values_(std::move(values)) {
    Validate();
  }

  int agent_count() const { return agent_count_; }
  std::size_t type_count() const { return types_.size(); }
  const std::vector<ItemType>& types() const { return types_; }
  const ItemType& type(std::size_t t) const { return types_.at(t); }
  int copies(std::size_t t) const { return types_[t].copies; }
  const Rational& value(int agent, std::size_t t) const {
    return values_[static_cast<std::size_t>(agent)][t];
  }
  std::span<const Rational> values(int agent) const {
    return values_.at(static_cast<std::size_t>(agent));
  }
  const std::vector<std::vector<Rational>>& value_matrix() const {
    return values_;
  }

  Bundle AllTypes() const { return Bundle::FirstN(types_.size()); }

  std::optional<std::size_t> FindType(std::string_view name) const {
    for (std::size_t t = 0; t < types_.size(); ++t) {
      if (types_[t].name == name) return t;
    }
    return std::nullopt;
  }
  std::size_t TypeIndex(std::string_view name) const {
    if (auto t = FindType(name)) return *t;
    throw InputError("unknown item type '" + std::string(name) + "'");
  }

  ItemKind kind(std::size_t t) const {
    bool positive = false;
    for (const auto& row : values_) positive |= row[t].sign() > 0;
    return positive ? ItemKind::kGood : ItemKind::kChore;
  }

  InstanceSign sign() const {
    bool goods = false;
    bool chores = false;
    for (std::size_t t = 0; t < types_.size(); ++t) {
      (kind(t) == ItemKind::kGood ? goods : chores) = true;
    }
    if (goods && chores) return InstanceSign::kMixed;
    return goods ? InstanceSign::kGoods : InstanceSign::kChores;
  }

  bool IsNonNegative() const {
    for (const auto& row : values_) {
      for (const auto& v : row) {
        if (v.sign() < 0) return false;
      }
    }
    return true;
  }
  bool IsNonPositive() const {
    for (const auto& row : values_) {
      for (const auto& v : row) {
        if (v.sign() > 0) return false;
      }
    }
    return true;
  }
  bool Admits(Orientation o) const {
    return o == Orientation::kGoods ? IsNonNegative() : IsNonPositive();
  }
  // Goods when some value is positive, chores otherwise. Throws
  // OrientationError for instances with both signs.
  Orientation InferOrientation() const {
    const bool nonneg = IsNonNegative();
    const bool nonpos = IsNonPositive();
    if (!nonneg && !nonpos) {
      throw OrientationError(
          "instance mixes goods and chores; envy criteria need a sign-pure "
          "instance");
    }
    return nonneg && !nonpos ? Orientation::kGoods
           : nonpos && !nonneg ? Orientation::kChores
                               : Orientation::kGoods;  // all zero
  }

  // Total number of item copies.
  long item_count() const {
    long total = 0;
    for (const auto& t : types_) total += t.copies;
    return total;
  }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  void Validate() const {
    if (agent_count_ < 1 || static_cast<std::size_t>(agent_count_) > kMaxAgents) {
      throw InputError("agent count must be in [1, 64], got " +
                       std::to_string(agent_count_));
    }
    if (types_.size() > kMaxTypes) {
      throw InputError("at most 64 item types are supported");
    }
    std::unordered_set<std::string> seen;
    for (const auto& t : types_) {
      if (t.name.empty()) throw InputError("item type with empty name");
      if (!seen.insert(t.name).second) {
        throw InputError("duplicate item type '" + t.name + "'");
      }
      if (t.copies < 1 || t.copies > agent_count_) {
        throw InputError("type '" + t.name + "' has " +
                         std::to_string(t.copies) +
                         " copies; need 1 <= copies <= agents");
      }
    }
    if (values_.size() != static_cast<std::size_t>(agent_count_)) {
      throw InputError("expected a value row per agent");
    }
    for (const auto& row : values_) {
      if (row.size() != types_.size()) {
        throw InputError("value row length differs from type count");
      }
    }
    for (std::size_t t = 0; t < types_.size(); ++t) {
      bool pos = false;
      bool neg = false;
      for (const auto& row : values_) {
        pos |= row[t].sign() > 0;
        neg |= row[t].sign() < 0;
      }
      if (pos && neg) {
        throw InputError("type '" + types_[t].name +
                         "' is a good for some agents and a chore for others");
      }
    }
  }

  int agent_count_ = 0;
  std::vector<ItemType> types_;
  std::vector<std::vector<Rational>> values_;
};

// One bundle per agent.
class Allocation {
 public:
  Allocation() = default;
  explicit Allocation(std::vector<Bundle> bundles)
      : bundles_(std::move(bundles)) {}

  std::size_t agent_count() const { return bundles_.size(); }
  const Bundle& bundle(int agent) const {
    return bundles_.at(static_cast<std::size_t>(agent));
  }
  Bundle& bundle(int agent) { return bundles_.at(static_cast<std::size_t>(agent)); }
  const std::vector<Bundle>& bundles() const { return bundles_; }

  friend bool operator==(const Allocation&, const Allocation&) = default;
  friend auto operator<=>(const Allocation&, const Allocation&) = default;

 private:
  std::vector<Bundle> bundles_;
};

// Additive value of a bundle for one agent.
inline Rational BundleValue(const Instance& instance, int agent, Bundle bundle) {
  if (!bundle.IsSubsetOf(instance.AllTypes())) {
    throw InputError("bundle references a type outside the instance");
  }
  Rational sum;
  const auto values = instance.values(agent);
  bundle.ForEach([&](std::size_t t) { sum += values[t]; });
  return sum;
}

inline Rational BundleValue(std::span<const Rational> values, Bundle bundle) {
  Rational sum;
  bundle.ForEach([&](std::size_t t) { sum += values[t]; });
  return sum;
}

// Sum over types of copies * value: the agent's value for all items.
inline Rational TotalItemValue(const Instance& instance, int agent) {
  Rational sum;
  for (std::size_t t = 0; t < instance.type_count(); ++t) {
    sum += Rational(instance.copies(t)) * instance.value(agent, t);
  }
  return sum;
}

struct AllocationViolation {
  enum class Kind { kBundleCount, kUnknownType, kCopyCount };
  Kind kind;
  std::size_t type = 0;   // kCopyCount
  long expected = 0;      // bundles for kBundleCount, copies for kCopyCount
  long actual = 0;
  std::string message;
};

// Reports every way the allocation fails to be a complete exclusive allocation
// of the instance. An empty result means valid.
inline std::vector<AllocationViolation> ValidateAllocation(
    const Instance& instance, const Allocation& allocation) {
  std::vector<AllocationViolation> out;
  const auto n = static_cast<long>(instance.agent_count());
  if (static_cast<long>(allocation.agent_count()) != n) {
    out.push_back({AllocationViolation::Kind::kBundleCount, 0, n,
                   static_cast<long>(allocation.agent_count()),
                   "expected " + std::to_string(n) + " bundles, got " +
                       std::to_string(allocation.agent_count())});
  }
  const Bundle all = instance.AllTypes();
  for (std::size_t i = 0; i < allocation.agent_count(); ++i) {
    const Bundle extra = allocation.bundles()[i].Minus(all);
    if (!extra.empty()) {
      out.push_back({AllocationViolation::Kind::kUnknownType,
                     extra.Types().front(), 0, 0,
                     "bundle " + std::to_string(i + 1) +
                         " holds a type outside the instance"});
    }
  }
  for (std::size_t t = 0; t < instance.type_count(); ++t) {
    long count = 0;
    for (const Bundle& b : allocation.bundles()) count += b.Contains(t) ? 1 : 0;
    if (count != instance.copies(t)) {
      out.push_back({AllocationViolation::Kind::kCopyCount, t,
                     instance.copies(t), count,
                     "type '" + instance.type(t).name + "' allocated " +
                         std::to_string(count) + " times, has " +
                         std::to_string(instance.copies(t)) + " copies"});
    }
  }
  return out;
}

inline bool IsValidAllocation(const Instance& instance,
                              const Allocation& allocation) {
  return ValidateAllocation(instance, allocation).empty();
}

inline void RequireValidAllocation(const Instance& instance,
                                   const Allocation& allocation) {
  const auto violations = ValidateAllocation(instance, allocation);
  if (!violations.empty()) {
    throw InputError("invalid allocation: " + violations.front().message);
  }
}

// Result of the leveled-preference test. When not leveled, `size` is the
// smallest m for which some bundle of size m is worth at least as much as
// some bundle of size m + 1.
struct LeveledCheck {
  bool leveled = true;
  std::size_t size = 0;
};

// Leveled means |B1| > |B2| implies v(B1) > v(B2) over subsets of types. For
// additive values it suffices to compare, for every m < |T|, the m + 1
// smallest values against the m largest.
inline LeveledCheck CheckLeveled(std::span<const Rational> values) {
  for (const auto& v : values) {
    if (v.sign() < 0) {
      throw OrientationError("leveled preferences are defined for goods only");
    }
  }
  std::vector<Rational> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t count = sorted.size();
  Rational smallest;  // sum of the m + 1 smallest
  Rational largest;   // sum of the m largest
  for (std::size_t m = 0; m < count; ++m) {
    smallest += sorted[m];
    if (m > 0) largest += sorted[count - m];
    if (!(smallest > largest)) return {false, m};
  }
  return {true, 0};
}

inline bool IsLeveled(const Instance& instance, int agent) {
  return CheckLeveled(instance.values(agent)).leveled;
}

}  // namespace fairdual

#endif  // FAIRDUAL_MODEL_HPP_
