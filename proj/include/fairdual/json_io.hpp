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

// JSON forms of instances and allocations.
//
//   instance:   {"agents": n, "types": [{"name": s, "copies": k,
//                 "values": [r, ...] | {"shared": r}}, ...]}
//   allocation: {"bundles": [[name, ...], ...]}
//
// A rational r is a JSON integer, a decimal string ("0.01", "1e-6") or a
// "p/q" string. JSON floats are rejected since they are not exact. A type
// with zero copies is kept aside as a HeldType.

#ifndef FAIRDUAL_JSON_IO_HPP_
#define FAIRDUAL_JSON_IO_HPP_

#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fairdual/duality.hpp"
#include "fairdual/errors.hpp"
#include "fairdual/model.hpp"
#include "fairdual/rational.hpp"

namespace fairdual {

using Json = nlohmann::ordered_json;

namespace internal {

[[noreturn]] inline void JsonFail(const std::string& path,
                                  const std::string& what) {
  throw InputError(path + ": " + what);
}

inline const Json& Field(const Json& obj, const char* key,
                         const std::string& path) {
  if (!obj.is_object()) JsonFail(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) JsonFail(path, std::string("missing field '") + key + "'");
  return *it;
}

inline long IntegerField(const Json& v, const std::string& path) {
  if (!v.is_number_integer()) JsonFail(path, "expected an integer");
  if (v.is_number_unsigned()) {
    const auto u = v.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(std::numeric_limits<int>::max())) {
      JsonFail(path, "integer out of range");
    }
    return static_cast<long>(u);
  }
  const auto s = v.get<std::int64_t>();
  if (s < std::numeric_limits<int>::min() || s > std::numeric_limits<int>::max()) {
    JsonFail(path, "integer out of range");
  }
  return static_cast<long>(s);
}

}  // namespace internal

inline Rational RationalFromJson(const Json& v, const std::string& path) {
  if (v.is_number_integer()) {
    return Rational::Parse(v.dump());
  }
  if (v.is_number_float()) {
    internal::JsonFail(path, "floating-point number; write it as a string "
                             "such as \"0.5\" or \"1/2\"");
  }
  if (v.is_string()) {
    try {
      return Rational::Parse(v.get<std::string>());
    } catch (const InputError& e) {
      internal::JsonFail(path, e.what());
    }
  }
  internal::JsonFail(path, "expected an integer or a rational string");
}

// Integers that fit in 64 bits become JSON numbers, everything else "p/q".
inline Json RationalToJson(const Rational& r) {
  if (r.is_integer()) {
    try {
      std::size_t used = 0;
      const std::string s = r.ToString();
      const long long v = std::stoll(s, &used);
      if (used == s.size()) return v;
    } catch (const std::out_of_range&) {
    }
  }
  return r.ToString();
}

inline InstanceDocument InstanceFromJson(const Json& j) {
  const long n = internal::IntegerField(internal::Field(j, "agents", "$"),
                                        "$.agents");
  if (n < 1 || n > static_cast<long>(kMaxAgents)) {
    internal::JsonFail("$.agents", "agent count must be in [1, 64]");
  }
  const Json& types = internal::Field(j, "types", "$");
  if (!types.is_array()) internal::JsonFail("$.types", "expected an array");
  InstanceDocument doc;
  std::vector<ItemType> present;
  std::vector<std::vector<Rational>> values(static_cast<std::size_t>(n));
  for (std::size_t p = 0; p < types.size(); ++p) {
    const std::string path = "$.types[" + std::to_string(p) + "]";
    const Json& t = types[p];
    const Json& name = internal::Field(t, "name", path);
    if (!name.is_string()) internal::JsonFail(path + ".name", "expected a string");
    const long copies = internal::IntegerField(
        internal::Field(t, "copies", path), path + ".copies");
    if (copies < 0 || copies > n) {
      internal::JsonFail(path + ".copies", "copies must be in [0, agents]");
    }
    std::vector<Rational> row;
    const Json& vals = internal::Field(t, "values", path);
    if (vals.is_object()) {
      const Rational shared = RationalFromJson(
          internal::Field(vals, "shared", path + ".values"),
          path + ".values.shared");
      row.assign(static_cast<std::size_t>(n), shared);
    } else if (vals.is_array()) {
      if (vals.size() != static_cast<std::size_t>(n)) {
        internal::JsonFail(path + ".values",
                           "expected " + std::to_string(n) + " values");
      }
      for (std::size_t i = 0; i < vals.size(); ++i) {
        row.push_back(RationalFromJson(
            vals[i], path + ".values[" + std::to_string(i) + "]"));
      }
    } else {
      internal::JsonFail(path + ".values",
                         "expected an array or {\"shared\": value}");
    }
    if (copies == 0) {
      doc.held.push_back({p, name.get<std::string>(), std::move(row)});
      continue;
    }
    present.push_back({name.get<std::string>(), static_cast<int>(copies)});
    for (std::size_t i = 0; i < row.size(); ++i) values[i].push_back(row[i]);
  }
  for (const auto& h : doc.held) {
    for (const auto& t : present) {
      if (t.name == h.name) {
        throw InputError("duplicate item type '" + h.name + "'");
      }
    }
  }
  doc.instance = Instance(static_cast<int>(n), std::move(present),
                          std::move(values));
  return doc;
}

inline Json InstanceToJson(const InstanceDocument& doc) {
  const Instance& in = doc.instance;
  Json types = Json::array();
  const std::size_t total = doc.full_type_count();
  std::size_t next = 0;
  for (std::size_t p = 0; p < total; ++p) {
    const HeldType* held = nullptr;
    for (const auto& h : doc.held) {
      if (h.position == p) held = &h;
    }
    Json t;
    Json vals = Json::array();
    if (held != nullptr) {
      t["name"] = held->name;
      t["copies"] = 0;
      for (const auto& v : held->values) vals.push_back(RationalToJson(v));
    } else {
      t["name"] = in.type(next).name;
      t["copies"] = in.copies(next);
      for (int i = 0; i < in.agent_count(); ++i) {
        vals.push_back(RationalToJson(in.value(i, next)));
      }
      ++next;
    }
    t["values"] = std::move(vals);
    types.push_back(std::move(t));
  }
  Json out;
  out["agents"] = in.agent_count();
  out["types"] = std::move(types);
  return out;
}

inline Json InstanceToJson(const Instance& instance) {
  return InstanceToJson(InstanceDocument{instance, {}});
}

inline Allocation AllocationFromJson(const Json& j, const Instance& instance) {
  const Json& bundles = internal::Field(j, "bundles", "$");
  if (!bundles.is_array()) internal::JsonFail("$.bundles", "expected an array");
  std::vector<Bundle> out;
  for (std::size_t i = 0; i < bundles.size(); ++i) {
    const std::string path = "$.bundles[" + std::to_string(i) + "]";
    if (!bundles[i].is_array()) internal::JsonFail(path, "expected an array");
    Bundle b;
    for (std::size_t k = 0; k < bundles[i].size(); ++k) {
      const Json& name = bundles[i][k];
      const std::string item_path = path + "[" + std::to_string(k) + "]";
      if (!name.is_string()) internal::JsonFail(item_path, "expected a type name");
      const auto t = instance.FindType(name.get<std::string>());
      if (!t) {
        internal::JsonFail(item_path,
                           "unknown item type '" + name.get<std::string>() + "'");
      }
      if (b.Contains(*t)) {
        internal::JsonFail(item_path, "type '" + name.get<std::string>() +
                                          "' twice in one bundle");
      }
      b.Insert(*t);
    }
    out.push_back(b);
  }
  return Allocation(std::move(out));
}

inline Json BundleToJson(const Instance& instance, Bundle bundle) {
  Json names = Json::array();
  bundle.ForEach([&](std::size_t t) { names.push_back(instance.type(t).name); });
  return names;
}

inline Json AllocationToJson(const Instance& instance,
                             const Allocation& allocation) {
  Json bundles = Json::array();
  for (const Bundle& b : allocation.bundles()) {
    bundles.push_back(BundleToJson(instance, b));
  }
  Json out;
  out["bundles"] = std::move(bundles);
  return out;
}

inline Json ParseJsonText(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // Report a line number rather than a byte offset.
    std::size_t line = 1;
    for (std::size_t k = 0; k < e.byte && k < text.size(); ++k) {
      line += text[k] == '\n' ? 1 : 0;
    }
    throw InputError(source + ":" + std::to_string(line) +
                     ": malformed JSON: " + e.what());
  }
}

inline Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ParseJsonText(ss.str(), path);
}

// Prefixes diagnostics with the file name.
inline InstanceDocument ReadInstanceFile(const std::string& path) {
  const Json j = ReadJsonFile(path);
  try {
    return InstanceFromJson(j);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

inline Allocation ReadAllocationFile(const std::string& path,
                                     const Instance& instance) {
  const Json j = ReadJsonFile(path);
  try {
    return AllocationFromJson(j, instance);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

inline void WriteJsonFile(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

}  // namespace fairdual

#endif  // FAIRDUAL_JSON_IO_HPP_
