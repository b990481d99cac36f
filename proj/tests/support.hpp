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

#ifndef FAIRDUAL_TESTS_SUPPORT_HPP_
#define FAIRDUAL_TESTS_SUPPORT_HPP_

#include <string>
#include <vector>

#include "fairdual/fairdual.hpp"
#include "oracles.hpp"

namespace testing_support {

namespace fd = fairdual;

inline oracle::Q ToQ(const fd::Rational& r) { return oracle::Q(r.ToString()); }

inline fd::Rational FromQ(const oracle::Q& q) {
  return fd::Rational::Parse(q.get_str());
}

inline oracle::Problem ToProblem(const fd::Instance& in) {
  oracle::Problem p;
  p.n = in.agent_count();
  for (std::size_t t = 0; t < in.type_count(); ++t) p.copies.push_back(in.copies(t));
  p.values.resize(static_cast<std::size_t>(p.n));
  for (int i = 0; i < p.n; ++i) {
    for (std::size_t t = 0; t < in.type_count(); ++t) {
      p.values[static_cast<std::size_t>(i)].push_back(ToQ(in.value(i, t)));
    }
  }
  return p;
}

inline oracle::Alloc ToAlloc(const fd::Allocation& a) {
  oracle::Alloc out;
  for (const fd::Bundle& b : a.bundles()) {
    oracle::Set s;
    b.ForEach([&](std::size_t t) { s.insert(static_cast<int>(t)); });
    out.push_back(std::move(s));
  }
  return out;
}

inline fd::Allocation FromAlloc(const oracle::Alloc& a) {
  std::vector<fd::Bundle> bundles;
  for (const auto& s : a) {
    fd::Bundle b;
    for (int t : s) b.Insert(static_cast<std::size_t>(t));
    bundles.push_back(b);
  }
  return fd::Allocation(std::move(bundles));
}

inline oracle::Notion ToNotion(fd::Base b) {
  switch (b) {
    case fd::Base::kEF: return oracle::Notion::kEF;
    case fd::Base::kEF1: return oracle::Notion::kEF1;
    case fd::Base::kEFX: return oracle::Notion::kEFX;
    case fd::Base::kEFL: return oracle::Notion::kEFL;
  }
  return oracle::Notion::kEF;
}

inline bool OracleFair(const fd::Instance& in, const fd::Allocation& a,
                       const fd::Criterion& c) {
  return oracle::Fair(ToProblem(in), ToAlloc(a), ToNotion(c.base),
                      c.orientation == fd::Orientation::kChores, c.without_commons);
}

// Instance from a per-type table: {name, copies, value for every agent}.
struct Row {
  std::string name;
  int copies;
  std::vector<std::string> values;  // one per agent, or a single shared value
};

inline fd::Instance Make(int agents, const std::vector<Row>& rows) {
  std::vector<fd::ItemType> types;
  std::vector<std::vector<fd::Rational>> values(static_cast<std::size_t>(agents));
  for (const Row& r : rows) {
    types.push_back({r.name, r.copies});
    for (int i = 0; i < agents; ++i) {
      const std::string& v =
          r.values.size() == 1 ? r.values[0] : r.values[static_cast<std::size_t>(i)];
      values[static_cast<std::size_t>(i)].push_back(fd::Rational::Parse(v));
    }
  }
  return fd::Instance(agents, std::move(types), std::move(values));
}

inline fd::Allocation Bundles(const fd::Instance& in,
                              const std::vector<std::vector<std::string>>& names) {
  std::vector<fd::Bundle> out;
  for (const auto& list : names) {
    fd::Bundle b;
    for (const auto& n : list) b.Insert(*in.FindType(n));
    out.push_back(b);
  }
  return fd::Allocation(std::move(out));
}

// Identical values 1, 2, 3, 9 with two copies each, three agents.
inline fd::Instance Copies1239() {
  return Make(3, {{"t1", 2, {"1"}}, {"t2", 2, {"2"}}, {"t3", 2, {"3"}}, {"t4", 2, {"9"}}});
}

inline fd::Allocation Copies1239Witness(const fd::Instance& in) {
  return Bundles(in, {{"t1", "t2", "t4"}, {"t3", "t4"}, {"t1", "t2", "t3"}});
}

}  // namespace testing_support

#endif  // FAIRDUAL_TESTS_SUPPORT_HPP_
