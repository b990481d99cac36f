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

// Replication fixtures: a JSON file per example holding instances,
// allocations and a list of scripted claims. Agents in claims are 1-based.
//
//   {"id": ..., "description": ..., "pins": {...},
//    "instances": {"main": <instance>, ...},
//    "allocations": {"A": {"bundles": ...}, ...},   // against "main"
//    "claims": [{"check": ..., ...}, ...]}
//
// Claims may name "instance" (default "main"). Claims that produce an
// allocation can "store" it under a new name for later claims.

#ifndef FAIRDUAL_FIXTURES_HPP_
#define FAIRDUAL_FIXTURES_HPP_

#include <algorithm>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fairdual/criteria.hpp"
#include "fairdual/duality.hpp"
#include "fairdual/errors.hpp"
#include "fairdual/json_io.hpp"
#include "fairdual/model.hpp"
#include "fairdual/search.hpp"
#include "fairdual/shares.hpp"

namespace fairdual {

struct ClaimResult {
  std::string check;
  std::string summary;
  bool passed = false;
  std::string detail;
};

struct FixtureReport {
  std::string id;
  std::string description;
  bool passed = true;
  std::vector<ClaimResult> claims;
};

namespace internal {

class FixtureRunner {
 public:
  FixtureRunner(const Json& fixture, const EnumerationOptions& options)
      : fixture_(fixture), options_(options) {
    const Json& instances = Field(fixture, "instances", "$");
    for (auto it = instances.begin(); it != instances.end(); ++it) {
      try {
        instances_.emplace(it.key(), InstanceFromJson(it.value()));
      } catch (const InputError& e) {
        throw InputError("instances." + it.key() + ": " + e.what());
      }
    }
    if (fixture.contains("allocations")) {
      const Json& allocs = fixture["allocations"];
      for (auto it = allocs.begin(); it != allocs.end(); ++it) {
        const std::string inst =
            it.value().contains("instance")
                ? it.value()["instance"].get<std::string>()
                : "main";
        allocations_.emplace(it.key(),
                             AllocationFromJson(it.value(), Inst(inst)));
      }
    }
  }

  FixtureReport Run() {
    FixtureReport report;
    report.id = fixture_.value("id", "");
    report.description = fixture_.value("description", "");
    for (const Json& claim : Field(fixture_, "claims", "$")) {
      ClaimResult r;
      r.check = claim.value("check", "");
      r.summary = claim.value("claim", r.check);
      try {
        Evaluate(claim, r);
      } catch (const Error& e) {
        r.passed = false;
        r.detail = std::string("error: ") + e.what();
      }
      report.passed = report.passed && r.passed;
      report.claims.push_back(std::move(r));
    }
    return report;
  }

 private:
  const Instance& Inst(const std::string& name) const {
    return Doc(name).instance;
  }
  const InstanceDocument& Doc(const std::string& name) const {
    const auto it = instances_.find(name);
    if (it == instances_.end()) throw InputError("no instance '" + name + "'");
    return it->second;
  }
  const Instance& InstOf(const Json& claim) const {
    return Inst(claim.value("instance", "main"));
  }
  const Allocation& Alloc(const std::string& name) const {
    const auto it = allocations_.find(name);
    if (it == allocations_.end()) {
      throw InputError("no allocation '" + name + "'");
    }
    return it->second;
  }
  static int Agent(const Json& claim, const char* key = "agent") {
    return static_cast<int>(IntegerField(Field(claim, key, "claim"), key)) - 1;
  }
  static Rational Rat(const Json& claim, const char* key) {
    return RationalFromJson(Field(claim, key, "claim"), key);
  }
  static std::string Pairs(const std::vector<Witness>& ws) {
    std::string s = "[";
    for (std::size_t k = 0; k < ws.size(); ++k) {
      if (k > 0) s += ", ";
      s += "(" + std::to_string(ws[k].envious + 1) + "," +
           std::to_string(ws[k].envied + 1) + ")";
    }
    return s + "]";
  }
  static std::string Agents(const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t k = 0; k < v.size(); ++k) {
      s += (k > 0 ? "," : "") + std::to_string(v[k] + 1);
    }
    return s + ")";
  }

  Criterion CriterionFor(const Json& claim, const Instance& instance) const {
    const NotionName notion = ParseNotion(Field(claim, "notion", "claim").get<std::string>());
    const Orientation o = claim.contains("orientation")
                              ? ParseOrientation(claim["orientation"].get<std::string>())
                              : instance.InferOrientation();
    return notion.For(o);
  }

  static bool CheckWitnesses(const Json& claim, const FairnessReport& report,
                             std::string& detail) {
    bool ok = true;
    if (claim.contains("witnesses")) {
      std::vector<Witness> expected;
      for (const Json& p : claim["witnesses"]) {
        expected.push_back({p[0].get<int>() - 1, p[1].get<int>() - 1, {}});
      }
      std::vector<Witness> got;
      for (const auto& w : report.witnesses) got.push_back({w.envious, w.envied, {}});
      ok = got == expected;
      if (!ok) detail += "; expected witnesses " + Pairs(expected);
    }
    if (claim.contains("witnesses_include")) {
      for (const Json& p : claim["witnesses_include"]) {
        if (!report.HasWitness(p[0].get<int>() - 1, p[1].get<int>() - 1)) {
          ok = false;
          detail += "; missing witness (" + std::to_string(p[0].get<int>()) +
                    "," + std::to_string(p[1].get<int>()) + ")";
        }
      }
    }
    return ok;
  }

  void Evaluate(const Json& claim, ClaimResult& r) {
    const std::string& check = r.check;
    std::ostringstream detail;
    if (check == "fair" || check == "dual_fair") {
      const Instance& base = InstOf(claim);
      const Allocation& a = Alloc(Field(claim, "allocation", "claim").get<std::string>());
      FairnessReport report;
      if (check == "fair") {
        report = IsFair(base, a, CriterionFor(claim, base));
      } else {
        const DualResult dual = Dualize(base, a);
        const Criterion c = CriterionFor(claim, dual.dual.instance);
        report = IsFair(dual.dual.instance, *dual.allocation, c);
      }
      const bool expect = Field(claim, "expect", "claim").get<bool>();
      std::string extra;
      r.passed = report.fair == expect && CheckWitnesses(claim, report, extra);
      detail << report.criterion.FullName() << ": "
             << (report.fair ? "fair" : "unfair");
      if (!report.fair) detail << " witnesses " << Pairs(report.witnesses);
      detail << extra;
    } else if (check == "exists") {
      const Instance& in = InstOf(claim);
      const ExistenceCertificate cert =
          ExistsFair(in, CriterionFor(claim, in), options_);
      const bool expect = Field(claim, "expect", "claim").get<bool>();
      r.passed = cert.exists == expect;
      if (claim.contains("checked")) {
        r.passed = r.passed && cert.checked == claim["checked"].get<std::uint64_t>();
      }
      detail << (cert.exists ? "exists" : "not-exists") << " after "
             << cert.checked << " of " << cert.plan_count;
    } else if (check == "dual_copies") {
      const DualResult dual = Dualize(Doc(claim.value("instance", "main")));
      std::vector<int> got;
      for (const auto& t : dual.dual.instance.types()) got.push_back(t.copies);
      const auto expect = Field(claim, "expect", "claim").get<std::vector<int>>();
      r.passed = got == expect;
      detail << "dual copies";
      for (int c : got) detail << " " << c;
    } else if (check == "bundle_value") {
      const Instance& in = InstOf(claim);
      Bundle b;
      for (const Json& name : Field(claim, "bundle", "claim")) {
        b.Insert(in.TypeIndex(name.get<std::string>()));
      }
      const Rational v = BundleValue(in, Agent(claim), b);
      r.passed = v == Rat(claim, "expect");
      detail << "value " << v;
    } else if (check == "agent_values") {
      const Instance& in = InstOf(claim);
      const auto values = AgentValues(in, Alloc(claim["allocation"].get<std::string>()));
      bool ok = values.size() == claim["expect"].size();
      for (std::size_t i = 0; ok && i < values.size(); ++i) {
        ok = values[i] == RationalFromJson(claim["expect"][i], "expect");
      }
      r.passed = ok;
      detail << "values";
      for (const auto& v : values) detail << " " << v;
    } else if (check == "prop" || check == "mms" || check == "tps") {
      const Instance& in = InstOf(claim);
      const int agent = Agent(claim);
      const Rational v = check == "prop"  ? Prop(in, agent)
                         : check == "mms" ? Mms(in, agent, options_).value
                                          : Tps(in, agent).value;
      r.passed = v == Rat(claim, "expect");
      detail << check << " " << v;
    } else if (check == "tps_shift") {
      const int agent = Agent(claim);
      const Rational from = Tps(Inst(claim["from"].get<std::string>()), agent).value;
      const Rational to = Tps(Inst(claim["to"].get<std::string>()), agent).value;
      const Rational shift = to - from;
      r.passed = shift == Rat(claim, "expect");
      if (claim.contains("differs_from")) {
        r.passed = r.passed && shift != Rat(claim, "differs_from");
      }
      detail << "tps " << from << " -> " << to << ", shift " << shift;
    } else if (check == "mms_lower_bound") {
      const Instance& in = InstOf(claim);
      const Rational v = VerifyMmsLowerBound(
          in, Agent(claim), Alloc(claim["witness"].get<std::string>()));
      r.passed = v == Rat(claim, "expect");
      detail << "witness bound " << v;
    } else if (check == "mms_ratio") {
      const Instance& in = InstOf(claim);
      const int agent = Agent(claim);
      const Allocation& a = Alloc(claim["allocation"].get<std::string>());
      std::optional<Allocation> witness;
      if (claim.contains("witness")) witness = Alloc(claim["witness"].get<std::string>());
      const MmsBound bound = MmsBoundFor(in, agent, witness, options_);
      const Rational value = BundleValue(in.values(agent), a.bundle(agent));
      const Rational ratio = value / bound.value;
      r.passed = ratio == Rat(claim, "expect");
      if (claim.contains("exact")) {
        r.passed = r.passed && bound.exact == claim["exact"].get<bool>();
      }
      detail << "value " << value << ", mms " << (bound.exact ? "= " : ">= ")
             << bound.value << " (" << ToString(bound.source) << "), ratio "
             << (bound.exact ? "= " : "<= ") << ratio;
    } else if (check == "aps" || check == "dual_aps") {
      const Instance& base = InstOf(claim);
      const Instance in =
          check == "aps" ? base : Dualize(base).dual.instance;
      const PriceNormalization norm = ParsePriceNormalization(
          claim.value("normalization", "per_type"));
      const ApsResult aps = Aps(in, Agent(claim), Rat(claim, "entitlement"), norm);
      r.passed = aps.value == Rat(claim, "expect");
      detail << "aps " << aps.value << " prices";
      for (const auto& p : aps.prices) detail << " " << p;
    } else if (check == "aps_entitlement_duality") {
      const ApsDualityCheck c = CheckApsEntitlementDuality(
          InstOf(claim), Alloc(claim["allocation"].get<std::string>()),
          Rat(claim, "entitlement"),
          ParsePriceNormalization(claim.value("normalization", "per_type")));
      r.passed = c.holds == Field(claim, "expect", "claim").get<bool>();
      detail << "aps " << c.agents.front().aps << " = dual "
             << c.agents.front().dual_aps << " + " << c.agents.front().shift
             << " for agent 1; fairness " << c.original_fair << "/"
             << c.dual_fair;
    } else if (check == "envy_cycle") {
      const EnvyGraph g(InstOf(claim), Alloc(claim["allocation"].get<std::string>()));
      const auto cycle = g.FindCycle();
      std::vector<int> expect;
      for (const Json& a : claim["expect"]) expect.push_back(a.get<int>() - 1);
      r.passed = cycle && *cycle == expect;
      detail << "cycle " << (cycle ? Agents(*cycle) : std::string("none"));
    } else if (check == "cancel_cycle") {
      const Instance& in = InstOf(claim);
      std::vector<int> cycle;
      for (const Json& a : claim["cycle"]) cycle.push_back(a.get<int>() - 1);
      Allocation out =
          CancelEnvyCycle(in, Alloc(claim["allocation"].get<std::string>()), cycle);
      r.passed = true;
      if (claim.contains("expect_bundles")) {
        r.passed = out == AllocationFromJson(claim["expect_bundles"], in);
      }
      detail << "result " << AllocationToJson(in, out)["bundles"].dump();
      if (claim.contains("store")) allocations_.insert_or_assign(claim["store"].get<std::string>(), out);
    } else if (check == "pareto_dominates") {
      const bool got =
          ParetoDominates(InstOf(claim), Alloc(claim["better"].get<std::string>()),
                          Alloc(claim["base"].get<std::string>()));
      r.passed = got == Field(claim, "expect", "claim").get<bool>();
      detail << "dominates " << (got ? "yes" : "no");
    } else if (check == "strict_gain") {
      const Instance& in = InstOf(claim);
      const auto after = AgentValues(in, Alloc(claim["better"].get<std::string>()));
      const auto before = AgentValues(in, Alloc(claim["base"].get<std::string>()));
      r.passed = true;
      for (const Json& a : claim["agents"]) {
        const auto i = static_cast<std::size_t>(a.get<int>() - 1);
        r.passed = r.passed && after.at(i) > before.at(i);
        detail << "agent " << i + 1 << ": " << before.at(i) << " -> "
               << after.at(i) << "; ";
      }
    } else if (check == "mnw") {
      const Instance& in = InstOf(claim);
      const NashWelfareResult m = MaxNashWelfare(in, options_);
      r.passed = true;
      if (claim.contains("expect_bundles")) {
        r.passed = m.allocation == AllocationFromJson(claim["expect_bundles"], in);
      }
      if (claim.contains("expect_welfare")) {
        r.passed = r.passed && m.welfare == Rat(claim, "expect_welfare");
      }
      detail << "mnw " << AllocationToJson(in, m.allocation)["bundles"].dump()
             << " welfare " << m.welfare;
      if (claim.contains("store")) allocations_.insert_or_assign(claim["store"].get<std::string>(), m.allocation);
    } else if (check == "leveled") {
      const Instance& in = InstOf(claim);
      const bool got = IsLeveled(in, Agent(claim));
      r.passed = got == Field(claim, "expect", "claim").get<bool>();
      detail << "leveled " << (got ? "yes" : "no");
    } else {
      throw InputError("unknown check '" + check + "'");
    }
    r.detail = detail.str();
  }

  const Json& fixture_;
  EnumerationOptions options_;
  std::map<std::string, InstanceDocument> instances_;
  std::map<std::string, Allocation> allocations_;
};

}  // namespace internal

inline FixtureReport RunFixture(const Json& fixture,
                                const EnumerationOptions& options =
                                    EnumerationOptions::FromEnv()) {
  return internal::FixtureRunner(fixture, options).Run();
}

// Fixture files in `dir`, keyed by id, in id order.
inline std::map<std::string, std::filesystem::path> FixtureRegistry(
    const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw InputError("fixture directory '" + dir.string() + "' not found");
  }
  std::map<std::string, std::filesystem::path> out;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() != ".json") continue;
    const Json j = ReadJsonFile(entry.path().string());
    const std::string id = j.value("id", entry.path().stem().string());
    if (!out.emplace(id, entry.path()).second) {
      throw InputError("duplicate fixture id '" + id + "'");
    }
  }
  return out;
}

inline FixtureReport Replicate(const std::string& id,
                               const std::filesystem::path& dir,
                               const EnumerationOptions& options =
                                   EnumerationOptions::FromEnv()) {
  const auto registry = FixtureRegistry(dir);
  const auto it = registry.find(id);
  if (it == registry.end()) throw InputError("unknown fixture id '" + id + "'");
  const Json j = ReadJsonFile(it->second.string());
  try {
    return RunFixture(j, options);
  } catch (const InputError& e) {
    throw InputError(it->second.string() + ": " + e.what());
  }
}

}  // namespace fairdual

#endif  // FAIRDUAL_FIXTURES_HPP_
