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

// fairdual command-line frontend. Exit codes: 0 fair / exists / pass,
// 1 unfair / not-exists / fail, 2 usage, input or budget errors.

#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fairdual/fairdual.hpp"

namespace fd = fairdual;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kError = 2;

#ifndef FAIRDUAL_FIXTURE_DIR
#define FAIRDUAL_FIXTURE_DIR "fixtures"
#endif

// Human tables show at most 12 characters per rational; --json is exact.
std::string Short(const fd::Rational& r) {
  std::string s = r.ToString();
  if (s.size() <= 12) return s;
  char buf[32];
  std::snprintf(buf, sizeof buf, "~%.5g", r.ToDouble());
  s = buf;
  return s.size() <= 12 ? s : s.substr(0, 12);
}

std::string BundleText(const fd::Instance& in, fd::Bundle b) {
  std::string out = "{";
  bool first = true;
  b.ForEach([&](std::size_t t) {
    out += (first ? "" : ",") + in.type(t).name;
    first = false;
  });
  return out + "}";
}

void PrintJson(const fd::Json& j) { std::cout << j.dump(2) << "\n"; }

// Runs the rows through a fixed-width layout.
void PrintTable(const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      width[c] = std::max(width[c], r[c].size());
    }
  }
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      std::cout << std::left << std::setw(static_cast<int>(width[c]) + 2) << r[c];
    }
    std::cout << "\n";
  };
  line(header);
  for (const auto& r : rows) line(r);
}

fd::Criterion ResolveCriterion(const fd::Instance& in, const std::string& notion,
                               const std::string& orientation) {
  const fd::NotionName name = fd::ParseNotion(notion);
  const fd::Orientation o = orientation.empty()
                                ? in.InferOrientation()
                                : fd::ParseOrientation(orientation);
  const fd::Criterion c = name.For(o);
  fd::RequireOrientation(in, c.orientation);
  return c;
}

fd::Json WitnessJson(const fd::Instance& in, const fd::Witness& w) {
  fd::Json j;
  j["envious"] = w.envious + 1;
  j["envied"] = w.envied + 1;
  j["item"] = w.item ? fd::Json(in.type(*w.item).name) : fd::Json(nullptr);
  return j;
}

struct Common {
  std::string instance;
  std::string allocation;
  bool json = false;
  int jobs = 1;

  fd::EnumerationOptions Options() const {
    return fd::EnumerationOptions::FromEnv(jobs);
  }
};

// --- check ---------------------------------------------------------------

struct CheckArgs {
  Common common;
  std::string notion;
  std::string orientation;
};

int RunCheck(const CheckArgs& a) {
  const fd::InstanceDocument doc = fd::ReadInstanceFile(a.common.instance);
  const fd::Instance& in = doc.instance;
  const fd::Criterion c = ResolveCriterion(in, a.notion, a.orientation);
  const fd::Allocation alloc = fd::ReadAllocationFile(a.common.allocation, in);
  const fd::FairnessReport r = fd::IsFair(in, alloc, c);
  if (a.common.json) {
    fd::Json j;
    j["criterion"] = c.FullName();
    j["fair"] = r.fair;
    fd::Json ws = fd::Json::array();
    for (const auto& w : r.witnesses) ws.push_back(WitnessJson(in, w));
    j["witnesses"] = ws;
    PrintJson(j);
  } else {
    std::cout << c.FullName() << ": " << (r.fair ? "fair" : "not fair") << "\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& w : r.witnesses) {
      rows.push_back({std::to_string(w.envious + 1), std::to_string(w.envied + 1),
                      w.item ? in.type(*w.item).name : "-"});
    }
    if (!rows.empty()) PrintTable({"envious", "envied", "item"}, rows);
  }
  return r.fair ? kPass : kFail;
}

// --- exists --------------------------------------------------------------

struct ExistsArgs {
  Common common;
  std::string notion;
  std::string orientation;
  bool all = false;
};

int RunExists(const ExistsArgs& a) {
  const fd::InstanceDocument doc = fd::ReadInstanceFile(a.common.instance);
  const fd::Instance& in = doc.instance;
  const fd::Criterion c = ResolveCriterion(in, a.notion, a.orientation);
  const fd::ExistenceCertificate cert =
      fd::ExistsFair(in, c, a.common.Options(), a.all);
  if (a.common.json) {
    fd::Json j;
    j["criterion"] = c.FullName();
    j["exists"] = cert.exists;
    j["plan_count"] = cert.plan_count;
    j["checked"] = cert.checked;
    if (cert.fair_count) j["fair_count"] = *cert.fair_count;
    if (cert.witness) {
      j["witness_index"] = cert.witness_index;
      j["witness"] = fd::AllocationToJson(in, *cert.witness);
    } else {
      j["witness"] = nullptr;
    }
    PrintJson(j);
  } else {
    std::cout << c.FullName() << ": " << (cert.exists ? "exists" : "does not exist")
              << " (checked " << cert.checked << " of " << cert.plan_count
              << " allocations)\n";
    if (cert.fair_count) std::cout << "fair allocations: " << *cert.fair_count << "\n";
    if (cert.witness) {
      std::vector<std::vector<std::string>> rows;
      for (int i = 0; i < in.agent_count(); ++i) {
        rows.push_back({std::to_string(i + 1), BundleText(in, cert.witness->bundle(i)),
                        Short(fd::BundleValue(in, i, cert.witness->bundle(i)))});
      }
      PrintTable({"agent", "bundle", "value"}, rows);
    }
  }
  return cert.exists ? kPass : kFail;
}

// --- dualize -------------------------------------------------------------

struct DualizeArgs {
  Common common;
  std::string out_instance;
  std::string out_allocation;
  std::string check;
};

fd::Json DualJson(const fd::DualResult& d) {
  fd::Json j;
  j["instance"] = fd::InstanceToJson(d.dual);
  if (d.allocation) {
    j["allocation"] = fd::AllocationToJson(d.dual.instance, *d.allocation);
  }
  fd::Json shifts = fd::Json::array();
  for (const auto& s : d.shifts) shifts.push_back(fd::RationalToJson(s));
  j["shifts"] = shifts;
  j["dropped"] = d.dropped;
  return j;
}

// Checks one allocation; returns a description of the counterexample if any.
std::optional<std::string> DualityCounterexample(const std::string& family,
                                                 const std::string& what,
                                                 const fd::Instance& in,
                                                 const fd::Allocation& a,
                                                 const std::vector<fd::ShareDualityAgent>& shares) {
  if (family == "envy") {
    const fd::Base base = fd::ParseNotion(what).base;
    const fd::EnvyDualityCheck r = fd::CheckEnvyDuality(in, a, base);
    if (r.holds) return std::nullopt;
    return r.original_criterion.FullName() + " is " +
           (r.original_fair ? "fair" : "unfair") + " but " +
           r.dual_criterion.FullName() + " on the dual is " +
           (r.dual_fair ? "fair" : "unfair");
  }
  const fd::ShareDualityCheck r = fd::CheckShareDuality(in, a, shares);
  if (r.holds) return std::nullopt;
  return r.identity ? std::string("fairness verdicts differ")
                    : std::string("shift identity fails");
}

int RunDualize(const DualizeArgs& a) {
  const fd::InstanceDocument doc = fd::ReadInstanceFile(a.common.instance);
  const fd::Instance& in = doc.instance;
  std::optional<fd::Allocation> alloc;
  if (!a.common.allocation.empty()) {
    alloc = fd::ReadAllocationFile(a.common.allocation, in);
  }
  const fd::DualResult dual = fd::Dualize(doc, alloc);
  if (!a.out_instance.empty()) fd::WriteJsonFile(a.out_instance, fd::InstanceToJson(dual.dual));
  if (!a.out_allocation.empty()) {
    if (!dual.allocation) throw fd::InputError("--out-allocation needs --allocation");
    fd::WriteJsonFile(a.out_allocation,
                      fd::AllocationToJson(dual.dual.instance, *dual.allocation));
  }
  if (a.check.empty()) {
    if (a.out_instance.empty() && a.out_allocation.empty()) PrintJson(DualJson(dual));
    return kPass;
  }

  const auto colon = a.check.find(':');
  const std::string family = colon == std::string::npos ? "" : a.check.substr(0, colon);
  const std::string what = colon == std::string::npos ? "" : a.check.substr(colon + 1);
  if (family != "envy" && family != "share") {
    throw fd::InputError("--check expects envy:<ef1|efx|efl|ef> or share:<prop|mms>");
  }
  if (!doc.held.empty()) {
    throw fd::InputError("--check needs an instance without zero-copy types");
  }
  const fd::EnumerationOptions options = a.common.Options();
  std::vector<fd::ShareDualityAgent> shares;
  if (family == "envy") {
    fd::ParseNotion(what);
  } else {
    shares = fd::ShareDualityShares(in, fd::ParseShareKind(what), options);
  }
  std::uint64_t checked = 0;
  std::optional<std::pair<fd::Allocation, std::string>> bad;
  if (alloc) {
    ++checked;
    if (auto msg = DualityCounterexample(family, what, in, *alloc, shares)) {
      bad.emplace(*alloc, *msg);
    }
  } else {
    const fd::EnumerationPlan plan(in);
    plan.RequireWithin(options.cap);
    plan.ForEach([&](std::uint64_t, const fd::Allocation& x) {
      ++checked;
      if (auto msg = DualityCounterexample(family, what, in, x, shares)) {
        bad.emplace(x, *msg);
        return false;
      }
      return true;
    });
  }
  if (a.common.json) {
    fd::Json j;
    j["check"] = a.check;
    j["holds"] = !bad.has_value();
    j["checked"] = checked;
    if (bad) {
      j["counterexample"] = fd::AllocationToJson(in, bad->first);
      j["message"] = bad->second;
    }
    PrintJson(j);
  } else {
    std::cout << a.check << ": " << (bad ? "counterexample found" : "holds")
              << " (" << checked << " allocation" << (checked == 1 ? "" : "s")
              << ")\n";
    if (bad) {
      std::cout << bad->second << "\n";
      std::cout << fd::AllocationToJson(in, bad->first).dump() << "\n";
    }
  }
  return bad ? kFail : kPass;
}

// --- shares --------------------------------------------------------------

struct SharesArgs {
  Common common;
  int agent = 0;
  std::string kind;
  std::string entitlement;
  std::string witness;
  std::string normalization = "per_type";
};

int RunShares(const SharesArgs& a) {
  const fd::InstanceDocument doc = fd::ReadInstanceFile(a.common.instance);
  const fd::Instance& in = doc.instance;
  const fd::ShareKind kind = fd::ParseShareKind(a.kind);
  const int agent = a.agent - 1;
  fd::RequireAgent(in, agent);
  if (kind != fd::ShareKind::kAps && !a.entitlement.empty()) {
    throw fd::InputError("--entitlement applies to --kind aps only");
  }
  fd::Json j;
  j["kind"] = fd::ToString(kind);
  j["agent"] = a.agent;
  fd::Json cert;
  std::string note;
  fd::Rational value;
  switch (kind) {
    case fd::ShareKind::kProp: {
      value = fd::Prop(in, agent);
      cert["total"] = fd::RationalToJson(fd::FullValue(in, agent));
      cert["agents"] = in.agent_count();
      break;
    }
    case fd::ShareKind::kMms: {
      std::optional<fd::Allocation> w;
      if (!a.witness.empty()) w = fd::ReadAllocationFile(a.witness, in);
      const fd::EnumerationOptions options = a.common.Options();
      const fd::EnumerationPlan plan(in);
      if (plan.count() <= options.cap) {
        const fd::MmsResult m = fd::Mms(in, agent, options);
        value = m.value;
        cert["exact"] = true;
        cert["source"] = "exhaustive";
        cert["partition"] = fd::AllocationToJson(in, m.allocation);
        cert["plan_count"] = plan.count();
        if (w) {
          cert["witness_bound"] =
              fd::RationalToJson(fd::VerifyMmsLowerBound(in, agent, *w));
        }
      } else {
        const fd::MmsBound b = fd::MmsBoundFor(in, agent, w, options);
        value = b.value;
        cert["exact"] = b.exact;
        cert["source"] = fd::ToString(b.source);
        cert["partition"] = fd::AllocationToJson(in, *w);
        if (!b.exact) note = "lower bound from the witness partition";
      }
      break;
    }
    case fd::ShareKind::kTps: {
      const fd::TpsResult t = fd::Tps(in, agent);
      value = t.value;
      cert["truncated"] = t.truncated;
      cert["prop"] = fd::RationalToJson(fd::Prop(in, agent));
      break;
    }
    case fd::ShareKind::kAps: {
      const fd::Rational b = a.entitlement.empty()
                                 ? fd::Rational(1, in.agent_count())
                                 : fd::Rational::Parse(a.entitlement);
      const fd::ApsResult r = fd::Aps(in, agent, b,
                                      fd::ParsePriceNormalization(a.normalization));
      value = r.value;
      fd::Json prices = fd::Json::object();
      for (std::size_t t = 0; t < in.type_count(); ++t) {
        prices[in.type(t).name] = fd::RationalToJson(r.prices[t]);
      }
      cert["entitlement"] = fd::RationalToJson(r.entitlement);
      cert["normalization"] = fd::ToString(r.normalization);
      cert["prices"] = prices;
      cert["slack"] = fd::RationalToJson(r.slack);
      break;
    }
  }
  j["value"] = fd::RationalToJson(value);
  j["certificate"] = cert;
  if (a.common.json) {
    PrintJson(j);
  } else {
    std::cout << fd::ToString(kind) << " of agent " << a.agent << ": " << Short(value)
              << (note.empty() ? "" : "  (" + note + ")") << "\n";
    if (kind == fd::ShareKind::kAps) {
      std::vector<std::vector<std::string>> rows;
      for (std::size_t t = 0; t < in.type_count(); ++t) {
        rows.push_back({in.type(t).name,
                        Short(fd::RationalFromJson(cert["prices"][in.type(t).name], "$"))});
      }
      PrintTable({"type", "price"}, rows);
    }
  }
  return kPass;
}

// --- mnw -----------------------------------------------------------------

int RunMnw(const Common& a) {
  const fd::InstanceDocument doc = fd::ReadInstanceFile(a.instance);
  const fd::Instance& in = doc.instance;
  const fd::NashWelfareResult r = fd::MaxNashWelfare(in, a.Options());
  if (a.json) {
    fd::Json j;
    j["welfare"] = fd::RationalToJson(r.welfare);
    j["index"] = r.index;
    j["allocation"] = fd::AllocationToJson(in, r.allocation);
    PrintJson(j);
  } else {
    std::cout << "max Nash welfare: " << Short(r.welfare) << "\n";
    std::vector<std::vector<std::string>> rows;
    for (int i = 0; i < in.agent_count(); ++i) {
      rows.push_back({std::to_string(i + 1), BundleText(in, r.allocation.bundle(i)),
                      Short(fd::BundleValue(in, i, r.allocation.bundle(i)))});
    }
    PrintTable({"agent", "bundle", "value"}, rows);
  }
  return kPass;
}

// --- solve-leveled -------------------------------------------------------

struct LeveledArgs {
  Common common;
  std::string trace;
};

fd::Json TraceJson(const fd::Instance& in, const fd::LeveledSolution& s) {
  fd::Json steps = fd::Json::array();
  for (const auto& st : s.trace) {
    fd::Json j;
    j["envious"] = st.envious + 1;
    j["envied"] = st.envied + 1;
    j["gains"] = in.type(st.g_max).name;
    j["gives"] = in.type(st.g_min).name;
    j["psi_before"] = st.psi_before;
    j["psi_after"] = st.psi_after;
    steps.push_back(std::move(j));
  }
  fd::Json j;
  j["initial"] = fd::AllocationToJson(in, s.initial);
  j["steps"] = steps;
  return j;
}

int RunSolveLeveled(const LeveledArgs& a) {
  const fd::InstanceDocument doc = fd::ReadInstanceFile(a.common.instance);
  const fd::Instance& in = doc.instance;
  const fd::LeveledSolution s = fd::SolveLeveledEfxWc(in);
  if (!a.trace.empty()) fd::WriteJsonFile(a.trace, TraceJson(in, s));
  if (a.common.json) {
    fd::Json j = fd::AllocationToJson(in, s.allocation);
    j["swaps"] = s.trace.size();
    PrintJson(j);
  } else {
    std::cout << "EFX_WC allocation after " << s.trace.size() << " swap"
              << (s.trace.size() == 1 ? "" : "s") << "\n";
    std::vector<std::vector<std::string>> rows;
    for (int i = 0; i < in.agent_count(); ++i) {
      rows.push_back({std::to_string(i + 1), BundleText(in, s.allocation.bundle(i)),
                      Short(fd::BundleValue(in, i, s.allocation.bundle(i)))});
    }
    PrintTable({"agent", "bundle", "value"}, rows);
  }
  return kPass;
}

// --- replicate -----------------------------------------------------------

struct ReplicateArgs {
  std::string id;
  bool all = false;
  bool json = false;
  std::string fixtures;
};

int RunReplicate(const ReplicateArgs& a) {
  if (a.all == !a.id.empty()) throw fd::InputError("give a fixture id or --all");
  std::string dir = a.fixtures;
  if (dir.empty()) {
    const char* env = std::getenv("FAIRDUAL_FIXTURES");
    dir = env != nullptr && *env != '\0' ? env : FAIRDUAL_FIXTURE_DIR;
  }
  std::vector<std::string> ids;
  if (a.all) {
    for (const auto& [id, path] : fd::FixtureRegistry(dir)) ids.push_back(id);
  } else {
    ids.push_back(a.id);
  }
  const fd::EnumerationOptions options = fd::EnumerationOptions::FromEnv();
  bool ok = true;
  fd::Json reports = fd::Json::array();
  for (const auto& id : ids) {
    const fd::FixtureReport r = fd::Replicate(id, dir, options);
    ok = ok && r.passed;
    if (a.json) {
      fd::Json j;
      j["id"] = r.id;
      j["passed"] = r.passed;
      fd::Json claims = fd::Json::array();
      for (const auto& c : r.claims) {
        fd::Json cj;
        cj["check"] = c.check;
        cj["summary"] = c.summary;
        cj["passed"] = c.passed;
        if (!c.detail.empty()) cj["detail"] = c.detail;
        claims.push_back(std::move(cj));
      }
      j["claims"] = claims;
      reports.push_back(std::move(j));
      continue;
    }
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.id << "  (" << r.claims.size()
              << " claims)\n";
    for (const auto& c : r.claims) {
      if (!c.passed) std::cout << "  failed " << c.check << ": " << c.summary
                               << (c.detail.empty() ? "" : "; " + c.detail) << "\n";
    }
  }
  if (a.json) {
    fd::Json j;
    j["passed"] = ok;
    j["fixtures"] = reports;
    PrintJson(j);
  }
  return ok ? kPass : kFail;
}

// --- sweep ---------------------------------------------------------------

struct SweepArgs {
  fd::SweepConfig config;
  std::string out;
  bool json = false;
};

int RunSweep(SweepArgs a) {
  a.config.enumeration = fd::EnumerationOptions::FromEnv();
  const auto& s = a.config.shape;
  if (a.config.instances < 0 || s.min_agents < 1 || s.min_agents > s.max_agents ||
      s.max_agents > 8 || s.min_types < 1 || s.min_types > s.max_types ||
      s.max_types > 8 || s.max_value < 0) {
    throw fd::InputError("sweep shape out of range (agents and types in [1, 8])");
  }
  const fd::SweepReport r = fd::Sweep(a.config);
  const fd::Json j = fd::SweepReportToJson(r);
  if (!a.out.empty()) fd::WriteJsonFile(a.out, j);
  if (a.json) {
    PrintJson(j);
  } else {
    std::cout << "scheme " << fd::kGenerationScheme << ", seed " << a.config.seed
              << ", " << a.config.instances << " instances, " << r.allocations
              << " allocations\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& [name, count] : r.fair_counts) {
      const auto& ratio = r.min_ratio.at(name);
      rows.push_back({name, std::to_string(count), ratio ? Short(*ratio) : "-"});
    }
    PrintTable({"notion", "fair", "min MMS ratio"}, rows);
    std::cout << r.violations.size() << " violation"
              << (r.violations.size() == 1 ? "" : "s") << "\n";
    for (const auto& v : r.violations) std::cout << "  " << v.kind << ": " << v.message << "\n";
  }
  return r.ok() ? kPass : kFail;
}

void AddCommon(CLI::App* cmd, Common& c, bool allocation, bool allocation_required,
               bool jobs) {
  cmd->add_option("--instance", c.instance, "instance JSON file")->required();
  if (allocation) {
    auto* opt = cmd->add_option("--allocation", c.allocation, "allocation JSON file");
    if (allocation_required) opt->required();
  }
  if (jobs) cmd->add_option("--jobs", c.jobs, "worker threads")->check(CLI::Range(1, 256));
  cmd->add_flag("--json", c.json, "machine-readable output");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Envy-freeness, shares and goods/chores duality for items with copies"};
  app.require_subcommand(1);

  CheckArgs check;
  auto* c_check = app.add_subcommand("check", "test an allocation against a notion");
  AddCommon(c_check, check.common, true, true, false);
  c_check->add_option("--notion", check.notion, "ef, ef1, efx, efl, optional _wc")->required();
  c_check->add_option("--orientation", check.orientation, "goods or chores");

  ExistsArgs exists;
  auto* c_exists = app.add_subcommand("exists", "exhaustive existence search");
  AddCommon(c_exists, exists.common, false, false, true);
  c_exists->add_option("--notion", exists.notion, "notion name")->required();
  c_exists->add_option("--orientation", exists.orientation, "goods or chores");
  c_exists->add_flag("--all", exists.all, "count every fair allocation");

  DualizeArgs dualize;
  auto* c_dualize = app.add_subcommand("dualize", "dual instance and allocation");
  AddCommon(c_dualize, dualize.common, true, false, true);
  c_dualize->add_option("--out-instance", dualize.out_instance, "write the dual instance");
  c_dualize->add_option("--out-allocation", dualize.out_allocation,
                        "write the dual allocation");
  c_dualize->add_option("--check", dualize.check, "envy:<base> or share:<prop|mms>");

  SharesArgs shares;
  auto* c_shares = app.add_subcommand("shares", "PROP, MMS, TPS or APS of one agent");
  AddCommon(c_shares, shares.common, false, false, true);
  c_shares->add_option("--agent", shares.agent, "agent, 1-based")->required();
  c_shares->add_option("--kind", shares.kind, "prop, mms, tps or aps")->required();
  c_shares->add_option("--entitlement", shares.entitlement, "APS entitlement b");
  c_shares->add_option("--witness", shares.witness, "partition giving an MMS lower bound");
  c_shares->add_option("--price-normalization", shares.normalization,
                       "per_type or per_copy");

  Common mnw;
  auto* c_mnw = app.add_subcommand("mnw", "maximum Nash welfare allocation");
  AddCommon(c_mnw, mnw, false, false, true);

  LeveledArgs leveled;
  auto* c_leveled = app.add_subcommand("solve-leveled", "EFX_WC for leveled goods");
  AddCommon(c_leveled, leveled.common, false, false, false);
  c_leveled->add_option("--trace", leveled.trace, "write the swap trace");

  ReplicateArgs replicate;
  auto* c_replicate = app.add_subcommand("replicate", "re-run fixture claims");
  c_replicate->add_option("id", replicate.id, "fixture id");
  c_replicate->add_flag("--all", replicate.all, "every fixture");
  c_replicate->add_option("--fixtures", replicate.fixtures, "fixture directory");
  c_replicate->add_flag("--json", replicate.json, "machine-readable output");

  SweepArgs sweep;
  auto* c_sweep = app.add_subcommand("sweep", "random lattice and MMS-ratio sweep");
  c_sweep->add_option("--seed", sweep.config.seed, "PRNG seed");
  c_sweep->add_option("--instances", sweep.config.instances, "instance count");
  c_sweep->add_option("--min-agents", sweep.config.shape.min_agents);
  c_sweep->add_option("--max-agents", sweep.config.shape.max_agents);
  c_sweep->add_option("--min-types", sweep.config.shape.min_types);
  c_sweep->add_option("--max-types", sweep.config.shape.max_types);
  c_sweep->add_option("--max-value", sweep.config.shape.max_value, "values in [0, v]");
  c_sweep->add_option("--out", sweep.out, "write the JSON report");
  c_sweep->add_flag("--json", sweep.json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  try {
    if (*c_check) return RunCheck(check);
    if (*c_exists) return RunExists(exists);
    if (*c_dualize) return RunDualize(dualize);
    if (*c_shares) return RunShares(shares);
    if (*c_mnw) return RunMnw(mnw);
    if (*c_leveled) return RunSolveLeveled(leveled);
    if (*c_replicate) return RunReplicate(replicate);
    if (*c_sweep) return RunSweep(sweep);
  } catch (const fd::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << " (raise FAIRDUAL_ENUM_CAP to allow it)\n";
    return kError;
  } catch (const fd::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
