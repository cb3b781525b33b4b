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

#include "equimat/cli.h"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "equimat/errors.h"
#include "equimat/exchange_graph.h"
#include "equimat/fair_division.h"
#include "equimat/json_io.h"
#include "equimat/oracle_verify.h"
#include "equimat/partitioner.h"
#include "equimat/verify_suite.h"

namespace equimat {
namespace {

struct Flags {
  std::string matroid;
  int k = 2;
  std::string set;
  std::string set1;
  std::string set2;
  std::string basis1;
  std::string basis2;
  std::string instance;
  std::uint64_t seed = VerifyOptions{}.seed;
  bool oracle = false;
  std::string output;
};

struct Report {
  Json doc;
  std::string summary;
};

std::shared_ptr<const Matroid> LoadMatroid(const Flags& f) {
  return MatroidFromJson(ReadJsonFile(f.matroid));
}

ElementSet LoadSet(const std::string& path, const Matroid& m) {
  return SetFromJson(ReadJsonFile(path), m.NumElements());
}

BasisPartition Canonical(BasisPartition p) {
  std::sort(p.parts.begin(), p.parts.end());
  return p;
}

// The output must be one of the enumerated partitions.
Json OracleMembership(const Matroid& m, const BasisPartition& p) {
  const auto all = EnumerateKBasisPartitions(m, p.k());
  const BasisPartition mine = Canonical(p);
  const bool found = std::any_of(all.begin(), all.end(), [&](const auto& q) {
    return Canonical(q) == mine;
  });
  if (!found) {
    throw InternalInvariantError("output partition is not among the " +
                                 std::to_string(all.size()) +
                                 " enumerated partitions");
  }
  return Json{{"partitions", all.size()}, {"member", true}};
}

Json StatsJson(const PartitionStats& stats) {
  Json s{{"exchanges", stats.exchanges}, {"oracle_calls", stats.oracle_calls}};
  if (stats.potentials) {
    s["phi"] = stats.potentials->phi;
    s["psi"] = stats.potentials->psi;
    s["xi"] = stats.potentials->xi;
  }
  return s;
}

Json CountsJson(const BasisPartition& p, const ElementSet& s) {
  return Json(p.Counts(s));
}

Report RunPartition(const Flags& f) {
  const auto m = LoadMatroid(f);
  const PartitionResult r = PartitionIntoKBases(*m, f.k);
  Report rep;
  rep.doc = {{"command", "partition"},
             {"k", f.k},
             {"parts", PartsToJson(r.partition.parts)},
             {"stats", StatsJson(r.stats)}};
  if (f.oracle) rep.doc["oracle"] = OracleMembership(*m, r.partition);
  rep.summary = "partition: " + std::to_string(f.k) + " bases, " +
                std::to_string(r.stats.oracle_calls) + " oracle calls";
  return rep;
}

Report RunEquitable(const Flags& f) {
  const auto m = LoadMatroid(f);
  if (f.set.empty()) throw MalformedInputError("equitable needs --set");
  const ElementSet s = LoadSet(f.set, *m);
  const PartitionResult r = EquitablePartition(*m, f.k, s);
  const bool bounds = MeetsEquitableBounds(r.partition, s);
  Report rep;
  rep.doc = {{"command", "equitable"},
             {"k", f.k},
             {"set", SetToJson(s)},
             {"parts", PartsToJson(r.partition.parts)},
             {"stats", StatsJson(r.stats)},
             {"conditions",
              {{"counts", CountsJson(r.partition, s)},
               {"floor", static_cast<int>(s.size()) / f.k},
               {"ceil", (static_cast<int>(s.size()) + f.k - 1) / f.k},
               {"bounds_met", bounds}}}};
  if (!bounds) throw InternalInvariantError("equitable bounds not met");
  if (f.oracle) {
    Json o = OracleMembership(*m, r.partition);
    o["equitable_exists"] = BruteEquitable(*m, f.k, s);
    if (!o["equitable_exists"].get<bool>()) {
      throw InternalInvariantError("brute force finds no equitable partition");
    }
    rep.doc["oracle"] = o;
  }
  rep.summary = "equitable: |S|=" + std::to_string(s.size()) + ", " +
                std::to_string(r.stats.exchanges) + " exchanges, " +
                std::to_string(r.stats.oracle_calls) + " oracle calls";
  return rep;
}

Report RunEquitable2(const Flags& f) {
  const auto m = LoadMatroid(f);
  if (f.set1.empty() || f.set2.empty()) {
    throw MalformedInputError("equitable2 needs --set1 and --set2");
  }
  const ElementSet s1 = LoadSet(f.set1, *m);
  const ElementSet s2 = LoadSet(f.set2, *m);
  const PartitionResult r = TwoSetEquitablePartition(*m, f.k, s1, s2);
  const TwoSetReport t = CheckTwoSetConditions(r.partition, s1, s2);
  Json conditions{{"counts1", CountsJson(r.partition, s1)},
                  {"counts2", CountsJson(r.partition, s2)},
                  {"i", t.s1_balanced},
                  {"ii", t.gap_sum_bounded},
                  {"iii", t.union_gap_bounded},
                  {"profile_family", t.profile_family}};
  if (t.parity_case) {
    conditions["parity_case"] = ParityCaseName(*t.parity_case);
    conditions["parity_bounds"] = t.parity_bounds.value_or(false);
  }
  Report rep;
  rep.doc = {{"command", "equitable2"},
             {"k", f.k},
             {"set1", SetToJson(s1)},
             {"set2", SetToJson(s2)},
             {"parts", PartsToJson(r.partition.parts)},
             {"stats", StatsJson(r.stats)},
             {"conditions", conditions}};
  if (!t.AllConditions() || !t.profile_family) {
    throw InternalInvariantError("two-set conditions not met");
  }
  if (f.oracle) rep.doc["oracle"] = OracleMembership(*m, r.partition);
  rep.summary = "equitable2: " + std::to_string(r.stats.exchanges) +
                " exchanges, " + std::to_string(r.stats.oracle_calls) +
                " oracle calls" +
                (t.parity_case ? ", case " + ParityCaseName(*t.parity_case)
                               : std::string());
  return rep;
}

Report RunExchange(const Flags& f) {
  const auto m = LoadMatroid(f);
  if (f.set.empty()) throw MalformedInputError("exchange needs --set");
  const ElementSet s = LoadSet(f.set, *m);
  ElementSet b1, b2;
  if (!f.basis1.empty() || !f.basis2.empty()) {
    if (f.basis1.empty() || f.basis2.empty()) {
      throw MalformedInputError("give both --basis1 and --basis2");
    }
    b1 = LoadSet(f.basis1, *m);
    b2 = LoadSet(f.basis2, *m);
  } else {
    const auto parts = PartitionIntoKBases(*m, 2).partition.parts;
    b1 = parts[0];
    b2 = parts[1];
  }
  const CountingMatroid counted(*m);
  const ExchangeSet x = FindTSExchangeable(counted, b1, b2, s);
  const auto [n1, n2] = ApplyExchange(b1, b2, x);
  Report rep;
  rep.doc = {
      {"command", "exchange"},
      {"basis1", SetToJson(b1)},
      {"basis2", SetToJson(b2)},
      {"set", SetToJson(s)},
      {"exchange", {{"elements", SetToJson(x.elements)}, {"pivot", *x.pivot}}},
      {"result", {{"basis1", SetToJson(n1)}, {"basis2", SetToJson(n2)}}},
      {"stats",
       {{"exchanges", 1}, {"oracle_calls", counted.counts().total()}}}};
  if (f.oracle) {
    const auto brute = BruteExchangeable(*m, b1, b2, s);
    if (!brute) {
      throw InternalInvariantError("brute force finds no exchangeable set");
    }
    rep.doc["oracle"] = {{"smallest", SetToJson(brute->elements)},
                         {"pivot", *brute->pivot}};
  }
  rep.summary = "exchange: X=" + x.elements.ToString() + " pivot " +
                std::to_string(*x.pivot);
  return rep;
}

Json BundleValues(const FairDivisionInstance& inst, const Allocation& a) {
  Json values = Json::array();
  for (int i = 0; i < inst.num_agents(); ++i) {
    values.push_back(FormatRational(inst.valuations[i].Of(a.bundles[i])));
  }
  return values;
}

bool Identical(const FairDivisionInstance& inst) {
  return std::all_of(
      inst.valuations.begin(), inst.valuations.end(),
      [&](const Valuation& v) { return v == inst.valuations[0]; });
}

FairDivisionInstance LoadInstance(const Flags& f) {
  if (f.instance.empty()) throw MalformedInputError("missing --instance");
  FairDivisionInstance inst = InstanceFromJson(ReadJsonFile(f.instance));
  if (!f.matroid.empty()) inst.matroid = LoadMatroid(f);
  inst.Validate();
  return inst;
}

Report RunEf1(const Flags& f) {
  const FairDivisionInstance original = LoadInstance(f);
  const CountingMatroid counted(*original.matroid);
  const FairDivisionInstance inst{
      std::shared_ptr<const Matroid>(&counted, [](const Matroid*) {}),
      original.valuations};
  const bool two_agent = !Identical(inst) && inst.num_agents() == 2;
  const Ef1Outcome out =
      two_agent ? CutAndChooseEf1TwoAgents(inst) : AllocateEf1TriValued(inst);
  const bool ef1 = CheckEf1(original, out.allocation).ef1;
  if (!ef1) throw InternalInvariantError("allocation is not EF1");
  Report rep;
  rep.doc = {{"command", "ef1"},
             {"method", two_agent ? "cut_and_choose" : "tri_valued"},
             {"bundles", PartsToJson(out.allocation.bundles)},
             {"report",
              {{"ef1", ef1},
               {"bundle_values", BundleValues(original, out.allocation)}}},
             {"stats",
              {{"exchanges", out.stats.partition.exchanges},
               {"envy_repairs", out.stats.envy_repairs},
               {"oracle_calls", counted.counts().total()}}}};
  if (f.oracle) {
    const bool exists = BruteEf1Exists(original);
    if (!exists) throw InternalInvariantError("brute force finds no EF1");
    rep.doc["oracle"] = {{"ef1_exists", exists}};
  }
  rep.summary = "ef1: " + std::to_string(out.stats.envy_repairs) +
                " envy repairs, EF1 verified";
  return rep;
}

Report RunMms(const Flags& f) {
  const FairDivisionInstance original = LoadInstance(f);
  const CountingMatroid counted(*original.matroid);
  const FairDivisionInstance inst{
      std::shared_ptr<const Matroid>(&counted, [](const Matroid*) {}),
      original.valuations};
  const MmsOutcome out = AllocateMmsBiValued(inst);
  Json thresholds = Json::array();
  for (const Rational& t : out.stats.thresholds) {
    thresholds.push_back(FormatRational(t));
  }
  Json rounds = Json::array();
  for (const auto& r : out.stats.assigned_per_round) rounds.push_back(r);
  Report rep;
  rep.doc = {{"command", "mms"},
             {"bundles", PartsToJson(out.allocation.bundles)},
             {"report",
              {{"ef1", CheckEf1(original, out.allocation).ef1},
               {"mms_thresholds", thresholds},
               {"bundle_values", BundleValues(original, out.allocation)}}},
             {"stats",
              {{"rounds", out.stats.rounds},
               {"assigned_per_round", rounds},
               {"exchanges", 0},
               {"oracle_calls", counted.counts().total()}}}};
  if (f.oracle) {
    Json brute = Json::array();
    for (int i = 0; i < original.num_agents(); ++i) {
      const Rational mu = BruteMms(original, i);
      if (mu != out.stats.thresholds[i]) {
        throw InternalInvariantError("agent " + std::to_string(i) +
                                     " threshold differs from brute force");
      }
      brute.push_back(FormatRational(mu));
    }
    rep.doc["oracle"] = {{"brute_mms", brute}};
  }
  rep.summary = "mms: " + std::to_string(out.stats.rounds) +
                " lone-divider rounds, every agent at or above its share";
  return rep;
}

Report RunVerify(const Flags& f, std::ostream& err) {
  VerifyOptions options;
  options.seed = f.seed;
  Json criteria = Json::array();
  int failed = 0;
  for (int id = 1; id <= 8; ++id) {
    const CriterionResult r = RunCriterion(id, options);
    err << (r.passed ? "PASS " : "FAIL ") << r.id << " " << r.name << " ("
        << r.runs << " runs, " << r.failures << " failures)\n";
    criteria.push_back({{"id", r.id},
                        {"name", r.name},
                        {"passed", r.passed},
                        {"runs", r.runs},
                        {"failures", r.failures},
                        {"detail", r.detail}});
    if (!r.passed) ++failed;
  }
  Report rep;
  rep.doc = {{"command", "verify"}, {"seed", f.seed}, {"criteria", criteria}};
  rep.summary = "verify: " + std::to_string(8 - failed) + "/8 criteria pass";
  if (failed > 0) rep.doc["failed"] = failed;
  return rep;
}

void AddMatroid(CLI::App* cmd, Flags& f, bool required) {
  auto* opt = cmd->add_option("--matroid", f.matroid, "matroid document")
                  ->check(CLI::ExistingFile);
  if (required) opt->required();
}

void AddK(CLI::App* cmd, Flags& f) {
  cmd->add_option("--k", f.k, "number of bases")
      ->check(CLI::Range(1, 1 << 20))
      ->capture_default_str();
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  Flags f;
  CLI::App app(
      "Equitable basis partitions and matroid-constrained fair "
      "division.",
      "equimat");
  app.require_subcommand(1);

  auto* partition = app.add_subcommand("partition", "split E into k bases");
  AddMatroid(partition, f, true);
  AddK(partition, f);

  auto* equitable =
      app.add_subcommand("equitable", "k bases splitting one set evenly");
  AddMatroid(equitable, f, true);
  AddK(equitable, f);
  equitable->add_option("--set", f.set, "set document")
      ->required()
      ->check(CLI::ExistingFile);

  auto* equitable2 =
      app.add_subcommand("equitable2", "k bases balancing two disjoint sets");
  AddMatroid(equitable2, f, true);
  AddK(equitable2, f);
  equitable2->add_option("--set1", f.set1)
      ->required()
      ->check(CLI::ExistingFile);
  equitable2->add_option("--set2", f.set2)
      ->required()
      ->check(CLI::ExistingFile);

  auto* exchange =
      app.add_subcommand("exchange", "a (t,S)-exchangeable set of two bases");
  AddMatroid(exchange, f, true);
  exchange->add_option("--set", f.set)->required()->check(CLI::ExistingFile);
  exchange->add_option("--basis1", f.basis1)->check(CLI::ExistingFile);
  exchange->add_option("--basis2", f.basis2)->check(CLI::ExistingFile);

  auto* ef1 = app.add_subcommand("ef1",
                                 "EF1 allocation, tri-valued identical "
                                 "or two agents");
  auto* mms = app.add_subcommand("mms", "MMS allocation, bi-valued");
  for (auto* cmd : {ef1, mms}) {
    cmd->add_option("--instance", f.instance, "instance document")
        ->required()
        ->check(CLI::ExistingFile);
    AddMatroid(cmd, f, false);
  }

  auto* verify = app.add_subcommand("verify", "run the brute-force checks");
  verify->add_option("--seed", f.seed, "catalog seed")->capture_default_str();

  for (auto* cmd : {partition, equitable, equitable2, exchange, ef1, mms}) {
    cmd->add_flag("--oracle", f.oracle, "cross-check against brute force");
    cmd->add_option("--seed", f.seed, "unused outside verify");
  }
  for (auto* cmd : app.get_subcommands({})) {
    cmd->add_option("--output", f.output, "report file (default stdout)");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "equimat: " << e.what() << "\n";
    return kExitMalformed;
  }

  Report rep;
  int code = kExitOk;
  try {
    if (*partition) rep = RunPartition(f);
    if (*equitable) rep = RunEquitable(f);
    if (*equitable2) rep = RunEquitable2(f);
    if (*exchange) rep = RunExchange(f);
    if (*ef1) rep = RunEf1(f);
    if (*mms) rep = RunMms(f);
    if (*verify) {
      rep = RunVerify(f, err);
      if (rep.doc.contains("failed")) code = kExitInternal;
    }
  } catch (const InfeasibleError& e) {
    code = kExitInfeasible;
    rep.doc = {{"error", "infeasible"}, {"message", e.what()}};
    if (!e.witness().empty()) rep.doc["witness"] = e.witness();
    rep.summary = std::string("infeasible: ") + e.what();
  } catch (const MalformedInputError& e) {
    code = kExitMalformed;
    rep.doc = {{"error", "malformed"}, {"message", e.what()}};
    rep.summary = std::string("malformed input: ") + e.what();
  } catch (const PreconditionError& e) {
    code = kExitMalformed;
    rep.doc = {{"error", "precondition"}, {"message", e.what()}};
    rep.summary = std::string("input violates a precondition: ") + e.what();
  } catch (const BudgetExceededError& e) {
    code = kExitBudget;
    rep.doc = {{"error", "budget"}, {"message", e.what()}};
    rep.summary = std::string("budget exceeded: ") + e.what();
  } catch (const std::exception& e) {
    code = kExitInternal;
    rep.doc = {{"error", "internal"}, {"message", e.what()}};
    rep.summary = std::string("internal invariant violated: ") + e.what();
  }

  const std::string text = rep.doc.dump(2) + "\n";
  if (f.output.empty()) {
    out << text;
  } else {
    std::ofstream file(f.output);
    if (!file) {
      err << "equimat: cannot write " << f.output << "\n";
      return kExitMalformed;
    }
    file << text;
  }
  err << rep.summary << "\n";
  return code;
}

}  // namespace equimat
