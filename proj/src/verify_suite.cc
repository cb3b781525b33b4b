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

#include "equimat/verify_suite.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

#include "equimat/catalog.h"
#include "equimat/errors.h"
#include "equimat/exchange_graph.h"
#include "equimat/fair_division.h"
#include "equimat/oracle_verify.h"
#include "equimat/partitioner.h"

namespace equimat {
namespace {

class Tally {
 public:
  explicit Tally(CriterionResult& result) : result_(result) {}

  void Check(bool ok, const std::function<std::string()>& describe) {
    ++result_.runs;
    if (ok) return;
    if (result_.failures++ == 0) result_.detail = describe();
  }

  // Runs `body`, turning any library exception into a failed run.
  void Guard(const std::string& where, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      Check(false, [&] { return where + ": " + e.what(); });
    }
  }

 private:
  CriterionResult& result_;
};

// Every subset when there are at most `limit` of them, else `limit` random.
std::vector<ElementSet> SubsetsOf(const ElementSet& ground, int limit,
                                  Rng& rng) {
  std::vector<ElementSet> out;
  const int width = static_cast<int>(ground.size());
  if (width < 31 && (std::int64_t{1} << width) <= limit) {
    for (std::int64_t mask = 0; mask < (std::int64_t{1} << width); ++mask) {
      std::vector<ElementId> ids;
      for (int i = 0; i < width; ++i) {
        if (mask >> i & 1) ids.push_back(ground[i]);
      }
      out.emplace_back(std::move(ids));
    }
    return out;
  }
  for (int i = 0; i < limit; ++i) {
    std::vector<ElementId> ids;
    for (ElementId e : ground) {
      if (rng() & 1) ids.push_back(e);
    }
    out.emplace_back(std::move(ids));
  }
  return out;
}

bool PartsAreBasesCoveringE(const Matroid& m, int k,
                            const std::vector<ElementSet>& parts) {
  if (static_cast<int>(parts.size()) != k) return false;
  ElementSet covered;
  std::size_t total = 0;
  for (const ElementSet& p : parts) {
    if (!m.IsBasis(p)) return false;
    covered = covered.Union(p);
    total += p.size();
  }
  return total == covered.size() &&
         static_cast<int>(covered.size()) == m.NumElements();
}

bool FloorCeil(const std::vector<ElementSet>& parts, const ElementSet& s) {
  const int k = static_cast<int>(parts.size());
  const int lo = static_cast<int>(s.size()) / k;
  const int hi = (static_cast<int>(s.size()) + k - 1) / k;
  for (const ElementSet& p : parts) {
    const int c = p.IntersectionSize(s);
    if (c < lo || c > hi) return false;
  }
  return true;
}

std::string Describe(const CatalogEntry& e, const std::string& extra) {
  return e.name + " " + extra;
}

void EquitabilityOverCatalog(CriterionResult& result, Rng& rng) {
  Tally tally(result);
  for (const CatalogEntry& entry : FullCatalog(rng)) {
    const Matroid& m = *entry.matroid;
    for (const ElementSet& s :
         SubsetsOf(ElementSet::Range(m.NumElements()), 500, rng)) {
      tally.Guard(Describe(entry, "S=" + s.ToString()), [&] {
        const PartitionResult out = EquitablePartition(m, entry.k, s);
        tally.Check(PartsAreBasesCoveringE(m, entry.k, out.partition.parts) &&
                        FloorCeil(out.partition.parts, s),
                    [&] { return Describe(entry, "S=" + s.ToString()); });
      });
    }
  }
}

void TSExchange(CriterionResult& result, Rng& rng) {
  Tally tally(result);
  std::vector<CatalogEntry> entries = {{"K4", CompleteGraphK4(), 2}};
  const std::vector<CatalogEntry> catalog = FullCatalog(rng);
  for (int i = 0; i < 20; ++i) {
    entries.push_back(catalog[rng() % catalog.size()]);
  }
  for (const CatalogEntry& entry : entries) {
    const Matroid& m = *entry.matroid;
    const std::vector<ElementSet> bases = EnumerateBases(m);
    for (const ElementSet& b1 : bases) {
      for (const ElementSet& b2 : bases) {
        if (!b1.IsDisjointFrom(b2)) continue;
        const ElementSet both = b1.Union(b2);
        std::vector<ElementSet> candidates;
        if (both.size() <= 8) {
          candidates = SubsetsOf(both, 256, rng);
        } else {
          while (candidates.size() < 200) {
            ElementSet s = SubsetsOf(both, 1, rng).front();
            if (b1.IntersectionSize(s) < b2.IntersectionSize(s)) {
              candidates.push_back(std::move(s));
            }
          }
        }
        for (const ElementSet& s : candidates) {
          if (b1.IntersectionSize(s) >= b2.IntersectionSize(s)) continue;
          const auto where = [&] {
            return Describe(entry, "B1=" + b1.ToString() + " B2=" +
                                       b2.ToString() + " S=" + s.ToString());
          };
          tally.Guard(where(), [&] {
            const ExchangeSet x = FindTSExchangeable(m, b1, b2, s);
            const ElementId t = x.pivot.value_or(-1);
            const bool shape = b1.Contains(t) && !s.Contains(t) &&
                               x.elements.Contains(t) &&
                               x.elements.IsSubsetOf(s.With(t));
            const bool valid = VerifyExchangeable(m, b1, b2, x.elements);
            const bool exists = BruteExchangeable(m, b1, b2, s).has_value();
            tally.Check(shape && valid && exists, where);
          });
        }
      }
    }
  }
}

void K4Tightness(CriterionResult& result) {
  Tally tally(result);
  const auto k4 = CompleteGraphK4();
  const ElementSet s1{0, 5};
  const ElementSet s2{1, 4};
  tally.Guard("K4 enumeration", [&] {
    const auto partitions = EnumerateKBasisPartitions(*k4, 2);
    tally.Check(!partitions.empty(),
                [] { return "K4 has no 2-basis partition"; });
    for (const BasisPartition& p : partitions) {
      for (const ElementSet& part : p.parts) {
        tally.Check(
            part.IntersectionSize(s1) != 1 || part.IntersectionSize(s2) != 1,
            [&] { return "balanced partition " + part.ToString(); });
      }
    }
  });
  tally.Guard("K4 two-set search", [&] {
    const PartitionResult out = TwoSetEquitablePartition(*k4, 2, s1, s2);
    const TwoSetReport report = CheckTwoSetConditions(out.partition, s1, s2);
    tally.Check(PartsAreBasesCoveringE(*k4, 2, out.partition.parts) &&
                    report.AllConditions() &&
                    report.parity_case == ParityCase::kBothEven &&
                    report.parity_bounds.value_or(false),
                [] { return "two-set output on K4 misses a condition"; });
  });
}

void TwoSetConditions(CriterionResult& result, Rng& rng) {
  Tally tally(result);
  for (const CatalogEntry& entry : FullCatalog(rng)) {
    const Matroid& m = *entry.matroid;
    for (int i = 0; i < 200; ++i) {
      const auto [s1, s2] = RandomDisjointPair(rng, m.NumElements());
      const auto where = [&] {
        return Describe(entry, "S1=" + s1.ToString() + " S2=" + s2.ToString());
      };
      tally.Guard(where(), [&] {
        const PartitionResult out =
            TwoSetEquitablePartition(m, entry.k, s1, s2);
        const TwoSetReport report =
            CheckTwoSetConditions(out.partition, s1, s2);
        tally.Check(PartsAreBasesCoveringE(m, entry.k, out.partition.parts) &&
                        report.AllConditions() && report.profile_family,
                    where);
      });
    }
  }
}

void MmsFormula(CriterionResult& result, Rng& rng) {
  Tally tally(result);
  for (int i = 0; i < 300; ++i) {
    const FairDivisionInstance inst = RandomBinaryInstance(rng);
    for (int a = 0; a < inst.num_agents(); ++a) {
      tally.Guard("binary instance " + std::to_string(i), [&] {
        const Rational brute = BruteMms(inst, a);
        const std::int64_t formula = MmsValueBinary(
            inst.valuations[a], inst.num_agents(), *inst.matroid);
        tally.Check(brute == Rational(formula), [&] {
          return "instance " + std::to_string(i) + " agent " +
                 std::to_string(a) + ": brute " + FormatRational(brute) +
                 " vs floor " + std::to_string(formula);
        });
      });
    }
  }
}

void MmsAllocation(CriterionResult& result, Rng& rng) {
  Tally tally(result);
  for (int i = 0; i < 200; ++i) {
    const FairDivisionInstance inst = RandomBiValuedInstance(rng, i < 30);
    tally.Guard("bi-valued instance " + std::to_string(i), [&] {
      const MmsOutcome out = AllocateMmsBiValued(inst);
      bool ok = PartsAreBasesCoveringE(*inst.matroid, inst.num_agents(),
                                       out.allocation.bundles);
      for (int a = 0; ok && a < inst.num_agents(); ++a) {
        ok = inst.valuations[a].Of(out.allocation.bundles[a]) >=
             BruteMms(inst, a);
      }
      tally.Check(ok, [&] {
        return "bi-valued instance " + std::to_string(i) + " not MMS";
      });
    });
  }
}

void Ef1TriValued(CriterionResult& result, Rng& rng) {
  Tally tally(result);
  int repaired = 0;
  for (int i = 0; i < 200; ++i) {
    const FairDivisionInstance inst = RandomTriValuedInstance(rng, i % 2 == 0);
    tally.Guard("tri-valued instance " + std::to_string(i), [&] {
      const Ef1Outcome out = AllocateEf1TriValued(inst);
      if (out.stats.envy_repairs > 0) ++repaired;
      tally.Check(PartsAreBasesCoveringE(*inst.matroid, inst.num_agents(),
                                         out.allocation.bundles) &&
                      CheckEf1(inst, out.allocation).ef1 &&
                      out.stats.envy_repairs <= inst.num_agents(),
                  [&] { return "tri-valued instance " + std::to_string(i); });
    });
  }
  if (result.failures == 0) {
    result.detail = std::to_string(repaired) + " instances needed repairs";
  }
}

void MatchingExchange(CriterionResult& result, Rng& rng) {
  Tally tally(result);
  const std::vector<CatalogEntry> catalog = FullCatalog(rng);
  for (int i = 0; i < 500; ++i) {
    const CatalogEntry& entry = catalog[rng() % catalog.size()];
    tally.Guard(entry.name, [&] {
      const std::vector<ElementSet> bases = EnumerateBases(*entry.matroid);
      const ElementSet& b1 = bases[rng() % bases.size()];
      const ElementSet& b2 = bases[rng() % bases.size()];
      tally.Check(MatchingExchangeCheck(*entry.matroid, b1, b2), [&] {
        return Describe(entry, b1.ToString() + " " + b2.ToString());
      });
    });
  }
}

void Performance(CriterionResult& result, Rng& rng) {
  Tally tally(result);
  std::ostringstream detail;
  tally.Guard("m=1998", [&] {
    const auto graph = RandomDoubleTree(rng, 1000);
    std::vector<ElementId> ids(graph->NumElements());
    std::iota(ids.begin(), ids.end(), 0);
    std::shuffle(ids.begin(), ids.end(), rng);
    const ElementSet s(std::vector<ElementId>(ids.begin(), ids.begin() + 500));
    const auto start = std::chrono::steady_clock::now();
    const PartitionResult out = EquitablePartition(*graph, 2, s);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    detail << "m=1998 " << secs << "s";
    tally.Check(secs < 60 &&
                    PartsAreBasesCoveringE(*graph, 2, out.partition.parts) &&
                    FloorCeil(out.partition.parts, s),
                [&] { return "m=1998 took " + std::to_string(secs) + "s"; });
  });
  std::vector<double> sizes, calls;
  for (int m : {200, 400, 800, 1600}) {
    tally.Guard("m=" + std::to_string(m), [&] {
      const auto graph = RandomDoubleTree(rng, m / 2 + 1);
      std::vector<ElementId> ids(m);
      std::iota(ids.begin(), ids.end(), 0);
      std::shuffle(ids.begin(), ids.end(), rng);
      const ElementSet s(
          std::vector<ElementId>(ids.begin(), ids.begin() + m / 4));
      const PartitionResult out = EquitablePartition(*graph, 2, s);
      sizes.push_back(m);
      calls.push_back(static_cast<double>(out.stats.oracle_calls));
    });
  }
  if (sizes.size() == 4) {
    const double slope = LogLogSlope(sizes, calls);
    detail << ", oracle-call slope " << slope;
    tally.Check(slope <= 3.2,
                [&] { return "oracle-call slope " + std::to_string(slope); });
  }
  if (result.failures == 0) result.detail = detail.str();
}

const char* const kNames[kNumCriteria] = {
    "equitable partition over the catalog",
    "(t,S)-exchangeable sets",
    "K4 two-set tightness",
    "two-set conditions over the catalog",
    "binary maximin share formula",
    "bi-valued MMS allocation",
    "tri-valued EF1 allocation",
    "matching exchange",
    "performance on m = 1998",
};

}  // namespace

double LogLogSlope(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

CriterionResult RunCriterion(int id, const VerifyOptions& options) {
  if (id < 1 || id > kNumCriteria) {
    throw PreconditionError("criterion id must be in 1.." +
                            std::to_string(kNumCriteria));
  }
  CriterionResult result;
  result.id = id;
  result.name = kNames[id - 1];
  Rng rng(options.seed * 1000003 + id);
  const auto start = std::chrono::steady_clock::now();
  switch (id) {
    case 1:
      EquitabilityOverCatalog(result, rng);
      break;
    case 2:
      TSExchange(result, rng);
      break;
    case 3:
      K4Tightness(result);
      break;
    case 4:
      TwoSetConditions(result, rng);
      break;
    case 5:
      MmsFormula(result, rng);
      break;
    case 6:
      MmsAllocation(result, rng);
      break;
    case 7:
      Ef1TriValued(result, rng);
      break;
    case 8:
      MatchingExchange(result, rng);
      break;
    case 9:
      Performance(result, rng);
      break;
  }
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  result.passed = result.failures == 0 && result.runs > 0;
  return result;
}

std::vector<CriterionResult> RunCriteria(const std::vector<int>& ids,
                                         const VerifyOptions& options) {
  std::vector<CriterionResult> out;
  for (int id : ids) out.push_back(RunCriterion(id, options));
  return out;
}

}  // namespace equimat
