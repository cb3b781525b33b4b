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

#include "equimat/partitioner.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "equimat/errors.h"
#include "equimat/exchange_graph.h"

namespace equimat {
namespace {

std::int64_t Square(std::int64_t x) { return x * x; }

// Index of the first minimum / maximum.
int ArgMin(const std::vector<int>& v) {
  return static_cast<int>(std::min_element(v.begin(), v.end()) - v.begin());
}
int ArgMax(const std::vector<int>& v) {
  return static_cast<int>(std::max_element(v.begin(), v.end()) - v.begin());
}

struct Move {
  int poorer;  // passed as B1: holds fewer elements of `target`
  int richer;
  ElementSet target;
  // Pivots from this set are tried only after all others fail.
  std::optional<ElementSet> avoid;
};

}  // namespace

std::vector<int> BasisPartition::Counts(const ElementSet& s) const {
  std::vector<int> counts;
  counts.reserve(parts.size());
  for (const ElementSet& part : parts) {
    counts.push_back(static_cast<int>(part.IntersectionSize(s)));
  }
  return counts;
}

void ValidateBasisPartition(const Matroid& m, const BasisPartition& p) {
  std::vector<char> seen(m.NumElements(), 0);
  std::size_t covered = 0;
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    const ElementSet& part = p.parts[i];
    m.CheckElements(part);
    if (!m.IsBasis(part)) {
      throw PreconditionError("part " + std::to_string(i) + " " +
                              part.ToString() + " is not a basis");
    }
    for (ElementId e : part) {
      if (seen[e]) {
        throw PreconditionError("element " + std::to_string(e) +
                                " appears in two parts");
      }
      seen[e] = 1;
    }
    covered += part.size();
  }
  if (static_cast<int>(covered) != m.NumElements()) {
    throw PreconditionError("parts do not cover the ground set");
  }
}

bool IsBasisPartition(const Matroid& m, const BasisPartition& p) {
  try {
    ValidateBasisPartition(m, p);
    return true;
  } catch (const PreconditionError&) {
    return false;
  }
}

PotentialTriple ComputePotentials(const BasisPartition& p, const ElementSet& s1,
                                  const ElementSet& s2) {
  PotentialTriple out;
  for (const ElementSet& part : p.parts) {
    const std::int64_t a = part.IntersectionSize(s1);
    const std::int64_t b = part.IntersectionSize(s2);
    out.phi += Square(a) + Square(b);
    out.psi += Square(a + b);
    out.xi += Square(a);
  }
  return out;
}

PartitionResult PartitionIntoKBases(const Matroid& matroid, int k) {
  if (k < 1) throw PreconditionError("k must be at least 1");
  const int m = matroid.NumElements();
  const int r = matroid.Rank();
  if (m != k * r) {
    throw InfeasibleError("ground set of size " + std::to_string(m) +
                          " cannot be " + std::to_string(k) +
                          " bases of rank " + std::to_string(r));
  }
  const CountingMatroid counted(matroid);

  std::vector<int> part_of(m, -1);
  std::vector<std::vector<ElementId>> members(k);
  std::vector<std::unique_ptr<CircuitFinder>> finders(k);
  auto refresh = [&](int j) {
    finders[j] = counted.MakeCircuitFinder(ElementSet(members[j]));
  };
  for (int j = 0; j < k; ++j) refresh(j);

  std::vector<ElementId> parent(m, -1);
  std::vector<char> visited(m, 0);
  for (ElementId s = 0; s < m; ++s) {
    std::fill(visited.begin(), visited.end(), 0);
    std::deque<ElementId> queue = {s};
    visited[s] = 1;
    parent[s] = -1;
    ElementId sink = -1;
    int sink_part = -1;
    while (!queue.empty() && sink < 0) {
      const ElementId y = queue.front();
      queue.pop_front();
      for (int j = 0; j < k && sink < 0; ++j) {
        if (j == part_of[y]) continue;
        const auto circuit = finders[j]->CircuitWith(y);
        if (!circuit) {
          sink = y;
          sink_part = j;
          break;
        }
        for (ElementId z : *circuit) {
          if (z == y || visited[z]) continue;
          visited[z] = 1;
          parent[z] = y;
          queue.push_back(z);
        }
      }
    }
    if (sink < 0) {
      throw InfeasibleError(
          "element " + std::to_string(s) +
              " cannot be added: the reached set X has |X| > k rank(X)",
          ElementSet::FromMask(visited).ids());
    }
    // Path s = y0 -> ... -> yt = sink; y_i takes the old part of y_{i+1}.
    std::vector<ElementId> path;
    for (ElementId v = sink; v != -1; v = parent[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    std::vector<int> new_part(path.size());
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      new_part[i] = part_of[path[i + 1]];
    }
    new_part.back() = sink_part;
    std::vector<char> touched(k, 0);
    for (std::size_t i = 0; i < path.size(); ++i) {
      const ElementId v = path[i];
      if (part_of[v] >= 0) {
        auto& old = members[part_of[v]];
        old.erase(std::find(old.begin(), old.end(), v));
        touched[part_of[v]] = 1;
      }
    }
    for (std::size_t i = 0; i < path.size(); ++i) {
      part_of[path[i]] = new_part[i];
      members[new_part[i]].push_back(path[i]);
      touched[new_part[i]] = 1;
    }
    for (int j = 0; j < k; ++j) {
      if (touched[j]) refresh(j);
    }
  }

  PartitionResult result;
  for (int j = 0; j < k; ++j) {
    result.partition.parts.emplace_back(std::move(members[j]));
  }
  if (!IsBasisPartition(matroid, result.partition)) {
    throw InternalInvariantError("matroid union produced a non-basis part");
  }
  result.stats.oracle_calls = counted.counts().total();
  return result;
}

PartitionResult EquitablePartitionFrom(const Matroid& matroid,
                                       BasisPartition initial,
                                       const ElementSet& s,
                                       const EquitableOptions& options) {
  ValidateBasisPartition(matroid, initial);
  matroid.CheckElements(s);
  const CountingMatroid counted(matroid);
  PartitionResult result{std::move(initial), {}};
  auto& parts = result.partition.parts;
  if (parts.empty()) return result;

  while (true) {
    const std::vector<int> counts = result.partition.Counts(s);
    const int low = ArgMin(counts);
    const int high = ArgMax(counts);
    if (counts[high] - counts[low] < 2) break;
    const ExchangeSet x =
        FindTSExchangeable(counted, parts[low], parts[high], s);
    std::tie(parts[low], parts[high]) =
        ApplyExchange(parts[low], parts[high], x);
    ++result.stats.exchanges;
    if (options.validate_each_step) {
      ValidateBasisPartition(matroid, result.partition);
    }
    if (result.stats.exchanges > static_cast<int>(s.size())) {
      throw InternalInvariantError("rebalancing exceeded |S| exchanges");
    }
  }
  result.stats.oracle_calls = counted.counts().total();
  return result;
}

PartitionResult EquitablePartition(const Matroid& matroid, int k,
                                   const ElementSet& s,
                                   const EquitableOptions& options) {
  matroid.CheckElements(s);
  PartitionResult initial = PartitionIntoKBases(matroid, k);
  PartitionResult result =
      EquitablePartitionFrom(matroid, std::move(initial.partition), s, options);
  result.stats.oracle_calls += initial.stats.oracle_calls;
  return result;
}

PartitionResult TwoSetEquitablePartitionFrom(const Matroid& matroid,
                                             BasisPartition initial,
                                             const ElementSet& s1,
                                             const ElementSet& s2,
                                             const EquitableOptions& options) {
  ValidateBasisPartition(matroid, initial);
  matroid.CheckElements(s1);
  matroid.CheckElements(s2);
  if (!s1.IsDisjointFrom(s2)) {
    throw PreconditionError("S1 and S2 must be disjoint");
  }
  const CountingMatroid counted(matroid);
  PartitionResult result{std::move(initial), {}};
  auto& parts = result.partition.parts;
  const int k = result.partition.k();
  const ElementSet both = s1.Union(s2);

  // Each potential lies in [0, k r^2], so the triple can drop at most
  // (k r^2 + 1)^3 times.
  const double r = matroid.Rank();
  const double step_bound = std::pow(k * r * r + 1.0, 3.0);

  auto candidate_moves = [&]() {
    const std::vector<int> a = result.partition.Counts(s1);
    const std::vector<int> b = result.partition.Counts(s2);
    std::vector<Move> moves;
    for (int p = 0; p < k; ++p) {
      for (int q = p + 1; q < k; ++q) {
        const auto rest = [&] { return parts[p].Union(parts[q]).Minus(both); };
        if (a[p] > a[q] && b[p] > b[q]) {
          moves.push_back({p, q, rest(), std::nullopt});
        }
        if (a[q] > a[p] && b[q] > b[p]) {
          moves.push_back({q, p, rest(), std::nullopt});
        }
      }
    }
    for (const auto& [side, other] :
         {std::pair{&s1, &s2}, std::pair{&s2, &s1}}) {
      const std::vector<int> c = result.partition.Counts(*side);
      for (int p = 0; p < k; ++p) {
        for (int q = p + 1; q < k; ++q) {
          if (c[q] - c[p] >= 2) moves.push_back({p, q, *side, *other});
          if (c[p] - c[q] >= 2) moves.push_back({q, p, *side, *other});
        }
      }
    }
    return moves;
  };

  while (true) {
    const PotentialTriple current = ComputePotentials(result.partition, s1, s2);
    bool applied = false;
    for (const Move& move : candidate_moves()) {
      ++result.stats.moves_considered;
      const ElementSet& b1 = parts[move.poorer];
      const ElementSet& b2 = parts[move.richer];
      std::vector<ExchangeSet> attempts;
      if (move.avoid) {
        if (auto x = FindTSExchangeableAmong(counted, b1, b2, move.target,
                                             b1.Minus(*move.avoid))) {
          attempts.push_back(*std::move(x));
        }
      }
      attempts.push_back(FindTSExchangeable(counted, b1, b2, move.target));
      for (const ExchangeSet& x : attempts) {
        BasisPartition next = result.partition;
        std::tie(next.parts[move.poorer], next.parts[move.richer]) =
            ApplyExchange(b1, b2, x);
        if (ComputePotentials(next, s1, s2) < current) {
          result.partition = std::move(next);
          ++result.stats.exchanges;
          applied = true;
          break;
        }
      }
      if (applied) break;
    }
    if (!applied) break;
    if (options.validate_each_step) {
      ValidateBasisPartition(matroid, result.partition);
    }
    if (result.stats.exchanges > step_bound) {
      throw InternalInvariantError("two-set search exceeded its step bound");
    }
  }
  result.stats.potentials = ComputePotentials(result.partition, s1, s2);
  result.stats.oracle_calls = counted.counts().total();
  return result;
}

PartitionResult TwoSetEquitablePartition(const Matroid& matroid, int k,
                                         const ElementSet& s1,
                                         const ElementSet& s2,
                                         const EquitableOptions& options) {
  matroid.CheckElements(s1);
  matroid.CheckElements(s2);
  if (!s1.IsDisjointFrom(s2)) {
    throw PreconditionError("S1 and S2 must be disjoint");
  }
  PartitionResult initial = PartitionIntoKBases(matroid, k);
  PartitionResult result = TwoSetEquitablePartitionFrom(
      matroid, std::move(initial.partition), s1, s2, options);
  result.stats.oracle_calls += initial.stats.oracle_calls;
  return result;
}

std::string ParityCaseName(ParityCase c) {
  switch (c) {
    case ParityCase::kBothOdd:
      return "(i) both odd";
    case ParityCase::kMixed:
      return "(ii) mixed";
    case ParityCase::kBothEven:
      return "(iii) both even";
  }
  return "unknown";
}

namespace {

bool FitsProfileFamily(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.empty()) return true;
  const int h = *std::min_element(a.begin(), a.end());
  const int lo = *std::min_element(b.begin(), b.end());
  const int hi = *std::max_element(b.begin(), b.end());
  for (int l = lo - 2; l <= hi + 2; ++l) {
    bool first = true;
    bool second = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const int da = a[i] - h;
      const int db = b[i] - l;
      first = first && da == 0 && db >= 0 && db <= 2;
      second = second && ((da == 0 && (db == 0 || db == 1)) ||
                          (da == 1 && (db == -1 || db == 0)));
    }
    if (first || second) return true;
  }
  return false;
}

bool MeetsParityBounds(ParityCase c, int n1, int n2, int x1, int x2) {
  switch (c) {
    case ParityCase::kBothOdd:
      return x1 == n1 / 2 && x2 == (n2 + 1) / 2;
    case ParityCase::kMixed:
      // The even set splits exactly; the odd one is floored on this side.
      return x1 == n1 / 2 && x2 == n2 / 2;
    case ParityCase::kBothEven:
      return x1 == n1 / 2 && std::abs(x2 - n2 / 2) <= 1;
  }
  return false;
}

}  // namespace

TwoSetReport CheckTwoSetConditions(const BasisPartition& p,
                                   const ElementSet& s1, const ElementSet& s2) {
  TwoSetReport report;
  const std::vector<int> a = p.Counts(s1);
  const std::vector<int> b = p.Counts(s2);
  report.s1_balanced = report.gap_sum_bounded = report.union_gap_bounded = true;
  for (int j = 0; j < p.k(); ++j) {
    for (int q = j + 1; q < p.k(); ++q) {
      const int g1 = std::abs(a[j] - a[q]);
      const int g2 = std::abs(b[j] - b[q]);
      const int gu = std::abs(a[j] + b[j] - a[q] - b[q]);
      report.s1_balanced = report.s1_balanced && g1 <= 1;
      report.gap_sum_bounded = report.gap_sum_bounded && g1 + g2 <= 2;
      report.union_gap_bounded =
          report.union_gap_bounded && gu <= std::max(g1, g2);
    }
  }
  report.profile_family = FitsProfileFamily(a, b);
  if (p.k() == 2) {
    const int n1 = a[0] + a[1];
    const int n2 = b[0] + b[1];
    const bool odd1 = n1 % 2 == 1;
    const bool odd2 = n2 % 2 == 1;
    const ParityCase c = odd1 && odd2     ? ParityCase::kBothOdd
                         : !odd1 && !odd2 ? ParityCase::kBothEven
                                          : ParityCase::kMixed;
    report.parity_case = c;
    report.parity_bounds = MeetsParityBounds(c, n1, n2, a[0], b[0]) ||
                           MeetsParityBounds(c, n1, n2, a[1], b[1]);
  }
  return report;
}

bool MeetsEquitableBounds(const BasisPartition& p, const ElementSet& s) {
  if (p.parts.empty()) return true;
  const std::vector<int> counts = p.Counts(s);
  int total = 0;
  for (int c : counts) total += c;
  const int k = p.k();
  const int lo = total / k;
  const int hi = (total + k - 1) / k;
  return std::all_of(counts.begin(), counts.end(),
                     [&](int c) { return c >= lo && c <= hi; });
}

}  // namespace equimat
