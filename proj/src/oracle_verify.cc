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

#include "equimat/oracle_verify.h"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <string>

#include "equimat/bipartite_matching.h"
#include "equimat/errors.h"

namespace equimat {
namespace {

using Mask = std::uint64_t;

void CheckSize(int size, const EnumerationBudget& budget, const char* what) {
  if (size > budget.max_elements || size > 63) {
    throw BudgetExceededError(std::string(what) + ": " + std::to_string(size) +
                              " elements exceed the budget of " +
                              std::to_string(budget.max_elements));
  }
}

ElementSet FromBits(Mask mask) {
  std::vector<ElementId> ids;
  while (mask != 0) {
    ids.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return ElementSet(std::move(ids));
}

Mask ToBits(const ElementSet& s) {
  Mask mask = 0;
  for (ElementId e : s) mask |= Mask{1} << e;
  return mask;
}

std::vector<Mask> BasisMasks(const Matroid& m,
                             const EnumerationBudget& budget) {
  const int n = m.NumElements();
  CheckSize(n, budget, "basis enumeration");
  const int r = m.Rank();
  std::vector<Mask> bases;
  // Walk r-subsets in lexicographic order of sorted ids.
  std::vector<int> pick(r);
  std::iota(pick.begin(), pick.end(), 0);
  if (r > n) return bases;
  while (true) {
    Mask mask = 0;
    for (int e : pick) mask |= Mask{1} << e;
    if (m.IsIndependent(FromBits(mask))) bases.push_back(mask);
    int i = r - 1;
    while (i >= 0 && pick[i] == n - r + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
  }
  return bases;
}

// Calls `visit` on each partition, as masks in canonical order.
void ForEachPartition(
    const Matroid& m, int k, const EnumerationBudget& budget,
    const std::function<void(const std::vector<Mask>&)>& visit) {
  if (k < 1) throw PreconditionError("k must be at least 1");
  const int n = m.NumElements();
  CheckSize(n, budget, "partition enumeration");
  if (n != k * m.Rank()) return;
  const std::vector<Mask> bases = BasisMasks(m, budget);
  const Mask all = n == 0 ? 0 : (Mask{1} << n) - 1;
  std::vector<Mask> parts;
  std::int64_t emitted = 0;
  std::function<void(Mask)> recurse = [&](Mask remaining) {
    if (remaining == 0) {
      if (++emitted > budget.max_partitions) {
        throw BudgetExceededError("more than " +
                                  std::to_string(budget.max_partitions) +
                                  " basis partitions");
      }
      visit(parts);
      return;
    }
    const Mask lowest = remaining & (~remaining + 1);
    for (Mask b : bases) {
      if ((b & lowest) == 0 || (b & ~remaining) != 0) continue;
      parts.push_back(b);
      recurse(remaining & ~b);
      parts.pop_back();
    }
  };
  if (m.Rank() == 0) {
    // Every part is the empty basis.
    parts.assign(k, 0);
    visit(parts);
    return;
  }
  recurse(all);
}

BasisPartition ToPartition(const std::vector<Mask>& parts) {
  BasisPartition p;
  for (Mask b : parts) p.parts.push_back(FromBits(b));
  return p;
}

}  // namespace

std::vector<ElementSet> EnumerateBases(const Matroid& m,
                                       const EnumerationBudget& budget) {
  std::vector<ElementSet> out;
  for (Mask b : BasisMasks(m, budget)) out.push_back(FromBits(b));
  return out;
}

std::vector<BasisPartition> EnumerateKBasisPartitions(
    const Matroid& m, int k, const EnumerationBudget& budget) {
  std::vector<BasisPartition> out;
  ForEachPartition(m, k, budget, [&](const std::vector<Mask>& parts) {
    out.push_back(ToPartition(parts));
  });
  return out;
}

bool BruteEquitable(const Matroid& m, int k, const ElementSet& s,
                    const EnumerationBudget& budget) {
  const Mask target = ToBits(s);
  const int total = std::popcount(target);
  const int lo = total / k;
  const int hi = (total + k - 1) / k;
  bool found = false;
  ForEachPartition(m, k, budget, [&](const std::vector<Mask>& parts) {
    if (found) return;
    found = std::all_of(parts.begin(), parts.end(), [&](Mask b) {
      const int c = std::popcount(b & target);
      return c >= lo && c <= hi;
    });
  });
  return found;
}

std::optional<ExchangeSet> BruteExchangeable(const Matroid& m,
                                             const ElementSet& b1,
                                             const ElementSet& b2,
                                             const ElementSet& s,
                                             const EnumerationBudget& budget) {
  if (!m.IsBasis(b1) || !m.IsBasis(b2)) {
    throw PreconditionError("brute exchange needs two bases");
  }
  const ElementSet both = b1.Union(b2);
  const ElementSet local_s = s.Intersect(both);
  CheckSize(static_cast<int>(local_s.size()) + 1, budget,
            "exchangeable-set search");
  const int width = static_cast<int>(local_s.size());

  // Sizes in increasing order; within a size every t and every subset of
  // S is tried and the lexicographically smallest hit wins.
  const ElementSet pivots = b1.Minus(local_s);
  for (int extra = 0; extra <= width; ++extra) {
    std::optional<ExchangeSet> best;
    for (ElementId t : pivots) {
      for (Mask pick = 0; pick < (Mask{1} << width); ++pick) {
        if (std::popcount(pick) != extra) continue;
        std::vector<ElementId> ids = {t};
        for (int i = 0; i < width; ++i) {
          if (pick >> i & 1) ids.push_back(local_s[i]);
        }
        const ElementSet x(std::move(ids));
        if (best && !(x.ids() < best->elements.ids())) continue;
        if (m.IsBasis(b1.SymmetricDifference(x)) &&
            m.IsBasis(b2.SymmetricDifference(x))) {
          best = ExchangeSet{x, t};
        }
      }
    }
    if (best) return best;
  }
  return std::nullopt;
}

Rational BruteMms(const FairDivisionInstance& instance, int agent,
                  const EnumerationBudget& budget) {
  instance.Validate();
  if (agent < 0 || agent >= instance.num_agents()) {
    throw PreconditionError("agent index out of range");
  }
  const Valuation& v = instance.valuations[agent];
  std::optional<Rational> best;
  ForEachPartition(*instance.matroid, instance.num_agents(), budget,
                   [&](const std::vector<Mask>& parts) {
                     std::optional<Rational> worst;
                     for (Mask b : parts) {
                       const Rational value = v.Of(FromBits(b));
                       if (!worst || value < *worst) worst = value;
                     }
                     if (!best || *worst > *best) best = worst;
                   });
  if (!best) {
    throw InfeasibleError("no partition into " +
                          std::to_string(instance.num_agents()) + " bases");
  }
  return *best;
}

bool BruteEf1Exists(const FairDivisionInstance& instance,
                    const EnumerationBudget& budget) {
  instance.Validate();
  const int n = instance.num_agents();
  bool found = false;
  ForEachPartition(
      *instance.matroid, n, budget, [&](const std::vector<Mask>& parts) {
        if (found) return;
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        do {
          Allocation a;
          for (int i = 0; i < n; ++i) {
            a.bundles.push_back(FromBits(parts[order[i]]));
          }
          if (CheckEf1(instance, a).ef1) {
            found = true;
            return;
          }
        } while (std::next_permutation(order.begin(), order.end()));
      });
  return found;
}

namespace {

std::vector<std::vector<int>> ExchangeAdjacency(const Matroid& m,
                                                const ElementSet& i,
                                                const ElementSet& j,
                                                ElementSet& left,
                                                ElementSet& right) {
  if (i.size() != j.size()) {
    throw PreconditionError("matching exchange needs |I| = |J|");
  }
  if (!m.IsIndependent(i)) {
    throw PreconditionError("matching exchange needs I independent");
  }
  m.CheckElements(j);
  left = i.Minus(j);
  right = j.Minus(i);
  std::vector<std::vector<int>> adjacency(left.size());
  for (int a = 0; a < static_cast<int>(left.size()); ++a) {
    const ElementSet without = i.Without(left[a]);
    for (int b = 0; b < static_cast<int>(right.size()); ++b) {
      if (m.IsIndependent(without.With(right[b]))) adjacency[a].push_back(b);
    }
  }
  return adjacency;
}

}  // namespace

bool MatchingExchangeCheck(const Matroid& m, const ElementSet& i,
                           const ElementSet& j) {
  ElementSet left, right;
  const auto adjacency = ExchangeAdjacency(m, i, j, left, right);
  return MaximumBipartiteMatching(left.size(), right.size(), adjacency)
      .PerfectOnLeft();
}

int CountExchangeMatchings(const Matroid& m, const ElementSet& i,
                           const ElementSet& j, int limit) {
  ElementSet left, right;
  const auto adjacency = ExchangeAdjacency(m, i, j, left, right);
  std::vector<char> used(right.size(), 0);
  int count = 0;
  std::function<void(int)> extend = [&](int a) {
    if (count >= limit) return;
    if (a == static_cast<int>(left.size())) {
      ++count;
      return;
    }
    for (int b : adjacency[a]) {
      if (used[b]) continue;
      used[b] = 1;
      extend(a + 1);
      used[b] = 0;
    }
  };
  extend(0);
  return count;
}

}  // namespace equimat
