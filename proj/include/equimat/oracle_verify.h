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

// Exhaustive reference implementations for small ground sets. Nothing here
// shares code with the fast algorithms beyond the independence oracle, so
// agreement between the two is meaningful.

#ifndef EQUIMAT_ORACLE_VERIFY_H_
#define EQUIMAT_ORACLE_VERIFY_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "equimat/element_set.h"
#include "equimat/exchange_graph.h"
#include "equimat/fair_division.h"
#include "equimat/matroid.h"
#include "equimat/partitioner.h"

namespace equimat {

// Exceeding either cap raises BudgetExceededError, never an empty answer.
struct EnumerationBudget {
  int max_elements = 12;
  std::int64_t max_partitions = 2'000'000;
};

// All bases in lexicographic order of their sorted id lists.
std::vector<ElementSet> EnumerateBases(const Matroid& m,
                                       const EnumerationBudget& budget = {});

// Unordered partitions of E into k bases. Each partition lists its parts by
// smallest element, and partitions come out in lexicographic order of that
// part sequence. Empty when m != k r.
std::vector<BasisPartition> EnumerateKBasisPartitions(
    const Matroid& m, int k, const EnumerationBudget& budget = {});

// Whether some k-basis partition meets the floor/ceil bounds for S.
bool BruteEquitable(const Matroid& m, int k, const ElementSet& s,
                    const EnumerationBudget& budget = {});

// Smallest (t, S)-exchangeable set by (size, then sorted ids), searching
// every t in B1 \ S and every X with t ∈ X ⊆ (S ∩ (B1 ∪ B2)) + t.
std::optional<ExchangeSet> BruteExchangeable(
    const Matroid& m, const ElementSet& b1, const ElementSet& b2,
    const ElementSet& s, const EnumerationBudget& budget = {});

// Agent i's maximin share, maximizing the worst bundle over every
// partition into n bases. InfeasibleError when no partition exists.
Rational BruteMms(const FairDivisionInstance& instance, int agent,
                  const EnumerationBudget& budget = {});

// Whether some assignment of some n-basis partition is EF1.
bool BruteEf1Exists(const FairDivisionInstance& instance,
                    const EnumerationBudget& budget = {});

// True iff D(I)[I Δ J] has a perfect matching, where D(I) has an arc x -> y
// (x ∈ I, y ∉ I) whenever I - x + y is independent. I must be independent
// and |I| = |J|.
bool MatchingExchangeCheck(const Matroid& m, const ElementSet& i,
                           const ElementSet& j);

// Number of perfect matchings of D(I)[I Δ J], counting stops at `limit`.
int CountExchangeMatchings(const Matroid& m, const ElementSet& i,
                           const ElementSet& j, int limit = 2);

}  // namespace equimat

#endif  // EQUIMAT_ORACLE_VERIFY_H_
