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

#ifndef EQUIMAT_PARTITIONER_H_
#define EQUIMAT_PARTITIONER_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "equimat/element_set.h"
#include "equimat/matroid.h"

namespace equimat {

// k pairwise-disjoint bases covering the ground set.
struct BasisPartition {
  std::vector<ElementSet> parts;

  int k() const { return static_cast<int>(parts.size()); }
  // |parts[i] ∩ s| for every i.
  std::vector<int> Counts(const ElementSet& s) const;

  friend bool operator==(const BasisPartition&,
                         const BasisPartition&) = default;
};

// Throws PreconditionError describing the first violated invariant.
void ValidateBasisPartition(const Matroid& m, const BasisPartition& p);
bool IsBasisPartition(const Matroid& m, const BasisPartition& p);

// (Φ, Ψ, Ξ) = (Σ|S1∩Bj|² + |S2∩Bj|², Σ|(S1∪S2)∩Bj|², Σ|S1∩Bj|²), compared
// lexicographically.
struct PotentialTriple {
  std::int64_t phi = 0;
  std::int64_t psi = 0;
  std::int64_t xi = 0;

  friend auto operator<=>(const PotentialTriple&,
                          const PotentialTriple&) = default;
};

PotentialTriple ComputePotentials(const BasisPartition& p, const ElementSet& s1,
                                  const ElementSet& s2);

struct PartitionStats {
  int exchanges = 0;
  // Independence plus circuit queries issued during the run.
  std::uint64_t oracle_calls = 0;
  // Moves considered by the two-set local search, applied or rejected.
  int moves_considered = 0;
  std::optional<PotentialTriple> potentials;
};

struct PartitionResult {
  BasisPartition partition;
  PartitionStats stats;
};

struct EquitableOptions {
  // Re-validate the whole partition after every exchange.
  bool validate_each_step = false;
};

// Splits E into k disjoint bases by shortest augmenting paths in the
// matroid-union exchange graph, inserting elements in id order. Throws
// InfeasibleError when m != k r or when some element cannot be inserted; in
// the latter case the error carries a set X with |X| > k rank(X).
PartitionResult PartitionIntoKBases(const Matroid& m, int k);

// Rebalances a k-basis partition until floor(|S|/k) <= |Bi ∩ S| <=
// ceil(|S|/k) for every part, exchanging between the lowest-index argmin
// and argmax parts. At most |S| exchanges.
PartitionResult EquitablePartition(const Matroid& m, int k, const ElementSet& s,
                                   const EquitableOptions& options = {});
PartitionResult EquitablePartitionFrom(const Matroid& m, BasisPartition initial,
                                       const ElementSet& s,
                                       const EquitableOptions& options = {});

// Local search over (Φ, Ψ, Ξ) for disjoint S1, S2. Applies only moves that
// lower the triple lexicographically:
//   anti-correlation repair: parts j, j' with more of both S1 and S2 in Bj
//     exchange on (Bj ∪ Bj') \ (S1 ∪ S2);
//   gap repair: parts with |Si ∩ Bj| - |Si ∩ Bj'| >= 2 exchange on Si, the
//     poorer part gaining.
// Stops when no move lowers the triple.
PartitionResult TwoSetEquitablePartition(const Matroid& m, int k,
                                         const ElementSet& s1,
                                         const ElementSet& s2,
                                         const EquitableOptions& options = {});
PartitionResult TwoSetEquitablePartitionFrom(
    const Matroid& m, BasisPartition initial, const ElementSet& s1,
    const ElementSet& s2, const EquitableOptions& options = {});

enum class ParityCase { kBothOdd, kMixed, kBothEven };

std::string ParityCaseName(ParityCase c);

struct TwoSetReport {
  bool s1_balanced = false;        // every S1 gap <= 1
  bool gap_sum_bounded = false;    // S1 gap + S2 gap <= 2 for all pairs
  bool union_gap_bounded = false;  // (S1∪S2) gap <= max of the two gaps
  // Profiles fit {(h,l),(h,l+1),(h,l+2)} or
  // {(h,l),(h,l+1),(h+1,l-1),(h+1,l)} for some h, l.
  bool profile_family = false;
  // Set when k == 2.
  std::optional<ParityCase> parity_case;
  // k == 2: some labelling of the two parts meets the intersection sizes
  // that the parity case prescribes.
  std::optional<bool> parity_bounds;

  bool AllConditions() const {
    return s1_balanced && gap_sum_bounded && union_gap_bounded;
  }
};

TwoSetReport CheckTwoSetConditions(const BasisPartition& p,
                                   const ElementSet& s1, const ElementSet& s2);

// Floor/ceil bounds of the single-set guarantee.
bool MeetsEquitableBounds(const BasisPartition& p, const ElementSet& s);

}  // namespace equimat

#endif  // EQUIMAT_PARTITIONER_H_
