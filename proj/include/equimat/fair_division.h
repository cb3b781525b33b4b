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

#ifndef EQUIMAT_FAIR_DIVISION_H_
#define EQUIMAT_FAIR_DIVISION_H_

#include <boost/rational.hpp>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "equimat/element_set.h"
#include "equimat/matroid.h"
#include "equimat/partitioner.h"

namespace equimat {

using Rational = boost::rational<std::int64_t>;

// "a", "-a" or "a/b" with integers a, b (b > 0 after normalisation).
Rational ParseRational(const std::string& text);
std::string FormatRational(const Rational& q);

// Additive valuation, one exact value per good.
class Valuation {
 public:
  Valuation() = default;
  explicit Valuation(std::vector<Rational> values)
      : values_(std::move(values)) {}

  int size() const { return static_cast<int>(values_.size()); }
  const Rational& operator[](ElementId g) const { return values_[g]; }
  const std::vector<Rational>& values() const { return values_; }

  Rational Of(const ElementSet& bundle) const;
  // Sorted distinct values.
  std::vector<Rational> DistinctValues() const;
  bool IsBinary() const;

  friend bool operator==(const Valuation&, const Valuation&) = default;

 private:
  std::vector<Rational> values_;
};

struct FairDivisionInstance {
  std::shared_ptr<const Matroid> matroid;
  std::vector<Valuation> valuations;  // one per agent

  int num_agents() const { return static_cast<int>(valuations.size()); }
  // Throws PreconditionError on an empty agent list or a length mismatch.
  void Validate() const;
};

// Agent i receives bundles[i].
struct Allocation {
  std::vector<ElementSet> bundles;
};

struct NormalizedValuation {
  Valuation values;
  Rational shift;  // subtracted from every good
  Rational scale;  // multiplied after shifting
};

// Shifts so the minimum value is 0. A valuation with two distinct values is
// additionally scaled onto {0, 1}.
NormalizedValuation NormalizeValuation(const Valuation& v);

struct Ef1Result {
  bool ef1 = true;
  // First (envious, envied) pair in lexicographic order.
  std::optional<std::pair<int, int>> violation;
};

// Throws PreconditionError if the allocation is not n disjoint bases
// covering E.
Ef1Result CheckEf1(const FairDivisionInstance& instance,
                   const Allocation& allocation);

struct Ef1Stats {
  int envy_repairs = 0;  // (h, l) vs (h, l + 2) exchanges
  PartitionStats partition;
};

struct Ef1Outcome {
  Allocation allocation;
  Ef1Stats stats;
};

// Identical valuations with at most three distinct non-negative values.
// Balances the high-value goods H and then the mid-value goods L with the
// two-set search, then repairs each remaining EF1-envy pair by exchanging on
// the zero-value goods of the two bundles.
Ef1Outcome AllocateEf1TriValued(const FairDivisionInstance& instance);

// floor(v(E) / n) for a binary valuation on a matroid with m = n r.
std::int64_t MmsValueBinary(const Valuation& v, int n, const Matroid& m);

struct MmsStats {
  int rounds = 0;
  // Agents assigned in each round, in assignment order.
  std::vector<std::vector<int>> assigned_per_round;
  // Per agent, in original units.
  std::vector<Rational> thresholds;
};

struct MmsOutcome {
  Allocation allocation;
  MmsStats stats;
};

// Maximin-share allocation for bi-valued valuations (negative values
// allowed), by lone divider rounds and a Hall-violator elimination.
MmsOutcome AllocateMmsBiValued(const FairDivisionInstance& instance);

// MMS threshold of a bi-valued agent in original units:
// shift * r + scale^-1 * floor(v'(E) / n) for the binary normalisation v'.
Rational MmsThresholdBiValued(const Valuation& v, int n, const Matroid& m);

// Two agents; agent 0 is tri-valued, agent 1 arbitrary. Agent 0's EF1
// split, then agent 1 takes whichever bundle it values more (the second on
// ties).
Ef1Outcome CutAndChooseEf1TwoAgents(const FairDivisionInstance& instance);

}  // namespace equimat

#endif  // EQUIMAT_FAIR_DIVISION_H_
