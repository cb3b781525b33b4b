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

#ifndef EQUIMAT_EXCHANGE_GRAPH_H_
#define EQUIMAT_EXCHANGE_GRAPH_H_

#include <optional>
#include <utility>
#include <vector>

#include "equimat/element_set.h"
#include "equimat/matroid.h"

namespace equimat {

// Exchange digraph D(B1, B2) of two disjoint bases. An arc x -> y with
// x ∈ B1, y ∈ B2 means B1 - x + y is a basis; an arc y -> x means
// B2 - y + x is a basis. Immutable after construction.
class ExchangeDigraph {
 public:
  const ElementSet& left() const { return left_; }
  const ElementSet& right() const { return right_; }
  int num_elements() const { return static_cast<int>(out_.size()); }

  // Sorted out- and in-neighbours. Empty for elements outside B1 ∪ B2.
  const std::vector<ElementId>& OutNeighbors(ElementId v) const {
    return out_[v];
  }
  const std::vector<ElementId>& InNeighbors(ElementId v) const {
    return in_[v];
  }
  bool HasArc(ElementId from, ElementId to) const;
  std::size_t NumArcs() const;
  // All arcs in (from, to) lexicographic order.
  std::vector<std::pair<ElementId, ElementId>> Arcs() const;

 private:
  friend ExchangeDigraph BuildExchangeDigraph(const Matroid&, const ElementSet&,
                                              const ElementSet&);
  ElementSet left_;
  ElementSet right_;
  std::vector<std::vector<ElementId>> out_;
  std::vector<std::vector<ElementId>> in_;
};

// A set X ⊆ B1 ∪ B2 with B1 Δ X and B2 Δ X both bases. `pivot` is the t of a
// (t, S)-exchangeable set when the set came out of the (t, S) search.
struct ExchangeSet {
  ElementSet elements;
  std::optional<ElementId> pivot;
};

// Uses 2r circuit queries: C(B1, y) for y ∈ B2 and C(B2, x) for x ∈ B1.
// Throws PreconditionError unless B1, B2 are disjoint bases.
ExchangeDigraph BuildExchangeDigraph(const Matroid& m, const ElementSet& b1,
                                     const ElementSet& b2);

// Shortest directed cycle through `t` whose vertices all lie in `allowed`,
// as the vertex sequence starting at t. Breadth-first search visits
// neighbours in increasing id order, so ties resolve deterministically.
std::optional<std::vector<ElementId>> ShortestCycleThrough(
    const ExchangeDigraph& graph, ElementId t, const ElementSet& allowed);

// Finds a (t, S)-exchangeable set for B1 and B2 with t ∈ B1 \ S, after
// replacing S by S ∩ (B1 ∪ B2). Requires |B1 ∩ S| < |B2 ∩ S|.
//
// The vertex set of a globally shortest cycle through some t inside
// A[S + t] is returned (smallest t on ties). A shortest cycle through t has
// no cycle through t on a strict subset of its vertices, which is exactly
// what makes its vertex set exchangeable. The result is re-verified with
// two basis checks; failure, or finding no cycle at all, raises
// InternalInvariantError because such a cycle always exists.
ExchangeSet FindTSExchangeable(const Matroid& m, const ElementSet& b1,
                               const ElementSet& b2, const ElementSet& s);

// Same search with t restricted to `pool`; nullopt when no cycle passes
// through an allowed pivot. Each result is still exchangeable.
std::optional<ExchangeSet> FindTSExchangeableAmong(const Matroid& m,
                                                   const ElementSet& b1,
                                                   const ElementSet& b2,
                                                   const ElementSet& s,
                                                   const ElementSet& pool);

// (B1 Δ X, B2 Δ X). Throws PreconditionError if X ⊄ B1 ∪ B2.
std::pair<ElementSet, ElementSet> ApplyExchange(const ElementSet& b1,
                                                const ElementSet& b2,
                                                const ExchangeSet& x);

bool VerifyExchangeable(const Matroid& m, const ElementSet& b1,
                        const ElementSet& b2, const ElementSet& x);

}  // namespace equimat

#endif  // EQUIMAT_EXCHANGE_GRAPH_H_
