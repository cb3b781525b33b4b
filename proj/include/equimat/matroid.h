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

#ifndef EQUIMAT_MATROID_H_
#define EQUIMAT_MATROID_H_

#include <atomic>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "equimat/element_set.h"

namespace equimat {

enum class MatroidKind { kGraphic, kUniform, kPartition, kLinearGf2, kDerived };

std::string KindName(MatroidKind kind);

// Answers "which circuit does I + e contain?" for one fixed independent set I.
// Concrete matroids precompute structure for I (a rooted forest, an echelon
// form, block counts) so that each query is cheap.
class CircuitFinder {
 public:
  virtual ~CircuitFinder() = default;

  // The unique circuit of I + e, or nullopt when I + e is independent.
  // Requires e ∉ I.
  virtual std::optional<ElementSet> CircuitWith(ElementId e) const = 0;
};

// A matroid on ground set {0, ..., m-1}, given by its independence oracle.
// Instances are immutable once constructed.
class Matroid {
 public:
  virtual ~Matroid() = default;

  int NumElements() const { return num_elements_; }
  // Rank of the whole ground set.
  virtual int Rank() const = 0;
  virtual MatroidKind Kind() const = 0;

  // Throws PreconditionError if X has an id outside [0, m).
  bool IsIndependent(const ElementSet& x) const;
  // Size of a maximal independent subset of X, grown greedily in id order.
  int RankOf(const ElementSet& x) const;
  bool IsBasis(const ElementSet& b) const;

  // `independent` must be independent; this is not re-checked. The default
  // finder answers from the independence oracle with |I| + 1 queries.
  virtual std::unique_ptr<CircuitFinder> MakeCircuitFinder(
      const ElementSet& independent) const;

  void CheckElements(const ElementSet& x) const;
  void CheckElement(ElementId e) const;

 protected:
  explicit Matroid(int num_elements) : num_elements_(num_elements) {}

  // Ids are already validated.
  virtual bool IndependentImpl(const ElementSet& x) const = 0;

 private:
  int num_elements_;
};

// Graphic matroid of a multigraph: elements are edges, independent sets are
// forests. Loops and parallel edges are allowed.
class GraphicMatroid final : public Matroid {
 public:
  using Edge = std::pair<int, int>;

  GraphicMatroid(int num_vertices, std::vector<Edge> edges);

  int Rank() const override { return rank_; }
  MatroidKind Kind() const override { return MatroidKind::kGraphic; }
  std::unique_ptr<CircuitFinder> MakeCircuitFinder(
      const ElementSet& independent) const override;

  int num_vertices() const { return num_vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

 protected:
  bool IndependentImpl(const ElementSet& x) const override;

 private:
  int num_vertices_;
  std::vector<Edge> edges_;
  int rank_;
};

// U(r, m): every set of at most r elements is independent.
class UniformMatroid final : public Matroid {
 public:
  UniformMatroid(int num_elements, int rank);

  int Rank() const override { return rank_; }
  MatroidKind Kind() const override { return MatroidKind::kUniform; }
  std::unique_ptr<CircuitFinder> MakeCircuitFinder(
      const ElementSet& independent) const override;

 protected:
  bool IndependentImpl(const ElementSet& x) const override;

 private:
  int rank_;
};

// Blocks partition the ground set; X is independent iff it takes at most
// capacity[i] elements of block i.
class PartitionMatroid final : public Matroid {
 public:
  PartitionMatroid(std::vector<std::vector<ElementId>> blocks,
                   std::vector<int> capacities);

  int Rank() const override { return rank_; }
  MatroidKind Kind() const override { return MatroidKind::kPartition; }
  std::unique_ptr<CircuitFinder> MakeCircuitFinder(
      const ElementSet& independent) const override;

  const std::vector<std::vector<ElementId>>& blocks() const { return blocks_; }
  const std::vector<int>& capacities() const { return capacities_; }
  int BlockOf(ElementId e) const { return block_of_[e]; }

 protected:
  bool IndependentImpl(const ElementSet& x) const override;

 private:
  std::vector<std::vector<ElementId>> blocks_;
  std::vector<int> capacities_;
  std::vector<int> block_of_;
  int rank_;
};

// Column matroid of a binary matrix. Columns are packed into 64-bit words.
class LinearGf2Matroid final : public Matroid {
 public:
  using Column = std::vector<std::uint64_t>;

  LinearGf2Matroid(int dimension, std::vector<Column> columns);
  // Each string holds `dimension` characters from {0,1}, most significant
  // coordinate first.
  static LinearGf2Matroid FromBitStrings(const std::vector<std::string>& cols);

  int Rank() const override { return rank_; }
  MatroidKind Kind() const override { return MatroidKind::kLinearGf2; }
  std::unique_ptr<CircuitFinder> MakeCircuitFinder(
      const ElementSet& independent) const override;

  int dimension() const { return dimension_; }
  const Column& column(ElementId e) const { return columns_[e]; }
  std::string ColumnString(ElementId e) const;

 protected:
  bool IndependentImpl(const ElementSet& x) const override;

 private:
  int dimension_;
  int words_;
  std::vector<Column> columns_;
  int rank_;
};

// M | subset, with the members of `subset` relabelled 0..|subset|-1 in
// increasing order. Borrows `parent`, which must outlive this object.
class RestrictedMatroid final : public Matroid {
 public:
  RestrictedMatroid(const Matroid& parent, ElementSet subset);

  int Rank() const override { return rank_; }
  MatroidKind Kind() const override { return MatroidKind::kDerived; }
  std::unique_ptr<CircuitFinder> MakeCircuitFinder(
      const ElementSet& independent) const override;

  ElementId ToParent(ElementId local) const { return subset_[local]; }
  ElementSet ToParent(const ElementSet& local) const;
  // Every member must lie in the subset.
  ElementSet FromParent(const ElementSet& global) const;
  const ElementSet& subset() const { return subset_; }

 protected:
  bool IndependentImpl(const ElementSet& x) const override;

 private:
  const Matroid& parent_;
  ElementSet subset_;
  std::vector<int> local_of_;
  int rank_;
};

// Oracle traffic seen through a CountingMatroid.
struct OracleCounts {
  std::uint64_t independence_queries = 0;
  std::uint64_t circuit_queries = 0;

  std::uint64_t total() const { return independence_queries + circuit_queries; }
};

// Forwards to a borrowed matroid and counts independence and circuit
// queries. One instance belongs to one algorithm run.
class CountingMatroid final : public Matroid {
 public:
  explicit CountingMatroid(const Matroid& inner);

  int Rank() const override { return inner_.Rank(); }
  MatroidKind Kind() const override { return inner_.Kind(); }
  std::unique_ptr<CircuitFinder> MakeCircuitFinder(
      const ElementSet& independent) const override;

  OracleCounts counts() const;
  const Matroid& inner() const { return inner_; }

 protected:
  bool IndependentImpl(const ElementSet& x) const override;

 private:
  const Matroid& inner_;
  mutable std::atomic<std::uint64_t> independence_queries_{0};
  mutable std::atomic<std::uint64_t> circuit_queries_{0};
};

// C(B, e) computed straight from the oracle as {f ∈ B+e : B - f + e is a
// basis}, using r + 1 basis checks. Throws PreconditionError unless B is a
// basis and e ∉ B.
ElementSet FundamentalCircuit(const Matroid& m, const ElementSet& basis,
                              ElementId e);

// Both B1 - x + y and B2 - y + x are bases.
bool MutuallyExchangeable(const Matroid& m, const ElementSet& b1,
                          const ElementSet& b2, ElementId x, ElementId y);

}  // namespace equimat

#endif  // EQUIMAT_MATROID_H_
