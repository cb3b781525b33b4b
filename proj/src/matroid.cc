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

#include "equimat/matroid.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>
#include <string>

#include "equimat/errors.h"

namespace equimat {
namespace {

// Union-find over a fixed vertex range, path halving only.
class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int Find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // False if x and y were already joined.
  bool Unite(int x, int y) {
    x = Find(x);
    y = Find(y);
    if (x == y) return false;
    parent_[x] = y;
    return true;
  }

 private:
  std::vector<int> parent_;
};

class OracleCircuitFinder final : public CircuitFinder {
 public:
  OracleCircuitFinder(const Matroid& matroid, ElementSet independent)
      : matroid_(matroid), independent_(std::move(independent)) {}

  std::optional<ElementSet> CircuitWith(ElementId e) const override {
    const ElementSet grown = independent_.With(e);
    if (matroid_.IsIndependent(grown)) return std::nullopt;
    std::vector<ElementId> circuit = {e};
    for (ElementId f : independent_) {
      if (matroid_.IsIndependent(grown.Without(f))) circuit.push_back(f);
    }
    return ElementSet(std::move(circuit));
  }

 private:
  const Matroid& matroid_;
  ElementSet independent_;
};

// Rooted spanning forest of an independent edge set; circuits are tree paths.
class ForestCircuitFinder final : public CircuitFinder {
 public:
  ForestCircuitFinder(const GraphicMatroid& graph, const ElementSet& forest)
      : graph_(graph),
        parent_vertex_(graph.num_vertices(), -1),
        parent_edge_(graph.num_vertices(), -1),
        depth_(graph.num_vertices(), 0),
        component_(graph.num_vertices(), -1) {
    const int n = graph.num_vertices();
    std::vector<std::vector<std::pair<int, ElementId>>> adjacency(n);
    for (ElementId e : forest) {
      const auto [u, v] = graph.edges()[e];
      adjacency[u].emplace_back(v, e);
      adjacency[v].emplace_back(u, e);
    }
    std::vector<int> stack;
    for (int root = 0; root < n; ++root) {
      if (component_[root] != -1) continue;
      component_[root] = root;
      stack.push_back(root);
      while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (const auto& [v, e] : adjacency[u]) {
          if (component_[v] != -1) continue;
          component_[v] = root;
          parent_vertex_[v] = u;
          parent_edge_[v] = e;
          depth_[v] = depth_[u] + 1;
          stack.push_back(v);
        }
      }
    }
  }

  std::optional<ElementSet> CircuitWith(ElementId e) const override {
    auto [u, v] = graph_.edges()[e];
    if (u == v) return ElementSet{e};
    if (component_[u] != component_[v]) return std::nullopt;
    std::vector<ElementId> circuit = {e};
    while (u != v) {
      if (depth_[u] < depth_[v]) std::swap(u, v);
      circuit.push_back(parent_edge_[u]);
      u = parent_vertex_[u];
    }
    return ElementSet(std::move(circuit));
  }

 private:
  const GraphicMatroid& graph_;
  std::vector<int> parent_vertex_;
  std::vector<ElementId> parent_edge_;
  std::vector<int> depth_;
  std::vector<int> component_;
};

class UniformCircuitFinder final : public CircuitFinder {
 public:
  UniformCircuitFinder(int rank, ElementSet independent)
      : rank_(rank), independent_(std::move(independent)) {}

  std::optional<ElementSet> CircuitWith(ElementId e) const override {
    if (static_cast<int>(independent_.size()) < rank_) return std::nullopt;
    return independent_.With(e);
  }

 private:
  int rank_;
  ElementSet independent_;
};

class BlockCircuitFinder final : public CircuitFinder {
 public:
  BlockCircuitFinder(const PartitionMatroid& matroid, const ElementSet& set)
      : matroid_(matroid), members_(matroid.blocks().size()) {
    for (ElementId e : set) members_[matroid.BlockOf(e)].push_back(e);
  }

  std::optional<ElementSet> CircuitWith(ElementId e) const override {
    const int block = matroid_.BlockOf(e);
    const auto& taken = members_[block];
    if (static_cast<int>(taken.size()) < matroid_.capacities()[block]) {
      return std::nullopt;
    }
    std::vector<ElementId> circuit = taken;
    circuit.push_back(e);
    return ElementSet(std::move(circuit));
  }

 private:
  const PartitionMatroid& matroid_;
  std::vector<std::vector<ElementId>> members_;
};

using Words = std::vector<std::uint64_t>;

int FirstSetBit(const Words& v) {
  for (std::size_t w = 0; w < v.size(); ++w) {
    if (v[w] != 0) return static_cast<int>(w * 64) + std::countr_zero(v[w]);
  }
  return -1;
}

bool TestBit(const Words& v, int bit) {
  return (v[bit / 64] >> (bit % 64)) & 1;
}

void XorInto(Words& target, const Words& source) {
  for (std::size_t w = 0; w < target.size(); ++w) target[w] ^= source[w];
}

// Row reduction that also remembers, for every stored row, which of the
// inserted columns it is a sum of.
class EchelonCircuitFinder final : public CircuitFinder {
 public:
  EchelonCircuitFinder(const LinearGf2Matroid& matroid,
                       const ElementSet& independent)
      : matroid_(matroid), members_(independent.ids()) {
    const int combo_words = (static_cast<int>(members_.size()) + 63) / 64;
    for (std::size_t i = 0; i < members_.size(); ++i) {
      Words v = matroid.column(members_[i]);
      Words combo(combo_words, 0);
      combo[i / 64] |= std::uint64_t{1} << (i % 64);
      Reduce(v, combo);
      const int pivot = FirstSetBit(v);
      // `independent` is trusted; a dependent member would give pivot -1.
      if (pivot < 0) continue;
      rows_.push_back({std::move(v), std::move(combo), pivot});
    }
  }

  std::optional<ElementSet> CircuitWith(ElementId e) const override {
    Words v = matroid_.column(e);
    Words combo((members_.size() + 63) / 64, 0);
    Reduce(v, combo);
    if (FirstSetBit(v) >= 0) return std::nullopt;
    std::vector<ElementId> circuit = {e};
    for (std::size_t i = 0; i < members_.size(); ++i) {
      if ((combo[i / 64] >> (i % 64)) & 1) circuit.push_back(members_[i]);
    }
    return ElementSet(std::move(circuit));
  }

 private:
  struct Row {
    Words vector;
    Words combo;
    int pivot;
  };

  void Reduce(Words& v, Words& combo) const {
    for (const Row& row : rows_) {
      if (TestBit(v, row.pivot)) {
        XorInto(v, row.vector);
        XorInto(combo, row.combo);
      }
    }
  }

  const LinearGf2Matroid& matroid_;
  std::vector<ElementId> members_;
  std::vector<Row> rows_;
};

class RestrictedCircuitFinder final : public CircuitFinder {
 public:
  RestrictedCircuitFinder(const RestrictedMatroid& restricted,
                          std::unique_ptr<CircuitFinder> parent_finder)
      : restricted_(restricted), parent_finder_(std::move(parent_finder)) {}

  std::optional<ElementSet> CircuitWith(ElementId e) const override {
    auto circuit = parent_finder_->CircuitWith(restricted_.ToParent(e));
    if (!circuit) return std::nullopt;
    return restricted_.FromParent(*circuit);
  }

 private:
  const RestrictedMatroid& restricted_;
  std::unique_ptr<CircuitFinder> parent_finder_;
};

class CountingCircuitFinder final : public CircuitFinder {
 public:
  CountingCircuitFinder(std::unique_ptr<CircuitFinder> inner,
                        std::atomic<std::uint64_t>* counter)
      : inner_(std::move(inner)), counter_(counter) {}

  std::optional<ElementSet> CircuitWith(ElementId e) const override {
    counter_->fetch_add(1, std::memory_order_relaxed);
    return inner_->CircuitWith(e);
  }

 private:
  std::unique_ptr<CircuitFinder> inner_;
  std::atomic<std::uint64_t>* counter_;
};

}  // namespace

std::string KindName(MatroidKind kind) {
  switch (kind) {
    case MatroidKind::kGraphic:
      return "graphic";
    case MatroidKind::kUniform:
      return "uniform";
    case MatroidKind::kPartition:
      return "partition";
    case MatroidKind::kLinearGf2:
      return "linear_gf2";
    case MatroidKind::kDerived:
      return "derived";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Matroid

void Matroid::CheckElement(ElementId e) const {
  if (e < 0 || e >= num_elements_) {
    throw PreconditionError("element id " + std::to_string(e) +
                            " outside ground set of size " +
                            std::to_string(num_elements_));
  }
}

void Matroid::CheckElements(const ElementSet& x) const {
  if (!x.empty()) {
    CheckElement(x.front());
    CheckElement(x.back());
  }
}

bool Matroid::IsIndependent(const ElementSet& x) const {
  CheckElements(x);
  return IndependentImpl(x);
}

int Matroid::RankOf(const ElementSet& x) const {
  CheckElements(x);
  std::vector<ElementId> chosen;
  for (ElementId e : x) {
    chosen.push_back(e);
    if (!IndependentImpl(ElementSet(chosen))) chosen.pop_back();
  }
  return static_cast<int>(chosen.size());
}

bool Matroid::IsBasis(const ElementSet& b) const {
  CheckElements(b);
  return static_cast<int>(b.size()) == Rank() && IndependentImpl(b);
}

std::unique_ptr<CircuitFinder> Matroid::MakeCircuitFinder(
    const ElementSet& independent) const {
  CheckElements(independent);
  return std::make_unique<OracleCircuitFinder>(*this, independent);
}

// ---------------------------------------------------------------------------
// GraphicMatroid

GraphicMatroid::GraphicMatroid(int num_vertices, std::vector<Edge> edges)
    : Matroid(static_cast<int>(edges.size())),
      num_vertices_(num_vertices),
      edges_(std::move(edges)) {
  if (num_vertices_ < 0) throw PreconditionError("negative vertex count");
  DisjointSets components(num_vertices_);
  rank_ = 0;
  for (const auto& [u, v] : edges_) {
    if (u < 0 || v < 0 || u >= num_vertices_ || v >= num_vertices_) {
      throw PreconditionError("edge endpoint outside [0, num_vertices)");
    }
    if (components.Unite(u, v)) ++rank_;
  }
}

bool GraphicMatroid::IndependentImpl(const ElementSet& x) const {
  DisjointSets components(num_vertices_);
  for (ElementId e : x) {
    if (!components.Unite(edges_[e].first, edges_[e].second)) return false;
  }
  return true;
}

std::unique_ptr<CircuitFinder> GraphicMatroid::MakeCircuitFinder(
    const ElementSet& independent) const {
  CheckElements(independent);
  return std::make_unique<ForestCircuitFinder>(*this, independent);
}

// ---------------------------------------------------------------------------
// UniformMatroid

UniformMatroid::UniformMatroid(int num_elements, int rank)
    : Matroid(num_elements), rank_(std::min(rank, num_elements)) {
  if (num_elements < 0 || rank < 0) {
    throw PreconditionError("uniform matroid needs m >= 0 and r >= 0");
  }
}

bool UniformMatroid::IndependentImpl(const ElementSet& x) const {
  return static_cast<int>(x.size()) <= rank_;
}

std::unique_ptr<CircuitFinder> UniformMatroid::MakeCircuitFinder(
    const ElementSet& independent) const {
  CheckElements(independent);
  return std::make_unique<UniformCircuitFinder>(rank_, independent);
}

// ---------------------------------------------------------------------------
// PartitionMatroid

namespace {

int CountElements(const std::vector<std::vector<ElementId>>& blocks) {
  std::size_t total = 0;
  for (const auto& block : blocks) total += block.size();
  return static_cast<int>(total);
}

}  // namespace

PartitionMatroid::PartitionMatroid(std::vector<std::vector<ElementId>> blocks,
                                   std::vector<int> capacities)
    : Matroid(CountElements(blocks)),
      blocks_(std::move(blocks)),
      capacities_(std::move(capacities)),
      block_of_(NumElements(), -1),
      rank_(0) {
  if (blocks_.size() != capacities_.size()) {
    throw PreconditionError("partition matroid: one capacity per block");
  }
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (capacities_[b] < 0) {
      throw PreconditionError("partition matroid: negative capacity");
    }
    std::sort(blocks_[b].begin(), blocks_[b].end());
    for (ElementId e : blocks_[b]) {
      if (e < 0 || e >= NumElements() || block_of_[e] != -1) {
        throw PreconditionError(
            "partition matroid: blocks must partition 0..m-1");
      }
      block_of_[e] = static_cast<int>(b);
    }
    rank_ += std::min<int>(capacities_[b], blocks_[b].size());
  }
}

bool PartitionMatroid::IndependentImpl(const ElementSet& x) const {
  std::vector<int> used(blocks_.size(), 0);
  for (ElementId e : x) {
    const int b = block_of_[e];
    if (++used[b] > capacities_[b]) return false;
  }
  return true;
}

std::unique_ptr<CircuitFinder> PartitionMatroid::MakeCircuitFinder(
    const ElementSet& independent) const {
  CheckElements(independent);
  return std::make_unique<BlockCircuitFinder>(*this, independent);
}

// ---------------------------------------------------------------------------
// LinearGf2Matroid

LinearGf2Matroid::LinearGf2Matroid(int dimension, std::vector<Column> columns)
    : Matroid(static_cast<int>(columns.size())),
      dimension_(dimension),
      words_((dimension + 63) / 64),
      columns_(std::move(columns)) {
  if (dimension_ < 0) throw PreconditionError("negative dimension");
  for (const Column& c : columns_) {
    if (static_cast<int>(c.size()) != words_) {
      throw PreconditionError("GF(2) column has the wrong word count");
    }
    if (dimension_ % 64 != 0 && words_ > 0 &&
        (c.back() >> (dimension_ % 64)) != 0) {
      throw PreconditionError("GF(2) column has bits beyond the dimension");
    }
  }
  rank_ = RankOf(ElementSet::Range(NumElements()));
}

LinearGf2Matroid LinearGf2Matroid::FromBitStrings(
    const std::vector<std::string>& cols) {
  const int dimension = cols.empty() ? 0 : static_cast<int>(cols[0].size());
  const int words = (dimension + 63) / 64;
  std::vector<Column> columns;
  columns.reserve(cols.size());
  for (const std::string& s : cols) {
    if (static_cast<int>(s.size()) != dimension) {
      throw PreconditionError("GF(2) columns must share one length");
    }
    Column c(words, 0);
    for (int i = 0; i < dimension; ++i) {
      if (s[i] == '1') {
        c[i / 64] |= std::uint64_t{1} << (i % 64);
      } else if (s[i] != '0') {
        throw PreconditionError("GF(2) column strings use only '0' and '1'");
      }
    }
    columns.push_back(std::move(c));
  }
  return LinearGf2Matroid(dimension, std::move(columns));
}

std::string LinearGf2Matroid::ColumnString(ElementId e) const {
  std::string s(dimension_, '0');
  for (int i = 0; i < dimension_; ++i) {
    if (TestBit(columns_[e], i)) s[i] = '1';
  }
  return s;
}

bool LinearGf2Matroid::IndependentImpl(const ElementSet& x) const {
  std::vector<std::pair<Words, int>> rows;
  rows.reserve(x.size());
  for (ElementId e : x) {
    Words v = columns_[e];
    for (const auto& [row, pivot] : rows) {
      if (TestBit(v, pivot)) XorInto(v, row);
    }
    const int pivot = FirstSetBit(v);
    if (pivot < 0) return false;
    rows.emplace_back(std::move(v), pivot);
  }
  return true;
}

std::unique_ptr<CircuitFinder> LinearGf2Matroid::MakeCircuitFinder(
    const ElementSet& independent) const {
  CheckElements(independent);
  return std::make_unique<EchelonCircuitFinder>(*this, independent);
}

// ---------------------------------------------------------------------------
// RestrictedMatroid

RestrictedMatroid::RestrictedMatroid(const Matroid& parent, ElementSet subset)
    : Matroid(static_cast<int>(subset.size())),
      parent_(parent),
      subset_(std::move(subset)),
      local_of_(parent.NumElements(), -1) {
  parent_.CheckElements(subset_);
  for (std::size_t i = 0; i < subset_.size(); ++i) {
    local_of_[subset_[i]] = static_cast<int>(i);
  }
  rank_ = parent_.RankOf(subset_);
}

ElementSet RestrictedMatroid::ToParent(const ElementSet& local) const {
  std::vector<ElementId> ids;
  ids.reserve(local.size());
  for (ElementId e : local) ids.push_back(subset_[e]);
  return ElementSet(std::move(ids));
}

ElementSet RestrictedMatroid::FromParent(const ElementSet& global) const {
  std::vector<ElementId> ids;
  ids.reserve(global.size());
  for (ElementId e : global) {
    if (e < 0 || e >= static_cast<int>(local_of_.size()) || local_of_[e] < 0) {
      throw PreconditionError("element " + std::to_string(e) +
                              " is outside the restriction");
    }
    ids.push_back(local_of_[e]);
  }
  return ElementSet(std::move(ids));
}

bool RestrictedMatroid::IndependentImpl(const ElementSet& x) const {
  return parent_.IsIndependent(ToParent(x));
}

std::unique_ptr<CircuitFinder> RestrictedMatroid::MakeCircuitFinder(
    const ElementSet& independent) const {
  CheckElements(independent);
  return std::make_unique<RestrictedCircuitFinder>(
      *this, parent_.MakeCircuitFinder(ToParent(independent)));
}

// ---------------------------------------------------------------------------
// CountingMatroid

CountingMatroid::CountingMatroid(const Matroid& inner)
    : Matroid(inner.NumElements()), inner_(inner) {}

bool CountingMatroid::IndependentImpl(const ElementSet& x) const {
  independence_queries_.fetch_add(1, std::memory_order_relaxed);
  return inner_.IsIndependent(x);
}

std::unique_ptr<CircuitFinder> CountingMatroid::MakeCircuitFinder(
    const ElementSet& independent) const {
  return std::make_unique<CountingCircuitFinder>(
      inner_.MakeCircuitFinder(independent), &circuit_queries_);
}

OracleCounts CountingMatroid::counts() const {
  return {independence_queries_.load(std::memory_order_relaxed),
          circuit_queries_.load(std::memory_order_relaxed)};
}

// ---------------------------------------------------------------------------

ElementSet FundamentalCircuit(const Matroid& m, const ElementSet& basis,
                              ElementId e) {
  m.CheckElement(e);
  if (!m.IsBasis(basis)) {
    throw PreconditionError("fundamental circuit: " + basis.ToString() +
                            " is not a basis");
  }
  if (basis.Contains(e)) {
    throw PreconditionError("fundamental circuit: element already in basis");
  }
  std::vector<ElementId> circuit = {e};
  const ElementSet grown = basis.With(e);
  for (ElementId f : basis) {
    if (m.IsBasis(grown.Without(f))) circuit.push_back(f);
  }
  return ElementSet(std::move(circuit));
}

bool MutuallyExchangeable(const Matroid& m, const ElementSet& b1,
                          const ElementSet& b2, ElementId x, ElementId y) {
  if (!m.IsBasis(b1) || !m.IsBasis(b2)) {
    throw PreconditionError("mutual exchange needs two bases");
  }
  if (!b1.Contains(x) || !b2.Contains(y)) {
    throw PreconditionError("mutual exchange needs x in B1 and y in B2");
  }
  return m.IsBasis(b1.Without(x).With(y)) && m.IsBasis(b2.Without(y).With(x));
}

}  // namespace equimat
