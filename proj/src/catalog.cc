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

#include "equimat/catalog.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

#include "equimat/oracle_verify.h"

namespace equimat {
namespace {

using Edge = GraphicMatroid::Edge;

int Uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

std::vector<Edge> RandomTree(Rng& rng, int num_vertices) {
  std::vector<int> order(num_vertices);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Edge> edges;
  for (int i = 1; i < num_vertices; ++i) {
    const int parent = order[Uniform(rng, 0, i - 1)];
    edges.emplace_back(std::min(parent, order[i]), std::max(parent, order[i]));
  }
  return edges;
}

std::string RandomBits(Rng& rng, int length) {
  std::string bits(length, '0');
  for (char& c : bits) c = Uniform(rng, 0, 1) ? '1' : '0';
  return bits;
}

CatalogEntry Gf2WithK(Rng& rng, int k, int r) {
  std::vector<std::string> columns;
  for (int block = 0; block < k; ++block) {
    while (true) {
      std::vector<std::string> candidate;
      for (int c = 0; c < r; ++c) candidate.push_back(RandomBits(rng, r));
      if (LinearGf2Matroid::FromBitStrings(candidate).Rank() == r) {
        columns.insert(columns.end(), candidate.begin(), candidate.end());
        break;
      }
    }
  }
  std::shuffle(columns.begin(), columns.end(), rng);
  return {"gf2_k" + std::to_string(k) + "_r" + std::to_string(r),
          std::make_shared<LinearGf2Matroid>(
              LinearGf2Matroid::FromBitStrings(columns)),
          k};
}

CatalogEntry PartitionWithK(Rng& rng, int k, int rank) {
  std::vector<int> capacities;
  int left = rank;
  while (left > 0) {
    const int c = Uniform(rng, 1, left);
    capacities.push_back(c);
    left -= c;
  }
  std::vector<ElementId> ids(k * rank);
  std::iota(ids.begin(), ids.end(), 0);
  std::shuffle(ids.begin(), ids.end(), rng);
  std::vector<std::vector<ElementId>> blocks;
  auto next = ids.begin();
  for (int c : capacities) {
    blocks.emplace_back(next, next + k * c);
    std::sort(blocks.back().begin(), blocks.back().end());
    next += k * c;
  }
  return {"partition_k" + std::to_string(k) + "_r" + std::to_string(rank),
          std::make_shared<PartitionMatroid>(std::move(blocks),
                                             std::move(capacities)),
          k};
}

CatalogEntry GraphicWithK(Rng& rng, int k, int r) {
  std::vector<Edge> edges;
  for (int t = 0; t < k; ++t) {
    const std::vector<Edge> tree = RandomTree(rng, r + 1);
    edges.insert(edges.end(), tree.begin(), tree.end());
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return {"graphic_k" + std::to_string(k) + "_r" + std::to_string(r),
          std::make_shared<GraphicMatroid>(r + 1, std::move(edges)), k};
}

int RandomRank(Rng& rng, int k, int max_elements) {
  return Uniform(rng, 1, std::max(1, max_elements / k));
}

// Smallest relabelling of the edge multiset over all vertex permutations.
std::vector<Edge> CanonicalForm(int n, const std::vector<Edge>& edges) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Edge> best;
  do {
    std::vector<Edge> mapped;
    for (auto [u, v] : edges) {
      mapped.emplace_back(std::min(perm[u], perm[v]),
                          std::max(perm[u], perm[v]));
    }
    std::sort(mapped.begin(), mapped.end());
    if (best.empty() || mapped < best) best = std::move(mapped);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::shared_ptr<const GraphicMatroid> CompleteGraphK4() {
  return std::make_shared<GraphicMatroid>(
      4, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

std::vector<CatalogEntry> SmallGraphicCatalog(int max_vertices) {
  std::vector<CatalogEntry> out;
  for (int n = 2; n <= max_vertices; ++n) {
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    const int m = 2 * (n - 1);
    const int p = static_cast<int>(pairs.size());
    std::set<std::vector<Edge>> classes;
    // Multisets of size m over the pairs, as non-decreasing index lists.
    std::vector<int> pick(m, 0);
    while (true) {
      std::vector<Edge> edges;
      for (int i : pick) edges.push_back(pairs[i]);
      classes.insert(CanonicalForm(n, edges));
      int i = m - 1;
      while (i >= 0 && pick[i] == p - 1) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < m; ++j) pick[j] = pick[i];
    }
    int index = 0;
    for (const std::vector<Edge>& edges : classes) {
      auto matroid = std::make_shared<GraphicMatroid>(n, edges);
      if (matroid->Rank() != n - 1) continue;
      if (EnumerateKBasisPartitions(*matroid, 2).empty()) continue;
      out.push_back(
          {"multigraph_n" + std::to_string(n) + "_" + std::to_string(index++),
           std::move(matroid), 2});
    }
  }
  return out;
}

std::vector<CatalogEntry> UniformCatalog(int max_rank) {
  std::vector<CatalogEntry> out;
  for (int r = 1; r <= max_rank; ++r) {
    out.push_back({"uniform_" + std::to_string(2 * r) + "_" + std::to_string(r),
                   std::make_shared<UniformMatroid>(2 * r, r), 2});
  }
  return out;
}

CatalogEntry RandomGf2Entry(Rng& rng, int max_elements) {
  const int k = Uniform(rng, 2, 3);
  return Gf2WithK(rng, k, RandomRank(rng, k, max_elements));
}

CatalogEntry RandomPartitionEntry(Rng& rng, int max_elements) {
  const int k = Uniform(rng, 2, 3);
  return PartitionWithK(rng, k, RandomRank(rng, k, max_elements));
}

CatalogEntry RandomGraphicEntry(Rng& rng, int k, int max_elements) {
  return GraphicWithK(rng, k, RandomRank(rng, k, max_elements));
}

CatalogEntry RandomEntry(Rng& rng, int k, int max_elements) {
  const int r = RandomRank(rng, k, max_elements);
  switch (Uniform(rng, 0, 3)) {
    case 0:
      return GraphicWithK(rng, k, r);
    case 1:
      return {"uniform_" + std::to_string(k * r) + "_" + std::to_string(r),
              std::make_shared<UniformMatroid>(k * r, r), k};
    case 2:
      return Gf2WithK(rng, k, r);
    default:
      return PartitionWithK(rng, k, r);
  }
}

std::vector<CatalogEntry> FullCatalog(Rng& rng, int count) {
  std::vector<CatalogEntry> out = SmallGraphicCatalog();
  for (CatalogEntry& e : UniformCatalog()) out.push_back(std::move(e));
  for (int i = 0; i < count; ++i) out.push_back(RandomGf2Entry(rng));
  for (int i = 0; i < count; ++i) out.push_back(RandomPartitionEntry(rng));
  return out;
}

ElementSet RandomSubset(Rng& rng, int m) {
  std::vector<ElementId> ids;
  for (ElementId e = 0; e < m; ++e) {
    if (Uniform(rng, 0, 1)) ids.push_back(e);
  }
  return ElementSet(std::move(ids));
}

std::pair<ElementSet, ElementSet> RandomDisjointPair(Rng& rng, int m) {
  std::vector<ElementId> a, b;
  for (ElementId e = 0; e < m; ++e) {
    const int side = Uniform(rng, 0, 2);
    if (side == 0) a.push_back(e);
    if (side == 1) b.push_back(e);
  }
  return {ElementSet(std::move(a)), ElementSet(std::move(b))};
}

std::shared_ptr<const GraphicMatroid> RandomDoubleTree(Rng& rng,
                                                       int num_vertices) {
  std::vector<Edge> edges = RandomTree(rng, num_vertices);
  const std::vector<Edge> second = RandomTree(rng, num_vertices);
  edges.insert(edges.end(), second.begin(), second.end());
  std::shuffle(edges.begin(), edges.end(), rng);
  return std::make_shared<GraphicMatroid>(num_vertices, std::move(edges));
}

namespace {

FairDivisionInstance EmptyInstance(Rng& rng, const InstanceOptions& options,
                                   int& m) {
  const int n = Uniform(rng, 1, options.max_agents);
  FairDivisionInstance instance;
  instance.matroid = RandomEntry(rng, n, options.max_elements).matroid;
  instance.valuations.resize(n);
  m = instance.matroid->NumElements();
  return instance;
}

}  // namespace

FairDivisionInstance RandomBinaryInstance(Rng& rng,
                                          const InstanceOptions& options) {
  int m = 0;
  FairDivisionInstance instance = EmptyInstance(rng, options, m);
  for (Valuation& v : instance.valuations) {
    std::vector<Rational> values;
    for (int g = 0; g < m; ++g) values.emplace_back(Uniform(rng, 0, 1));
    v = Valuation(std::move(values));
  }
  return instance;
}

FairDivisionInstance RandomBiValuedInstance(Rng& rng, bool negative,
                                            const InstanceOptions& options) {
  int m = 0;
  FairDivisionInstance instance = EmptyInstance(rng, options, m);
  for (Valuation& v : instance.valuations) {
    const int den = Uniform(rng, 1, 3);
    const int low = negative ? Uniform(rng, -6, -1) : Uniform(rng, 0, 6);
    const Rational p(low, den);
    const Rational q = p + Rational(Uniform(rng, 1, 7), Uniform(rng, 1, 3));
    std::vector<Rational> values;
    for (int g = 0; g < m; ++g) values.push_back(Uniform(rng, 0, 1) ? q : p);
    if (negative && m > 0) values[Uniform(rng, 0, m - 1)] = p;
    v = Valuation(std::move(values));
  }
  return instance;
}

FairDivisionInstance RandomTriValuedInstance(Rng& rng, bool wide_gap,
                                             const InstanceOptions& options) {
  int m = 0;
  FairDivisionInstance instance = EmptyInstance(rng, options, m);
  int a = 0;
  int b = 0;
  if (wide_gap) {
    a = Uniform(rng, 1, 4);
    b = Uniform(rng, 2 * a, 2 * a + 4);
  } else {
    a = Uniform(rng, 2, 5);
    b = Uniform(rng, a + 1, 2 * a - 1);
  }
  const int c = Uniform(rng, 0, 3) == 0 ? Uniform(rng, 1, 3) : 0;
  const Rational levels[] = {Rational(c), Rational(c + a), Rational(c + b)};
  std::vector<Rational> values;
  for (int g = 0; g < m; ++g) values.push_back(levels[Uniform(rng, 0, 2)]);
  for (Valuation& v : instance.valuations) v = Valuation(values);
  return instance;
}

}  // namespace equimat
