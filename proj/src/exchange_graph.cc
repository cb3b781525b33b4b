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

#include "equimat/exchange_graph.h"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "equimat/errors.h"

namespace equimat {
namespace {

// BFS from t restricted to `allowed`; accepts only cycles of at most
// `max_length` vertices.
std::optional<std::vector<ElementId>> SearchCycle(
    const ExchangeDigraph& graph, ElementId t, const std::vector<char>& allowed,
    std::size_t max_length) {
  const int m = graph.num_elements();
  std::vector<char> closes(m, 0);
  for (ElementId v : graph.InNeighbors(t)) closes[v] = 1;

  std::vector<int> dist(m, -1);
  std::vector<ElementId> parent(m, -1);
  std::deque<ElementId> queue = {t};
  dist[t] = 0;
  while (!queue.empty()) {
    const ElementId u = queue.front();
    queue.pop_front();
    if (u != t && closes[u]) {
      if (static_cast<std::size_t>(dist[u]) + 1 > max_length) {
        return std::nullopt;
      }
      std::vector<ElementId> cycle;
      for (ElementId v = u; v != t; v = parent[v]) cycle.push_back(v);
      cycle.push_back(t);
      std::reverse(cycle.begin(), cycle.end());
      return cycle;
    }
    // A cycle closing beyond w has at least dist[u] + 2 vertices.
    if (static_cast<std::size_t>(dist[u]) + 2 > max_length) continue;
    for (ElementId w : graph.OutNeighbors(u)) {
      if (!allowed[w] || dist[w] != -1) continue;
      dist[w] = dist[u] + 1;
      parent[w] = u;
      queue.push_back(w);
    }
  }
  return std::nullopt;
}

void CheckDisjointBases(const Matroid& m, const ElementSet& b1,
                        const ElementSet& b2) {
  if (!b1.IsDisjointFrom(b2)) {
    throw PreconditionError("exchange digraph needs disjoint bases");
  }
  if (!m.IsBasis(b1) || !m.IsBasis(b2)) {
    throw PreconditionError("exchange digraph: " + b1.ToString() + " and " +
                            b2.ToString() + " must both be bases");
  }
}

}  // namespace

bool ExchangeDigraph::HasArc(ElementId from, ElementId to) const {
  if (from < 0 || from >= num_elements()) return false;
  const auto& out = out_[from];
  return std::binary_search(out.begin(), out.end(), to);
}

std::size_t ExchangeDigraph::NumArcs() const {
  std::size_t total = 0;
  for (const auto& out : out_) total += out.size();
  return total;
}

std::vector<std::pair<ElementId, ElementId>> ExchangeDigraph::Arcs() const {
  std::vector<std::pair<ElementId, ElementId>> arcs;
  for (ElementId v = 0; v < num_elements(); ++v) {
    for (ElementId w : out_[v]) arcs.emplace_back(v, w);
  }
  return arcs;
}

ExchangeDigraph BuildExchangeDigraph(const Matroid& m, const ElementSet& b1,
                                     const ElementSet& b2) {
  CheckDisjointBases(m, b1, b2);
  ExchangeDigraph graph;
  graph.left_ = b1;
  graph.right_ = b2;
  graph.out_.assign(m.NumElements(), {});
  graph.in_.assign(m.NumElements(), {});

  // f ∈ C(B, e) - e exactly when B - f + e is independent, i.e. f -> e.
  auto add_side = [&](const ElementSet& from, const ElementSet& to) {
    const auto finder = m.MakeCircuitFinder(from);
    for (ElementId e : to) {
      const auto circuit = finder->CircuitWith(e);
      if (!circuit) {
        throw InternalInvariantError("a basis plus an element is independent");
      }
      for (ElementId f : *circuit) {
        if (f == e) continue;
        graph.out_[f].push_back(e);
        graph.in_[e].push_back(f);
      }
    }
  };
  add_side(b1, b2);
  add_side(b2, b1);
  for (auto& list : graph.out_) std::sort(list.begin(), list.end());
  for (auto& list : graph.in_) std::sort(list.begin(), list.end());
  return graph;
}

std::optional<std::vector<ElementId>> ShortestCycleThrough(
    const ExchangeDigraph& graph, ElementId t, const ElementSet& allowed) {
  const int m = graph.num_elements();
  if (t < 0 || t >= m || !allowed.Contains(t)) return std::nullopt;
  std::vector<char> mask(m, 0);
  for (ElementId e : allowed) {
    if (e >= 0 && e < m) mask[e] = 1;
  }
  return SearchCycle(graph, t, mask, std::numeric_limits<std::size_t>::max());
}

std::optional<ExchangeSet> FindTSExchangeableAmong(const Matroid& m,
                                                   const ElementSet& b1,
                                                   const ElementSet& b2,
                                                   const ElementSet& s,
                                                   const ElementSet& pool) {
  m.CheckElements(s);
  const ElementSet target = s.Intersect(b1.Union(b2));
  if (b1.IntersectionSize(target) >= b2.IntersectionSize(target)) {
    throw PreconditionError("(t,S) exchange needs |B1 ∩ S| < |B2 ∩ S|");
  }
  const ExchangeDigraph graph = BuildExchangeDigraph(m, b1, b2);
  const ElementSet pivots = b1.Minus(target).Intersect(pool);

  auto finish = [&](std::vector<ElementId> cycle, ElementId t) {
    ExchangeSet x{ElementSet(std::move(cycle)), t};
    if (!VerifyExchangeable(m, b1, b2, x.elements)) {
      throw InternalInvariantError("cycle " + x.elements.ToString() +
                                   " is not exchangeable");
    }
    return x;
  };

  std::vector<char> allowed = target.ToMask(m.NumElements());
  // Two-cycles t <-> y are the common case.
  for (ElementId t : pivots) {
    for (ElementId y : graph.OutNeighbors(t)) {
      if (allowed[y] && graph.HasArc(y, t)) return finish({t, y}, t);
    }
  }

  std::optional<std::vector<ElementId>> best;
  ElementId best_pivot = -1;
  for (ElementId t : pivots) {
    const std::size_t bound =
        best ? best->size() - 1 : std::numeric_limits<std::size_t>::max();
    allowed[t] = 1;
    auto cycle = SearchCycle(graph, t, allowed, bound);
    allowed[t] = 0;
    if (cycle) {
      best = std::move(cycle);
      best_pivot = t;
      // No two-cycle exists, so four vertices cannot be beaten.
      if (best->size() <= 4) break;
    }
  }
  if (!best) return std::nullopt;
  return finish(std::move(*best), best_pivot);
}

ExchangeSet FindTSExchangeable(const Matroid& m, const ElementSet& b1,
                               const ElementSet& b2, const ElementSet& s) {
  auto x = FindTSExchangeableAmong(m, b1, b2, s, b1);
  if (!x) {
    throw InternalInvariantError(
        "no cycle through any t in B1 \\ S inside A[S + t]");
  }
  return *std::move(x);
}

std::pair<ElementSet, ElementSet> ApplyExchange(const ElementSet& b1,
                                                const ElementSet& b2,
                                                const ExchangeSet& x) {
  if (!x.elements.IsSubsetOf(b1.Union(b2))) {
    throw PreconditionError("exchange set " + x.elements.ToString() +
                            " is not inside B1 ∪ B2");
  }
  return {b1.SymmetricDifference(x.elements),
          b2.SymmetricDifference(x.elements)};
}

bool VerifyExchangeable(const Matroid& m, const ElementSet& b1,
                        const ElementSet& b2, const ElementSet& x) {
  if (!x.IsSubsetOf(b1.Union(b2))) return false;
  return m.IsBasis(b1.SymmetricDifference(x)) &&
         m.IsBasis(b2.SymmetricDifference(x));
}

}  // namespace equimat
