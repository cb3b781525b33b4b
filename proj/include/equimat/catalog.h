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

// Instance families used by the test suites and `equimat verify`. All
// randomness flows from an explicit std::mt19937_64 so a seed reproduces
// every instance.

#ifndef EQUIMAT_CATALOG_H_
#define EQUIMAT_CATALOG_H_

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "equimat/element_set.h"
#include "equimat/fair_division.h"
#include "equimat/matroid.h"

namespace equimat {

using Rng = std::mt19937_64;

struct CatalogEntry {
  std::string name;
  std::shared_ptr<const Matroid> matroid;
  int k = 2;  // the ground set splits into k bases
};

// K4 with vertices 0..3 and edges e0=(0,1), e1=(0,2), e2=(0,3), e3=(1,2),
// e4=(1,3), e5=(2,3).
std::shared_ptr<const GraphicMatroid> CompleteGraphK4();

// Loopless multigraphs on 2..max_vertices vertices with 2(n-1) edges whose
// edge set splits into two spanning trees, one per isomorphism class.
std::vector<CatalogEntry> SmallGraphicCatalog(int max_vertices = 5);

// U(2r, r) for r = 1..max_rank.
std::vector<CatalogEntry> UniformCatalog(int max_rank = 6);

// Column matroid of k random invertible r x r blocks, columns shuffled;
// random k in {2, 3} and k r <= max_elements.
CatalogEntry RandomGf2Entry(Rng& rng, int max_elements = 12);
// Blocks of size k * capacity, ids shuffled; k in {2, 3}.
CatalogEntry RandomPartitionEntry(Rng& rng, int max_elements = 12);
// Union of k random spanning trees on r + 1 vertices, edges shuffled.
CatalogEntry RandomGraphicEntry(Rng& rng, int k, int max_elements = 12);
// A random entry of the given k drawn from all four kinds.
CatalogEntry RandomEntry(Rng& rng, int k, int max_elements = 12);

// The full small-instance catalog: graphic, uniform, `count` GF(2) and
// `count` partition matroids.
std::vector<CatalogEntry> FullCatalog(Rng& rng, int count = 50);

// Each element independently with probability 1/2.
ElementSet RandomSubset(Rng& rng, int m);
// Disjoint pair: each element lands in S1, S2 or neither uniformly.
std::pair<ElementSet, ElementSet> RandomDisjointPair(Rng& rng, int m);

// Two random spanning trees on `num_vertices` vertices (a multigraph with
// 2(n-1) edges), edge order shuffled.
std::shared_ptr<const GraphicMatroid> RandomDoubleTree(Rng& rng,
                                                       int num_vertices);

struct InstanceOptions {
  int max_agents = 4;
  int max_elements = 12;
};

// Matroid admitting an n-basis partition and one valuation per agent.
FairDivisionInstance RandomBinaryInstance(Rng& rng,
                                          const InstanceOptions& options = {});
// Each agent draws its own two values; with `negative`, at least one value
// of every agent is below zero.
FairDivisionInstance RandomBiValuedInstance(
    Rng& rng, bool negative, const InstanceOptions& options = {});
// Identical valuation over {c, c + a, c + b}, 0 < a < b and c >= 0. With
// `wide_gap` b >= 2a, otherwise a < b < 2a.
FairDivisionInstance RandomTriValuedInstance(
    Rng& rng, bool wide_gap, const InstanceOptions& options = {});

}  // namespace equimat

#endif  // EQUIMAT_CATALOG_H_
