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

#include <random>
#include <string>

#include "equimat/catalog.h"
#include "equimat/errors.h"
#include "equimat/oracle_verify.h"
#include "gtest/gtest.h"

namespace equimat {
namespace {

// K4 edge ids: e0=(0,1) e1=(0,2) e2=(0,3) e3=(1,2) e4=(1,3) e5=(2,3).
constexpr ElementId e0 = 0, e1 = 1, e2 = 2, e3 = 3, e4 = 4, e5 = 5;

// The unique minimal dependent subset of x, found by trying every subset.
std::optional<ElementSet> BruteCircuit(const Matroid& m, const ElementSet& x) {
  std::optional<ElementSet> found;
  const int n = static_cast<int>(x.size());
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<ElementId> ids;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1) ids.push_back(x[i]);
    }
    const ElementSet c(ids);
    if (m.IsIndependent(c)) continue;
    bool minimal = true;
    for (ElementId f : c) minimal = minimal && m.IsIndependent(c.Without(f));
    if (!minimal) continue;
    EXPECT_FALSE(found.has_value()) << "two circuits inside " << x;
    found = c;
  }
  return found;
}

TEST(GraphicMatroidTest, K4Independence) {
  const auto k4 = CompleteGraphK4();
  EXPECT_TRUE(k4->IsIndependent({e1, e0, e4}));
  EXPECT_FALSE(k4->IsIndependent({e0, e1, e3}));
  EXPECT_TRUE(k4->IsIndependent({}));
  EXPECT_EQ(k4->Rank(), 3);
  EXPECT_EQ(k4->NumElements(), 6);
}

TEST(GraphicMatroidTest, K4Rank) {
  const auto k4 = CompleteGraphK4();
  EXPECT_EQ(k4->RankOf(ElementSet::Range(6)), 3);
  EXPECT_EQ(k4->RankOf({e0, e1, e3}), 2);
  EXPECT_EQ(UniformMatroid(8, 4).RankOf(ElementSet::Range(8)), 4);
}

TEST(GraphicMatroidTest, K4Bases) {
  const auto k4 = CompleteGraphK4();
  EXPECT_TRUE(k4->IsBasis({e1, e0, e4}));
  EXPECT_FALSE(k4->IsBasis({e0, e1}));
  EXPECT_FALSE(k4->IsBasis({e0, e1, e3}));
}

TEST(GraphicMatroidTest, LoopsAndParallelEdges) {
  const GraphicMatroid g(3, {{0, 0}, {0, 1}, {0, 1}, {1, 2}});
  EXPECT_FALSE(g.IsIndependent({0}));
  EXPECT_FALSE(g.IsIndependent({1, 2}));
  EXPECT_TRUE(g.IsIndependent({1, 3}));
  EXPECT_EQ(g.Rank(), 2);
  EXPECT_EQ(FundamentalCircuit(g, {1, 3}, 0), (ElementSet{0}));
  EXPECT_EQ(FundamentalCircuit(g, {1, 3}, 2), (ElementSet{1, 2}));
}

TEST(GraphicMatroidTest, RejectsBadEndpoints) {
  EXPECT_THROW(GraphicMatroid(2, {{0, 2}}), PreconditionError);
}

TEST(MatroidTest, OutOfRangeIdsAreRejected) {
  const auto k4 = CompleteGraphK4();
  EXPECT_THROW(k4->IsIndependent({6}), PreconditionError);
  EXPECT_THROW(k4->IsIndependent({-1}), PreconditionError);
}

TEST(FundamentalCircuitTest, StarPlusEdgeIsTriangle) {
  const auto k4 = CompleteGraphK4();
  EXPECT_EQ(FundamentalCircuit(*k4, {e0, e1, e2}, e3),
            (ElementSet{e0, e1, e3}));
}

TEST(FundamentalCircuitTest, UniformThreeSet) {
  EXPECT_EQ(FundamentalCircuit(UniformMatroid(4, 2), {0, 1}, 2),
            (ElementSet{0, 1, 2}));
}

TEST(FundamentalCircuitTest, PathTreePlusEdgeMatchesBruteForce) {
  // B = {e0, e1, e4} is the path 2-0-1-3, so closing it with e5 = (2,3)
  // gives the four-cycle through every basis edge.
  const auto k4 = CompleteGraphK4();
  const ElementSet b{e1, e0, e4};
  const ElementSet c = FundamentalCircuit(*k4, b, e5);
  EXPECT_EQ(BruteCircuit(*k4, b.With(e5)), c);
  EXPECT_EQ(c, (ElementSet{e0, e1, e4, e5}));
}

TEST(FundamentalCircuitTest, Preconditions) {
  const auto k4 = CompleteGraphK4();
  EXPECT_THROW(FundamentalCircuit(*k4, {e0, e1}, e5), PreconditionError);
  EXPECT_THROW(FundamentalCircuit(*k4, {e0, e1, e4}, e0), PreconditionError);
}

TEST(MutuallyExchangeableTest, K4Examples) {
  const auto k4 = CompleteGraphK4();
  const ElementSet b1{e1, e0, e4};
  const ElementSet b2{e2, e3, e5};
  EXPECT_TRUE(MutuallyExchangeable(*k4, b1, b2, e1, e5));
  EXPECT_FALSE(MutuallyExchangeable(*k4, b1, b2, e4, e3));
  EXPECT_THROW(MutuallyExchangeable(*k4, b1, b2, e5, e1), PreconditionError);
}

TEST(MutuallyExchangeableTest, UniformAlwaysSwaps) {
  const UniformMatroid u(6, 3);
  for (ElementId x : {0, 1, 2}) {
    for (ElementId y : {3, 4, 5}) {
      EXPECT_TRUE(MutuallyExchangeable(u, {0, 1, 2}, {3, 4, 5}, x, y));
    }
  }
}

TEST(PartitionMatroidTest, Capacities) {
  const PartitionMatroid p({{0, 1, 2}, {3, 4}}, {2, 1});
  EXPECT_EQ(p.Rank(), 3);
  EXPECT_TRUE(p.IsIndependent({0, 1, 3}));
  EXPECT_FALSE(p.IsIndependent({0, 1, 2}));
  EXPECT_FALSE(p.IsIndependent({3, 4}));
  EXPECT_EQ(p.BlockOf(4), 1);
  EXPECT_THROW(PartitionMatroid({{0, 1}, {1, 2}}, {1, 1}), PreconditionError);
  EXPECT_THROW(PartitionMatroid({{0, 2}}, {1}), PreconditionError);
}

TEST(LinearGf2MatroidTest, BitStringsMostSignificantFirst) {
  const LinearGf2Matroid l =
      LinearGf2Matroid::FromBitStrings({"100", "010", "110", "001"});
  EXPECT_EQ(l.dimension(), 3);
  EXPECT_EQ(l.Rank(), 3);
  EXPECT_FALSE(l.IsIndependent({0, 1, 2}));
  EXPECT_TRUE(l.IsIndependent({0, 1, 3}));
  EXPECT_EQ(l.ColumnString(2), "110");
  EXPECT_EQ(FundamentalCircuit(l, {0, 1, 3}, 2), (ElementSet{0, 1, 2}));
}

TEST(LinearGf2MatroidTest, ZeroColumnIsALoop) {
  const LinearGf2Matroid l = LinearGf2Matroid::FromBitStrings({"00", "01"});
  EXPECT_FALSE(l.IsIndependent({0}));
  EXPECT_EQ(l.Rank(), 1);
}

TEST(LinearGf2MatroidTest, SpansSeveralWords) {
  std::vector<std::string> columns;
  for (int i = 0; i < 70; ++i) {
    std::string bits(70, '0');
    bits[i] = '1';
    columns.push_back(bits);
  }
  std::string sum(70, '0');
  sum[0] = sum[69] = '1';
  columns.push_back(sum);
  const LinearGf2Matroid l = LinearGf2Matroid::FromBitStrings(columns);
  EXPECT_EQ(l.Rank(), 70);
  EXPECT_EQ(FundamentalCircuit(l, ElementSet::Range(70), 70),
            (ElementSet{0, 69, 70}));
}

TEST(LinearGf2MatroidTest, RejectsBadStrings) {
  EXPECT_THROW(LinearGf2Matroid::FromBitStrings({"10", "1"}),
               PreconditionError);
  EXPECT_THROW(LinearGf2Matroid::FromBitStrings({"1x"}), PreconditionError);
}

TEST(RestrictedMatroidTest, RelabelsSubset) {
  const auto k4 = CompleteGraphK4();
  const RestrictedMatroid r(*k4, {e0, e1, e3, e5});
  EXPECT_EQ(r.NumElements(), 4);
  EXPECT_EQ(r.Rank(), 3);
  // Local 0,1,2 are e0,e1,e3: the triangle.
  EXPECT_FALSE(r.IsIndependent({0, 1, 2}));
  EXPECT_EQ(r.ToParent({0, 3}), (ElementSet{e0, e5}));
  EXPECT_EQ(r.FromParent({e3, e5}), (ElementSet{2, 3}));
}

TEST(CountingMatroidTest, CountsQueries) {
  const auto k4 = CompleteGraphK4();
  const CountingMatroid counted(*k4);
  counted.IsIndependent({e0});
  counted.IsBasis({e0, e1, e4});
  auto finder = counted.MakeCircuitFinder({e0, e1, e4});
  finder->CircuitWith(e5);
  const OracleCounts c = counted.counts();
  EXPECT_EQ(c.independence_queries, 2);
  EXPECT_EQ(c.circuit_queries, 1);
  EXPECT_EQ(c.total(), 3);
}

// Circuit finders specialised per kind must agree with the generic
// r + 1 basis-check route on every (basis, e) pair.
TEST(CircuitFinderTest, AgreesWithGenericRouteOnCatalog) {
  Rng rng(5);
  std::vector<CatalogEntry> entries = UniformCatalog(4);
  for (int i = 0; i < 12; ++i) entries.push_back(RandomGf2Entry(rng));
  for (int i = 0; i < 12; ++i) entries.push_back(RandomPartitionEntry(rng));
  for (int i = 0; i < 12; ++i) entries.push_back(RandomGraphicEntry(rng, 2));
  entries.push_back({"K4", CompleteGraphK4(), 2});
  for (const CatalogEntry& entry : entries) {
    const Matroid& m = *entry.matroid;
    const std::vector<ElementSet> bases = EnumerateBases(m);
    for (std::size_t b = 0; b < bases.size(); b += 1 + bases.size() / 20) {
      const auto finder = m.MakeCircuitFinder(bases[b]);
      for (ElementId e = 0; e < m.NumElements(); ++e) {
        if (bases[b].Contains(e)) continue;
        const ElementSet generic = FundamentalCircuit(m, bases[b], e);
        ASSERT_EQ(finder->CircuitWith(e), generic)
            << entry.name << " B=" << bases[b] << " e=" << e;
      }
    }
  }
}

TEST(CircuitFinderTest, IndependentExtensionHasNoCircuit) {
  const auto k4 = CompleteGraphK4();
  const auto finder = k4->MakeCircuitFinder({e0});
  EXPECT_FALSE(finder->CircuitWith(e5).has_value());
  EXPECT_FALSE(finder->CircuitWith(e3).has_value());
  // A forest that is not spanning still closes cycles.
  const auto partial = k4->MakeCircuitFinder({e0, e3});
  EXPECT_EQ(partial->CircuitWith(e1), (ElementSet{e0, e1, e3}));
}

class MatroidPropertyTest : public ::testing::TestWithParam<int> {
 protected:
  CatalogEntry Entry() {
    Rng rng(100 + GetParam());
    return RandomEntry(rng, 2 + GetParam() % 2);
  }
};

TEST_P(MatroidPropertyTest, CircuitIsMinimalAndMatchesInNeighbours) {
  const CatalogEntry entry = Entry();
  const Matroid& m = *entry.matroid;
  for (const ElementSet& b : EnumerateBases(m)) {
    for (ElementId e = 0; e < m.NumElements(); ++e) {
      if (b.Contains(e)) continue;
      const ElementSet c = FundamentalCircuit(m, b, e);
      ASSERT_FALSE(m.IsIndependent(c));
      for (ElementId f : c) ASSERT_TRUE(m.IsIndependent(c.Without(f)));
      // f ∈ C(B,e) - e exactly when D(B) has the arc f -> e.
      for (ElementId f : b) {
        ASSERT_EQ(c.Contains(f), m.IsIndependent(b.Without(f).With(e)));
      }
    }
  }
}

TEST_P(MatroidPropertyTest, SymmetricExchange) {
  const CatalogEntry entry = Entry();
  const Matroid& m = *entry.matroid;
  const std::vector<ElementSet> bases = EnumerateBases(m);
  Rng rng(GetParam());
  for (int trial = 0; trial < 300; ++trial) {
    const ElementSet& b1 = bases[rng() % bases.size()];
    const ElementSet& b2 = bases[rng() % bases.size()];
    for (ElementId x : b1) {
      bool found = false;
      for (ElementId y : b2) {
        found = found || MutuallyExchangeable(m, b1, b2, x, y);
      }
      ASSERT_TRUE(found) << entry.name << " " << b1 << " " << b2 << " " << x;
    }
  }
}

TEST_P(MatroidPropertyTest, AxiomSpotChecks) {
  const CatalogEntry entry = Entry();
  const Matroid& m = *entry.matroid;
  Rng rng(7 * GetParam() + 1);
  const int n = m.NumElements();
  auto random_independent = [&] {
    ElementSet i;
    for (ElementId e = 0; e < n; ++e) {
      if (rng() % 2 && m.IsIndependent(i.With(e))) i = i.With(e);
    }
    return i;
  };
  for (int trial = 0; trial < 1000; ++trial) {
    const ElementSet i = random_independent();
    std::vector<ElementId> sub;
    for (ElementId e : i) {
      if (rng() % 2) sub.push_back(e);
    }
    ASSERT_TRUE(m.IsIndependent(ElementSet(sub)));
  }
  for (int trial = 0; trial < 1000; ++trial) {
    const ElementSet i = random_independent();
    const ElementSet j = random_independent();
    if (j.size() <= i.size()) continue;
    bool augmented = false;
    for (ElementId a : j.Minus(i)) {
      augmented = augmented || m.IsIndependent(i.With(a));
    }
    ASSERT_TRUE(augmented) << i << " " << j;
  }
  for (const ElementSet& b : EnumerateBases(m)) {
    ASSERT_EQ(static_cast<int>(b.size()), m.Rank());
  }
}

INSTANTIATE_TEST_SUITE_P(RandomMatroids, MatroidPropertyTest,
                         ::testing::Range(0, 16));

}  // namespace
}  // namespace equimat
