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

#include "equimat/oracle_verify.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <memory>
#include <set>
#include <vector>

#include "equimat/catalog.h"
#include "equimat/errors.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace equimat {
namespace {

using ::testing::Each;
using ::testing::Optional;
using ::testing::SizeIs;

Valuation Ints(std::vector<int> values) {
  std::vector<Rational> q;
  for (int x : values) q.emplace_back(x);
  return Valuation(std::move(q));
}

TEST(EnumerateBasesTest, Counts) {
  // Cayley: 4^2 spanning trees of K4.
  EXPECT_THAT(EnumerateBases(*CompleteGraphK4()), SizeIs(16));
  EXPECT_THAT(EnumerateBases(UniformMatroid(6, 3)), SizeIs(20));
}

TEST(EnumerateBasesTest, LoopIsInNoBasis) {
  const GraphicMatroid g(3, {{0, 1}, {1, 1}, {1, 2}, {0, 2}});
  const auto bases = EnumerateBases(g);
  EXPECT_THAT(bases, SizeIs(3));
  for (const ElementSet& b : bases) {
    EXPECT_FALSE(b.Contains(1));
    EXPECT_TRUE(g.IsBasis(b));
  }
  EXPECT_TRUE(std::is_sorted(bases.begin(), bases.end()));
}

TEST(EnumerateKBasisPartitionsTest, UniformFourTwo) {
  const auto parts = EnumerateKBasisPartitions(UniformMatroid(4, 2), 2);
  ASSERT_THAT(parts, SizeIs(3));
  for (const BasisPartition& p : parts) {
    EXPECT_TRUE(p.parts[0].Contains(0));  // canonical: 0 in the first part
  }
}

TEST(EnumerateKBasisPartitionsTest, K4) {
  const auto k4 = CompleteGraphK4();
  const auto parts = EnumerateKBasisPartitions(*k4, 2);
  // Each of the 16 trees has a complementary tree in 12 cases, and each
  // unordered pair is listed once.
  EXPECT_THAT(parts, SizeIs(6));
  std::set<std::vector<ElementSet>> distinct;
  for (const BasisPartition& p : parts) {
    EXPECT_TRUE(IsBasisPartition(*k4, p));
    distinct.insert(p.parts);
  }
  EXPECT_EQ(distinct.size(), parts.size());
  EXPECT_EQ(EnumerateKBasisPartitions(*k4, 2).size(), parts.size());
}

TEST(EnumerateKBasisPartitionsTest, InfeasibleIsEmpty) {
  EXPECT_TRUE(EnumerateKBasisPartitions(UniformMatroid(5, 2), 2).empty());
  const GraphicMatroid g(4, {{0, 1}, {1, 2}, {0, 2}, {0, 1}, {1, 2}, {2, 3}});
  EXPECT_TRUE(EnumerateKBasisPartitions(g, 2).empty());
  EXPECT_THROW(EnumerateKBasisPartitions(g, 0), PreconditionError);
}

TEST(EnumerateKBasisPartitionsTest, RankZero) {
  const auto parts = EnumerateKBasisPartitions(UniformMatroid(0, 0), 3);
  ASSERT_THAT(parts, SizeIs(1));
  EXPECT_THAT(parts[0].parts, Each(ElementSet{}));
}

TEST(EnumerationBudgetTest, LargeGroundSet) {
  const UniformMatroid u(14, 7);
  EXPECT_THROW(EnumerateBases(u), BudgetExceededError);
  EXPECT_THROW(EnumerateKBasisPartitions(u, 2), BudgetExceededError);
  EXPECT_THAT(EnumerateBases(u, {.max_elements = 14}), SizeIs(3432));
  EXPECT_THROW(EnumerateKBasisPartitions(
                   u, 2, {.max_elements = 14, .max_partitions = 100}),
               BudgetExceededError);
}

TEST(BruteEquitableTest, Examples) {
  const auto k4 = CompleteGraphK4();
  EXPECT_TRUE(BruteEquitable(*k4, 2, {0, 5}));
  EXPECT_TRUE(BruteEquitable(*k4, 2, {}));
  EXPECT_TRUE(BruteEquitable(*k4, 2, {0, 1, 2, 3, 4, 5}));
  // Two parallel edges in a partition matroid block of capacity one must
  // always be split.
  const PartitionMatroid p({{0, 1}, {2, 3}}, {1, 1});
  EXPECT_TRUE(BruteEquitable(p, 2, {0, 1}));
  EXPECT_TRUE(BruteEquitable(p, 2, {0, 2}));
}

TEST(BruteExchangeableTest, UniformSingleton) {
  const UniformMatroid u(6, 3);
  const auto x = BruteExchangeable(u, {0, 1, 2}, {3, 4, 5}, {3});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(x->elements, (ElementSet{0, 3}));
  EXPECT_THAT(x->pivot, Optional(0));
}

TEST(BruteExchangeableTest, ResultsAreExchanges) {
  Rng rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const CatalogEntry e = RandomEntry(rng, 2, 10);
    const auto all = EnumerateKBasisPartitions(*e.matroid, 2);
    ASSERT_FALSE(all.empty());
    const BasisPartition& p = all[rng() % all.size()];
    const ElementSet s = RandomSubset(rng, e.matroid->NumElements());
    if (p.parts[0].IntersectionSize(s) >= p.parts[1].IntersectionSize(s)) {
      continue;
    }
    const auto x = BruteExchangeable(*e.matroid, p.parts[0], p.parts[1], s);
    ASSERT_TRUE(x.has_value()) << e.name;
    EXPECT_TRUE(
        e.matroid->IsBasis(p.parts[0].SymmetricDifference(x->elements)));
    EXPECT_TRUE(
        e.matroid->IsBasis(p.parts[1].SymmetricDifference(x->elements)));
    EXPECT_TRUE(x->elements.Without(*x->pivot).IsSubsetOf(s));
    EXPECT_FALSE(s.Contains(*x->pivot));
  }
}

TEST(BruteExchangeableTest, RejectsNonBases) {
  const UniformMatroid u(6, 3);
  EXPECT_THROW(BruteExchangeable(u, {0, 1}, {3, 4, 5}, {3}), PreconditionError);
}

TEST(BruteMmsTest, Examples) {
  const auto k4 = CompleteGraphK4();
  const FairDivisionInstance inst{
      k4, {Ints({1, 1, 0, 0, 0, 1}), Ints({1, 1, 1, 1, 1, 1})}};
  EXPECT_EQ(BruteMms(inst, 0), Rational(1));
  EXPECT_EQ(BruteMms(inst, 1), Rational(3));
  EXPECT_THROW(BruteMms(inst, 2), PreconditionError);

  const FairDivisionInstance bad{
      std::make_shared<UniformMatroid>(5, 2),
      {Ints({1, 1, 1, 1, 1}), Ints({1, 1, 1, 1, 1})}};
  EXPECT_THROW(BruteMms(bad, 0), InfeasibleError);
}

TEST(BruteEf1ExistsTest, Examples) {
  const auto single = std::make_shared<UniformMatroid>(3, 3);
  EXPECT_TRUE(BruteEf1Exists({single, {Ints({5, 0, 1})}}));
  const FairDivisionInstance binary{
      std::make_shared<UniformMatroid>(6, 3),
      {Ints({1, 1, 1, 0, 0, 0}), Ints({1, 1, 1, 0, 0, 0})}};
  EXPECT_TRUE(BruteEf1Exists(binary));
}

TEST(BruteEf1ExistsTest, NoFeasibleAllocation) {
  const FairDivisionInstance bad{
      std::make_shared<UniformMatroid>(5, 2),
      {Ints({1, 1, 1, 1, 1}), Ints({1, 1, 1, 1, 1})}};
  EXPECT_FALSE(BruteEf1Exists(bad));
}

TEST(MatchingExchangeTest, K4BasisPairs) {
  const auto k4 = CompleteGraphK4();
  const auto bases = EnumerateBases(*k4);
  for (const ElementSet& a : bases) {
    for (const ElementSet& b : bases) {
      EXPECT_TRUE(MatchingExchangeCheck(*k4, a, b))
          << a.ToString() << " " << b.ToString();
    }
    EXPECT_TRUE(MatchingExchangeCheck(*k4, a, a));
    EXPECT_EQ(CountExchangeMatchings(*k4, a, a), 1);
  }
}

// A unique perfect matching in D(I)[I Δ J] forces J to be independent;
// exhaust every equal-size pair on small catalog matroids.
TEST(MatchingExchangeTest, UniqueMatchingImpliesIndependent) {
  Rng rng(12);
  std::vector<CatalogEntry> entries = UniformCatalog(4);
  for (int i = 0; i < 10; ++i) entries.push_back(RandomEntry(rng, 2, 8));
  entries.push_back({"k4", CompleteGraphK4(), 2});
  int unique = 0;
  for (const CatalogEntry& e : entries) {
    const Matroid& m = *e.matroid;
    const int n = m.NumElements();
    for (std::uint32_t a = 0; a < (1u << n); ++a) {
      std::vector<ElementId> ia;
      for (int x = 0; x < n; ++x) {
        if (a >> x & 1) ia.push_back(x);
      }
      const ElementSet i(ia);
      if (!m.IsIndependent(i)) continue;
      for (std::uint32_t b = 0; b < (1u << n); ++b) {
        if (std::popcount(a) != std::popcount(b)) continue;
        std::vector<ElementId> jb;
        for (int x = 0; x < n; ++x) {
          if (b >> x & 1) jb.push_back(x);
        }
        const ElementSet j(jb);
        if (CountExchangeMatchings(m, i, j) == 1) {
          ++unique;
          EXPECT_TRUE(m.IsIndependent(j))
              << e.name << " " << i.ToString() << " " << j.ToString();
        }
        if (m.IsIndependent(j)) {
          EXPECT_TRUE(MatchingExchangeCheck(m, i, j));
        }
      }
    }
  }
  EXPECT_GT(unique, 0);
}

TEST(MatchingExchangeTest, Preconditions) {
  const auto k4 = CompleteGraphK4();
  EXPECT_THROW(MatchingExchangeCheck(*k4, {0, 1}, {2}), PreconditionError);
  EXPECT_THROW(MatchingExchangeCheck(*k4, {0, 1, 3}, {2, 4, 5}),
               PreconditionError);
}

}  // namespace
}  // namespace equimat
