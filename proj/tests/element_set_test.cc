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

#include "equimat/element_set.h"

#include <sstream>

#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace equimat {
namespace {

using ::testing::ElementsAre;

TEST(ElementSetTest, SortsAndDeduplicates) {
  const ElementSet s(std::vector<ElementId>{5, 1, 3, 1});
  EXPECT_THAT(s.ids(), ElementsAre(1, 3, 5));
  EXPECT_EQ(s.size(), 3);
  EXPECT_TRUE(s.Contains(3));
  EXPECT_FALSE(s.Contains(2));
}

TEST(ElementSetTest, Algebra) {
  const ElementSet a{0, 1, 2, 3};
  const ElementSet b{2, 3, 4};
  EXPECT_EQ(a.Union(b), (ElementSet{0, 1, 2, 3, 4}));
  EXPECT_EQ(a.Intersect(b), (ElementSet{2, 3}));
  EXPECT_EQ(a.Minus(b), (ElementSet{0, 1}));
  EXPECT_EQ(a.SymmetricDifference(b), (ElementSet{0, 1, 4}));
  EXPECT_EQ(a.IntersectionSize(b), 2);
  EXPECT_EQ(a.With(7), (ElementSet{0, 1, 2, 3, 7}));
  EXPECT_EQ(a.Without(0), (ElementSet{1, 2, 3}));
  EXPECT_EQ(a.Without(9), a);
  EXPECT_TRUE((ElementSet{2, 3}).IsSubsetOf(b));
  EXPECT_FALSE(a.IsSubsetOf(b));
  EXPECT_TRUE((ElementSet{0, 1}).IsDisjointFrom(b));
}

TEST(ElementSetTest, MaskRoundTrip) {
  const ElementSet s{1, 4};
  const std::vector<char> mask = s.ToMask(6);
  EXPECT_THAT(mask, ElementsAre(0, 1, 0, 0, 1, 0));
  EXPECT_EQ(ElementSet::FromMask(mask), s);
  EXPECT_EQ(ElementSet::Range(3), (ElementSet{0, 1, 2}));
  EXPECT_TRUE(ElementSet::Range(0).empty());
}

TEST(ElementSetTest, PrintsBraces) {
  std::ostringstream os;
  os << ElementSet{2, 0};
  EXPECT_EQ(os.str(), "{0,2}");
  EXPECT_EQ(ElementSet().ToString(), "{}");
}

TEST(ElementSetTest, OrdersLexicographically) {
  EXPECT_LT((ElementSet{0, 5}), (ElementSet{1, 2}));
  EXPECT_LT((ElementSet{0}), (ElementSet{0, 1}));
}

}  // namespace
}  // namespace equimat
