// Copyright 2026 The Walras Authors
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

#include "walras/item_set.h"

#include <gtest/gtest.h>

#include <vector>

namespace walras {
namespace {

TEST(ItemSetTest, BasicAlgebra) {
  const ItemSet a = ItemSet::FromIndices({0, 2, 5});
  const ItemSet b = ItemSet::FromIndices({2, 3});
  EXPECT_EQ(a.size(), 3);
  EXPECT_EQ((a | b), ItemSet::FromIndices({0, 2, 3, 5}));
  EXPECT_EQ((a & b), ItemSet::Singleton(2));
  EXPECT_EQ((a - b), ItemSet::FromIndices({0, 5}));
  EXPECT_TRUE(ItemSet::Singleton(5).IsSubsetOf(a));
  EXPECT_FALSE(b.IsSubsetOf(a));
  EXPECT_EQ(a.First(), 0);
  EXPECT_EQ(a.ToString(), "{0,2,5}");
  EXPECT_EQ(ItemSet().ToString(), "{}");
  EXPECT_EQ(a.Complement(6), ItemSet::FromIndices({1, 3, 4}));
}

TEST(ItemSetTest, FullHandlesSixtyFourItems) {
  EXPECT_EQ(ItemSet::Full(64).size(), 64);
  EXPECT_EQ(ItemSet::Full(0), ItemSet());
}

TEST(ItemSetTest, SubsetsInAscendingMaskOrder) {
  std::vector<std::uint64_t> seen;
  ForEachSubset(ItemSet::FromIndices({1, 3}),
                [&](ItemSet s) { seen.push_back(s.bits()); });
  EXPECT_EQ(seen, (std::vector<std::uint64_t>{0, 2, 8, 10}));
}

TEST(ItemSetTest, SubsetWalkStopsEarly) {
  int calls = 0;
  ForEachSubset(ItemSet::Full(4), [&](ItemSet) { return ++calls < 3; });
  EXPECT_EQ(calls, 3);
}

}  // namespace
}  // namespace walras
