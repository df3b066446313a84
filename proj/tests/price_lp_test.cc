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

#include "walras/price_lp.h"

#include <gtest/gtest.h>

namespace walras {
namespace {

TEST(PriceLPTest, CoveringConstraintsAtMinimumTotal) {
  // p0 + p1 >= 3, p1 + p2 >= 3, p0 + p2 >= 3: optimum 3/2 each.
  const std::vector<PriceConstraint> c = {
      {ItemSet::FromIndices({0, 1}), {}, 3},
      {ItemSet::FromIndices({1, 2}), {}, 3},
      {ItemSet::FromIndices({0, 2}), {}, 3},
  };
  const auto p = MinimumPrices(3, c);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->Total(ItemSet::Full(3)), Rational(9, 2));
  for (const PriceConstraint& k : c) EXPECT_GE(p->Total(k.plus), k.rhs);
}

TEST(PriceLPTest, DetectsInfeasibility) {
  // p0 - p1 >= 1 and p1 - p0 >= 1 cannot both hold.
  EXPECT_FALSE(MinimumPrices(2, {{ItemSet::Singleton(0), ItemSet::Singleton(1), 1},
                                 {ItemSet::Singleton(1), ItemSet::Singleton(0), 1}})
                   .has_value());
  // 0 >= 1.
  EXPECT_FALSE(MinimumPrices(1, {{ItemSet(), ItemSet(), 1}}).has_value());
}

TEST(PriceLPTest, NoConstraintsGivesZeroPrices) {
  const auto p = MinimumPrices(3, {});
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(*p, PriceVector(3));
}

TEST(PriceLPTest, DifferenceConstraints) {
  // p0 >= 2, p1 - p0 >= 1  => p = (2, 3).
  const auto p = MinimumPrices(2, {{ItemSet::Singleton(0), {}, 2},
                                   {ItemSet::Singleton(1), ItemSet::Singleton(0), 1}});
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->values(), (std::vector<Rational>{2, 3}));
}

}  // namespace
}  // namespace walras
