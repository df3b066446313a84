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

#include "walras/demand.h"

#include <gtest/gtest.h>

#include "oracles.h"
#include "walras/errors.h"
#include "walras/generators.h"

namespace walras {
namespace {

TEST(DemandTest, UtilityExamples) {
  const Valuation ud = MakeUnitDemand(std::vector<Rational>(5, Rational(49, 100)));
  const PriceVector p(std::vector<Rational>(5, Rational(1, 8)));
  EXPECT_EQ(Utility(ud, ItemSet::Singleton(0), p), Rational(73, 200));
  EXPECT_EQ(Utility(ud, ItemSet(), p), Rational(0));
  const Valuation add = MakeAdditive({1, 1});
  EXPECT_EQ(Utility(add, ItemSet::Full(2), PriceVector({1, 1})), Rational(0));
}

TEST(DemandTest, UnitDemandDemandsEverySingleton) {
  const Valuation ud = MakeUnitDemand(std::vector<Rational>(5, Rational(49, 100)));
  const Demand d = ComputeDemand(ud, PriceVector(std::vector<Rational>(5, Rational(1, 8))));
  EXPECT_EQ(d.max_utility, Rational(73, 200));
  ASSERT_EQ(d.sets.size(), 5U);
  for (int j = 0; j < 5; ++j) EXPECT_EQ(d.sets[static_cast<std::size_t>(j)], ItemSet::Singleton(j));
}

TEST(DemandTest, ZeroPricesDemandEverything) {
  const Valuation v = MakeSymmetric({0, 1, 1, Rational(3, 2)});
  const Demand d = ComputeDemand(v, PriceVector(3));
  EXPECT_EQ(d.max_utility, Rational(3, 2));
  EXPECT_EQ(d.sets.back(), ItemSet::Full(3));
}

TEST(DemandTest, ProhibitivePricesDemandOnlyEmpty) {
  const Valuation v = MakeXos(3, {{1, 2, 3}, {3, 0, 1}});
  const Rational high = v.Value(ItemSet::Full(3)) + 1;
  const Demand d = ComputeDemand(v, PriceVector(std::vector<Rational>(3, high)));
  EXPECT_EQ(d.max_utility, Rational(0));
  EXPECT_EQ(d.sets, std::vector<ItemSet>{ItemSet()});
}

TEST(DemandTest, BestResponseMatchesNaiveEnumeration) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    RandomMarketParams params;
    params.seed = seed;
    params.n = 2;
    params.m = 5;
    const Market market = GenRandomMarket(params);
    const PriceVector p({Rational(1, 2), 1, 2, Rational(3, 2), 0});
    for (const Valuation& v : market.buyers()) {
      for (ItemSet within : {ItemSet::Full(5), ItemSet::FromIndices({1, 3, 4})}) {
        const BestResponse br = ComputeBestResponse(v, p, within);
        EXPECT_EQ(br.utility, oracle::MaxUtility(v, p, within)) << seed;
        EXPECT_TRUE(br.bundle.IsSubsetOf(within));
        EXPECT_EQ(Utility(v, br.bundle, p), br.utility);
        const BestResponse tb = ComputeBestResponse(ValueTable(v), p, within);
        EXPECT_EQ(tb.utility, br.utility);
        EXPECT_EQ(tb.bundle, br.bundle);
      }
    }
  }
}

TEST(DemandTest, ClosedFormsAboveTheCap) {
  Caps caps;
  caps.demand_items = 3;
  const PriceVector p({1, 2, 3, 4, 5, 6});
  const Valuation add = MakeAdditive({2, 1, 4, 4, 0, 7});
  EXPECT_EQ(ComputeBestResponse(add, p, caps).utility, Rational(3));
  const Valuation ud = MakeUnitDemand({2, 1, 4, 4, 0, 7});
  EXPECT_EQ(ComputeBestResponse(ud, p, caps).utility, Rational(1));
  const Valuation sm = MakeSingleMinded(6, ItemSet::FromIndices({0, 1}), 5);
  const BestResponse br = ComputeBestResponse(sm, p, caps);
  EXPECT_EQ(br.utility, Rational(2));
  EXPECT_EQ(br.bundle, ItemSet::FromIndices({0, 1}));
  EXPECT_THROW(ComputeBestResponse(MakeXos(6, {{1, 1, 1, 1, 1, 1}}), p, caps),
               CapExceeded);
  EXPECT_THROW(ComputeDemand(add, p, caps), CapExceeded);
}

}  // namespace
}  // namespace walras
