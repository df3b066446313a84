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

#include "walras/integral.h"

#include <gtest/gtest.h>

#include "oracles.h"
#include "walras/errors.h"
#include "walras/generators.h"

namespace walras {
namespace {

TEST(IntegralTest, XosInstanceOptima) {
  const Market five = GenXosLower(5, Rational(1, 100));
  const IntegralOptimum opt = IntegralOpt(five, five.all_items());
  EXPECT_EQ(opt.welfare, Rational(5, 2));
  EXPECT_EQ(opt.allocation.bundle(1), five.all_items());
  const Market two = GenXosLower(2, Rational(1, 100));
  EXPECT_EQ(IntegralOpt(two, two.all_items()).welfare, Rational(3, 2) - Rational(1, 100));
}

TEST(IntegralTest, GridInstanceOptimum) {
  const Market market = GenSingleMindedLower(4);
  const IntegralOptimum opt = IntegralOpt(market, market.all_items());
  EXPECT_EQ(opt.welfare, Rational(6));
  EXPECT_EQ(opt.allocation.bundle(3), market.all_items());
}

TEST(IntegralTest, MatchesNaiveEnumeration) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    RandomMarketParams params;
    params.seed = seed;
    params.n = 1 + static_cast<int>(seed % 3);
    params.m = 1 + static_cast<int>(seed % 5);
    const Market market = GenRandomMarket(params);
    for (ItemSet s : {market.all_items(), ItemSet::FromIndices({0})}) {
      const IntegralOptimum opt = IntegralOpt(market, s);
      EXPECT_EQ(opt.welfare, oracle::BestWelfare(market, s)) << seed;
      EXPECT_EQ(Welfare(market, opt.allocation), opt.welfare);
      EXPECT_TRUE(opt.allocation.sold().IsSubsetOf(s));
    }
  }
}

TEST(IntegralTest, SingleMindedSearchMatchesNaive) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    RandomMarketParams params;
    params.seed = seed;
    params.n = 4;
    params.m = 5;
    params.mix = RandomClass::kSingleMinded;
    const Market market = GenRandomMarket(params);
    EXPECT_EQ(IntegralOpt(market, market.all_items()).welfare,
              oracle::BestWelfare(market, market.all_items()))
        << seed;
  }
}

TEST(IntegralTest, GapExamples) {
  const Market xos = GenXosLower(5, Rational(1, 100));
  EXPECT_GE(IntegralityGap(xos, xos.all_items()), Rational(523, 500));
  const Market grid = GenSingleMindedLower(4);
  EXPECT_GT(IntegralityGap(grid, grid.all_items()), Rational(1));
  const Market ud(3, {MakeUnitDemand({1, 2, 3}), MakeUnitDemand({3, 2, 1})});
  EXPECT_EQ(IntegralityGap(ud, ud.all_items()), Rational(1));
  const Market zero(2, {MakeAdditive({0, 0})});
  EXPECT_EQ(IntegralityGap(zero, zero.all_items()), Rational(1));
  EXPECT_EQ(IntegralityGap(xos, ItemSet()), Rational(1));
}

TEST(IntegralTest, AllocationWalkCountsAndCap) {
  const Market market(3, {MakeAdditive({1, 1, 1}), MakeAdditive({1, 1, 1})});
  int count = 0;
  ForEachAllocation(market, ItemSet::Full(3), [&](const Allocation&) { ++count; });
  EXPECT_EQ(count, 27);
  Caps caps;
  caps.brute_force_nodes = 10;
  EXPECT_THROW(ForEachAllocation(market, ItemSet::Full(3), [](const Allocation&) {}, caps),
               CapExceeded);
  EXPECT_THROW(IntegralOpt(market, ItemSet::Full(3), caps), CapExceeded);
}

}  // namespace
}  // namespace walras
