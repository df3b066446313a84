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

#include "walras/stability.h"

#include <gtest/gtest.h>

#include "oracles.h"
#include "walras/errors.h"
#include "walras/generators.h"
#include "walras/integral.h"

namespace walras {
namespace {

ItemSet Desired(const Market& market, int i) {
  return market.buyer(i).As<SingleMinded>()->desired;
}

TEST(StabilityTest, EmptyAllocationWithProhibitivePricesIsStable) {
  const Market market = GenXosLower(4, Rational(1, 20));
  const Rational high = ProhibitivePrice(market);
  EXPECT_EQ(high, Rational(3));
  const PriceVector p(std::vector<Rational>(4, high));
  const StabilityReport r = VerifyStable(market, Allocation::Empty(4, 2), p);
  EXPECT_TRUE(r.stable);
  EXPECT_EQ(r.max_utilities, (std::vector<Rational>{0, 0}));
}

TEST(StabilityTest, GridAllToLastBuyerIsBlocked) {
  const Market market = GenSingleMindedLower(4);
  std::vector<ItemSet> bundles(4);
  bundles[3] = market.all_items();
  const Allocation x(6, bundles);
  const PriceVector p(std::vector<Rational>(6, 1));
  const StabilityReport r = VerifyStable(market, x, p);
  ASSERT_FALSE(r.stable);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->buyer, 0);
  EXPECT_EQ(r.witness->bundle, Desired(market, 0));
  EXPECT_EQ(r.witness->utility, Rational(2));
  EXPECT_FALSE(oracle::Stable(market, x, p));
  EXPECT_FALSE(PricesForAllocation(market, x).has_value());
}

TEST(StabilityTest, GridSingleWinnerIsStable) {
  const Market market = GenSingleMindedLower(4);
  const ItemSet s1 = Desired(market, 0);
  std::vector<ItemSet> bundles(4);
  bundles[0] = s1;
  const Allocation x(6, bundles);
  PriceVector p(6);
  for (int j = 0; j < 6; ++j) p.Set(j, s1.contains(j) ? Rational(5, 3) : Rational(7));
  EXPECT_TRUE(VerifyStable(market, x, p).stable);
  EXPECT_TRUE(oracle::Stable(market, x, p));
  const auto q = PricesForAllocation(market, x);
  ASSERT_TRUE(q.has_value());
  EXPECT_TRUE(oracle::Stable(market, x, *q));
}

TEST(StabilityTest, EmptyAllocationAlwaysHasPrices) {
  const Market market = GenXosLower(3);
  const auto p = PricesForAllocation(market, Allocation::Empty(3, 2));
  ASSERT_TRUE(p.has_value());
  EXPECT_TRUE(oracle::Stable(market, Allocation::Empty(3, 2), *p));
}

TEST(StabilityTest, XosRestrictionsBySize) {
  const Market market = GenXosLower(5, Rational(1, 100));
  ForEachSubset(market.all_items(), [&](ItemSet s) {
    EXPECT_EQ(StableExistsOn(market, s), s.size() <= 2) << s.ToString();
  });
}

TEST(StabilityTest, ExtractOnEmptyRestriction) {
  const Market market = GenXosLower(3);
  const ExtractedOutcome ex = ExtractStableOutcome(market, ItemSet());
  EXPECT_EQ(ex.outcome.allocation.sold(), ItemSet());
  for (int j = 0; j < 3; ++j) EXPECT_EQ(ex.outcome.prices[j], ProhibitivePrice(market));
}

TEST(StabilityTest, ExtractRefusesGapAboveOne) {
  const Market market = GenXosLower(5, Rational(1, 100));
  EXPECT_THROW(ExtractStableOutcome(market, market.all_items()), PreconditionError);
}

TEST(StabilityTest, ExtractedOutcomesAreStable) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    RandomMarketParams params;
    params.seed = seed;
    params.n = 2;
    params.m = 4;
    params.mix = seed % 2 ? RandomClass::kAdditive : RandomClass::kUnitDemand;
    const Market market = GenRandomMarket(params);
    const ExtractedOutcome ex = ExtractStableOutcome(market, market.all_items());
    EXPECT_TRUE(oracle::Stable(market, ex.outcome.allocation, ex.outcome.prices)) << seed;
    EXPECT_EQ(ex.welfare, oracle::BestWelfare(market, market.all_items()));
  }
}

TEST(StabilityTest, BestStableExamples) {
  const Market xos = GenXosLower(5, Rational(1, 100));
  EXPECT_EQ(BestStableOutcome(xos).welfare, Rational(149, 100));
  const Market grid = GenSingleMindedLower(4);
  const BestStable best = BestStableOutcome(grid);
  EXPECT_EQ(best.welfare, Rational(5));
  EXPECT_TRUE(oracle::Stable(grid, best.outcome.outcome.allocation, best.outcome.outcome.prices));
  EXPECT_EQ(*StabilityRatio(grid), Rational(6, 5));
  EXPECT_EQ(*StabilityRatio(GenSingleMindedLower(5)), Rational(10, 6));
  const Market one(3, {MakeXos(3, {{1, 2, 0}, {0, 1, 4}})});
  EXPECT_EQ(BestStableOutcome(one).welfare, Rational(5));
  const Market additive(2, {MakeAdditive({1, 3}), MakeAdditive({2, 1})});
  EXPECT_EQ(*StabilityRatio(additive), Rational(1));
}

TEST(StabilityTest, BestStableMatchesExhaustiveSearch) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    RandomMarketParams params;
    params.seed = seed;
    params.n = 2;
    params.m = 3;
    const Market market = GenRandomMarket(params);
    // Oracle: best welfare over every allocation that has supporting prices.
    Rational best;
    ForEachAllocation(market, market.all_items(), [&](const Allocation& x) {
      const Rational w = Welfare(market, x);
      if (w > best && PricesForAllocation(market, x)) best = w;
    });
    EXPECT_EQ(BestStableOutcome(market).welfare, best) << seed;
  }
}

TEST(StabilityTest, RaisingUnsoldPricesKeepsStability) {
  const Market market = GenXosLower(5, Rational(1, 100));
  const BestStable best = BestStableOutcome(market);
  PriceVector p = best.outcome.outcome.prices;
  const ItemSet unsold = best.outcome.outcome.allocation.unsold();
  unsold.ForEach([&](int j) { p.Set(j, p[j] + 10); });
  EXPECT_TRUE(VerifyStable(market, best.outcome.outcome.allocation, p).stable);
}

TEST(StabilityTest, ZeroBuyerDoesNotChangeBestStable) {
  const Market base = GenXosLower(4, Rational(1, 20));
  std::vector<Valuation> buyers = base.buyers();
  buyers.push_back(MakeAdditive({0, 0, 0, 0}));
  const Market extended(4, buyers);
  EXPECT_EQ(BestStableOutcome(extended).welfare, BestStableOutcome(base).welfare);
}

}  // namespace
}  // namespace walras
