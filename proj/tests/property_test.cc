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

// Randomized invariants checked against the naive oracles.
#include <gtest/gtest.h>

#include "oracles.h"
#include "walras/budget_additive.h"
#include "walras/config_lp.h"
#include "walras/generators.h"
#include "walras/integral.h"
#include "walras/single_minded.h"
#include "walras/stability.h"

namespace walras {
namespace {

Market Random(std::uint64_t seed, int n, int m, RandomClass cls = RandomClass::kMixed) {
  RandomMarketParams params;
  params.seed = seed;
  params.n = n;
  params.m = m;
  params.mix = cls;
  return GenRandomMarket(params);
}

TEST(PropertyTest, VerifyStableAgreesWithOracle) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const Market market = Random(seed, 2, 3);
    const IntegralOptimum opt = IntegralOpt(market, market.all_items());
    std::vector<Rational> prices;
    for (int j = 0; j < 3; ++j) prices.push_back(Rational(static_cast<std::int64_t>((seed >> j) % 5), 2));
    const PriceVector p(prices);
    EXPECT_EQ(VerifyStable(market, opt.allocation, p).stable,
              oracle::Stable(market, opt.allocation, p))
        << seed;
  }
}

TEST(PropertyTest, StableWelfareIsLPOptimalOnSoldSet) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Market market = Random(seed, 2, 4);
    ForEachAllocation(market, market.all_items(), [&](const Allocation& x) {
      const auto p = PricesForAllocation(market, x);
      if (!p) return;
      ASSERT_TRUE(oracle::Stable(market, x, *p)) << seed;
      const Rational w = Welfare(market, x);
      EXPECT_LE(w, oracle::BestWelfare(market, market.all_items()));
      EXPECT_EQ(w, SolveFractional(market, x.sold()).optimal_value) << seed;
    });
  }
}

TEST(PropertyTest, GapOneIffSomeFullSaleOptimumHasPrices) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Market market = Random(seed, 1 + static_cast<int>(seed % 3), 3);
    ForEachSubset(market.all_items(), [&](ItemSet s) {
      const Rational frac = SolveFractional(market, s).optimal_value;
      bool oracle_stable = false;
      ForEachAllocation(market, s, [&](const Allocation& x) {
        if (x.sold() == s && Welfare(market, x) == frac && PricesForAllocation(market, x)) {
          oracle_stable = true;
        }
      });
      EXPECT_EQ(StableExistsOn(market, s), oracle_stable) << seed << " " << s.ToString();
    });
  }
}

TEST(PropertyTest, GrossSubstitutesAlwaysHaveGapOne) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    for (RandomClass cls : {RandomClass::kAdditive, RandomClass::kUnitDemand}) {
      const Market market = Random(seed, 3, 4, cls);
      EXPECT_EQ(IntegralityGap(market, market.all_items()), Rational(1)) << seed;
    }
  }
}

TEST(PropertyTest, BudgetAdditiveFourApproximation) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const Market market = Random(seed, 2, 1 + static_cast<int>(seed % 6), RandomClass::kBudgetAdditive);
    const BudgetAdditiveResult r = BudgetAdditiveApprox(market);
    EXPECT_TRUE(oracle::Stable(market, r.allocation, r.prices)) << seed;
    const Rational opt = oracle::BestWelfare(market, market.all_items());
    EXPECT_GE(Rational(4) * r.welfare, opt) << seed;
    EXPECT_LE(opt, r.opt_upper) << seed;
  }
}

TEST(PropertyTest, GreedySingleMindedZeroUtility) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Market market = Random(seed, 5, 6, RandomClass::kSingleMinded);
    const GreedyStableResult r = SingleMindedGreedyStable(market);
    EXPECT_TRUE(oracle::Stable(market, r.outcome.allocation, r.outcome.prices)) << seed;
    for (const Valuation& v : market.buyers()) {
      EXPECT_EQ(oracle::MaxUtility(v, r.outcome.prices, market.all_items()), Rational(0));
    }
  }
}

}  // namespace
}  // namespace walras
