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

#include "walras/config_lp.h"

#include <gtest/gtest.h>

#include "oracles.h"
#include "walras/errors.h"
#include "walras/generators.h"

namespace walras {
namespace {

// LP optimality certificate computed without trusting the solver: primal
// feasibility, dual feasibility by naive enumeration, equal objectives.
void ExpectOptimal(const Market& market, const LPSolution& sol) {
  ASSERT_EQ(sol.status, LPStatus::kOptimal);
  EXPECT_TRUE(IsConfigFeasible(market, sol.restriction, sol.primal));
  EXPECT_EQ(FractionalWelfare(market, sol.primal), sol.optimal_value);
  Rational dual;
  for (const Rational& u : sol.buyer_duals) dual += u;
  for (const Rational& p : sol.item_duals) {
    EXPECT_GE(p, Rational(0));
    dual += p;
  }
  EXPECT_EQ(dual, sol.optimal_value);
  const PriceVector prices(sol.item_duals);
  for (int i = 0; i < market.num_buyers(); ++i) {
    EXPECT_LE(oracle::MaxUtility(market.buyer(i), prices, sol.restriction),
              sol.buyer_duals[static_cast<std::size_t>(i)]);
  }
}

TEST(ConfigLPTest, ColumnCounts) {
  const Market market(2, {MakeAdditive({1, 2}), MakeUnitDemand({2, 1})});
  EXPECT_EQ(BuildConfigLP(market, ItemSet::Full(2)).columns().size(), 6U);
  const ConfigLP empty = BuildConfigLP(market, ItemSet());
  EXPECT_TRUE(empty.columns().empty());
  EXPECT_EQ(SolveExact(empty).optimal_value, Rational(0));
}

TEST(ConfigLPTest, SingleMindedColumnsArePruned) {
  const Market market = GenSingleMindedLower(4);
  const ConfigLP lp = BuildConfigLP(market, market.all_items());
  ASSERT_EQ(lp.columns().size(), 4U);
  for (const ConfigColumn& c : lp.columns()) {
    EXPECT_EQ(c.bundle, market.buyer(c.buyer).As<SingleMinded>()->desired);
  }
  // Restricting away one item keeps exactly the buyers whose set survives.
  const ItemSet restriction = market.all_items() - ItemSet::Singleton(0);
  std::size_t surviving = 0;
  for (const Valuation& v : market.buyers()) {
    surviving += v.As<SingleMinded>()->desired.IsSubsetOf(restriction) ? 1 : 0;
  }
  EXPECT_EQ(BuildConfigLP(market, restriction).columns().size(), surviving);
}

TEST(ConfigLPTest, AdditiveOptimumIsPerItemMaximum) {
  const Market market(3, {MakeAdditive({1, 5, 2}), MakeAdditive({3, 1, 2}),
                          MakeAdditive({0, 0, Rational(5, 2)})});
  const ItemSet restriction = ItemSet::FromIndices({0, 2});
  const LPSolution sol = SolveExact(BuildConfigLP(market, restriction));
  EXPECT_EQ(sol.optimal_value, Rational(11, 2));
  ExpectOptimal(market, sol);
}

TEST(ConfigLPTest, XosInstanceBeatsExplicitCertificate) {
  const Market market = GenXosLower(5, Rational(1, 100));
  const LPSolution sol = SolveExact(BuildConfigLP(market, market.all_items()));
  EXPECT_GE(sol.optimal_value, Rational(523, 200));
  ExpectOptimal(market, sol);
}

TEST(ConfigLPTest, ColumnGenerationMatchesExact) {
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    RandomMarketParams params;
    params.seed = seed;
    params.n = 3;
    params.m = 6;
    const Market market = GenRandomMarket(params);
    for (ItemSet s : {market.all_items(), ItemSet::FromIndices({0, 2, 3, 5})}) {
      const LPSolution exact = SolveExact(BuildConfigLP(market, s));
      const LPSolution cg = SolveColumnGeneration(market, s);
      EXPECT_EQ(exact.optimal_value, cg.optimal_value) << seed;
      ExpectOptimal(market, exact);
      ExpectOptimal(market, cg);
    }
  }
}

TEST(ConfigLPTest, ColumnGenerationAvoidsFullBuildOnSixteenItems) {
  const Market market = GenSubmodularLower(4);
  const LPSolution cg = SolveColumnGeneration(market, market.all_items());
  EXPECT_LT(cg.columns, 2 * 65535);
  EXPECT_TRUE(IsConfigFeasible(market, market.all_items(), cg.primal));
  EXPECT_EQ(FractionalWelfare(market, cg.primal), cg.optimal_value);
  Rational dual;
  for (const Rational& u : cg.buyer_duals) dual += u;
  for (const Rational& p : cg.item_duals) dual += p;
  EXPECT_EQ(dual, cg.optimal_value);
}

TEST(ConfigLPTest, FullBuildRespectsColumnCap) {
  Caps caps;
  caps.lp_column_items = 3;
  const Market market(4, {MakeAdditive({1, 1, 1, 1})});
  EXPECT_THROW(BuildConfigLP(market, ItemSet::Full(4), caps), CapExceeded);
  EXPECT_EQ(SolveFractional(market, ItemSet::Full(4), caps).optimal_value, Rational(4));
}

TEST(ConfigLPTest, FeasibilityCheckerRejectsOverlap) {
  const Market market(2, {MakeAdditive({1, 1}), MakeAdditive({1, 1})});
  const ItemSet all = ItemSet::Full(2);
  EXPECT_FALSE(IsConfigFeasible(market, all, {{0, all, 1}, {1, ItemSet::Singleton(0), Rational(1, 2)}}));
  EXPECT_TRUE(IsConfigFeasible(market, all, {{0, all, Rational(1, 2)}, {1, all, Rational(1, 2)}}));
  EXPECT_FALSE(IsConfigFeasible(market, ItemSet::Singleton(0), {{0, all, Rational(1, 2)}}));
  EXPECT_FALSE(IsConfigFeasible(market, all, {{0, all, Rational(-1, 2)}}));
}

}  // namespace
}  // namespace walras
