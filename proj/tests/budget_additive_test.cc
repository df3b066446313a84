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

#include "walras/budget_additive.h"

#include <gtest/gtest.h>

#include "oracles.h"
#include "walras/errors.h"

namespace walras {
namespace {

TEST(BudgetAdditiveTest, CaseOneExample) {
  const Market market(2, {MakeBudgetAdditive({3, 3}, 4), MakeBudgetAdditive({1, 1}, 4)});
  const BudgetAdditiveResult r = BudgetAdditiveApprox(market);
  EXPECT_EQ(r.case_tag, 1);
  EXPECT_EQ(r.prices.values(), (std::vector<Rational>{3, 3}));
  EXPECT_EQ(r.s1, ItemSet::Singleton(0));
  EXPECT_EQ(r.d2, ItemSet());
  EXPECT_EQ(r.allocation.bundle(0), ItemSet::Singleton(0));
  EXPECT_EQ(r.allocation.bundle(1), ItemSet());
  EXPECT_EQ(r.welfare, Rational(3));
  EXPECT_EQ(oracle::BestWelfare(market, market.all_items()), Rational(4));
  EXPECT_TRUE(oracle::Stable(market, r.allocation, r.prices));
}

TEST(BudgetAdditiveTest, CaseTwoExample) {
  const Market market(2, {MakeBudgetAdditive({4, 1}, 10), MakeBudgetAdditive({2, 3}, 5)});
  const BudgetAdditiveResult r = BudgetAdditiveApprox(market);
  EXPECT_EQ(r.case_tag, 2);
  EXPECT_EQ(r.s1, ItemSet::Singleton(0));
  EXPECT_EQ(r.prices.values(), (std::vector<Rational>{2, 1}));
  EXPECT_EQ(r.d2, ItemSet::Singleton(1));
  EXPECT_EQ(r.allocation.bundle(0), ItemSet::Singleton(0));
  EXPECT_EQ(r.allocation.bundle(1), ItemSet::Singleton(1));
  EXPECT_EQ(r.welfare, Rational(7));
  EXPECT_EQ(oracle::BestWelfare(market, market.all_items()), Rational(7));
  EXPECT_TRUE(oracle::Stable(market, r.allocation, r.prices));
}

TEST(BudgetAdditiveTest, HigherBudgetBuyerIsRelabeled) {
  // Same instance as the case-two example with the buyers swapped.
  const Market market(2, {MakeBudgetAdditive({2, 3}, 5), MakeBudgetAdditive({4, 1}, 10)});
  const BudgetAdditiveResult r = BudgetAdditiveApprox(market);
  EXPECT_EQ(r.high_budget_buyer, 1);
  EXPECT_EQ(r.allocation.bundle(1), ItemSet::Singleton(0));
  EXPECT_EQ(r.allocation.bundle(0), ItemSet::Singleton(1));
  EXPECT_EQ(r.welfare, Rational(7));
}

TEST(BudgetAdditiveTest, AllZeroValues) {
  const Market market(2, {MakeBudgetAdditive({0, 0}, 0), MakeBudgetAdditive({0, 0}, 0)});
  const BudgetAdditiveResult r = BudgetAdditiveApprox(market);
  EXPECT_EQ(r.welfare, Rational(0));
  EXPECT_EQ(r.prices, PriceVector(2));
  EXPECT_TRUE(oracle::Stable(market, r.allocation, r.prices));
}

TEST(BudgetAdditiveTest, ValuesAboveBudgetAreCapped) {
  const Market market(2, {MakeBudgetAdditive({9, 1}, 4), MakeBudgetAdditive({1, 1}, 2)});
  const BudgetAdditiveResult r = BudgetAdditiveApprox(market);
  EXPECT_EQ(r.case_tag, 1);
  EXPECT_EQ(r.prices[0], Rational(4));
  EXPECT_TRUE(oracle::Stable(market, r.allocation, r.prices));
}

TEST(BudgetAdditiveTest, RequiresTwoBudgetAdditiveBuyers) {
  EXPECT_THROW(BudgetAdditiveApprox(Market(1, {MakeBudgetAdditive({1}, 1)})), PreconditionError);
  EXPECT_THROW(BudgetAdditiveApprox(Market(1, {MakeBudgetAdditive({1}, 1), MakeAdditive({1})})),
               PreconditionError);
}

}  // namespace
}  // namespace walras
