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

#include <stdexcept>
#include <vector>

#include "walras/demand.h"
#include "walras/errors.h"
#include "walras/stability.h"

namespace walras {
namespace {

struct Capped {
  std::vector<Rational> values;
  Rational budget;
  Rational total;
};

Capped Cap(const BudgetAdditive& b) {
  Capped c{{}, b.budget, Rational()};
  for (const Rational& v : b.values) {
    c.values.push_back(Min(v, b.budget));
    c.total += c.values.back();
  }
  return c;
}

}  // namespace

BudgetAdditiveResult BudgetAdditiveApprox(const Market& market,
                                          const Caps& caps) {
  if (market.num_buyers() != 2 ||
      !market.AllOfKind(ValuationKind::kBudgetAdditive)) {
    throw PreconditionError(
        "budget-additive approximation needs exactly two budget-additive buyers");
  }
  const int m = market.num_items();
  BudgetAdditiveResult r;
  const auto* a = market.buyer(0).As<BudgetAdditive>();
  const auto* b = market.buyer(1).As<BudgetAdditive>();
  r.high_budget_buyer = a->budget >= b->budget ? 0 : 1;
  const int high = r.high_budget_buyer;
  const int low = 1 - high;
  const Capped one = Cap(*market.buyer(high).As<BudgetAdditive>());
  const Capped two = Cap(*market.buyer(low).As<BudgetAdditive>());
  // Capping never changes a bundle's value, so the capped valuation stands
  // in for buyer 2 in demand computations.
  const Valuation buyer2 = MakeBudgetAdditive(two.values, two.budget);
  r.budget1 = one.budget;
  r.budget2 = two.budget;
  r.total_value1 = one.total;

  PriceVector prices(m);
  ItemSet bundle1;
  ItemSet bundle2;
  if (one.total >= one.budget) {
    r.case_tag = 1;
    for (int j = 0; j < m; ++j) prices.Set(j, one.values[static_cast<std::size_t>(j)]);
    const Rational half = one.budget / Rational(2);
    for (int j = 0; j < m && r.s1.empty(); ++j) {
      if (one.values[static_cast<std::size_t>(j)] >= half) r.s1 = ItemSet::Singleton(j);
    }
    if (r.s1.empty()) {
      Rational sum;
      for (int j = 0; j < m && sum < half; ++j) {
        r.s1 = r.s1.With(j);
        sum += one.values[static_cast<std::size_t>(j)];
      }
    }
    r.d2 = ComputeBestResponse(buyer2, prices, caps).bundle;
    bundle2 = r.d2;
    bundle1 = r.s1 - r.d2;
    r.opt_upper = one.budget + two.budget;
  } else {
    r.case_tag = 2;
    ItemSet s2;
    for (int j = 0; j < m; ++j) {
      const auto k = static_cast<std::size_t>(j);
      if (one.values[k] >= two.values[k]) {
        r.s1 = r.s1.With(j);
        prices.Set(j, two.values[k]);
      } else {
        s2 = s2.With(j);
        prices.Set(j, one.values[k]);
      }
    }
    const BestResponse within = ComputeBestResponse(buyer2, prices, s2, caps);
    const BestResponse global = ComputeBestResponse(buyer2, prices, caps);
    if (within.utility != global.utility) {
      throw std::logic_error(
          "budget-additive case 2: no demand set of buyer 2 lies inside S2");
    }
    r.d2 = within.bundle;
    bundle2 = r.d2;
    bundle1 = r.s1 | (s2 - r.d2);
    r.opt_upper = two.budget + one.total;
  }

  std::vector<ItemSet> bundles(2);
  bundles[static_cast<std::size_t>(high)] = bundle1;
  bundles[static_cast<std::size_t>(low)] = bundle2;
  r.allocation = Allocation(m, std::move(bundles));
  r.prices = std::move(prices);
  r.welfare = Welfare(market, r.allocation);
  if (!VerifyStable(market, r.allocation, r.prices, caps).stable) {
    throw std::logic_error("budget-additive approximation produced an unstable outcome");
  }
  return r;
}

}  // namespace walras
