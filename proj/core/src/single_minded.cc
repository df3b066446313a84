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

#include "walras/single_minded.h"

#include <algorithm>
#include <stdexcept>

#include "walras/errors.h"
#include "walras/price_lp.h"

namespace walras {

GreedyStableResult SingleMindedGreedyStable(const Market& market,
                                            const Caps& caps) {
  if (!market.AllOfKind(ValuationKind::kSingleMinded)) {
    throw PreconditionError("greedy stable outcome needs single-minded buyers");
  }
  const int n = market.num_buyers();
  std::vector<PriceConstraint> covering;
  for (const Valuation& v : market.buyers()) {
    const auto* sm = v.As<SingleMinded>();
    covering.push_back({sm->desired, ItemSet(), sm->value});
  }
  // Always feasible: every desired set is nonempty.
  PriceVector prices = *MinimumPrices(market.num_items(), covering);

  GreedyStableResult result;
  for (int i = 0; i < n; ++i) {
    const auto* sm = market.buyer(i).As<SingleMinded>();
    if (prices.Total(sm->desired) == sm->value) result.tight_order.push_back(i);
  }
  // v_a / sqrt(s_a) > v_b / sqrt(s_b)  <=>  v_a^2 s_b > v_b^2 s_a  (v >= 0).
  auto key = [&](int i) {
    const auto* sm = market.buyer(i).As<SingleMinded>();
    return std::pair<Rational, Rational>(sm->value * sm->value,
                                         Rational(sm->desired.size()));
  };
  std::stable_sort(result.tight_order.begin(), result.tight_order.end(),
                   [&](int a, int b) {
                     const auto [va2, sa] = key(a);
                     const auto [vb2, sb] = key(b);
                     return va2 * sb > vb2 * sa;
                   });

  std::vector<ItemSet> bundles(static_cast<std::size_t>(n));
  ItemSet taken;
  for (int i : result.tight_order) {
    const ItemSet want = market.buyer(i).As<SingleMinded>()->desired;
    if (want.Intersects(taken)) continue;
    taken = taken | want;
    bundles[static_cast<std::size_t>(i)] = want;
    result.winners.push_back(i);
  }
  std::sort(result.winners.begin(), result.winners.end());
  result.outcome = {Allocation(market.num_items(), std::move(bundles)),
                    std::move(prices)};
  result.welfare = Welfare(market, result.outcome.allocation);
  if (!VerifyStable(market, result.outcome.allocation, result.outcome.prices, caps)
           .stable) {
    throw std::logic_error("greedy single-minded outcome is not stable");
  }
  return result;
}

}  // namespace walras
