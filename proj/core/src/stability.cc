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

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "walras/config_lp.h"
#include "walras/demand.h"
#include "walras/errors.h"
#include "walras/integral.h"
#include "walras/price_lp.h"

namespace walras {
namespace {

struct BuyerCheck {
  Rational max_utility;
  std::optional<ItemSet> better;  // first bundle strictly beating `held`
  Rational better_utility;
};

BuyerCheck CheckBuyer(const Valuation& v, const PriceVector& p,
                      const Rational& held, const Caps& caps) {
  const int m = v.num_items();
  BuyerCheck check;
  if (m > caps.demand_items) {
    BestResponse br = ComputeBestResponse(v, p, caps);
    if (br.utility > held) {
      check.better = br.bundle;
      check.better_utility = br.utility;
    }
    check.max_utility = std::move(br.utility);
    return check;
  }
  const std::uint64_t count = std::uint64_t{1} << m;
  std::vector<Rational> price(count);
  check.max_utility = v.Value(ItemSet());
  if (check.max_utility > held) {
    check.better = ItemSet();
    check.better_utility = check.max_utility;
  }
  for (std::uint64_t s = 1; s < count; ++s) {
    price[s] = price[s & (s - 1)] + p[std::countr_zero(s)];
    Rational u = v.Value(ItemSet(s)) - price[s];
    if (!check.better && u > held) {
      check.better = ItemSet(s);
      check.better_utility = u;
    }
    if (u > check.max_utility) check.max_utility = std::move(u);
  }
  return check;
}

void CheckShapes(const Market& market, const Allocation& allocation,
                 const PriceVector& prices) {
  if (allocation.num_buyers() != market.num_buyers()) {
    throw InputError("allocation has " + std::to_string(allocation.num_buyers()) +
                     " bundles for " + std::to_string(market.num_buyers()) +
                     " buyers");
  }
  if (!allocation.sold().IsSubsetOf(market.all_items())) {
    throw InputError("allocation uses items outside the market");
  }
  if (prices.size() != market.num_items()) {
    throw InputError("price vector has " + std::to_string(prices.size()) +
                     " entries for " + std::to_string(market.num_items()) +
                     " items");
  }
}

void AssertStable(const Market& market, const Outcome& outcome,
                  const Caps& caps, const char* who) {
  if (!VerifyStable(market, outcome.allocation, outcome.prices, caps).stable) {
    throw std::logic_error(std::string(who) + " produced an unstable outcome");
  }
}

std::vector<PriceConstraint> StabilityConstraints(const Market& market,
                                                  const Allocation& allocation,
                                                  const Caps& caps) {
  std::vector<PriceConstraint> constraints;
  const int m = market.num_items();
  for (int i = 0; i < market.num_buyers(); ++i) {
    const Valuation& v = market.buyer(i);
    const ItemSet held = allocation.bundle(i);
    const Rational held_value = v.Value(held);
    auto add = [&](ItemSet s) {
      if (s == held) return;
      constraints.push_back({s, held, v.Value(s) - held_value});
    };
    if (const auto* sm = v.As<SingleMinded>()) {
      add(ItemSet());
      add(sm->desired);
      continue;
    }
    if (m > caps.sweep_items) {
      throw CapExceeded("stability constraints over 2^" + std::to_string(m) +
                        " bundles exceed the sweep cap of " +
                        std::to_string(caps.sweep_items));
    }
    ForEachSubset(ItemSet::Full(m), add);
  }
  return constraints;
}

BestStable SingleMindedBestStable(const Market& market, const Caps& caps) {
  const int n = market.num_buyers();
  if (n > 30) throw CapExceeded("single-minded family search above 30 buyers");
  std::vector<ItemSet> desired;
  std::vector<Rational> value;
  for (const Valuation& v : market.buyers()) {
    desired.push_back(v.As<SingleMinded>()->desired);
    value.push_back(v.As<SingleMinded>()->value);
  }
  // Every family of buyers with pairwise disjoint desired sets.
  std::vector<std::pair<Rational, std::uint64_t>> families;
  auto grow = [&](auto&& self, int i, std::uint64_t chosen, ItemSet taken,
                  const Rational& total) -> void {
    if (i == n) {
      families.emplace_back(total, chosen);
      return;
    }
    const auto k = static_cast<std::size_t>(i);
    if (!desired[k].Intersects(taken)) {
      self(self, i + 1, chosen | (std::uint64_t{1} << i), taken | desired[k],
           total + value[k]);
    }
    self(self, i + 1, chosen, taken, total);
  };
  grow(grow, 0, 0, ItemSet(), Rational());
  std::sort(families.begin(), families.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });

  for (const auto& [welfare, chosen] : families) {
    std::vector<ItemSet> bundles(static_cast<std::size_t>(n));
    std::vector<PriceConstraint> constraints;
    for (int i = 0; i < n; ++i) {
      const auto k = static_cast<std::size_t>(i);
      if ((chosen >> i) & 1U) {
        bundles[k] = desired[k];
        constraints.push_back({ItemSet(), desired[k], -value[k]});
      } else {
        constraints.push_back({desired[k], ItemSet(), value[k]});
      }
    }
    auto prices = MinimumPrices(market.num_items(), constraints);
    if (!prices) continue;
    Allocation allocation(market.num_items(), std::move(bundles));
    const ItemSet sold = allocation.sold();
    ExtractedOutcome extracted{{std::move(allocation), *std::move(prices)},
                               sold, sold, welfare};
    AssertStable(market, extracted.outcome, caps, "single-minded best-stable search");
    return {std::move(extracted), welfare};
  }
  throw std::logic_error("no stable family found; the empty family always is");
}

}  // namespace

StabilityReport VerifyStable(const Market& market, const Allocation& allocation,
                             const PriceVector& prices, const Caps& caps) {
  CheckShapes(market, allocation, prices);
  StabilityReport report;
  for (int i = 0; i < market.num_buyers(); ++i) {
    const Valuation& v = market.buyer(i);
    const ItemSet held = allocation.bundle(i);
    const Rational held_utility = v.Value(held) - prices.Total(held);
    BuyerCheck check = CheckBuyer(v, prices, held_utility, caps);
    if (check.better && report.stable) {
      report.stable = false;
      report.witness = StabilityWitness{i, *check.better, check.better_utility,
                                        held_utility};
    }
    report.max_utilities.push_back(std::move(check.max_utility));
  }
  return report;
}

Rational ProhibitivePrice(const Market& market) {
  Rational top;
  for (const Valuation& v : market.buyers()) {
    top = Max(top, v.Value(market.all_items()));
  }
  return top + Rational(1);
}

bool StableExistsOn(const Market& market, ItemSet restriction,
                    const Caps& caps) {
  return ComputeGap(market, restriction, caps).gap == Rational(1);
}

ExtractedOutcome ExtractStableOutcome(const Market& market, ItemSet restriction,
                                      const Caps& caps) {
  GapReport gap = ComputeGap(market, restriction, caps);
  if (gap.gap != Rational(1)) {
    throw PreconditionError("no stable outcome sells " + restriction.ToString() +
                            ": integrality gap " + gap.gap.ToString());
  }
  PriceVector prices(market.num_items());
  const Rational prohibitive = ProhibitivePrice(market);
  for (int j = 0; j < market.num_items(); ++j) {
    prices.Set(j, restriction.contains(j)
                      ? gap.fractional.item_duals[static_cast<std::size_t>(j)]
                      : prohibitive);
  }
  const ItemSet sold = gap.integral.allocation.sold();
  ExtractedOutcome out{{std::move(gap.integral.allocation), std::move(prices)},
                       restriction, sold, std::move(gap.integral.welfare)};
  AssertStable(market, out.outcome, caps, "stable-outcome extraction");
  return out;
}

std::optional<PriceVector> PricesForAllocation(const Market& market,
                                               const Allocation& allocation,
                                               const Caps& caps) {
  CheckShapes(market, allocation, PriceVector(market.num_items()));
  auto prices = MinimumPrices(market.num_items(),
                              StabilityConstraints(market, allocation, caps));
  if (prices) AssertStable(market, {allocation, *prices}, caps, "price LP");
  return prices;
}

BestStable BestStableOutcome(const Market& market, const Caps& caps) {
  if (market.AllOfKind(ValuationKind::kSingleMinded)) {
    return SingleMindedBestStable(market, caps);
  }
  const int m = market.num_items();
  if (m > caps.sweep_items) {
    throw CapExceeded("best-stable sweep over 2^" + std::to_string(m) +
                      " restrictions exceeds the sweep cap of " +
                      std::to_string(caps.sweep_items));
  }
  std::vector<std::pair<Rational, ItemSet>> candidates;
  ForEachSubset(market.all_items(), [&](ItemSet r) {
    candidates.emplace_back(IntegralOpt(market, r, caps).welfare, r);
  });
  std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });
  for (const auto& [welfare, restriction] : candidates) {
    if (!StableExistsOn(market, restriction, caps)) continue;
    ExtractedOutcome out = ExtractStableOutcome(market, restriction, caps);
    return {std::move(out), welfare};
  }
  throw std::logic_error("no restriction with gap 1; the empty one always is");
}

std::optional<Rational> StabilityRatio(const Market& market, const Caps& caps) {
  const Rational opt = IntegralOpt(market, market.all_items(), caps).welfare;
  const Rational best = BestStableOutcome(market, caps).welfare;
  if (best.is_zero()) {
    if (opt.is_zero()) return Rational(1);
    return std::nullopt;
  }
  return opt / best;
}

}  // namespace walras
