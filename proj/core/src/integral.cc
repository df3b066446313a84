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

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "walras/demand.h"
#include "walras/errors.h"

namespace walras {
namespace {

void CheckBudget(int buyers, int items, const Caps& caps) {
  // (buyers + 1)^items without overflow.
  std::uint64_t nodes = 1;
  for (int k = 0; k < items; ++k) {
    if (nodes > caps.brute_force_nodes / static_cast<std::uint64_t>(buyers + 1)) {
      throw CapExceeded("brute-force allocation search over " +
                        std::to_string(items) + " items and " +
                        std::to_string(buyers) + " buyers exceeds the budget of " +
                        std::to_string(caps.brute_force_nodes) + " nodes");
    }
    nodes *= static_cast<std::uint64_t>(buyers + 1);
  }
}

// Value lookups through tables when the universe is small enough.
class Values {
 public:
  Values(const Market& market, const Caps& caps) : market_(market) {
    if (market.num_items() <= caps.sweep_items) {
      for (const Valuation& v : market.buyers()) tables_.emplace_back(v, caps);
    }
  }
  Rational operator()(int buyer, ItemSet s) const {
    if (!tables_.empty()) return tables_[static_cast<std::size_t>(buyer)][s];
    return market_.buyer(buyer).Value(s);
  }
  void AddTo(Rational& acc, int buyer, ItemSet s) const {
    if (!tables_.empty()) {
      acc += tables_[static_cast<std::size_t>(buyer)][s];
    } else {
      acc += market_.buyer(buyer).Value(s);
    }
  }

 private:
  const Market& market_;
  std::vector<ValueTable> tables_;
};

class AllocationSearch {
 public:
  AllocationSearch(const Market& market, ItemSet restriction, const Caps& caps)
      : values_(market, caps),
        n_(market.num_buyers()),
        items_(restriction.Indices()),
        bundles_(static_cast<std::size_t>(n_)),
        undecided_(restriction) {}

  IntegralOptimum Run(int num_items) {
    Dfs(0);
    return {Allocation(num_items, best_bundles_), *best_};
  }

 private:
  void Dfs(std::size_t pos) {
    Rational bound;
    for (int i = 0; i < n_; ++i) {
      values_.AddTo(bound, i, bundles_[static_cast<std::size_t>(i)] | undecided_);
    }
    if (best_ && bound <= *best_) return;
    if (pos == items_.size()) {
      best_ = std::move(bound);
      best_bundles_ = bundles_;
      return;
    }
    const int item = items_[pos];
    undecided_ = undecided_.Without(item);
    for (int i = 0; i < n_; ++i) {
      ItemSet& b = bundles_[static_cast<std::size_t>(i)];
      b = b.With(item);
      Dfs(pos + 1);
      b = b.Without(item);
    }
    Dfs(pos + 1);
    undecided_ = undecided_.With(item);
  }

  Values values_;
  int n_;
  std::vector<int> items_;
  std::vector<ItemSet> bundles_;
  ItemSet undecided_;
  std::optional<Rational> best_;
  std::vector<ItemSet> best_bundles_;
};

IntegralOptimum SingleMindedOpt(const Market& market, ItemSet restriction) {
  struct Bidder {
    int buyer;
    ItemSet desired;
    Rational value;
  };
  std::vector<Bidder> bidders;
  for (int i = 0; i < market.num_buyers(); ++i) {
    const auto* sm = market.buyer(i).As<SingleMinded>();
    if (sm->desired.IsSubsetOf(restriction)) {
      bidders.push_back({i, sm->desired, sm->value});
    }
  }
  // suffix[k] = total value of bidders k.. (optimistic bound).
  std::vector<Rational> suffix(bidders.size() + 1);
  for (std::size_t k = bidders.size(); k-- > 0;) {
    suffix[k] = suffix[k + 1] + bidders[k].value;
  }
  std::optional<Rational> best;
  std::vector<int> best_winners;
  std::vector<int> winners;
  Rational current;
  auto dfs = [&](auto&& self, std::size_t k, ItemSet taken) -> void {
    if (best && current + suffix[k] <= *best) return;
    if (k == bidders.size()) {
      best = current;
      best_winners = winners;
      return;
    }
    const Bidder& b = bidders[k];
    if (!b.desired.Intersects(taken)) {
      winners.push_back(static_cast<int>(k));
      current += b.value;
      self(self, k + 1, taken | b.desired);
      current -= b.value;
      winners.pop_back();
    }
    self(self, k + 1, taken);
  };
  dfs(dfs, 0, ItemSet());
  std::vector<ItemSet> bundles(static_cast<std::size_t>(market.num_buyers()));
  for (int k : best_winners) {
    const Bidder& b = bidders[static_cast<std::size_t>(k)];
    bundles[static_cast<std::size_t>(b.buyer)] = b.desired;
  }
  return {Allocation(market.num_items(), std::move(bundles)), *best};
}

}  // namespace

IntegralOptimum IntegralOpt(const Market& market, ItemSet restriction,
                            const Caps& caps) {
  if (!restriction.IsSubsetOf(market.all_items())) {
    throw InputError("restriction contains items outside the market");
  }
  if (market.AllOfKind(ValuationKind::kSingleMinded) &&
      market.num_buyers() <= 40) {
    return SingleMindedOpt(market, restriction);
  }
  CheckBudget(market.num_buyers(), restriction.size(), caps);
  AllocationSearch search(market, restriction, caps);
  return search.Run(market.num_items());
}

GapReport ComputeGap(const Market& market, ItemSet restriction,
                     const Caps& caps) {
  GapReport report{SolveFractional(market, restriction, caps),
                   IntegralOpt(market, restriction, caps), Rational(1)};
  if (!report.integral.welfare.is_zero()) {
    report.gap = report.fractional.optimal_value / report.integral.welfare;
  } else if (!report.fractional.optimal_value.is_zero()) {
    // Unreachable for valid markets: a positive column is itself integral.
    throw std::logic_error("positive fractional optimum with zero integral optimum");
  }
  return report;
}

Rational IntegralityGap(const Market& market, ItemSet restriction,
                        const Caps& caps) {
  return ComputeGap(market, restriction, caps).gap;
}

void ForEachAllocation(const Market& market, ItemSet restriction,
                       const std::function<void(const Allocation&)>& fn,
                       const Caps& caps) {
  const int n = market.num_buyers();
  CheckBudget(n, restriction.size(), caps);
  const std::vector<int> items = restriction.Indices();
  // owner[k] in [0, n]; n means unsold.
  std::vector<int> owner(items.size(), 0);
  while (true) {
    std::vector<ItemSet> bundles(static_cast<std::size_t>(n));
    for (std::size_t k = 0; k < items.size(); ++k) {
      if (owner[k] < n) {
        auto& b = bundles[static_cast<std::size_t>(owner[k])];
        b = b.With(items[k]);
      }
    }
    fn(Allocation(market.num_items(), std::move(bundles)));
    std::size_t k = 0;
    while (k < items.size() && owner[k] == n) owner[k++] = 0;
    if (k == items.size()) return;
    ++owner[k];
  }
}

}  // namespace walras
