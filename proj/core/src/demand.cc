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

#include <string>

#include "walras/errors.h"

namespace walras {
namespace {

void CheckPrices(const Valuation& v, const PriceVector& p) {
  if (p.size() != v.num_items()) {
    throw PreconditionError("price vector has " + std::to_string(p.size()) +
                            " entries for " + std::to_string(v.num_items()) +
                            " items");
  }
}

// Scatters the low bits of `index` onto the positions listed in `items`.
ItemSet Deposit(std::uint64_t index, const std::vector<int>& items) {
  std::uint64_t bits = 0;
  for (std::size_t b = 0; index != 0; ++b, index >>= 1) {
    if (index & 1U) bits |= std::uint64_t{1} << items[b];
  }
  return ItemSet(bits);
}

// Enumerates subsets of `within` in ascending mask order with prices
// accumulated incrementally; value(S) supplies the bundle value.
template <typename ValueFn>
BestResponse Enumerate(ValueFn&& value, const PriceVector& p, ItemSet within) {
  const std::vector<int> items = within.Indices();
  const std::uint64_t count = std::uint64_t{1} << items.size();
  std::vector<Rational> price(count);
  BestResponse best{Rational(), ItemSet()};
  for (std::uint64_t t = 1; t < count; ++t) {
    const int low = std::countr_zero(t);
    price[t] = price[t & (t - 1)] + p[items[static_cast<std::size_t>(low)]];
    const ItemSet s = Deposit(t, items);
    Rational u = value(s) - price[t];
    if (u > best.utility) best = {std::move(u), s};
  }
  return best;
}

// Closed-form best responses for kinds whose demand is structurally simple.
std::optional<BestResponse> ClosedForm(const Valuation& v, const PriceVector& p,
                                       ItemSet within) {
  if (const auto* sm = v.As<SingleMinded>()) {
    if (!sm->desired.IsSubsetOf(within)) return BestResponse{};
    Rational u = sm->value - p.Total(sm->desired);
    if (u.sign() > 0) return BestResponse{std::move(u), sm->desired};
    return BestResponse{};
  }
  if (const auto* a = v.As<Additive>()) {
    BestResponse best;
    within.ForEach([&](int j) {
      Rational surplus = a->values[static_cast<std::size_t>(j)] - p[j];
      if (surplus.sign() > 0) {
        best.utility += surplus;
        best.bundle = best.bundle.With(j);
      }
    });
    return best;
  }
  if (const auto* u = v.As<UnitDemand>()) {
    BestResponse best;
    within.ForEach([&](int j) {
      Rational surplus = u->values[static_cast<std::size_t>(j)] - p[j];
      if (surplus > best.utility) best = {std::move(surplus), ItemSet::Singleton(j)};
    });
    return best;
  }
  return std::nullopt;
}

}  // namespace

ValueTable::ValueTable(const Valuation& v, const Caps& caps)
    : num_items_(v.num_items()) {
  if (num_items_ > caps.sweep_items) {
    throw CapExceeded("value table over " + std::to_string(num_items_) +
                      " items exceeds the sweep cap of " +
                      std::to_string(caps.sweep_items));
  }
  const std::uint64_t count = std::uint64_t{1} << num_items_;
  values_.reserve(count);
  for (std::uint64_t s = 0; s < count; ++s) values_.push_back(v.Value(ItemSet(s)));
}

Rational Utility(const Valuation& v, ItemSet s, const PriceVector& p) {
  CheckPrices(v, p);
  return v.Value(s) - p.Total(s);
}

Demand ComputeDemand(const Valuation& v, const PriceVector& p,
                     const Caps& caps) {
  CheckPrices(v, p);
  const int m = v.num_items();
  if (m > caps.demand_items) {
    throw CapExceeded("demand enumeration over " + std::to_string(m) +
                      " items exceeds the cap of " +
                      std::to_string(caps.demand_items));
  }
  Demand demand;
  demand.sets.push_back(ItemSet());
  ForEachSubset(ItemSet::Full(m), [&](ItemSet s) {
    if (s.empty()) return;
    Rational u = v.Value(s) - p.Total(s);
    if (u > demand.max_utility) {
      demand.max_utility = std::move(u);
      demand.sets.clear();
      demand.sets.push_back(s);
    } else if (u == demand.max_utility) {
      demand.sets.push_back(s);
    }
  });
  return demand;
}

BestResponse ComputeBestResponse(const Valuation& v, const PriceVector& p,
                                 ItemSet within, const Caps& caps) {
  CheckPrices(v, p);
  if (within.size() > caps.demand_items) {
    if (auto closed = ClosedForm(v, p, within)) return *std::move(closed);
    throw CapExceeded("best response over " + std::to_string(within.size()) +
                      " items exceeds the demand cap of " +
                      std::to_string(caps.demand_items));
  }
  return Enumerate([&](ItemSet s) { return v.Value(s); }, p, within);
}

BestResponse ComputeBestResponse(const ValueTable& table, const PriceVector& p,
                                 ItemSet within) {
  return Enumerate([&](ItemSet s) -> const Rational& { return table[s]; }, p,
                   within);
}

}  // namespace walras
