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

#ifndef WALRAS_MARKET_H_
#define WALRAS_MARKET_H_

#include <vector>

#include "walras/item_set.h"
#include "walras/rational.h"
#include "walras/valuation.h"

namespace walras {

// m items and one valuation per buyer.
class Market {
 public:
  // Throws InputError if there are no buyers, if a buyer's universe differs
  // from num_items, or if num_items is outside [0, kMaxItems].
  Market(int num_items, std::vector<Valuation> buyers);

  int num_items() const { return num_items_; }
  int num_buyers() const { return static_cast<int>(buyers_.size()); }
  const std::vector<Valuation>& buyers() const { return buyers_; }
  const Valuation& buyer(int i) const { return buyers_[static_cast<std::size_t>(i)]; }
  ItemSet all_items() const { return ItemSet::Full(num_items_); }

  bool AllOfKind(ValuationKind kind) const;

 private:
  int num_items_;
  std::vector<Valuation> buyers_;
};

// Per-item prices for all m items; prices are nonnegative.
class PriceVector {
 public:
  PriceVector() = default;
  // m zero prices.
  explicit PriceVector(int num_items)
      : prices_(static_cast<std::size_t>(num_items)) {}
  // Throws InputError on a negative entry.
  explicit PriceVector(std::vector<Rational> prices);

  int size() const { return static_cast<int>(prices_.size()); }
  const Rational& operator[](int j) const {
    return prices_[static_cast<std::size_t>(j)];
  }
  // Throws InputError if price < 0.
  void Set(int j, Rational price);
  const std::vector<Rational>& values() const { return prices_; }

  Rational Total(ItemSet s) const;

  friend bool operator==(const PriceVector&, const PriceVector&) = default;

 private:
  std::vector<Rational> prices_;
};

// (X_0, X_1, ..., X_n): one bundle per buyer plus the unsold remainder.
class Allocation {
 public:
  Allocation() = default;
  // Throws InputError if bundles overlap or leave the universe.
  Allocation(int num_items, std::vector<ItemSet> bundles);
  // Everything unsold.
  static Allocation Empty(int num_items, int num_buyers);

  int num_buyers() const { return static_cast<int>(bundles_.size()); }
  const std::vector<ItemSet>& bundles() const { return bundles_; }
  ItemSet bundle(int i) const { return bundles_[static_cast<std::size_t>(i)]; }
  ItemSet unsold() const { return unsold_; }
  ItemSet sold() const;

  friend bool operator==(const Allocation&, const Allocation&) = default;

 private:
  std::vector<ItemSet> bundles_;
  ItemSet unsold_;
};

// Sum of buyer values of their bundles.
Rational Welfare(const Market& market, const Allocation& allocation);

}  // namespace walras

#endif  // WALRAS_MARKET_H_
