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

#ifndef WALRAS_DEMAND_H_
#define WALRAS_DEMAND_H_

#include <optional>
#include <vector>

#include "walras/caps.h"
#include "walras/item_set.h"
#include "walras/market.h"
#include "walras/rational.h"
#include "walras/valuation.h"

namespace walras {

// Precomputed v(S) for every S of the universe, indexed by mask.
// Construction enumerates 2^m bundles; throws CapExceeded when
// m > caps.sweep_items.
class ValueTable {
 public:
  explicit ValueTable(const Valuation& v, const Caps& caps = {});

  int num_items() const { return num_items_; }
  const Rational& operator[](ItemSet s) const {
    return values_[static_cast<std::size_t>(s.bits())];
  }

 private:
  int num_items_;
  std::vector<Rational> values_;
};

// v(S) - p(S).
Rational Utility(const Valuation& v, ItemSet s, const PriceVector& p);

// The full demand correspondence: every utility-maximizing bundle over all
// 2^m subsets, in ascending mask order. The empty set is always a candidate,
// so max_utility >= 0.
struct Demand {
  Rational max_utility;
  std::vector<ItemSet> sets;
};
Demand ComputeDemand(const Valuation& v, const PriceVector& p,
                     const Caps& caps = {});

// One utility-maximizing bundle among the subsets of `within`: the first
// maximizer in ascending mask order. Above caps.demand_items, single-minded,
// additive and unit-demand valuations fall back to closed forms (whose
// argmax is a maximizer but not necessarily the mask-order first one); other
// kinds throw CapExceeded.
struct BestResponse {
  Rational utility;
  ItemSet bundle;
};
BestResponse ComputeBestResponse(const Valuation& v, const PriceVector& p,
                                 ItemSet within, const Caps& caps = {});
inline BestResponse ComputeBestResponse(const Valuation& v,
                                        const PriceVector& p,
                                        const Caps& caps = {}) {
  return ComputeBestResponse(v, p, ItemSet::Full(v.num_items()), caps);
}
// Same, reading values from a table that covers `within`.
BestResponse ComputeBestResponse(const ValueTable& table, const PriceVector& p,
                                 ItemSet within);

}  // namespace walras

#endif  // WALRAS_DEMAND_H_
