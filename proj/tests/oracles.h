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

// Naive reference implementations used as test oracles. They share only the
// valuation primitives with the library and favor plainness over speed.
#ifndef WALRAS_TESTS_ORACLES_H_
#define WALRAS_TESTS_ORACLES_H_

#include <cstdint>
#include <vector>

#include "walras/market.h"

namespace walras::oracle {

inline Rational Price(const PriceVector& p, ItemSet s) {
  Rational total;
  for (int j = 0; j < p.size(); ++j) {
    if (s.contains(j)) total += p[j];
  }
  return total;
}

inline Rational MaxUtility(const Valuation& v, const PriceVector& p,
                           ItemSet within) {
  Rational best;  // empty bundle
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << v.num_items()); ++mask) {
    const ItemSet s(mask);
    if (!s.IsSubsetOf(within)) continue;
    const Rational u = v.Value(s) - Price(p, s);
    if (u > best) best = u;
  }
  return best;
}

inline bool Stable(const Market& market, const Allocation& x, const PriceVector& p) {
  for (int i = 0; i < market.num_buyers(); ++i) {
    const Valuation& v = market.buyer(i);
    const Rational held = v.Value(x.bundle(i)) - Price(p, x.bundle(i));
    if (MaxUtility(v, p, market.all_items()) != held) return false;
  }
  return true;
}

// Best welfare over every assignment of the items of `within` to a buyer or
// to nobody.
inline Rational BestWelfare(const Market& market, ItemSet within) {
  const std::vector<int> items = within.Indices();
  const int n = market.num_buyers();
  std::vector<int> owner(items.size(), n);
  Rational best;
  while (true) {
    std::vector<ItemSet> bundles(static_cast<std::size_t>(n));
    for (std::size_t t = 0; t < items.size(); ++t) {
      if (owner[t] < n) {
        auto& b = bundles[static_cast<std::size_t>(owner[t])];
        b = b.With(items[t]);
      }
    }
    Rational w;
    for (int i = 0; i < n; ++i) w += market.buyer(i).Value(bundles[static_cast<std::size_t>(i)]);
    if (w > best) best = w;
    std::size_t t = 0;
    while (t < items.size() && owner[t] == 0) {
      owner[t] = n;
      ++t;
    }
    if (t == items.size()) break;
    --owner[t];
  }
  return best;
}

}  // namespace walras::oracle

#endif  // WALRAS_TESTS_ORACLES_H_
