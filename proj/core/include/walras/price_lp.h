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

#ifndef WALRAS_PRICE_LP_H_
#define WALRAS_PRICE_LP_H_

#include <optional>
#include <vector>

#include "walras/item_set.h"
#include "walras/market.h"
#include "walras/rational.h"

namespace walras {

// p(plus) - p(minus) >= rhs. Items in both sets cancel.
struct PriceConstraint {
  ItemSet plus;
  ItemSet minus;
  Rational rhs;
};

// Minimizes sum_j p_j over p >= 0 subject to the constraints; nullopt when
// no nonnegative price vector satisfies them. Solved exactly through the
// dual packing LP (one column per constraint, one row per item), whose row
// duals are the minimizing prices.
std::optional<PriceVector> MinimumPrices(
    int num_items, const std::vector<PriceConstraint>& constraints);

}  // namespace walras

#endif  // WALRAS_PRICE_LP_H_
