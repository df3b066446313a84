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

#include "walras/price_lp.h"

#include "walras/simplex.h"

namespace walras {

std::optional<PriceVector> MinimumPrices(
    int num_items, const std::vector<PriceConstraint>& constraints) {
  lp::ExactSimplex simplex(
      std::vector<Rational>(static_cast<std::size_t>(num_items), Rational(1)));
  for (const PriceConstraint& c : constraints) {
    const ItemSet plus = c.plus - c.minus;
    const ItemSet minus = c.minus - c.plus;
    if (plus.empty() && minus.empty() && c.rhs.sign() <= 0) continue;
    lp::Column col;
    col.cost = c.rhs;
    // Entries in row order keep Ftran deterministic.
    for (int j = 0; j < num_items; ++j) {
      if (plus.contains(j)) col.entries.emplace_back(j, 1);
      if (minus.contains(j)) col.entries.emplace_back(j, -1);
    }
    simplex.AddColumn(std::move(col));
  }
  if (simplex.Solve() == lp::Status::kUnbounded) return std::nullopt;
  return PriceVector(simplex.duals());
}

}  // namespace walras
