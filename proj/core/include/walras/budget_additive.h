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

#ifndef WALRAS_BUDGET_ADDITIVE_H_
#define WALRAS_BUDGET_ADDITIVE_H_

#include "walras/caps.h"
#include "walras/item_set.h"
#include "walras/market.h"
#include "walras/rational.h"

namespace walras {

// Stable 4-approximation for two budget-additive buyers.
//
// Buyers are relabeled so that "buyer 1" has the larger budget (ties keep the
// input order) and item values are capped at the owner's budget first.
//
//  Case 1 (sum_j v1j >= B1): p_j = v1j. S1 is a single item worth at least
//    B1/2 if one exists, otherwise the shortest index-order prefix worth at
//    least B1/2. Buyer 2 takes the first demand set D2 in mask order; buyer 1
//    takes S1 \ D2. Welfare >= B1/2 and OPT <= B1 + B2.
//
//  Case 2 (sum_j v1j < B1): S1 = {j : v1j >= v2j}, S2 = the rest;
//    p_j = v2j on S1 and v1j on S2. D2 is the first utility maximizer among
//    subsets of S2 (checked to be a global demand set); buyer 1 takes
//    S1 + (S2 \ D2). Welfare >= B2 and >= sum_j v1j, so 2 * welfare >= OPT.
struct BudgetAdditiveResult {
  int case_tag = 0;
  // Market index of the larger-budget buyer (relabeled "buyer 1").
  int high_budget_buyer = 0;
  Allocation allocation;  // in market buyer order
  PriceVector prices;
  Rational welfare;
  Rational opt_upper;  // B1 + B2 (case 1) or B2 + sum_j v1j (case 2)
  ItemSet s1;
  ItemSet d2;
  // After capping, relabeled.
  Rational budget1;
  Rational budget2;
  Rational total_value1;  // sum_j v1j
};

// Throws PreconditionError unless the market has exactly two budget-additive
// buyers. The output is verified stable; a failed check throws
// std::logic_error.
BudgetAdditiveResult BudgetAdditiveApprox(const Market& market,
                                          const Caps& caps = {});

}  // namespace walras

#endif  // WALRAS_BUDGET_ADDITIVE_H_
