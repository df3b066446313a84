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

#ifndef WALRAS_INTEGRAL_H_
#define WALRAS_INTEGRAL_H_

#include <functional>

#include "walras/caps.h"
#include "walras/config_lp.h"
#include "walras/item_set.h"
#include "walras/market.h"
#include "walras/rational.h"

namespace walras {

struct IntegralOptimum {
  Allocation allocation;
  Rational welfare;
};

// Welfare-maximizing allocation of the items of M' (items may stay unsold).
//
// General markets use a depth-first search over items in increasing index,
// trying buyers 0..n-1 and then "unsold" for each item, pruned by the
// monotone bound sum_i v_i(X_i + undecided). Ties go to the first allocation
// met in that order. The search refuses to start when (n+1)^|M'| exceeds
// caps.brute_force_nodes.
//
// All-single-minded markets instead search over buyer subsets with pairwise
// disjoint desired sets (winners receive exactly their desired set).
IntegralOptimum IntegralOpt(const Market& market, ItemSet restriction,
                            const Caps& caps = {});

// Fractional optimum divided by integral optimum on M' (1 when both are 0).
Rational IntegralityGap(const Market& market, ItemSet restriction,
                        const Caps& caps = {});

// Fractional and integral optima together.
struct GapReport {
  LPSolution fractional;
  IntegralOptimum integral;
  Rational gap;
};
GapReport ComputeGap(const Market& market, ItemSet restriction,
                     const Caps& caps = {});

// Calls fn for every assignment of the items of M' to buyers or "unsold",
// (n+1)^|M'| in total. Throws CapExceeded beyond caps.brute_force_nodes.
void ForEachAllocation(const Market& market, ItemSet restriction,
                       const std::function<void(const Allocation&)>& fn,
                       const Caps& caps = {});

}  // namespace walras

#endif  // WALRAS_INTEGRAL_H_
