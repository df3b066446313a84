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

#ifndef WALRAS_STABILITY_H_
#define WALRAS_STABILITY_H_

#include <optional>
#include <vector>

#include "walras/caps.h"
#include "walras/item_set.h"
#include "walras/market.h"
#include "walras/rational.h"

namespace walras {

// A buyer who strictly prefers `bundle` to what they hold.
struct StabilityWitness {
  int buyer;
  ItemSet bundle;
  Rational utility;       // u_i(bundle, p)
  Rational held_utility;  // u_i(X_i, p)
};

struct StabilityReport {
  bool stable = true;
  // First violation: lowest buyer index, then the first strictly better
  // bundle in ascending mask order (closed-form best response above the
  // demand cap).
  std::optional<StabilityWitness> witness;
  std::vector<Rational> max_utilities;  // max_S u_i(S, p) per buyer
};

// An allocation with supporting item prices.
struct Outcome {
  Allocation allocation;
  PriceVector prices;
};

// (X, p) is stable iff every X_i is in buyer i's demand correspondence over
// all 2^M bundles, compared with exact equality.
StabilityReport VerifyStable(const Market& market, const Allocation& allocation,
                             const PriceVector& prices, const Caps& caps = {});

// 1 + max_i v_i(M): any bundle holding an item at this price is worth less
// than the empty bundle.
Rational ProhibitivePrice(const Market& market);

// True iff the configuration LP restricted to M' has integrality gap 1,
// i.e. some stable outcome sells exactly M'.
bool StableExistsOn(const Market& market, ItemSet restriction,
                    const Caps& caps = {});

struct ExtractedOutcome {
  Outcome outcome;
  ItemSet restriction;  // M' as requested
  ItemSet sold;         // items actually allocated
  Rational welfare;
};

// Integral optimum on M' supported by the LP item duals on M' and the
// prohibitive price on M \ M'. Throws PreconditionError when the gap on M'
// exceeds 1. The result is re-verified and a failed verification throws
// std::logic_error.
ExtractedOutcome ExtractStableOutcome(const Market& market, ItemSet restriction,
                                      const Caps& caps = {});

// Prices supporting a fixed allocation: minimizes sum_j p_j subject to
// v_i(X_i) - p(X_i) >= v_i(S) - p(S) for every buyer i and bundle S, p >= 0.
// nullopt when no such prices exist. Single-minded buyers contribute only
// their two undominated bundles (empty and desired); other buyers contribute
// all 2^m bundles, which requires m <= caps.sweep_items.
std::optional<PriceVector> PricesForAllocation(const Market& market,
                                               const Allocation& allocation,
                                               const Caps& caps = {});

struct BestStable {
  ExtractedOutcome outcome;
  Rational welfare;
};

// Welfare-best stable outcome over all restrictions M' with gap 1. Candidate
// restrictions are visited by decreasing integral optimum (ties by ascending
// mask) and the first with gap 1 wins. All-single-minded markets search
// disjoint families of desired sets instead, checking each with the reduced
// price LP.
BestStable BestStableOutcome(const Market& market, const Caps& caps = {});

// OPT / best stable welfare; nullopt stands for infinity (best stable welfare
// 0 with OPT > 0). 1 when both are 0.
std::optional<Rational> StabilityRatio(const Market& market,
                                       const Caps& caps = {});

}  // namespace walras

#endif  // WALRAS_STABILITY_H_
