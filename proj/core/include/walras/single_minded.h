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

#ifndef WALRAS_SINGLE_MINDED_H_
#define WALRAS_SINGLE_MINDED_H_

#include <vector>

#include "walras/caps.h"
#include "walras/market.h"
#include "walras/rational.h"
#include "walras/stability.h"

namespace walras {

struct GreedyStableResult {
  Outcome outcome;
  Rational welfare;
  // Buyers whose covering constraint p(S_i*) >= v_i is tight, in greedy
  // order (decreasing v_i / sqrt|S_i*|, ties by index).
  std::vector<int> tight_order;
  std::vector<int> winners;
};

// Zero-utility pricing plus greedy allocation for single-minded buyers.
// Prices minimize sum_j p_j subject to p(S_i*) >= v_i for every buyer, so no
// buyer can get strictly positive utility; tight buyers are then served
// greedily, skipping conflicts. Throws PreconditionError if some buyer is not
// single-minded. The output is re-verified as stable.
GreedyStableResult SingleMindedGreedyStable(const Market& market,
                                            const Caps& caps = {});

}  // namespace walras

#endif  // WALRAS_SINGLE_MINDED_H_
