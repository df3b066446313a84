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

#ifndef WALRAS_CONFIG_LP_H_
#define WALRAS_CONFIG_LP_H_

#include <cstdint>
#include <vector>

#include "walras/caps.h"
#include "walras/item_set.h"
#include "walras/market.h"
#include "walras/rational.h"

namespace walras {

// One (buyer, bundle) variable of the configuration LP.
struct ConfigColumn {
  int buyer;
  ItemSet bundle;
  Rational value;
};

// The configuration LP of a market restricted to the items of `restriction`:
//
//   max  sum_{i,S} v_i(S) x_{i,S}
//   s.t. sum_S x_{i,S} <= 1            for every buyer i
//        sum_{i, S containing j} x_{i,S} <= 1   for every item j in M'
//        x >= 0
//
// Rows are ordered buyers first, then the items of M' in increasing index.
class ConfigLP {
 public:
  ConfigLP(const Market& market, ItemSet restriction,
           std::vector<ConfigColumn> columns);

  const Market& market() const { return *market_; }
  ItemSet restriction() const { return restriction_; }
  const std::vector<ConfigColumn>& columns() const { return columns_; }

 private:
  const Market* market_;  // not owned; must outlive the LP
  ItemSet restriction_;
  std::vector<ConfigColumn> columns_;
};

// A fractional allocation entry x_{i,S}.
struct FractionalEntry {
  int buyer;
  ItemSet bundle;
  Rational weight;
};

enum class LPStatus { kOptimal, kInfeasibleModelError };

struct LPSolution {
  LPStatus status = LPStatus::kOptimal;
  ItemSet restriction;
  Rational optimal_value;
  // Nonzero primal entries, buyer-major then ascending bundle mask.
  std::vector<FractionalEntry> primal;
  // u_i per buyer.
  std::vector<Rational> buyer_duals;
  // p_j per item; zero outside the restriction.
  std::vector<Rational> item_duals;
  int columns = 0;           // columns in the final (restricted) LP
  std::int64_t pivots = 0;   // simplex pivots, all rounds
  int rounds = 1;            // pricing rounds (column generation)
};

// One column per (buyer, nonempty S within M'), buyer-major, ascending mask.
// Single-minded buyers contribute only their desired set (when it lies in
// M'): every other column is worth 0 or is a costlier copy of it.
// Throws CapExceeded if a non-single-minded buyer needs 2^|M'| columns with
// |M'| > caps.lp_column_items.
ConfigLP BuildConfigLP(const Market& market, ItemSet restriction,
                       const Caps& caps = {});

// Solves the LP exactly with all columns present.
LPSolution SolveExact(const ConfigLP& lp);

// Column generation: starts from singleton and full-M' columns per buyer and
// adds the best response of every buyer whose demand utility at the current
// item duals exceeds its buyer dual.
LPSolution SolveColumnGeneration(const Market& market, ItemSet restriction,
                                 const Caps& caps = {});

// Exact fractional optimum, choosing the full build when it fits and column
// generation otherwise.
LPSolution SolveFractional(const Market& market, ItemSet restriction,
                           const Caps& caps = {});

// Checks both constraint families and x >= 0 exactly, and that every bundle
// lies within the restriction.
bool IsConfigFeasible(const Market& market, ItemSet restriction,
                      const std::vector<FractionalEntry>& entries);

// sum x_{i,S} v_i(S).
Rational FractionalWelfare(const Market& market,
                           const std::vector<FractionalEntry>& entries);

}  // namespace walras

#endif  // WALRAS_CONFIG_LP_H_
