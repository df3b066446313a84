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

#ifndef WALRAS_GENERATORS_H_
#define WALRAS_GENERATORS_H_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "walras/caps.h"
#include "walras/market.h"
#include "walras/rational.h"

namespace walras {

// Two buyers over m items: buyer 1 unit-demand with every item worth
// 1/2 - delta, buyer 2 symmetric with value max(1, z/2) at size z >= 1.
// Requires m >= 2 and 0 < delta < 1/(2(m-1)); the default delta is
// 1/(4(m-1)).
Market GenXosLower(int m, std::optional<Rational> delta = std::nullopt);
Rational DefaultXosDelta(int m);

// m = k^2 items in k consecutive buckets of k items. Buyer 1 is
// h(|S|) + eps * max_b Xos(S & B_b), buyer 2 is
// h(|S|) + eps * sum_b Unit(S & B_b). The default eps is half the smaller of
// the two submodularity bounds; an explicit eps must lie in [0, that bound).
Market GenSubmodularLower(int k, std::optional<Rational> epsilon = std::nullopt,
                          const Caps& caps = {});
// Half the smaller submodularity bound of the two bucket functions.
Rational DefaultBucketEpsilon(int k, const Caps& caps = {});

// n single-minded buyers over the m = n(n-1)/2 pairs (a, b) with
// a, b >= 1 and a + b <= n, indexed lexicographically. Buyer i < n wants
// {(a, b) : a = i or b = n - i} at value n + 1; buyer n wants everything at
// value m. Requires n >= 3.
Market GenSingleMindedLower(int n);
// The (a, b) label of every item of GenSingleMindedLower(n).
std::vector<std::pair<int, int>> SingleMindedLabels(int n);

enum class RandomClass {
  kAdditive,
  kUnitDemand,
  kBudgetAdditive,
  kXos,
  kSingleMinded,
  kSymmetric,
  kExplicit,
  kMixed,  // each buyer drawn from the classes above
};

struct RandomMarketParams {
  std::uint64_t seed = 0;
  int n = 2;
  int m = 3;
  RandomClass mix = RandomClass::kMixed;
  // Values are drawn as a / d with 0 <= a <= value_range and d in {1, 2}.
  int value_range = 8;
};

// Deterministic for a fixed parameter set. Explicit tables are made monotone
// by cumulative maxima over subsets (and 0 at the empty set); budget-additive
// values are capped at the budget.
Market GenRandomMarket(const RandomMarketParams& params, const Caps& caps = {});

// Tagged parameters for the command-line "gen" dispatch.
struct GeneratorParams {
  enum class Variant { kXos, kSubmodular, kSingleMinded, kRandom };
  Variant variant = Variant::kRandom;
  int k = 2;
  int m = 3;
  int n = 2;
  std::optional<Rational> delta;
  std::optional<Rational> epsilon;
  RandomMarketParams random;
};
Market Generate(const GeneratorParams& params, const Caps& caps = {});

}  // namespace walras

#endif  // WALRAS_GENERATORS_H_
