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

#ifndef WALRAS_PROPERTIES_H_
#define WALRAS_PROPERTIES_H_

#include <optional>

#include "walras/caps.h"
#include "walras/item_set.h"
#include "walras/rational.h"
#include "walras/valuation.h"

namespace walras {

// Exhaustive check of v(empty) = 0 and v(S) <= v(S + j) for every S and j.
bool IsMonotone(const Valuation& v, const Caps& caps = {});

// A violation of decreasing marginals:
//   v(base + {i, j}) - v(base + {j}) > v(base + {i}) - v(base).
struct SubmodularityViolation {
  ItemSet base;
  int first;   // i
  int second;  // j
  Rational marginal_small;  // v(i | base)
  Rational marginal_large;  // v(i | base + j)
};

struct SubmodularityCheck {
  bool submodular = true;
  // The first violation in ascending (base mask, i, j) order, i < j.
  std::optional<SubmodularityViolation> witness;
};

// Exhaustive over all bases and item pairs outside the base.
SubmodularityCheck CheckSubmodular(const Valuation& v, const Caps& caps = {});
inline bool IsSubmodular(const Valuation& v, const Caps& caps = {}) {
  return CheckSubmodular(v, caps).submodular;
}

// Largest value of f over all bundles. Enumerated exhaustively within
// caps.sweep_items; above that, structured (monotone by construction) kinds
// use f(M).
Rational MaxValue(const Valuation& f, const Caps& caps = {});

// 1 / (2 (m+1) (m+2) max_S f(S)): for every 0 <= eps strictly below this,
// h(|S|) + eps * f(S) is submodular. nullopt ("unbounded") when f is
// identically zero.
std::optional<Rational> EpsilonBound(const Valuation& f, const Caps& caps = {});

}  // namespace walras

#endif  // WALRAS_PROPERTIES_H_
