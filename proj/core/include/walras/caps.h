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

#ifndef WALRAS_CAPS_H_
#define WALRAS_CAPS_H_

#include <cstdint>

namespace walras {

// Size limits for the exhaustive procedures. Every operation that enumerates
// subsets or allocations checks the relevant field and throws CapExceeded
// instead of running away.
struct Caps {
  // Largest item count for a single demand / best-response enumeration.
  int demand_items = 20;
  // Largest item count for all-subset sweeps (monotonicity, submodularity,
  // value tables, best-stable search over restrictions).
  int sweep_items = 16;
  // Largest restriction size for which the configuration LP is built with
  // every column up front.
  int lp_column_items = 14;
  // Nominal (n+1)^|M'| search-tree size above which integral brute force
  // refuses to start.
  std::uint64_t brute_force_nodes = 50'000'000;

  // Applies a single "--cap m" style override to every item cap.
  static Caps WithItemCap(int m) {
    Caps caps;
    caps.demand_items = m;
    caps.sweep_items = m;
    caps.lp_column_items = m;
    return caps;
  }
};

}  // namespace walras

#endif  // WALRAS_CAPS_H_
