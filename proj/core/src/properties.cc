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

#include "walras/properties.h"

#include <string>

#include "walras/demand.h"
#include "walras/errors.h"

namespace walras {
namespace {

void CheckSweep(const Valuation& v, const Caps& caps, const char* what) {
  if (v.num_items() > caps.sweep_items) {
    throw CapExceeded(std::string(what) + " over " +
                      std::to_string(v.num_items()) +
                      " items exceeds the sweep cap of " +
                      std::to_string(caps.sweep_items));
  }
}

}  // namespace

bool IsMonotone(const Valuation& v, const Caps& caps) {
  CheckSweep(v, caps, "monotonicity check");
  const ValueTable table(v, caps);
  const int m = v.num_items();
  if (!table[ItemSet()].is_zero()) return false;
  bool ok = true;
  ForEachSubset(ItemSet::Full(m), [&](ItemSet s) {
    for (int j = 0; j < m && ok; ++j) {
      if (!s.contains(j) && table[s.With(j)] < table[s]) ok = false;
    }
    return ok;
  });
  return ok;
}

SubmodularityCheck CheckSubmodular(const Valuation& v, const Caps& caps) {
  CheckSweep(v, caps, "submodularity check");
  const ValueTable table(v, caps);
  const int m = v.num_items();
  SubmodularityCheck result;
  Rational small;
  Rational large;
  ForEachSubset(ItemSet::Full(m), [&](ItemSet base) {
    const Rational& vb = table[base];
    for (int i = 0; i < m; ++i) {
      if (base.contains(i)) continue;
      const ItemSet with_i = base.With(i);
      small = table[with_i];
      small -= vb;
      for (int j = i + 1; j < m; ++j) {
        if (base.contains(j)) continue;
        // The condition is symmetric in (i, j), so i < j suffices.
        large = table[with_i.With(j)];
        large -= table[base.With(j)];
        if (large > small) {
          result.submodular = false;
          result.witness = SubmodularityViolation{base, i, j, small, large};
          return false;
        }
      }
    }
    return true;
  });
  return result;
}

Rational MaxValue(const Valuation& f, const Caps& caps) {
  if (f.num_items() <= caps.sweep_items) {
    Rational best;
    ForEachSubset(ItemSet::Full(f.num_items()),
                  [&](ItemSet s) { best = Max(best, f.Value(s)); });
    return best;
  }
  if (f.kind() == ValuationKind::kExplicitTable) {
    throw CapExceeded("maximum of an explicit table above the sweep cap");
  }
  return f.Value(ItemSet::Full(f.num_items()));
}

std::optional<Rational> EpsilonBound(const Valuation& f, const Caps& caps) {
  const Rational top = MaxValue(f, caps);
  if (top.is_zero()) return std::nullopt;
  const std::int64_t m = f.num_items();
  return Rational(1) / (Rational(2 * (m + 1) * (m + 2)) * top);
}

}  // namespace walras
