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

#ifndef WALRAS_VALUATION_H_
#define WALRAS_VALUATION_H_

#include <memory>
#include <string_view>
#include <variant>
#include <vector>

#include "walras/item_set.h"
#include "walras/rational.h"

namespace walras {

class Valuation;

// v(S) = sum of per-item values.
struct Additive {
  std::vector<Rational> values;
};

// v(S) = max per-item value in S.
struct UnitDemand {
  std::vector<Rational> values;
};

// v(S) = min(sum of per-item values, budget).
struct BudgetAdditive {
  std::vector<Rational> values;
  Rational budget;
};

// v(S) = max over clauses of the clause's additive value of S.
struct XosExplicit {
  std::vector<std::vector<Rational>> clauses;
};

// v(S) = value if desired is a subset of S, else 0.
struct SingleMinded {
  ItemSet desired;
  Rational value;
};

// v(S) = by_size[|S|]; by_size has m+1 entries.
struct SymmetricTable {
  std::vector<Rational> by_size;
};

// v(S) = h(|S|) + epsilon * inner(S), with h(z) = z + (1 + 1/2 + ... + 1/z).
struct HPlusEpsilon {
  Rational epsilon;
  std::shared_ptr<const Valuation> inner;
};

// f(S) = max over buckets B of Xos(S & B), where Xos(T) is 0 on the empty
// set, 2 on singletons and |T| otherwise.
struct BucketXos {
  std::vector<ItemSet> buckets;
  // Equal bucket sizes are required unless this is set.
  bool allow_uneven = false;
};

// f(S) = sum over buckets B of Unit(S & B), where Unit(T) = 1 - 1/k for
// nonempty T and k is the number of buckets.
struct BucketUnit {
  std::vector<ItemSet> buckets;
  bool allow_uneven = false;
};

// Arbitrary table indexed by subset mask; 2^m entries.
struct ExplicitTable {
  std::vector<Rational> values;
};

enum class ValuationKind {
  kAdditive,
  kUnitDemand,
  kBudgetAdditive,
  kXosExplicit,
  kSingleMinded,
  kSymmetricTable,
  kHPlusEpsilon,
  kBucketXos,
  kBucketUnit,
  kExplicitTable,
};

std::string_view KindName(ValuationKind kind);

// An immutable, validated valuation over items {0, ..., m-1}. Cheap to copy:
// nested valuations are shared.
class Valuation {
 public:
  using Spec = std::variant<Additive, UnitDemand, BudgetAdditive, XosExplicit,
                            SingleMinded, SymmetricTable, HPlusEpsilon,
                            BucketXos, BucketUnit, ExplicitTable>;

  // Validates the parameters against m and throws InputError on a malformed
  // spec (wrong list lengths, negative values, non-partition buckets, ...).
  Valuation(int num_items, Spec spec);

  int num_items() const { return num_items_; }
  const Spec& spec() const { return spec_; }
  ValuationKind kind() const { return static_cast<ValuationKind>(spec_.index()); }
  template <typename T>
  const T* As() const {
    return std::get_if<T>(&spec_);
  }

  // Exact value of the bundle. S must lie within the universe.
  Rational Value(ItemSet s) const;
  // v(S + j) - v(S); throws PreconditionError if j is already in S.
  Rational Marginal(int item, ItemSet s) const;

 private:
  int num_items_;
  Spec spec_;
};

// h(z) = z + sum_{i=1..z} 1/i.
Rational HValue(int z);

Valuation MakeAdditive(std::vector<Rational> values);
Valuation MakeUnitDemand(std::vector<Rational> values);
Valuation MakeBudgetAdditive(std::vector<Rational> values, Rational budget);
Valuation MakeXos(int num_items, std::vector<std::vector<Rational>> clauses);
Valuation MakeSingleMinded(int num_items, ItemSet desired, Rational value);
Valuation MakeSymmetric(std::vector<Rational> by_size);
Valuation MakeHPlusEpsilon(Rational epsilon, Valuation inner);
Valuation MakeBucketXos(int num_items, std::vector<ItemSet> buckets);
Valuation MakeBucketUnit(int num_items, std::vector<ItemSet> buckets);
Valuation MakeExplicit(int num_items, std::vector<Rational> values);

// Consecutive index blocks {0..k-1}, {k..2k-1}, ... covering k*k items.
std::vector<ItemSet> ConsecutiveBuckets(int k);

}  // namespace walras

#endif  // WALRAS_VALUATION_H_
