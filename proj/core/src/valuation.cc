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

#include "walras/valuation.h"

#include <array>
#include <string>
#include <utility>

#include "walras/errors.h"
#include "walras/market.h"

namespace walras {
namespace {

// Largest m for which an explicit table is accepted (2^m entries).
constexpr int kMaxExplicitItems = 20;

void CheckValues(const std::vector<Rational>& values, int m,
                 std::string_view what) {
  if (static_cast<int>(values.size()) != m) {
    throw InputError(std::string(what) + ": expected " + std::to_string(m) +
                     " values, got " + std::to_string(values.size()));
  }
  for (const Rational& v : values) {
    if (v.sign() < 0) throw InputError(std::string(what) + ": negative value");
  }
}

void CheckPartition(const std::vector<ItemSet>& buckets, int m,
                    bool allow_uneven, std::string_view what) {
  if (buckets.empty()) throw InputError(std::string(what) + ": no buckets");
  ItemSet seen;
  for (ItemSet b : buckets) {
    if (b.empty()) throw InputError(std::string(what) + ": empty bucket");
    if (!b.IsSubsetOf(ItemSet::Full(m))) {
      throw InputError(std::string(what) + ": bucket item out of range");
    }
    if (b.Intersects(seen)) {
      throw InputError(std::string(what) + ": buckets overlap");
    }
    seen = seen | b;
    if (!allow_uneven && b.size() != buckets.front().size()) {
      throw InputError(std::string(what) + ": buckets of unequal size");
    }
  }
  if (seen != ItemSet::Full(m)) {
    throw InputError(std::string(what) + ": buckets do not cover all items");
  }
}

Rational SumOver(const std::vector<Rational>& values, ItemSet s) {
  Rational total;
  s.ForEach([&](int j) { total += values[static_cast<std::size_t>(j)]; });
  return total;
}

int XosOfSize(int z) { return z == 1 ? 2 : z; }

struct Validator {
  int m;

  void operator()(const Additive& a) const { CheckValues(a.values, m, "additive"); }
  void operator()(const UnitDemand& u) const {
    CheckValues(u.values, m, "unit_demand");
  }
  void operator()(const BudgetAdditive& b) const {
    CheckValues(b.values, m, "budget_additive");
    if (b.budget.sign() < 0) throw InputError("budget_additive: negative budget");
  }
  void operator()(const XosExplicit& x) const {
    if (x.clauses.empty()) throw InputError("xos: no clauses");
    for (const auto& c : x.clauses) CheckValues(c, m, "xos clause");
  }
  void operator()(const SingleMinded& s) const {
    if (s.desired.empty()) throw InputError("single_minded: empty desired set");
    if (!s.desired.IsSubsetOf(ItemSet::Full(m))) {
      throw InputError("single_minded: desired item out of range");
    }
    if (s.value.sign() < 0) throw InputError("single_minded: negative value");
  }
  void operator()(const SymmetricTable& t) const {
    if (static_cast<int>(t.by_size.size()) != m + 1) {
      throw InputError("symmetric: expected " + std::to_string(m + 1) +
                       " entries");
    }
    if (!t.by_size.front().is_zero()) {
      throw InputError("symmetric: value of the empty set must be 0");
    }
    for (std::size_t z = 1; z < t.by_size.size(); ++z) {
      if (t.by_size[z] < t.by_size[z - 1]) {
        throw InputError("symmetric: values must be nondecreasing in size");
      }
    }
  }
  void operator()(const HPlusEpsilon& h) const {
    if (h.epsilon.sign() < 0) throw InputError("h_plus_eps: negative epsilon");
    if (!h.inner) throw InputError("h_plus_eps: missing inner valuation");
    if (h.inner->num_items() != m) {
      throw InputError("h_plus_eps: inner valuation has a different universe");
    }
  }
  void operator()(const BucketXos& b) const {
    CheckPartition(b.buckets, m, b.allow_uneven, "bucket_xos");
  }
  void operator()(const BucketUnit& b) const {
    CheckPartition(b.buckets, m, b.allow_uneven, "bucket_unit");
  }
  void operator()(const ExplicitTable& t) const {
    if (m > kMaxExplicitItems) {
      throw CapExceeded("explicit: table valuations are limited to " +
                        std::to_string(kMaxExplicitItems) + " items");
    }
    if (t.values.size() != (std::size_t{1} << m)) {
      throw InputError("explicit: expected 2^" + std::to_string(m) +
                       " entries");
    }
    if (!t.values.front().is_zero()) {
      throw InputError("explicit: value of the empty set must be 0");
    }
    for (const Rational& v : t.values) {
      if (v.sign() < 0) throw InputError("explicit: negative value");
    }
  }
};

struct Evaluator {
  ItemSet s;

  Rational operator()(const Additive& a) const { return SumOver(a.values, s); }
  Rational operator()(const UnitDemand& u) const {
    Rational best;
    s.ForEach([&](int j) { best = Max(best, u.values[static_cast<std::size_t>(j)]); });
    return best;
  }
  Rational operator()(const BudgetAdditive& b) const {
    return Min(SumOver(b.values, s), b.budget);
  }
  Rational operator()(const XosExplicit& x) const {
    Rational best;
    for (const auto& c : x.clauses) best = Max(best, SumOver(c, s));
    return best;
  }
  Rational operator()(const SingleMinded& sm) const {
    return sm.desired.IsSubsetOf(s) ? sm.value : Rational();
  }
  Rational operator()(const SymmetricTable& t) const {
    return t.by_size[static_cast<std::size_t>(s.size())];
  }
  Rational operator()(const HPlusEpsilon& h) const {
    Rational v = HValue(s.size());
    if (!h.epsilon.is_zero()) v += h.epsilon * h.inner->Value(s);
    return v;
  }
  Rational operator()(const BucketXos& b) const {
    int best = 0;
    for (ItemSet bucket : b.buckets) {
      best = std::max(best, XosOfSize((s & bucket).size()));
    }
    return Rational(best);
  }
  Rational operator()(const BucketUnit& b) const {
    const auto k = static_cast<std::int64_t>(b.buckets.size());
    std::int64_t hit = 0;
    for (ItemSet bucket : b.buckets) hit += (s & bucket).empty() ? 0 : 1;
    return Rational(hit * (k - 1), k);
  }
  Rational operator()(const ExplicitTable& t) const {
    return t.values[static_cast<std::size_t>(s.bits())];
  }
};

}  // namespace

std::string_view KindName(ValuationKind kind) {
  switch (kind) {
    case ValuationKind::kAdditive: return "additive";
    case ValuationKind::kUnitDemand: return "unit_demand";
    case ValuationKind::kBudgetAdditive: return "budget_additive";
    case ValuationKind::kXosExplicit: return "xos";
    case ValuationKind::kSingleMinded: return "single_minded";
    case ValuationKind::kSymmetricTable: return "symmetric";
    case ValuationKind::kHPlusEpsilon: return "h_plus_eps";
    case ValuationKind::kBucketXos: return "bucket_xos";
    case ValuationKind::kBucketUnit: return "bucket_unit";
    case ValuationKind::kExplicitTable: return "explicit";
  }
  return "unknown";
}

Valuation::Valuation(int num_items, Spec spec)
    : num_items_(num_items), spec_(std::move(spec)) {
  if (num_items < 0 || num_items > kMaxItems) {
    throw InputError("item count " + std::to_string(num_items) +
                     " outside [0, " + std::to_string(kMaxItems) + "]");
  }
  std::visit(Validator{num_items_}, spec_);
}

Rational Valuation::Value(ItemSet s) const {
  return std::visit(Evaluator{s}, spec_);
}

Rational Valuation::Marginal(int item, ItemSet s) const {
  if (s.contains(item)) {
    throw PreconditionError("marginal: item " + std::to_string(item) +
                            " already in the set");
  }
  return Value(s.With(item)) - Value(s);
}

Rational HValue(int z) {
  static const std::array<Rational, kMaxItems + 1> table = [] {
    std::array<Rational, kMaxItems + 1> t;
    Rational harmonic;
    for (int i = 1; i <= kMaxItems; ++i) {
      harmonic += Rational(1, i);
      t[static_cast<std::size_t>(i)] = Rational(i) + harmonic;
    }
    return t;
  }();
  if (z >= 0 && z <= kMaxItems) return table[static_cast<std::size_t>(z)];
  if (z < 0) throw PreconditionError("h: negative argument");
  Rational v(z);
  for (int i = 1; i <= z; ++i) v += Rational(1, i);
  return v;
}

Valuation MakeAdditive(std::vector<Rational> values) {
  const int m = static_cast<int>(values.size());
  return Valuation(m, Additive{std::move(values)});
}

Valuation MakeUnitDemand(std::vector<Rational> values) {
  const int m = static_cast<int>(values.size());
  return Valuation(m, UnitDemand{std::move(values)});
}

Valuation MakeBudgetAdditive(std::vector<Rational> values, Rational budget) {
  const int m = static_cast<int>(values.size());
  return Valuation(m, BudgetAdditive{std::move(values), std::move(budget)});
}

Valuation MakeXos(int num_items, std::vector<std::vector<Rational>> clauses) {
  return Valuation(num_items, XosExplicit{std::move(clauses)});
}

Valuation MakeSingleMinded(int num_items, ItemSet desired, Rational value) {
  return Valuation(num_items, SingleMinded{desired, std::move(value)});
}

Valuation MakeSymmetric(std::vector<Rational> by_size) {
  const int m = static_cast<int>(by_size.size()) - 1;
  return Valuation(m, SymmetricTable{std::move(by_size)});
}

Valuation MakeHPlusEpsilon(Rational epsilon, Valuation inner) {
  const int m = inner.num_items();
  return Valuation(m, HPlusEpsilon{std::move(epsilon),
                                   std::make_shared<const Valuation>(
                                       std::move(inner))});
}

Valuation MakeBucketXos(int num_items, std::vector<ItemSet> buckets) {
  return Valuation(num_items, BucketXos{std::move(buckets)});
}

Valuation MakeBucketUnit(int num_items, std::vector<ItemSet> buckets) {
  return Valuation(num_items, BucketUnit{std::move(buckets)});
}

Valuation MakeExplicit(int num_items, std::vector<Rational> values) {
  return Valuation(num_items, ExplicitTable{std::move(values)});
}

std::vector<ItemSet> ConsecutiveBuckets(int k) {
  std::vector<ItemSet> buckets;
  for (int b = 0; b < k; ++b) {
    ItemSet bucket;
    for (int j = 0; j < k; ++j) bucket = bucket.With(b * k + j);
    buckets.push_back(bucket);
  }
  return buckets;
}

// ---------------------------------------------------------------------------
// Market, PriceVector, Allocation

Market::Market(int num_items, std::vector<Valuation> buyers)
    : num_items_(num_items), buyers_(std::move(buyers)) {
  if (num_items < 0 || num_items > kMaxItems) {
    throw InputError("item count outside [0, 64]");
  }
  if (buyers_.empty()) throw InputError("market needs at least one buyer");
  for (const Valuation& v : buyers_) {
    if (v.num_items() != num_items) {
      throw InputError("buyer valuation over " + std::to_string(v.num_items()) +
                       " items in a market of " + std::to_string(num_items));
    }
  }
}

bool Market::AllOfKind(ValuationKind kind) const {
  for (const Valuation& v : buyers_) {
    if (v.kind() != kind) return false;
  }
  return true;
}

PriceVector::PriceVector(std::vector<Rational> prices)
    : prices_(std::move(prices)) {
  for (const Rational& p : prices_) {
    if (p.sign() < 0) throw InputError("negative price");
  }
}

void PriceVector::Set(int j, Rational price) {
  if (price.sign() < 0) throw InputError("negative price");
  prices_[static_cast<std::size_t>(j)] = std::move(price);
}

Rational PriceVector::Total(ItemSet s) const { return SumOver(prices_, s); }

Allocation::Allocation(int num_items, std::vector<ItemSet> bundles)
    : bundles_(std::move(bundles)) {
  ItemSet seen;
  for (ItemSet b : bundles_) {
    if (!b.IsSubsetOf(ItemSet::Full(num_items))) {
      throw InputError("allocation: item out of range");
    }
    if (b.Intersects(seen)) throw InputError("allocation: bundles overlap");
    seen = seen | b;
  }
  unsold_ = seen.Complement(num_items);
}

Allocation Allocation::Empty(int num_items, int num_buyers) {
  return Allocation(num_items,
                    std::vector<ItemSet>(static_cast<std::size_t>(num_buyers)));
}

ItemSet Allocation::sold() const {
  ItemSet s;
  for (ItemSet b : bundles_) s = s | b;
  return s;
}

Rational Welfare(const Market& market, const Allocation& allocation) {
  Rational total;
  for (int i = 0; i < market.num_buyers(); ++i) {
    total += market.buyer(i).Value(allocation.bundle(i));
  }
  return total;
}

}  // namespace walras
