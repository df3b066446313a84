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

#include "walras/generators.h"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

#include "walras/errors.h"
#include "walras/properties.h"

namespace walras {
namespace {

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}
  // Uniform-ish integer in [0, bound); modulo keeps it platform independent.
  int Below(int bound) {
    return static_cast<int>(rng_() % static_cast<std::uint64_t>(bound));
  }
  Rational Value(int range) { return Rational(Below(range + 1), Below(2) + 1); }
  std::vector<Rational> Values(int m, int range) {
    std::vector<Rational> out;
    for (int j = 0; j < m; ++j) out.push_back(Value(range));
    return out;
  }

 private:
  std::mt19937_64 rng_;
};

Valuation RandomValuation(Draw& draw, RandomClass cls, int m, int range,
                          const Caps& caps) {
  switch (cls) {
    case RandomClass::kAdditive:
      return MakeAdditive(draw.Values(m, range));
    case RandomClass::kUnitDemand:
      return MakeUnitDemand(draw.Values(m, range));
    case RandomClass::kBudgetAdditive: {
      std::vector<Rational> values = draw.Values(m, range);
      const Rational budget(1 + draw.Below(range * std::max(1, m / 2) + 1));
      for (Rational& v : values) v = Min(v, budget);
      return MakeBudgetAdditive(std::move(values), budget);
    }
    case RandomClass::kXos: {
      std::vector<std::vector<Rational>> clauses;
      const int count = 1 + draw.Below(3);
      for (int c = 0; c < count; ++c) clauses.push_back(draw.Values(m, range));
      return MakeXos(m, std::move(clauses));
    }
    case RandomClass::kSingleMinded: {
      if (m == 0) return MakeAdditive({});
      ItemSet desired;
      while (desired.empty()) {
        for (int j = 0; j < m; ++j) {
          if (draw.Below(2) == 1) desired = desired.With(j);
        }
      }
      return MakeSingleMinded(m, desired, draw.Value(range));
    }
    case RandomClass::kSymmetric: {
      std::vector<Rational> by_size{Rational()};
      for (int z = 1; z <= m; ++z) by_size.push_back(by_size.back() + draw.Value(range));
      return MakeSymmetric(std::move(by_size));
    }
    case RandomClass::kExplicit: {
      if (m > caps.sweep_items) {
        throw CapExceeded("random explicit table over " + std::to_string(m) +
                          " items exceeds the sweep cap");
      }
      const std::size_t count = std::size_t{1} << m;
      std::vector<Rational> table(count);
      for (std::size_t s = 1; s < count; ++s) {
        table[s] = draw.Value(range * std::max(1, m / 2));
        for (std::uint64_t b = s; b != 0; b &= b - 1) {
          const std::size_t below = s & ~(b & -b);
          table[s] = Max(table[s], table[below]);
        }
      }
      return MakeExplicit(m, std::move(table));
    }
    case RandomClass::kMixed:
      break;
  }
  throw std::logic_error("unreachable random class");
}

}  // namespace

Rational DefaultXosDelta(int m) {
  return Rational(1, 4 * static_cast<std::int64_t>(m - 1));
}

Market GenXosLower(int m, std::optional<Rational> delta) {
  if (m < 2) throw PreconditionError("xos instance needs m >= 2");
  const Rational d = delta ? *delta : DefaultXosDelta(m);
  if (d.sign() <= 0 || d >= Rational(1, 2 * static_cast<std::int64_t>(m - 1))) {
    throw PreconditionError("xos instance needs 0 < delta < 1/(2(m-1))");
  }
  std::vector<Rational> by_size{Rational()};
  for (int z = 1; z <= m; ++z) by_size.push_back(Max(Rational(1), Rational(z, 2)));
  std::vector<Valuation> buyers;
  buyers.push_back(MakeUnitDemand(std::vector<Rational>(
      static_cast<std::size_t>(m), Rational(1, 2) - d)));
  buyers.push_back(MakeSymmetric(std::move(by_size)));
  return Market(m, std::move(buyers));
}

Rational DefaultBucketEpsilon(int k, const Caps& caps) {
  if (k < 2 || k * k > kMaxItems) {
    throw PreconditionError("bucket instance needs 2 <= k <= 8");
  }
  const int m = k * k;
  const auto b1 = EpsilonBound(MakeBucketXos(m, ConsecutiveBuckets(k)), caps);
  const auto b2 = EpsilonBound(MakeBucketUnit(m, ConsecutiveBuckets(k)), caps);
  return Min(*b1, *b2) / Rational(2);
}

Market GenSubmodularLower(int k, std::optional<Rational> epsilon,
                          const Caps& caps) {
  const Rational shared = DefaultBucketEpsilon(k, caps) * Rational(2);
  const Rational eps = epsilon ? *epsilon : shared / Rational(2);
  if (eps.sign() < 0 || eps >= shared) {
    throw PreconditionError("epsilon must lie in [0, " + shared.ToString() + ")");
  }
  const int m = k * k;
  std::vector<Valuation> buyers;
  buyers.push_back(MakeHPlusEpsilon(eps, MakeBucketXos(m, ConsecutiveBuckets(k))));
  buyers.push_back(MakeHPlusEpsilon(eps, MakeBucketUnit(m, ConsecutiveBuckets(k))));
  return Market(m, std::move(buyers));
}

std::vector<std::pair<int, int>> SingleMindedLabels(int n) {
  std::vector<std::pair<int, int>> labels;
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; a + b <= n; ++b) labels.emplace_back(a, b);
  }
  return labels;
}

Market GenSingleMindedLower(int n) {
  if (n < 3) throw PreconditionError("single-minded instance needs n >= 3");
  const auto labels = SingleMindedLabels(n);
  const int m = static_cast<int>(labels.size());
  if (m > kMaxItems) throw CapExceeded("single-minded instance exceeds 64 items");
  std::vector<Valuation> buyers;
  for (int i = 1; i < n; ++i) {
    ItemSet want;
    for (int j = 0; j < m; ++j) {
      const auto [a, b] = labels[static_cast<std::size_t>(j)];
      if (a == i || b == n - i) want = want.With(j);
    }
    buyers.push_back(MakeSingleMinded(m, want, Rational(n + 1)));
  }
  buyers.push_back(MakeSingleMinded(m, ItemSet::Full(m), Rational(m)));
  return Market(m, std::move(buyers));
}

Market GenRandomMarket(const RandomMarketParams& params, const Caps& caps) {
  if (params.n < 1) throw PreconditionError("random market needs n >= 1");
  if (params.m < 0 || params.m > caps.sweep_items) {
    throw CapExceeded("random market size outside [0, sweep cap]");
  }
  if (params.value_range < 1) throw PreconditionError("value range must be >= 1");
  Draw draw(params.seed);
  std::vector<Valuation> buyers;
  for (int i = 0; i < params.n; ++i) {
    RandomClass cls = params.mix;
    if (cls == RandomClass::kMixed) cls = static_cast<RandomClass>(draw.Below(7));
    buyers.push_back(RandomValuation(draw, cls, params.m, params.value_range, caps));
  }
  return Market(params.m, std::move(buyers));
}

Market Generate(const GeneratorParams& params, const Caps& caps) {
  switch (params.variant) {
    case GeneratorParams::Variant::kXos:
      return GenXosLower(params.m, params.delta);
    case GeneratorParams::Variant::kSubmodular:
      return GenSubmodularLower(params.k, params.epsilon, caps);
    case GeneratorParams::Variant::kSingleMinded:
      return GenSingleMindedLower(params.n);
    case GeneratorParams::Variant::kRandom:
      return GenRandomMarket(params.random, caps);
  }
  throw std::logic_error("unreachable generator variant");
}

}  // namespace walras
