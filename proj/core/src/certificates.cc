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

#include "walras/certificates.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "walras/errors.h"

namespace walras {
namespace {

struct BucketInstance {
  Rational epsilon;
  std::vector<ItemSet> buckets;
};

BucketInstance MatchBucketInstance(const Market& market) {
  auto fail = [] {
    throw PreconditionError(
        "expected buyer 1 = h + eps * bucket_xos and buyer 2 = h + eps * "
        "bucket_unit over the same buckets");
  };
  if (market.num_buyers() != 2) fail();
  const auto* h1 = market.buyer(0).As<HPlusEpsilon>();
  const auto* h2 = market.buyer(1).As<HPlusEpsilon>();
  if (!h1 || !h2 || h1->epsilon != h2->epsilon || h1->epsilon.sign() <= 0) fail();
  const auto* f1 = h1->inner->As<BucketXos>();
  const auto* f2 = h2->inner->As<BucketUnit>();
  if (!f1 || !f2 || f1->buckets != f2->buckets) fail();
  for (ItemSet b : f1->buckets) {
    if (b.size() != static_cast<int>(f1->buckets.size())) fail();
  }
  return {h1->epsilon, f1->buckets};
}

}  // namespace

BucketCertificate BucketFractionalCertificate(const Market& market,
                                              ItemSet sold) {
  const BucketInstance inst = MatchBucketInstance(market);
  if (!sold.IsSubsetOf(market.all_items())) {
    throw PreconditionError("sold set leaves the market");
  }
  BucketCertificate c;
  c.sold = sold;
  c.k = static_cast<int>(inst.buckets.size());
  c.epsilon = inst.epsilon;
  if (sold.size() < 4 * c.k) {
    throw PreconditionError("certificate needs |K| >= 4k = " +
                            std::to_string(4 * c.k) + ", got " +
                            std::to_string(sold.size()));
  }
  std::size_t fullest = 0;
  for (std::size_t b = 0; b < inst.buckets.size(); ++b) {
    const int here = (sold & inst.buckets[b]).size();
    if (here > 0) ++c.nonempty_buckets;
    if (here > (sold & inst.buckets[fullest]).size()) fullest = b;
  }
  c.s1 = sold & inst.buckets[fullest];
  c.t = c.s1.size();
  if (c.t < 4) throw PreconditionError("certificate needs t >= 4");
  for (std::size_t b = 0; b < inst.buckets.size(); ++b) {
    const ItemSet here = sold & inst.buckets[b];
    if (b != fullest && !here.empty()) c.s2 = c.s2.With(here.First());
  }

  const int size2 = (sold.size() + 1) / 2;
  const int j2_size = size2 - c.s2.size();
  const ItemSet rest = sold - c.s1 - c.s2;
  int filled = 0;
  rest.ForEach([&](int j) {
    if (filled++ < j2_size) {
      c.j2 = c.j2.With(j);
    } else {
      c.j1 = c.j1.With(j);
    }
  });
  if (c.j2.size() <= c.k) {
    throw std::logic_error("bucket certificate: |J2| must exceed k");
  }
  const std::vector<int> s1_items = c.s1.Indices();
  const std::vector<int> j2_items = c.j2.Indices();
  for (int q = 0; q < c.t; ++q) {
    c.t_set = c.t_set.With(j2_items[static_cast<std::size_t>(q)]);
    c.pi.emplace_back(s1_items[static_cast<std::size_t>(q)],
                      j2_items[static_cast<std::size_t>(q)]);
  }

  const Rational t(c.t);
  c.y.push_back({0, c.s1 | c.j1, (t - Rational(2)) / (t - Rational(1))});
  for (const auto& [j, image] : c.pi) {
    c.y.push_back({0, ItemSet::Singleton(j) | c.j1 | c.t_set.Without(image),
                   Rational(1) / (t * (t - Rational(1)))});
  }
  for (const auto& [j, image] : c.pi) {
    c.y.push_back({1, ItemSet::Singleton(j) | c.s2 | c.j2.Without(image),
                   Rational(1) / t});
  }
  if (!IsConfigFeasible(market, sold, c.y)) {
    throw std::logic_error("bucket certificate: fractional solution infeasible");
  }
  c.x = Allocation(market.num_items(), {c.s1 | c.j1, c.s2 | c.j2});
  c.welfare_y = FractionalWelfare(market, c.y);
  c.welfare_x = Welfare(market, c.x);
  c.bucket_gain = (c.welfare_y - c.welfare_x) / c.epsilon;
  c.gain_bound = Rational(1) - Rational(1, c.k) -
                 (t - Rational(2)) / (t - Rational(1));
  return c;
}

XosCertificate XosFractionalCertificate(const Market& market,
                                        const Rational& delta) {
  const int m = market.num_items();
  if (m <= 2) throw PreconditionError("xos certificate needs m > 2");
  if (delta.sign() <= 0 || delta >= Rational(1, 2 * (m - 1))) {
    throw PreconditionError("xos certificate needs 0 < delta < 1/(2(m-1))");
  }
  if (market.num_buyers() != 2) {
    throw PreconditionError("xos certificate needs two buyers");
  }
  const Rational unit = Rational(1, 2) - delta;
  for (int z = 1; z <= m; ++z) {
    const ItemSet prefix = ItemSet::Full(z);
    const Rational expected = Max(Rational(1), Rational(z, 2));
    if (market.buyer(0).Value(prefix) != unit ||
        market.buyer(1).Value(prefix) != expected) {
      throw PreconditionError("market is not the xos instance for this delta");
    }
  }
  XosCertificate c;
  c.m = m;
  c.delta = delta;
  for (int j = 0; j < m; ++j) c.y.push_back({0, ItemSet::Singleton(j), Rational(1, m)});
  for (int j = 0; j < m; ++j) {
    c.y.push_back({1, ItemSet::Singleton(j),
                   Rational(1, static_cast<std::int64_t>(m) * (m - 1))});
  }
  c.y.push_back({1, market.all_items(), Rational(m - 2, m - 1)});
  if (!IsConfigFeasible(market, market.all_items(), c.y)) {
    throw std::logic_error("xos certificate: fractional solution infeasible");
  }
  c.welfare_y = FractionalWelfare(market, c.y);
  if (c.welfare_y <= Rational(m, 2)) {
    throw std::logic_error("xos certificate does not beat m/2");
  }
  return c;
}

}  // namespace walras
