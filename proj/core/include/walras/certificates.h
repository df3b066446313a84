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

#ifndef WALRAS_CERTIFICATES_H_
#define WALRAS_CERTIFICATES_H_

#include <utility>
#include <vector>

#include "walras/config_lp.h"
#include "walras/item_set.h"
#include "walras/market.h"
#include "walras/rational.h"

namespace walras {

// Fractional allocation beating the reference integral allocation on a sold
// set K of the two-buyer bucket instance (see GenSubmodularLower).
struct BucketCertificate {
  ItemSet sold;  // K
  int k = 0;     // bucket count (= bucket size)
  int t = 0;     // sold items in the fullest bucket
  int nonempty_buckets = 0;
  ItemSet s1;  // sold items of the fullest bucket (first among ties)
  ItemSet s2;  // lowest sold item of every other nonempty bucket
  ItemSet j1;
  ItemSet j2;
  ItemSet t_set;                          // T within J2, |T| = t
  std::vector<std::pair<int, int>> pi;    // S1 -> T, index order
  std::vector<FractionalEntry> y;
  Allocation x;  // buyer 1: S1 + J1, buyer 2: S2 + J2
  Rational welfare_y;
  Rational welfare_x;
  Rational epsilon;
  // (welfare_y - welfare_x) / epsilon: the h(|.|) parts of both solutions
  // coincide, so this is the gain on the bucket functions f1, f2 alone.
  Rational bucket_gain;
  // 1 - 1/k - (t-2)/(t-1); bucket_gain is at least this.
  Rational gain_bound;
};

// Throws PreconditionError unless the market is a bucket instance (buyer 1
// h + eps * BucketXos, buyer 2 h + eps * BucketUnit over the same buckets),
// K lies in the market, |K| >= 4k and t >= 4. Leftover sold items fill J2 in
// index order up to ceil(|K|/2) - |S2| items, the rest go to J1. The
// fractional solution is checked feasible on K; an infeasible construction
// throws std::logic_error.
BucketCertificate BucketFractionalCertificate(const Market& market, ItemSet sold);

// Explicit fractional solution for the unit-demand / symmetric-XOS instance
// (see GenXosLower): x_{1,{j}} = 1/m, x_{2,{j}} = 1/(m(m-1)),
// x_{2,M} = (m-2)/(m-1).
struct XosCertificate {
  int m = 0;
  Rational delta;
  std::vector<FractionalEntry> y;
  Rational welfare_y;  // m/2 + 1/(2(m-1)) - delta
};

// Throws PreconditionError unless m > 2, 0 < delta < 1/(2(m-1)) and the
// market's buyers match the instance for delta.
XosCertificate XosFractionalCertificate(const Market& market,
                                        const Rational& delta);

}  // namespace walras

#endif  // WALRAS_CERTIFICATES_H_
