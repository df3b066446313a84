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

#include <gtest/gtest.h>

#include "walras/config_lp.h"
#include "walras/errors.h"
#include "walras/generators.h"

namespace walras {
namespace {

TEST(XosCertificateTest, KnownValues) {
  const XosCertificate five = XosFractionalCertificate(GenXosLower(5, Rational(1, 100)), Rational(1, 100));
  EXPECT_EQ(five.welfare_y, Rational(523, 200));
  const Market three = GenXosLower(3, Rational(1, 100));
  const XosCertificate c = XosFractionalCertificate(three, Rational(1, 100));
  EXPECT_EQ(c.welfare_y, Rational(87, 50));
  EXPECT_TRUE(IsConfigFeasible(three, three.all_items(), c.y));
  EXPECT_EQ(FractionalWelfare(three, c.y), c.welfare_y);
}

TEST(XosCertificateTest, Preconditions) {
  const Market market = GenXosLower(5, Rational(1, 100));
  EXPECT_THROW(XosFractionalCertificate(market, Rational(1, 8)), PreconditionError);
  EXPECT_THROW(XosFractionalCertificate(market, Rational(1, 50)), PreconditionError);
  EXPECT_THROW(XosFractionalCertificate(GenXosLower(2), DefaultXosDelta(2)), PreconditionError);
}

TEST(BucketCertificateTest, FourBucketsFullSet) {
  const Market market = GenSubmodularLower(4);
  const BucketCertificate c = BucketFractionalCertificate(market, market.all_items());
  EXPECT_EQ(c.t, 4);
  EXPECT_EQ(c.gain_bound, Rational(1, 12));
  EXPECT_GE(c.bucket_gain, c.gain_bound);
  EXPECT_EQ(c.welfare_y - c.welfare_x, c.epsilon * c.bucket_gain);
  EXPECT_TRUE(IsConfigFeasible(market, market.all_items(), c.y));
  EXPECT_EQ(c.s1.size(), 4);
  EXPECT_EQ(c.s2.size(), 3);
  EXPECT_EQ(c.t_set.size(), 4);
  EXPECT_TRUE(c.t_set.IsSubsetOf(c.j2));
  EXPECT_EQ((c.s1 | c.s2 | c.j1 | c.j2), market.all_items());
  EXPECT_EQ(c.pi.size(), 4U);
}

TEST(BucketCertificateTest, FiveBucketsFullSet) {
  const Market market = GenSubmodularLower(5);
  const BucketCertificate c = BucketFractionalCertificate(market, market.all_items());
  EXPECT_EQ(c.gain_bound, Rational(1, 20));
  EXPECT_GE(c.bucket_gain, c.gain_bound);
  EXPECT_GT(c.welfare_y, c.welfare_x);
  EXPECT_TRUE(IsConfigFeasible(market, market.all_items(), c.y));
}

TEST(BucketCertificateTest, TooFewItemsRejected) {
  const Market market = GenSubmodularLower(4);
  const ItemSet k = market.all_items() - ItemSet::Singleton(15);
  EXPECT_THROW(BucketFractionalCertificate(market, k), PreconditionError);
  EXPECT_THROW(BucketFractionalCertificate(GenXosLower(16), ItemSet::Full(16)), PreconditionError);
}

}  // namespace
}  // namespace walras
