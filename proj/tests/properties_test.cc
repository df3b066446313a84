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

#include <gtest/gtest.h>

#include "walras/errors.h"
#include "walras/generators.h"

namespace walras {
namespace {

TEST(PropertiesTest, AdditiveIsMonotoneAndSubmodular) {
  const Valuation v = MakeAdditive({1, 2, 3, 0});
  EXPECT_TRUE(IsMonotone(v));
  EXPECT_TRUE(IsSubmodular(v));
}

TEST(PropertiesTest, BucketXosWithTwoBucketsIsConstantHenceSubmodular) {
  // Every nonempty set is worth 2 when buckets hold two items.
  EXPECT_TRUE(IsSubmodular(MakeBucketXos(4, ConsecutiveBuckets(2))));
}

TEST(PropertiesTest, BucketXosWithThreeBucketsViolatesSubmodularity) {
  const SubmodularityCheck c = CheckSubmodular(MakeBucketXos(9, ConsecutiveBuckets(3)));
  ASSERT_FALSE(c.submodular);
  ASSERT_TRUE(c.witness.has_value());
  // XOS values 2, 2, 3 along one bucket: marginals 0 then 1.
  EXPECT_EQ(c.witness->base, ItemSet::Singleton(0));
  EXPECT_EQ(c.witness->first, 1);
  EXPECT_EQ(c.witness->second, 2);
  EXPECT_EQ(c.witness->marginal_small, Rational(0));
  EXPECT_EQ(c.witness->marginal_large, Rational(1));
}

TEST(PropertiesTest, SingleMindedIsNotSubmodular) {
  EXPECT_FALSE(IsSubmodular(MakeSingleMinded(2, ItemSet::Full(2), 1)));
}

TEST(PropertiesTest, NonMonotoneExplicitTableDetected) {
  EXPECT_FALSE(IsMonotone(MakeExplicit(2, {0, 2, 1, 1})));
  EXPECT_TRUE(IsMonotone(MakeExplicit(2, {0, 1, 1, 2})));
}

TEST(PropertiesTest, EpsilonBounds) {
  EXPECT_EQ(*EpsilonBound(MakeBucketXos(4, ConsecutiveBuckets(2))), Rational(1, 120));
  EXPECT_EQ(*EpsilonBound(MakeBucketUnit(4, ConsecutiveBuckets(2))), Rational(1, 60));
  EXPECT_FALSE(EpsilonBound(MakeAdditive({0, 0, 0})).has_value());
  // Above the sweep cap the bound uses f(M).
  EXPECT_EQ(*EpsilonBound(MakeBucketXos(25, ConsecutiveBuckets(5))),
            Rational(1, 2 * 26 * 27 * 5));
}

TEST(PropertiesTest, BoundedPerturbationStaysSubmodular) {
  for (int k : {2, 3}) {
    const Market market = GenSubmodularLower(k);
    EXPECT_TRUE(IsSubmodular(market.buyer(0))) << k;
    EXPECT_TRUE(IsSubmodular(market.buyer(1))) << k;
  }
}

TEST(PropertiesTest, SweepCapEnforced) {
  Caps caps;
  caps.sweep_items = 4;
  EXPECT_THROW(IsSubmodular(MakeAdditive(std::vector<Rational>(5, 1)), caps), CapExceeded);
}

}  // namespace
}  // namespace walras
