/******************************************************************************
 * Copyright 2026 The dsbelief Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *****************************************************************************/

#include <gtest/gtest.h>

#include <boost/math/distributions/normal.hpp>
#include <cmath>

#include "dsbelief/error.hpp"
#include "dsbelief/estimate.hpp"
#include "test_support.hpp"

namespace dsb {
namespace {

using testing::ShampooPopulation;

double WilsonOracle(double k, double n, double z) {
  const double p = k / n;
  const double z2 = z * z;
  return (p + z2 / (2 * n) - z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n))) /
         (1 + z2 / n);
}

TEST(EstimateTest, NormalQuantileMatchesBoost) {
  const boost::math::normal normal;
  for (double p : {1e-10, 1e-4, 0.01, 0.025, 0.3, 0.5, 0.8, 0.95, 0.999, 1 - 1e-9}) {
    EXPECT_NEAR(NormalQuantile(p), boost::math::quantile(normal, p), 1e-12) << p;
  }
}

TEST(EstimateTest, OneSidedZ) {
  EXPECT_NEAR(OneSidedZ(0.05), 1.6448536269514722, 1e-12);
  EXPECT_EQ(OneSidedZ(0.5), 0.0);
  EXPECT_EQ(OneSidedZ(1.0), 0.0);
  EXPECT_THROW(OneSidedZ(0.0), Error);
  EXPECT_THROW(OneSidedZ(1.5), Error);
}

TEST(EstimateTest, WilsonLowerBound) {
  EXPECT_EQ(WilsonLowerBound(0, 10, 1.96), 0.0);
  EXPECT_EQ(WilsonLowerBound(3, 10, 0.0), 0.3);
  EXPECT_NEAR(WilsonLowerBound(20, 723, 1.64), WilsonOracle(20, 723, 1.64), 1e-14);
  EXPECT_NEAR(WilsonLowerBound(10, 10, 1.0), WilsonOracle(10, 10, 1.0), 1e-14);
}

TEST(EstimateTest, ShampooProperties) {
  const CountTable table = CountTable::FromPopulation(ShampooPopulation());
  const MassFunction raw = EstimateRaw(table);
  EXPECT_EQ(EstimateWithConfidence(table, 1.0), raw);
  const MassFunction loose = EstimateWithConfidence(table, 0.2);
  const MassFunction tight = EstimateWithConfidence(table, 0.01);
  const Frame& f = table.frame();
  const Subset full = f.Full();
  double total = 0;
  for (const auto& [mask, v] : tight.masses()) total += v.to_double();
  EXPECT_NEAR(total, 1.0, 1e-12);
  for (const auto& [mask, v] : raw.masses()) {
    const Subset s = f.FromMask(mask);
    EXPECT_LT(tight.mass(s).to_double(), loose.mass(s).to_double());
    EXPECT_LT(loose.mass(s).to_double(), v.to_double());
  }
  EXPECT_GT(tight.mass(full).to_double(), loose.mass(full).to_double());
  for (Mask a = 0; a < f.full_mask(); ++a) {
    const Subset s = f.FromMask(a);
    EXPECT_LE(Bel(tight, s).to_double(), Bel(raw, s).to_double() + 1e-15);
  }
}

TEST(EstimateTest, Bonferroni) {
  const CountTable table = CountTable::FromPopulation(ShampooPopulation());
  const MassFunction plain = EstimateWithConfidence(table, 0.05);
  const MassFunction adjusted = EstimateWithConfidence(table, 0.05, true);
  const double z = boost::math::quantile(boost::math::normal(), 1 - 0.05 / 24);
  const Subset hb = table.frame().FromMask(table.counts().begin()->first);
  const double k = static_cast<double>(table.counts().begin()->second);
  EXPECT_NEAR(adjusted.mass(hb).to_double(), WilsonOracle(k, 723, z), 1e-9);
  EXPECT_LT(adjusted.mass(hb).to_double(), plain.mass(hb).to_double());
}

TEST(EstimateTest, CountTableValidation) {
  const Frame f = Frame::Make({"a", "b"});
  EXPECT_THROW(CountTable(f, {{0, 3}}), Error);
  EXPECT_THROW(CountTable(f, {{1, 0}}), Error);
}

}  // namespace
}  // namespace dsb
