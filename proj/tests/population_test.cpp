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

#include "dsbelief/error.hpp"
#include "dsbelief/population.hpp"
#include "test_support.hpp"

namespace dsb {
namespace {

using testing::ProductSet;
using testing::RandomFrame;
using testing::RandomPopulation;
using testing::Rng;
using testing::ShampooFrame;
using testing::ShampooPopulation;

TEST(PopulationTest, MergesIdenticalValues) {
  const Frame f = Frame::Make({"a", "b"});
  const Population p(f, {{f.Encode({"a"}), 2}, {f.Full(), 3}, {f.Encode({"a"}), 5}});
  ASSERT_EQ(p.records().size(), 2u);
  EXPECT_EQ(p.records()[0].value, f.Encode({"a"}));
  EXPECT_EQ(p.weight_of(f.Encode({"a"})), 7u);
  EXPECT_EQ(p.weight_of(f.Encode({"b"})), 0u);
  EXPECT_EQ(p.total_weight(), 10u);
}

TEST(PopulationTest, RejectsBadRecords) {
  const Frame f = Frame::Make({"a", "b"});
  EXPECT_THROW(Population(f, {}), Error);
  EXPECT_THROW(Population(f, {{f.Empty(), 1}}), Error);
  EXPECT_THROW(Population(f, {{f.Full(), 0}}), Error);
}

TEST(PopulationTest, ShampooMassAndBelief) {
  const Population p = ShampooPopulation();
  const Frame& f = p.frame();
  EXPECT_EQ(p.total_weight(), 723u);
  const MassFunction m = FreqMass(p);
  EXPECT_TRUE(m.is_exact());
  EXPECT_EQ(m.focal_count(), 24u);
  EXPECT_EQ(m.mass(ProductSet(f, {"H"}, {"B"})), Scalar::Fraction(20, 723));
  EXPECT_EQ(FreqBel(p, ProductSet(f, {"M", "S"}, {"B", "G"})), Scalar::Fraction(435, 723));
  EXPECT_EQ(FreqBel(p, ProductSet(f, {"H", "D"}, {"B", "G"})), Scalar::Fraction(217, 723));
  EXPECT_EQ(FreqPl(p, ProductSet(f, {"H"}, {"B", "G"})), Scalar::Fraction(242, 723));
  EXPECT_EQ(FreqPl(p, ProductSet(f, {"S", "D"}, {"B", "G"})), Scalar::Fraction(243, 723));
}

TEST(PopulationTest, FrequencyMatchesMassFunctionExhaustive) {
  Rng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const Frame f = RandomFrame(rng, 1, 6);
    const Population p = RandomPopulation(rng, f);
    const MassFunction m = FreqMass(p);
    Scalar total;
    for (const auto& [mask, v] : m.masses()) total += v;
    EXPECT_EQ(total, Scalar(1));
    for (Mask a = 0; a <= f.full_mask(); ++a) {
      const Subset s = f.FromMask(a);
      EXPECT_EQ(FreqBel(p, s), Bel(m, s));
      EXPECT_EQ(FreqPl(p, s), Pl(m, s));
      EXPECT_EQ(FreqPl(p, s), Scalar(1) - FreqBel(p, s.Complement()));
    }
  }
}

TEST(PopulationTest, CanonicalTablesSatisfyAxioms) {
  const Frame f = Frame::Make({"a", "b", "c", "d"});
  for (Mask v = 1; v <= f.full_mask(); ++v) {
    EXPECT_TRUE(CheckMeasurementAxioms(f, MeasurementTable(f.FromMask(v))).empty());
  }
}

TEST(PopulationTest, AxiomCheckerFlagsViolations) {
  const Frame f = Frame::Make({"a", "b"});
  auto table = MeasurementTable(f.Encode({"a"}));
  table[f.full_mask()] = false;
  table[0] = true;
  const auto violations = CheckMeasurementAxioms(f, table);
  bool full = false, empty = false;
  for (const auto& v : violations) {
    full |= v.kind == AxiomViolation::Kind::kFullNotTrue;
    empty |= v.kind == AxiomViolation::Kind::kEmptyNotFalse;
  }
  EXPECT_TRUE(full);
  EXPECT_TRUE(empty);

  auto inconsistent = MeasurementTable(f.Encode({"a"}));
  inconsistent[f.Encode({"a"}).mask()] = false;
  EXPECT_FALSE(CheckMeasurementAxioms(f, inconsistent).empty());
}

TEST(PopulationTest, LabelingIdentityAndShrink) {
  Rng rng(22);
  for (int trial = 0; trial < 20; ++trial) {
    const Frame f = RandomFrame(rng, 2, 5);
    const Population p = RandomPopulation(rng, f);
    const Population same = ApplyLabeling(p, LabelingSpec(f));
    EXPECT_EQ(FreqMass(same), FreqMass(p));
    LabelingSpec drop_first(f);
    drop_first.Set(p.records().front().value, f.Empty());
    if (p.records().size() > 1) {
      EXPECT_LT(ApplyLabeling(p, drop_first).total_weight(), p.total_weight());
    }
  }
}

TEST(PopulationTest, LabelingErrors) {
  const Frame f = Frame::Make({"a", "b", "c"});
  const Population p(f, {{f.Encode({"a"}), 1}});
  LabelingSpec disjoint(f);
  disjoint.Set(f.Encode({"a"}), f.Encode({"b"}));
  try {
    ApplyLabeling(p, disjoint);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidLabeling);
  }
  LabelingSpec drop(f);
  drop.Set(f.Encode({"a"}), f.Empty());
  try {
    ApplyLabeling(p, drop);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kAllDiscarded);
  }
}

}  // namespace
}  // namespace dsb
