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
#include "dsbelief/frame.hpp"

namespace dsb {
namespace {

TEST(FrameTest, MakeRejectsBadNames) {
  EXPECT_THROW(Frame::Make({}), Error);
  EXPECT_THROW(Frame::Make({"a", "a"}), Error);
  EXPECT_THROW(Frame::Make({"a", ""}), Error);
}

TEST(FrameTest, SizeLimit) {
  std::vector<std::string> names;
  for (int i = 0; i < 25; ++i) names.push_back("x" + std::to_string(i));
  try {
    Frame::Make(names);
    FAIL() << "expected overflow";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSizeOverflow);
  }
  SetMaxFrameSize(30);
  EXPECT_EQ(Frame::Make(names).size(), 25u);
  SetMaxFrameSize(kDefaultMaxFrameSize);
  EXPECT_THROW(SetMaxFrameSize(64), Error);
}

TEST(FrameTest, EncodeDecode) {
  const Frame f = Frame::Make({"H", "M", "S", "D"});
  const Subset s = f.Encode({"S", "H"});
  EXPECT_EQ(s.mask(), 0b0101u);
  EXPECT_EQ(s.ToString(), "{H,S}");
  EXPECT_EQ(f.Empty().ToString(), "{}");
  try {
    f.Encode({"Z"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownAtom);
  }
}

TEST(FrameTest, EncodeDecodeRoundTripExhaustive) {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, char('p' + i)));
    const Frame f = Frame::Make(names);
    for (Mask m = 0; m <= f.full_mask(); ++m) {
      const auto decoded = f.FromMask(m).Decode();
      ASSERT_EQ(f.Encode(decoded).mask(), m);
    }
  }
}

TEST(FrameTest, SetAlgebraLaws) {
  const Frame f = Frame::Make({"a", "b", "c", "d", "e"});
  for (Mask m = 0; m <= f.full_mask(); ++m) {
    const Subset a = f.FromMask(m);
    EXPECT_EQ(a.Complement().Complement(), a);
    EXPECT_EQ(a.Intersect(f.Full()), a);
    EXPECT_EQ(a.Union(f.Empty()), a);
    EXPECT_TRUE(a.IsSubsetOf(f.Full()));
  }
}

TEST(FrameTest, ProductAtomsLastFactorFastest) {
  const Frame q = Frame::Make({"H", "M"});
  const Frame s = Frame::Make({"B", "G", "X"});
  const Frame joint = Frame::Product(q, s);
  ASSERT_EQ(joint.size(), 6u);
  EXPECT_EQ(joint.atom(0), "(H,B)");
  EXPECT_EQ(joint.atom(1), "(H,G)");
  EXPECT_EQ(joint.atom(3), "(M,B)");
  EXPECT_TRUE(joint.is_product());
  EXPECT_EQ(joint.factor_shape(), (std::vector<std::size_t>{2, 3}));
  EXPECT_EQ(joint.coordinate(5, 0), 1u);
  EXPECT_EQ(joint.coordinate(5, 1), 2u);
}

TEST(FrameTest, ExtensionThenProjectionIsIdentity) {
  const Frame a = Frame::Make({"x", "y", "z"});
  const Frame b = Frame::Make({"u", "v"});
  const Frame c = Frame::Make({"p", "q"});
  const std::vector<Frame> factors{a, b, c};
  const Frame joint = Frame::Product(factors);
  for (std::size_t k = 0; k < factors.size(); ++k) {
    const Frame& f = factors[k];
    for (Mask m = 1; m <= f.full_mask(); ++m) {
      const Subset ext = CylindricalExtension(joint, k, f.FromMask(m));
      EXPECT_EQ(ext.count(), f.FromMask(m).count() * joint.size() / f.size());
      EXPECT_EQ(ProjectSubset(joint, k, ext), f.FromMask(m));
    }
  }
}

TEST(FrameTest, MismatchedFramesRejected) {
  const Frame a = Frame::Make({"x", "y"});
  const Frame b = Frame::Make({"x", "z"});
  try {
    a.Full().Intersect(b.Full());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kFrameMismatch);
  }
}

}  // namespace
}  // namespace dsb
