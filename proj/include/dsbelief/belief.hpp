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
#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "dsbelief/frame.hpp"
#include "dsbelief/scalar.hpp"

namespace dsb {

// Largest allowed total-mass drift for floating inputs; smaller drift is
// renormalized away on construction.
inline constexpr double kMassSumTolerance = 1e-9;
// Tolerance used by floating-mode property checks.
inline constexpr double kPropertyTolerance = 1e-12;
// Largest frame accepted by MassFromBel / BeliefTable.
inline constexpr std::size_t kMaxMobiusFrameSize = 16;

struct FocalElement {
  Subset set;
  Scalar mass;
};

/// Normalized mass assignment over the nonempty subsets of a frame.
///
/// Only focal elements (strictly positive mass) are stored. The arithmetic
/// mode is exact when every input mass was exact; a single floating input
/// demotes the whole function to floating.
class MassFunction {
 public:
  // Entries for the same subset accumulate. Throws kInvalidArgument on a
  // negative mass, a positive mass on the empty set, or a total that is not
  // 1 (exactly in exact mode, within kMassSumTolerance in floating mode).
  static MassFunction FromEntries(
      const Frame& frame, const std::vector<std::pair<Subset, Scalar>>& entries);
  static MassFunction FromMasks(const Frame& frame,
                                const std::map<Mask, Scalar>& entries);
  static MassFunction Vacuous(const Frame& frame);

  const Frame& frame() const { return frame_; }
  ArithmeticMode mode() const { return mode_; }
  bool is_exact() const { return mode_ == ArithmeticMode::kExact; }

  // Ordered by mask.
  const std::map<Mask, Scalar>& masses() const { return masses_; }
  std::vector<FocalElement> FocalElements() const;
  std::size_t focal_count() const { return masses_.size(); }
  Scalar mass(const Subset& a) const;

  MassFunction AsFloating() const;

  // Exact structural equality (same frame, focal sets and masses).
  friend bool operator==(const MassFunction& a, const MassFunction& b);

 private:
  MassFunction(Frame frame, std::map<Mask, Scalar> masses, ArithmeticMode mode)
      : frame_(std::move(frame)), masses_(std::move(masses)), mode_(mode) {}

  Frame frame_;
  std::map<Mask, Scalar> masses_;
  ArithmeticMode mode_;
};

struct CombinationReport {
  MassFunction result;
  // Unnormalized mass on empty intersections; always < 1.
  Scalar conflict_mass;
};

// Sum of m(B) over B subset of a.
Scalar Bel(const MassFunction& m, const Subset& a);
// Sum of m(B) over B intersecting a; equals 1 - Bel(complement of a).
Scalar Pl(const MassFunction& m, const Subset& a);

// Bel values for every subset, indexed by mask. Frame size <= 16.
std::vector<Scalar> BeliefTable(const MassFunction& m);

// Moebius inversion of a complete belief table indexed by mask. Throws
// kNotABeliefFunction when the inversion is not a normalized nonnegative
// mass with nothing on the empty set.
MassFunction MassFromBel(const Frame& frame, std::span<const Scalar> bel_values);

// Dempster's rule over focal pairs. Throws kTotalConflict when no pair of
// focal elements intersects.
CombinationReport CombineDempster(const MassFunction& m1, const MassFunction& m2);

// Places each conditional mass on A at (complement of b) union A.
MassFunction ConditionEmbed(const Frame& frame, const Subset& b,
                            const MassFunction& conditional);

// Pushes a joint mass onto one factor of its product frame.
MassFunction Marginalize(const MassFunction& m, std::size_t factor_index);

// Vacuous extension of a factor mass onto a joint product frame.
MassFunction ExtendToJoint(const Frame& joint, std::size_t factor_index,
                           const MassFunction& m);

// L-infinity distance between two masses on the same frame, as a double.
double MaxMassDifference(const MassFunction& a, const MassFunction& b);

}  // namespace dsb
