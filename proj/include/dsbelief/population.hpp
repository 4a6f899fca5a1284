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

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dsbelief/belief.hpp"
#include "dsbelief/frame.hpp"
#include "dsbelief/scalar.hpp"

namespace dsb {

// A group of `weight` objects whose attribute measured to the value set
// `value`.
struct SetValuedRecord {
  Subset value;
  std::uint64_t weight;
};

/// Weighted multiset of set-valued records over one frame.
///
/// Records with identical value sets are merged on construction; the order
/// of first appearance is kept.
class Population {
 public:
  // Throws kInvalidArgument on an empty value, zero weight, a zero total,
  // or weight overflow; kFrameMismatch when a record's frame differs.
  Population(Frame frame, const std::vector<SetValuedRecord>& records);

  const Frame& frame() const { return frame_; }
  const std::vector<SetValuedRecord>& records() const { return records_; }
  std::uint64_t total_weight() const { return total_; }
  // Weight of the record whose value is exactly `value` (0 if none).
  std::uint64_t weight_of(const Subset& value) const;

 private:
  Frame frame_;
  std::vector<SetValuedRecord> records_;
  std::uint64_t total_ = 0;
};

/// Per-record labels keyed by exact value set. Value sets without a rule
/// get the whole frame. An empty label discards the record.
class LabelingSpec {
 public:
  explicit LabelingSpec(Frame frame) : frame_(std::move(frame)) {}

  LabelingSpec& Set(const Subset& value, const Subset& label);
  Subset LabelFor(const Subset& value) const;

  const Frame& frame() const { return frame_; }
  const std::map<Mask, Mask>& rules() const { return rules_; }

 private:
  Frame frame_;
  std::map<Mask, Mask> rules_;
};

// M(r, a): true iff the record's value meets a.
bool CanonicalMeasure(const SetValuedRecord& record, const Subset& a);

// Truth table of the canonical measurement of `value` over every subset.
std::map<Mask, bool> MeasurementTable(const Subset& value);

struct AxiomViolation {
  enum class Kind { kFullNotTrue, kEmptyNotFalse, kSupersetConsistency,
                    kSubsetConsistency };
  Kind kind;
  Mask set;
  std::string message;
};

// Checks a measurement truth table for the measurement-method axioms.
// Frame size <= 16; throws kInvalidArgument when the table misses a subset.
std::vector<AxiomViolation> CheckMeasurementAxioms(
    const Frame& frame, const std::map<Mask, bool>& table);

// m(A) = weight of records with value exactly A / total weight (exact).
MassFunction FreqMass(const Population& p);
// Weight fraction of records whose value lies inside a.
Scalar FreqBel(const Population& p, const Subset& a);
// Weight fraction of records whose value meets a.
Scalar FreqPl(const Population& p, const Subset& a);

// Drops records labelled with the empty set and intersects every other
// value with its label. Throws kInvalidLabeling when a nonempty label misses
// a record's value, kAllDiscarded when nothing is left.
Population ApplyLabeling(const Population& p, const LabelingSpec& labeling);

}  // namespace dsb
