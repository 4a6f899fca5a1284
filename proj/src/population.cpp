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
#include "dsbelief/population.hpp"

#include <limits>

#include "dsbelief/error.hpp"

namespace dsb {

Population::Population(Frame frame, const std::vector<SetValuedRecord>& records)
    : frame_(std::move(frame)) {
  std::map<Mask, std::size_t> slot;
  for (const auto& r : records) {
    RequireSameFrame(frame_, r.value.frame());
    if (r.value.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "record with an empty value set");
    }
    if (r.weight == 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "record " + r.value.ToString() + " has zero weight");
    }
    if (r.weight > std::numeric_limits<std::uint64_t>::max() - total_) {
      throw Error(ErrorCode::kInvalidArgument, "population weight overflow");
    }
    total_ += r.weight;
    auto [it, inserted] = slot.emplace(r.value.mask(), records_.size());
    if (inserted) {
      records_.push_back(r);
    } else {
      records_[it->second].weight += r.weight;
    }
  }
  if (total_ == 0) {
    throw Error(ErrorCode::kInvalidArgument, "empty population");
  }
}

std::uint64_t Population::weight_of(const Subset& value) const {
  RequireSameFrame(frame_, value.frame());
  for (const auto& r : records_) {
    if (r.value.mask() == value.mask()) return r.weight;
  }
  return 0;
}

LabelingSpec& LabelingSpec::Set(const Subset& value, const Subset& label) {
  RequireSameFrame(frame_, value.frame());
  RequireSameFrame(frame_, label.frame());
  rules_[value.mask()] = label.mask();
  return *this;
}

Subset LabelingSpec::LabelFor(const Subset& value) const {
  RequireSameFrame(frame_, value.frame());
  auto it = rules_.find(value.mask());
  return frame_.FromMask(it == rules_.end() ? frame_.full_mask() : it->second);
}

bool CanonicalMeasure(const SetValuedRecord& record, const Subset& a) {
  return record.value.Intersects(a);
}

std::map<Mask, bool> MeasurementTable(const Subset& value) {
  const Frame& frame = value.frame();
  if (frame.size() > kMaxMobiusFrameSize) {
    throw Error(ErrorCode::kSizeOverflow, "truth tables are limited to 16 atoms");
  }
  std::map<Mask, bool> table;
  for (Mask s = 0; s <= frame.full_mask(); ++s) {
    table.emplace(s, (s & value.mask()) != 0);
  }
  return table;
}

std::vector<AxiomViolation> CheckMeasurementAxioms(
    const Frame& frame, const std::map<Mask, bool>& table) {
  if (frame.size() > kMaxMobiusFrameSize) {
    throw Error(ErrorCode::kSizeOverflow, "truth tables are limited to 16 atoms");
  }
  const Mask full = frame.full_mask();
  std::vector<bool> truth(full + 1);
  for (Mask s = 0; s <= full; ++s) {
    auto it = table.find(s);
    if (it == table.end()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "measurement table has no entry for " +
                      frame.FromMask(s).ToString());
    }
    truth[s] = it->second;
  }

  using Kind = AxiomViolation::Kind;
  std::vector<AxiomViolation> out;
  auto name = [&](Mask s) { return frame.FromMask(s).ToString(); };
  if (!truth[full]) {
    out.push_back({Kind::kFullNotTrue, full, "M(frame) is FALSE"});
  }
  if (truth[0]) {
    out.push_back({Kind::kEmptyNotFalse, 0, "M({}) is TRUE"});
  }
  for (Mask s = 1; s <= full; ++s) {
    if (!truth[s]) continue;
    for (std::size_t i = 0; i < frame.size(); ++i) {
      const Mask up = s | (Mask{1} << i);
      if (up != s && !truth[up]) {
        out.push_back({Kind::kSupersetConsistency, s,
                       "M(" + name(s) + ") is TRUE but M(" + name(up) +
                           ") is FALSE"});
        break;
      }
    }
    if ((s & (s - 1)) == 0) continue;
    bool witness = false;
    // Proper nonempty submasks of s.
    for (Mask sub = (s - 1) & s; sub && !witness; sub = (sub - 1) & s) {
      witness = truth[sub];
    }
    if (!witness) {
      out.push_back({Kind::kSubsetConsistency, s,
                     "M(" + name(s) +
                         ") is TRUE but no proper subset tests TRUE"});
    }
  }
  return out;
}

MassFunction FreqMass(const Population& p) {
  std::map<Mask, Scalar> counts;
  for (const auto& r : p.records()) {
    counts.emplace(r.value.mask(), Scalar(Rational(r.weight, p.total_weight())));
  }
  return MassFunction::FromMasks(p.frame(), counts);
}

Scalar FreqBel(const Population& p, const Subset& a) {
  RequireSameFrame(p.frame(), a.frame());
  std::uint64_t hits = 0;
  for (const auto& r : p.records()) {
    if ((r.value.mask() & ~a.mask()) == 0) hits += r.weight;
  }
  return Scalar(Rational(hits, p.total_weight()));
}

Scalar FreqPl(const Population& p, const Subset& a) {
  RequireSameFrame(p.frame(), a.frame());
  std::uint64_t hits = 0;
  for (const auto& r : p.records()) {
    if (CanonicalMeasure(r, a)) hits += r.weight;
  }
  return Scalar(Rational(hits, p.total_weight()));
}

Population ApplyLabeling(const Population& p, const LabelingSpec& labeling) {
  RequireSameFrame(p.frame(), labeling.frame());
  std::vector<SetValuedRecord> kept;
  for (const auto& r : p.records()) {
    const Subset label = labeling.LabelFor(r.value);
    if (label.empty()) continue;
    const Subset value = r.value.Intersect(label);
    if (value.empty()) {
      throw Error(ErrorCode::kInvalidLabeling,
                  "label " + label.ToString() + " does not fit value " +
                      r.value.ToString());
    }
    kept.push_back({value, r.weight});
  }
  if (kept.empty()) {
    throw Error(ErrorCode::kAllDiscarded, "labeling discards every record");
  }
  return Population(p.frame(), kept);
}

}  // namespace dsb
