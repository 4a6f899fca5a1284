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
#include "dsbelief/belief.hpp"

#include <algorithm>
#include <cmath>

#include "dsbelief/error.hpp"

namespace dsb {

MassFunction MassFunction::FromMasks(const Frame& frame,
                                     const std::map<Mask, Scalar>& entries) {
  bool exact = true;
  for (const auto& [mask, value] : entries) exact = exact && value.is_exact();

  std::map<Mask, Scalar> masses;
  Scalar total = exact ? Scalar(0) : Scalar(0.0);
  for (const auto& [mask, raw] : entries) {
    if (mask & ~frame.full_mask()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "mass entry references atoms outside the frame");
    }
    const Scalar value = exact ? raw : raw.as_floating();
    if (value.sign() < 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "negative mass " + value.ToString() + " on " +
                      frame.FromMask(mask).ToString());
    }
    if (value.is_zero()) continue;
    if (mask == 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "positive mass on the empty set");
    }
    total += value;
    masses.emplace(mask, value);
  }

  if (exact) {
    if (total != Scalar(1)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "masses sum to " + total.ToString() + ", expected 1");
    }
    return MassFunction(frame, std::move(masses), ArithmeticMode::kExact);
  }
  const double sum = total.to_double();
  if (!(std::fabs(sum - 1.0) <= kMassSumTolerance)) {
    throw Error(ErrorCode::kInvalidArgument,
                "masses sum to " + total.ToString() + ", expected 1");
  }
  if (sum != 1.0) {
    for (auto& [mask, value] : masses) value = Scalar(value.to_double() / sum);
  }
  return MassFunction(frame, std::move(masses), ArithmeticMode::kFloating);
}

MassFunction MassFunction::FromEntries(
    const Frame& frame, const std::vector<std::pair<Subset, Scalar>>& entries) {
  std::map<Mask, Scalar> acc;
  for (const auto& [set, value] : entries) {
    RequireSameFrame(frame, set.frame());
    auto [it, inserted] = acc.emplace(set.mask(), value);
    if (!inserted) it->second += value;
  }
  return FromMasks(frame, acc);
}

MassFunction MassFunction::Vacuous(const Frame& frame) {
  return MassFunction(frame, {{frame.full_mask(), Scalar(1)}},
                      ArithmeticMode::kExact);
}

std::vector<FocalElement> MassFunction::FocalElements() const {
  std::vector<FocalElement> out;
  out.reserve(masses_.size());
  for (const auto& [mask, value] : masses_) {
    out.push_back({frame_.FromMask(mask), value});
  }
  return out;
}

Scalar MassFunction::mass(const Subset& a) const {
  RequireSameFrame(frame_, a.frame());
  auto it = masses_.find(a.mask());
  if (it != masses_.end()) return it->second;
  return is_exact() ? Scalar(0) : Scalar(0.0);
}

MassFunction MassFunction::AsFloating() const {
  std::map<Mask, Scalar> out;
  for (const auto& [mask, value] : masses_) out.emplace(mask, value.as_floating());
  return MassFunction(frame_, std::move(out), ArithmeticMode::kFloating);
}

bool operator==(const MassFunction& a, const MassFunction& b) {
  if (!(a.frame_ == b.frame_) || a.masses_.size() != b.masses_.size()) {
    return false;
  }
  return std::equal(a.masses_.begin(), a.masses_.end(), b.masses_.begin(),
                    [](const auto& x, const auto& y) {
                      return x.first == y.first && x.second == y.second;
                    });
}

namespace {

Scalar Zero(const MassFunction& m) {
  return m.is_exact() ? Scalar(0) : Scalar(0.0);
}

}  // namespace

Scalar Bel(const MassFunction& m, const Subset& a) {
  RequireSameFrame(m.frame(), a.frame());
  Scalar sum = Zero(m);
  for (const auto& [mask, value] : m.masses()) {
    if ((mask & ~a.mask()) == 0) sum += value;
  }
  return sum;
}

Scalar Pl(const MassFunction& m, const Subset& a) {
  RequireSameFrame(m.frame(), a.frame());
  Scalar sum = Zero(m);
  for (const auto& [mask, value] : m.masses()) {
    if (mask & a.mask()) sum += value;
  }
  return sum;
}

namespace {

void RequireMobiusSize(const Frame& frame) {
  if (frame.size() > kMaxMobiusFrameSize) {
    throw Error(ErrorCode::kSizeOverflow,
                "subset tables are limited to frames of " +
                    std::to_string(kMaxMobiusFrameSize) + " atoms");
  }
}

}  // namespace

std::vector<Scalar> BeliefTable(const MassFunction& m) {
  RequireMobiusSize(m.frame());
  const std::size_t n = m.frame().size();
  std::vector<Scalar> table(std::size_t{1} << n, Zero(m));
  for (const auto& [mask, value] : m.masses()) table[mask] = value;
  // Zeta transform over the subset lattice.
  for (std::size_t bit = 0; bit < n; ++bit) {
    const Mask b = Mask{1} << bit;
    for (Mask s = 0; s < table.size(); ++s) {
      if (s & b) table[s] += table[s ^ b];
    }
  }
  return table;
}

MassFunction MassFromBel(const Frame& frame, std::span<const Scalar> bel_values) {
  RequireMobiusSize(frame);
  const std::size_t n = frame.size();
  if (bel_values.size() != (std::size_t{1} << n)) {
    throw Error(ErrorCode::kInvalidArgument,
                "belief table needs " + std::to_string(std::size_t{1} << n) +
                    " entries, got " + std::to_string(bel_values.size()));
  }
  const bool exact = std::all_of(bel_values.begin(), bel_values.end(),
                                 [](const Scalar& s) { return s.is_exact(); });
  std::vector<Scalar> m(bel_values.begin(), bel_values.end());
  if (!exact) {
    for (auto& v : m) v = v.as_floating();
  }
  for (std::size_t bit = 0; bit < n; ++bit) {
    const Mask b = Mask{1} << bit;
    for (Mask s = 0; s < m.size(); ++s) {
      if (s & b) m[s] -= m[s ^ b];
    }
  }
  if (!m[0].is_zero()) {
    throw Error(ErrorCode::kNotABeliefFunction,
                "belief of the empty set is " + m[0].ToString());
  }
  std::map<Mask, Scalar> entries;
  for (Mask s = 1; s < m.size(); ++s) {
    Scalar v = m[s];
    if (!exact && std::fabs(v.to_double()) <= kPropertyTolerance) continue;
    if (v.sign() < 0) {
      throw Error(ErrorCode::kNotABeliefFunction,
                  "inversion yields negative mass " + v.ToString() + " on " +
                      frame.FromMask(s).ToString());
    }
    if (!v.is_zero()) entries.emplace(s, std::move(v));
  }
  try {
    return MassFunction::FromMasks(frame, entries);
  } catch (const Error& e) {
    throw Error(ErrorCode::kNotABeliefFunction, e.what());
  }
}

CombinationReport CombineDempster(const MassFunction& m1, const MassFunction& m2) {
  RequireSameFrame(m1.frame(), m2.frame());
  const bool exact = m1.is_exact() && m2.is_exact();
  const MassFunction& a = m1;
  const MassFunction& b = m2;

  std::map<Mask, Scalar> joint;
  Scalar conflict = exact ? Scalar(0) : Scalar(0.0);
  bool any_kept = false;
  for (const auto& [ma, va] : a.masses()) {
    for (const auto& [mb, vb] : b.masses()) {
      Scalar product = exact ? va * vb : Scalar(va.to_double() * vb.to_double());
      const Mask meet = ma & mb;
      if (meet == 0) {
        conflict += product;
        continue;
      }
      any_kept = true;
      auto [it, inserted] = joint.emplace(meet, product);
      if (!inserted) it->second += product;
    }
  }
  if (!any_kept) {
    throw Error(ErrorCode::kTotalConflict,
                "total conflict: no pair of focal elements intersects");
  }
  const Scalar normalizer = Scalar(1) - conflict;
  for (auto& [mask, value] : joint) value /= normalizer;
  return {MassFunction::FromMasks(a.frame(), joint), conflict};
}

MassFunction ConditionEmbed(const Frame& frame, const Subset& b,
                            const MassFunction& conditional) {
  RequireSameFrame(frame, b.frame());
  RequireSameFrame(frame, conditional.frame());
  const Mask outside = ~b.mask() & frame.full_mask();
  std::map<Mask, Scalar> out;
  for (const auto& [mask, value] : conditional.masses()) {
    auto [it, inserted] = out.emplace(mask | outside, value);
    if (!inserted) it->second += value;
  }
  return MassFunction::FromMasks(frame, out);
}

MassFunction Marginalize(const MassFunction& m, std::size_t factor_index) {
  const Frame& joint = m.frame();
  if (!joint.is_product()) {
    throw Error(ErrorCode::kInvalidArgument, "frame is not a product frame");
  }
  std::map<Mask, Scalar> out;
  for (const auto& [mask, value] : m.masses()) {
    const Mask projected =
        ProjectSubset(joint, factor_index, joint.FromMask(mask)).mask();
    auto [it, inserted] = out.emplace(projected, value);
    if (!inserted) it->second += value;
  }
  return MassFunction::FromMasks(joint.factors().at(factor_index), out);
}

MassFunction ExtendToJoint(const Frame& joint, std::size_t factor_index,
                           const MassFunction& m) {
  std::map<Mask, Scalar> out;
  for (const auto& [mask, value] : m.masses()) {
    const Mask ext =
        CylindricalExtension(joint, factor_index, m.frame().FromMask(mask)).mask();
    out.emplace(ext, value);
  }
  return MassFunction::FromMasks(joint, out);
}

double MaxMassDifference(const MassFunction& a, const MassFunction& b) {
  RequireSameFrame(a.frame(), b.frame());
  double worst = 0.0;
  for (const auto& [mask, value] : a.masses()) {
    const Scalar other = b.mass(a.frame().FromMask(mask));
    worst = std::max(worst, std::fabs(value.to_double() - other.to_double()));
  }
  for (const auto& [mask, value] : b.masses()) {
    if (!a.masses().contains(mask)) worst = std::max(worst, value.to_double());
  }
  return worst;
}

}  // namespace dsb
