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

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dsb {

// Bit i set <=> atom i of the frame is a member.
using Mask = std::uint64_t;

inline constexpr std::size_t kDefaultMaxFrameSize = 24;
inline constexpr std::size_t kHardMaxFrameSize = 63;

// Process-wide limit on frame sizes; defaults to 24 atoms.
std::size_t MaxFrameSize();
void SetMaxFrameSize(std::size_t n);

class Subset;

/// Ordered finite set of atoms, optionally built as a product of factor
/// frames. Immutable; copies share the same storage.
class Frame {
 public:
  // Throws kInvalidArgument on empty or duplicate names and kSizeOverflow
  // past MaxFrameSize().
  static Frame Make(std::vector<std::string> names);

  // Atoms are "(a,b,...)" tuples, lexicographic in factor order (the last
  // factor varies fastest).
  static Frame Product(std::span<const Frame> factors);
  static Frame Product(const Frame& a, const Frame& b);

  std::size_t size() const;
  const std::vector<std::string>& atoms() const;
  const std::string& atom(std::size_t index) const;
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool is_product() const;
  // Empty for non-product frames.
  const std::vector<Frame>& factors() const;
  std::vector<std::size_t> factor_shape() const;
  // Component index of `atom` in factor `factor_index`.
  std::size_t coordinate(std::size_t atom, std::size_t factor_index) const;

  Mask full_mask() const;

  Subset Empty() const;
  Subset Full() const;
  Subset Singleton(std::size_t index) const;
  Subset FromMask(Mask mask) const;
  // Throws kUnknownAtom for names not in the frame.
  Subset Encode(std::span<const std::string> names) const;
  Subset Encode(std::initializer_list<std::string_view> names) const;

  // Structural equality over the atom list.
  friend bool operator==(const Frame& a, const Frame& b);

 private:
  struct Impl;
  explicit Frame(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

// Throws kFrameMismatch when the frames differ.
void RequireSameFrame(const Frame& a, const Frame& b);

/// A subset of a frame's atoms.
class Subset {
 public:
  Subset(Frame frame, Mask mask);

  const Frame& frame() const { return frame_; }
  Mask mask() const { return mask_; }

  bool empty() const { return mask_ == 0; }
  bool is_full() const { return mask_ == frame_.full_mask(); }
  std::size_t count() const;
  bool contains(std::size_t atom) const { return (mask_ >> atom) & 1U; }

  std::vector<std::string> Decode() const;
  std::vector<std::size_t> Indices() const;
  // "{H,M}" with atoms in frame order; "{}" for the empty set.
  std::string ToString() const;

  Subset Intersect(const Subset& o) const;
  Subset Union(const Subset& o) const;
  Subset Complement() const;
  bool IsSubsetOf(const Subset& o) const;
  bool Intersects(const Subset& o) const;

  friend bool operator==(const Subset& a, const Subset& b) {
    return a.mask_ == b.mask_ && a.frame_ == b.frame_;
  }

 private:
  Frame frame_;
  Mask mask_;
};

// All joint atoms whose `factor_index` component lies in `a`.
Subset CylindricalExtension(const Frame& joint, std::size_t factor_index,
                            const Subset& a);

// Image of `a` under the `factor_index` coordinate map.
Subset ProjectSubset(const Frame& joint, std::size_t factor_index,
                     const Subset& a);

}  // namespace dsb
