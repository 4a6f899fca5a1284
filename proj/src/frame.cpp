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
#include "dsbelief/frame.hpp"

#include <atomic>
#include <bit>
#include <unordered_map>

#include "dsbelief/error.hpp"

namespace dsb {

namespace {
std::atomic<std::size_t> g_max_frame_size{kDefaultMaxFrameSize};
}  // namespace

std::size_t MaxFrameSize() { return g_max_frame_size.load(); }

void SetMaxFrameSize(std::size_t n) {
  if (n == 0 || n > kHardMaxFrameSize) {
    throw Error(ErrorCode::kInvalidArgument,
                "max frame size must be in [1, " +
                    std::to_string(kHardMaxFrameSize) + "], got " +
                    std::to_string(n));
  }
  g_max_frame_size.store(n);
}

struct Frame::Impl {
  std::vector<std::string> atoms;
  std::unordered_map<std::string, std::size_t> index;
  std::vector<Frame> factors;
  // strides[k] = product of sizes of factors after k.
  std::vector<std::size_t> strides;
};

Frame Frame::Make(std::vector<std::string> names) {
  if (names.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "frame needs at least one atom");
  }
  if (names.size() > MaxFrameSize()) {
    throw Error(ErrorCode::kSizeOverflow,
                "frame of " + std::to_string(names.size()) +
                    " atoms exceeds the maximum of " +
                    std::to_string(MaxFrameSize()));
  }
  auto impl = std::make_shared<Impl>();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) {
      throw Error(ErrorCode::kInvalidArgument, "empty atom name");
    }
    if (!impl->index.emplace(names[i], i).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "duplicate atom name '" + names[i] + "'");
    }
  }
  impl->atoms = std::move(names);
  return Frame(std::move(impl));
}

Frame Frame::Product(std::span<const Frame> factors) {
  if (factors.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "product of zero frames");
  }
  std::size_t total = 1;
  for (const auto& f : factors) {
    total *= f.size();
    if (total > MaxFrameSize()) {
      throw Error(ErrorCode::kSizeOverflow,
                  "product frame exceeds the maximum of " +
                      std::to_string(MaxFrameSize()) + " atoms");
    }
  }
  std::vector<std::string> names;
  names.reserve(total);
  std::vector<std::size_t> digits(factors.size(), 0);
  for (std::size_t n = 0; n < total; ++n) {
    std::string name = "(";
    for (std::size_t k = 0; k < factors.size(); ++k) {
      if (k) name += ',';
      name += factors[k].atom(digits[k]);
    }
    name += ')';
    names.push_back(std::move(name));
    for (std::size_t k = factors.size(); k-- > 0;) {
      if (++digits[k] < factors[k].size()) break;
      digits[k] = 0;
    }
  }
  Frame base = Make(std::move(names));
  auto impl = std::make_shared<Impl>(*base.impl_);
  impl->factors.assign(factors.begin(), factors.end());
  impl->strides.assign(factors.size(), 1);
  for (std::size_t k = factors.size() - 1; k-- > 0;) {
    impl->strides[k] = impl->strides[k + 1] * factors[k + 1].size();
  }
  return Frame(std::move(impl));
}

Frame Frame::Product(const Frame& a, const Frame& b) {
  const Frame both[] = {a, b};
  return Product(both);
}

std::size_t Frame::size() const { return impl_->atoms.size(); }

const std::vector<std::string>& Frame::atoms() const { return impl_->atoms; }

const std::string& Frame::atom(std::size_t index) const {
  return impl_->atoms.at(index);
}

std::optional<std::size_t> Frame::index_of(std::string_view name) const {
  auto it = impl_->index.find(std::string(name));
  if (it == impl_->index.end()) return std::nullopt;
  return it->second;
}

bool Frame::is_product() const { return !impl_->factors.empty(); }

const std::vector<Frame>& Frame::factors() const { return impl_->factors; }

std::vector<std::size_t> Frame::factor_shape() const {
  std::vector<std::size_t> shape;
  for (const auto& f : impl_->factors) shape.push_back(f.size());
  return shape;
}

std::size_t Frame::coordinate(std::size_t atom, std::size_t factor_index) const {
  if (!is_product()) {
    throw Error(ErrorCode::kInvalidArgument, "frame is not a product frame");
  }
  if (factor_index >= impl_->factors.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "factor index " + std::to_string(factor_index) +
                    " out of range");
  }
  return (atom / impl_->strides[factor_index]) %
         impl_->factors[factor_index].size();
}

Mask Frame::full_mask() const {
  return size() == 64 ? ~Mask{0} : (Mask{1} << size()) - 1;
}

Subset Frame::Empty() const { return Subset(*this, 0); }
Subset Frame::Full() const { return Subset(*this, full_mask()); }

Subset Frame::Singleton(std::size_t index) const {
  if (index >= size()) {
    throw Error(ErrorCode::kInvalidArgument, "atom index out of range");
  }
  return Subset(*this, Mask{1} << index);
}

Subset Frame::FromMask(Mask mask) const { return Subset(*this, mask); }

Subset Frame::Encode(std::span<const std::string> names) const {
  Mask mask = 0;
  for (const auto& n : names) {
    auto idx = index_of(n);
    if (!idx) throw Error(ErrorCode::kUnknownAtom, "unknown atom '" + n + "'");
    mask |= Mask{1} << *idx;
  }
  return Subset(*this, mask);
}

Subset Frame::Encode(std::initializer_list<std::string_view> names) const {
  std::vector<std::string> v(names.begin(), names.end());
  return Encode(v);
}

bool operator==(const Frame& a, const Frame& b) {
  return a.impl_ == b.impl_ || a.impl_->atoms == b.impl_->atoms;
}

void RequireSameFrame(const Frame& a, const Frame& b) {
  if (!(a == b)) {
    throw Error(ErrorCode::kFrameMismatch,
                "operands belong to different frames");
  }
}

Subset::Subset(Frame frame, Mask mask) : frame_(std::move(frame)), mask_(mask) {
  if (mask_ & ~frame_.full_mask()) {
    throw Error(ErrorCode::kInvalidArgument,
                "subset references atoms outside its frame");
  }
}

std::size_t Subset::count() const { return std::popcount(mask_); }

std::vector<std::size_t> Subset::Indices() const {
  std::vector<std::size_t> out;
  for (Mask m = mask_; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

std::vector<std::string> Subset::Decode() const {
  std::vector<std::string> out;
  for (auto i : Indices()) out.push_back(frame_.atom(i));
  return out;
}

std::string Subset::ToString() const {
  std::string s = "{";
  bool first = true;
  for (auto i : Indices()) {
    if (!first) s += ',';
    s += frame_.atom(i);
    first = false;
  }
  return s + "}";
}

Subset Subset::Intersect(const Subset& o) const {
  RequireSameFrame(frame_, o.frame_);
  return Subset(frame_, mask_ & o.mask_);
}

Subset Subset::Union(const Subset& o) const {
  RequireSameFrame(frame_, o.frame_);
  return Subset(frame_, mask_ | o.mask_);
}

Subset Subset::Complement() const {
  return Subset(frame_, ~mask_ & frame_.full_mask());
}

bool Subset::IsSubsetOf(const Subset& o) const {
  RequireSameFrame(frame_, o.frame_);
  return (mask_ & ~o.mask_) == 0;
}

bool Subset::Intersects(const Subset& o) const {
  RequireSameFrame(frame_, o.frame_);
  return (mask_ & o.mask_) != 0;
}

namespace {

void CheckFactor(const Frame& joint, std::size_t factor_index) {
  if (!joint.is_product()) {
    throw Error(ErrorCode::kInvalidArgument, "frame is not a product frame");
  }
  if (factor_index >= joint.factors().size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "factor index " + std::to_string(factor_index) +
                    " out of range");
  }
}

}  // namespace

Subset CylindricalExtension(const Frame& joint, std::size_t factor_index,
                            const Subset& a) {
  CheckFactor(joint, factor_index);
  RequireSameFrame(joint.factors()[factor_index], a.frame());
  Mask out = 0;
  for (std::size_t i = 0; i < joint.size(); ++i) {
    if (a.contains(joint.coordinate(i, factor_index))) out |= Mask{1} << i;
  }
  return joint.FromMask(out);
}

Subset ProjectSubset(const Frame& joint, std::size_t factor_index,
                     const Subset& a) {
  CheckFactor(joint, factor_index);
  RequireSameFrame(joint, a.frame());
  const Frame& factor = joint.factors()[factor_index];
  Mask out = 0;
  for (auto i : a.Indices()) out |= Mask{1} << joint.coordinate(i, factor_index);
  return factor.FromMask(out);
}

}  // namespace dsb
