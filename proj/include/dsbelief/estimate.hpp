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

#include "dsbelief/belief.hpp"
#include "dsbelief/population.hpp"

namespace dsb {

/// Counts of observed value sets.
class CountTable {
 public:
  // Throws kInvalidArgument on a count for the empty set or a zero total.
  CountTable(Frame frame, std::map<Mask, std::uint64_t> counts);
  static CountTable FromPopulation(const Population& p);

  const Frame& frame() const { return frame_; }
  const std::map<Mask, std::uint64_t>& counts() const { return counts_; }
  std::uint64_t total() const { return total_; }

 private:
  Frame frame_;
  std::map<Mask, std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

// Inverse of the standard normal CDF, p in (0, 1).
double NormalQuantile(double p);

// Critical value of a one-sided lower bound at significance `alpha`,
// clamped at zero (alpha >= 0.5 gives a zero-width bound).
double OneSidedZ(double alpha);

// Wilson score lower bound for k successes out of n at critical value z.
double WilsonLowerBound(std::uint64_t k, std::uint64_t n, double z);

// m(A) = count(A) / total, exact.
MassFunction EstimateRaw(const CountTable& table);

// Lower Wilson bounds for every A other than the frame, remainder on the
// frame. alpha in (0, 1]; with `bonferroni` alpha is divided by the number
// of non-frame cells. A zero critical value returns EstimateRaw.
MassFunction EstimateWithConfidence(const CountTable& table, double alpha,
                                    bool bonferroni = false);

}  // namespace dsb
