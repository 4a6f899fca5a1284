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
#include "dsbelief/estimate.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "dsbelief/error.hpp"

namespace dsb {

CountTable::CountTable(Frame frame, std::map<Mask, std::uint64_t> counts)
    : frame_(std::move(frame)), counts_(std::move(counts)) {
  for (const auto& [mask, count] : counts_) {
    if (mask & ~frame_.full_mask()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "count references atoms outside the frame");
    }
    if (mask == 0 && count > 0) {
      throw Error(ErrorCode::kInvalidArgument, "count on the empty set");
    }
    total_ += count;
  }
  if (total_ == 0) throw Error(ErrorCode::kInvalidArgument, "empty count table");
}

CountTable CountTable::FromPopulation(const Population& p) {
  std::map<Mask, std::uint64_t> counts;
  for (const auto& r : p.records()) counts[r.value.mask()] += r.weight;
  return CountTable(p.frame(), std::move(counts));
}

double NormalQuantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "quantile needs p in (0, 1)");
  }
  // 1 - p is exact here, and the lower-tail residual avoids cancellation.
  if (p > 0.5) return -NormalQuantile(1.0 - p);
  // Acklam's rational approximation, refined by one Halley step.
  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                 -2.759285104469687e+02, 1.383577518672690e+02,
                                 -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                 -1.556989798598866e+02, 6.680131188771972e+01,
                                 -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                 -2.400758277161838e+00, -2.549732539343734e+00,
                                 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                 2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double p_low = 0.02425;
  double x;
  if (p < p_low) {
    const double q = std::sqrt(-2 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
  } else {
    const double q = p - 0.5;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1);
  }
  const double e = 0.5 * std::erfc(-x / std::numbers::sqrt2) - p;
  const double u = e * std::sqrt(2 * std::numbers::pi) * std::exp(x * x / 2);
  return x - u / (1 + x * u / 2);
}

double OneSidedZ(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "alpha must lie in (0, 1], got " + std::to_string(alpha));
  }
  if (alpha >= 0.5) return 0.0;
  return NormalQuantile(1.0 - alpha);
}

double WilsonLowerBound(std::uint64_t k, std::uint64_t n, double z) {
  if (n == 0 || k > n) {
    throw Error(ErrorCode::kInvalidArgument, "Wilson bound needs 0 <= k <= n, n > 0");
  }
  if (k == 0) return 0.0;
  const double nn = static_cast<double>(n);
  const double phat = static_cast<double>(k) / nn;
  if (z == 0.0) return phat;
  const double z2 = z * z;
  const double centre = phat + z2 / (2 * nn);
  const double spread = z * std::sqrt(phat * (1 - phat) / nn + z2 / (4 * nn * nn));
  return std::max(0.0, (centre - spread) / (1 + z2 / nn));
}

MassFunction EstimateRaw(const CountTable& table) {
  std::map<Mask, Scalar> m;
  for (const auto& [mask, count] : table.counts()) {
    if (count) m.emplace(mask, Scalar(Rational(count, table.total())));
  }
  return MassFunction::FromMasks(table.frame(), m);
}

MassFunction EstimateWithConfidence(const CountTable& table, double alpha,
                                    bool bonferroni) {
  OneSidedZ(alpha);  // validates alpha
  const Mask full = table.frame().full_mask();
  std::size_t cells = 0;
  for (const auto& [mask, count] : table.counts()) cells += (mask != full);
  const double level = bonferroni && cells > 0 ? alpha / cells : alpha;
  const double z = OneSidedZ(level);
  if (z == 0.0) return EstimateRaw(table);

  std::map<Mask, Scalar> m;
  double committed = 0.0;
  for (const auto& [mask, count] : table.counts()) {
    if (mask == full) continue;
    const double lb = WilsonLowerBound(count, table.total(), z);
    if (lb > 0.0) m.emplace(mask, Scalar(lb));
    committed += lb;
  }
  m[full] = Scalar(1.0 - committed);
  return MassFunction::FromMasks(table.frame(), m);
}

}  // namespace dsb
