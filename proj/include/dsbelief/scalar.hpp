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

#include <compare>
#include <string>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

namespace dsb {

using Rational = boost::multiprecision::cpp_rational;

enum class ArithmeticMode { kExact, kFloating };

/// A number that is either an exact rational or an IEEE double.
///
/// Arithmetic between two exact values stays exact; any operation that
/// touches a floating value produces a floating value.
class Scalar {
 public:
  Scalar() : value_(Rational(0)) {}
  Scalar(int v) : value_(Rational(v)) {}  // NOLINT: integers are exact
  explicit Scalar(Rational r) : value_(std::move(r)) {}
  explicit Scalar(double d) : value_(d) {}

  static Scalar Fraction(long long num, long long den) {
    return Scalar(Rational(num, den));
  }

  bool is_exact() const { return std::holds_alternative<Rational>(value_); }
  ArithmeticMode mode() const {
    return is_exact() ? ArithmeticMode::kExact : ArithmeticMode::kFloating;
  }

  const Rational& rational() const;
  double to_double() const;

  // Same value converted to the requested mode. Floating to exact is not
  // offered; use the rational constructor explicitly.
  Scalar as_floating() const { return Scalar(to_double()); }

  // "p/q" in exact mode (q >= 1, always printed), shortest round-trip
  // decimal in floating mode.
  std::string ToString() const;
  // Fixed-point decimal with the given number of digits.
  std::string ToDecimal(int digits) const;

  bool is_zero() const;
  int sign() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator-(const Scalar& a) { return Scalar(0) - a; }

  // Mixed-mode comparisons go through double.
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend std::partial_ordering operator<=>(const Scalar& a, const Scalar& b);

 private:
  std::variant<Rational, double> value_;
};

// Parses "p/q", "p", or a decimal literal. Fractions and integers are exact,
// anything with a decimal point or exponent is floating.
Scalar ParseScalar(const std::string& text);

double Abs(const Scalar& s);

}  // namespace dsb
