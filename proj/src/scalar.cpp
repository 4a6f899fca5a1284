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
#include "dsbelief/scalar.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <system_error>

#include "dsbelief/error.hpp"

namespace dsb {

const Rational& Scalar::rational() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return *r;
  throw Error(ErrorCode::kInvalidArgument,
              "scalar is floating, exact value requested");
}

double Scalar::to_double() const {
  if (const auto* r = std::get_if<Rational>(&value_)) {
    return r->convert_to<double>();
  }
  return std::get<double>(value_);
}

std::string Scalar::ToString() const {
  if (const auto* r = std::get_if<Rational>(&value_)) {
    return numerator(*r).str() + "/" + denominator(*r).str();
  }
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), std::get<double>(value_));
  if (ec != std::errc()) return "nan";
  return std::string(buf, end);
}

std::string Scalar::ToDecimal(int digits) const {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, to_double());
  return buf;
}

bool Scalar::is_zero() const { return sign() == 0; }

int Scalar::sign() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return r->sign();
  const double d = std::get<double>(value_);
  return (d > 0) - (d < 0);
}

namespace {

template <class ExactOp, class FloatOp>
void Apply(std::variant<Rational, double>& lhs,
           const std::variant<Rational, double>& rhs, ExactOp exact_op,
           FloatOp float_op) {
  auto* lr = std::get_if<Rational>(&lhs);
  const auto* rr = std::get_if<Rational>(&rhs);
  if (lr && rr) {
    exact_op(*lr, *rr);
    return;
  }
  const double a = lr ? lr->convert_to<double>() : std::get<double>(lhs);
  const double b = rr ? rr->convert_to<double>() : std::get<double>(rhs);
  lhs = float_op(a, b);
}

}  // namespace

Scalar& Scalar::operator+=(const Scalar& o) {
  Apply(value_, o.value_, [](Rational& a, const Rational& b) { a += b; },
        [](double a, double b) { return a + b; });
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  Apply(value_, o.value_, [](Rational& a, const Rational& b) { a -= b; },
        [](double a, double b) { return a - b; });
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  Apply(value_, o.value_, [](Rational& a, const Rational& b) { a *= b; },
        [](double a, double b) { return a * b; });
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw Error(ErrorCode::kInvalidArgument, "division by zero");
  Apply(value_, o.value_, [](Rational& a, const Rational& b) { a /= b; },
        [](double a, double b) { return a / b; });
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return a.rational() == b.rational();
  return a.to_double() == b.to_double();
}

std::partial_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) {
    const int c = a.rational().compare(b.rational());
    return c < 0 ? std::partial_ordering::less
                 : c > 0 ? std::partial_ordering::greater
                         : std::partial_ordering::equivalent;
  }
  return a.to_double() <=> b.to_double();
}

Scalar ParseScalar(const std::string& text) {
  if (text.empty()) throw Error(ErrorCode::kParse, "empty number");
  const auto slash = text.find('/');
  auto parse_int = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("+-0123456789") != std::string::npos ||
        s.find_first_of("0123456789") == std::string::npos) {
      throw Error(ErrorCode::kParse, "malformed number '" + text + "'");
    }
    return boost::multiprecision::cpp_int(s[0] == '+' ? s.substr(1) : s);
  };
  if (slash != std::string::npos) {
    const auto num = parse_int(text.substr(0, slash));
    const auto den = parse_int(text.substr(slash + 1));
    if (den == 0) {
      throw Error(ErrorCode::kParse, "zero denominator in '" + text + "'");
    }
    return Scalar(Rational(num, den));
  }
  if (text.find_first_of(".eE") == std::string::npos) {
    return Scalar(Rational(parse_int(text)));
  }
  double d = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, d);
  if (ec != std::errc() || ptr != last || !std::isfinite(d)) {
    throw Error(ErrorCode::kParse, "malformed number '" + text + "'");
  }
  return Scalar(d);
}

double Abs(const Scalar& s) { return std::fabs(s.to_double()); }

}  // namespace dsb
