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

#include <string>
#include <utility>
#include <vector>

#include "dsbelief/belief.hpp"
#include "dsbelief/scalar.hpp"

namespace dsb {

// Parameters of the two-expert rough-set model: the decision prior and the
// conditional laws of each expert's attribute given the decision. Primed
// fields condition on d1, double-primed ones on d2.
struct RoughSetParams {
  Scalar p1, p2;
  Scalar e1_d1, e3_d1;  // E1 = e11 / e13 given d1
  Scalar e2_d2, e3_d2;  // E1 = e12 / e13 given d2
  Scalar f1_d1, f3_d1;  // E2 = e21 / e23 given d1
  Scalar f2_d2, f3_d2;  // E2 = e22 / e23 given d2

  // Fills the complements (p2 = 1 - p1, e3_d1 = 1 - e1_d1, ...).
  static RoughSetParams FromFree(Scalar p1, Scalar e1_d1, Scalar e2_d2,
                                 Scalar f1_d1, Scalar f2_d2);

  // Throws kInvalidArgument unless every value is in [0, 1] and each pair
  // sums to 1 (exactly, or within 1e-12 for floating values).
  void Validate() const;
};

// The frame {d1, d2}.
Frame RoughSetFrame();

// Masses of the two experts read off their indication rules.
std::pair<MassFunction, MassFunction> RsExpertMasses(const RoughSetParams& params);

// Mass of the joint use of both attributes when they are independent given
// the decision.
MassFunction RsCombinedConditional(const RoughSetParams& params);

// L-infinity distance between RsCombinedConditional and the Dempster
// combination of the expert masses.
double RsGap(const RoughSetParams& params);

struct ExpectedValue {
  std::string quantity;
  std::vector<std::string> set;
  std::string value;
  std::string relation = "eq";  // eq | gt | lt
  std::string source;
};

struct Case {
  std::string name;
  std::string description;
  std::vector<ExpectedValue> expected;
  std::vector<std::string> notes;
  std::string inputs_json;
};

struct QuantityCheck {
  std::string label;
  std::string relation;
  std::string expected;
  std::string computed;
  bool passed = false;
  std::string source;
};

struct CaseReport {
  std::string name;
  std::vector<QuantityCheck> checks;
  std::vector<std::string> notes;

  bool passed() const;
  std::size_t failures() const;
  std::string Render() const;
};

// Tolerance for floating golden comparisons.
inline constexpr double kCaseTolerance = 1e-9;

// Directory holding the case JSON files: $DSB_CASEBOOK_DIR if set, else the
// directory configured at build time.
std::string DefaultCasebookDir();

std::vector<std::string> ListCases(const std::string& dir);
// Throws kUnknownCase listing the available names.
Case LoadCase(const std::string& dir, const std::string& name);
CaseReport RunCase(const std::string& dir, const std::string& name);

}  // namespace dsb
