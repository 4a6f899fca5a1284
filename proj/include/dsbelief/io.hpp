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
#include <vector>

#include "dsbelief/belief.hpp"
#include "dsbelief/population.hpp"
#include "dsbelief/relabel.hpp"

namespace dsb {

struct AttributeDecl {
  std::string name;
  std::vector<std::string> atoms;
};

// Accepts either JSON ({"attributes": [{"name": .., "atoms": [..]}, ..]})
// or the compact form "quality=H,M,S,D;shop=B,G" (';' or newline between
// attributes).
std::vector<AttributeDecl> ParseFrameDecl(const std::string& text);

// Frame for the given attributes: the attribute's own frame for one
// attribute, their product (in the given order) for several.
Frame FrameFromDecl(const std::vector<AttributeDecl>& attributes);

/// Set-valued CSV.
///
/// The header names one column per attribute plus an optional "count"
/// column. Each data cell lists atoms of its attribute separated by '|';
/// the record's value is the product of its cells. Blank lines are skipped.
/// Errors carry the 1-based line number.
Population ParsePopulationCsv(const std::string& csv,
                              const std::vector<AttributeDecl>& attributes);

// {"frame": [..], "mass": [{"set": [..], "m": "p/q" | number}, ..]}
// Strings and integers load exact; other numbers load floating.
MassFunction MassFromJson(const std::string& json);
// Exact masses are written as "p/q" strings, floating ones as numbers.
std::string MassToJson(const MassFunction& m);

std::string SimulationReportToJson(const SimulationReport& report);

// One row per focal set with m, Bel and Pl. `rational` prints exact values
// as fractions; otherwise six decimals.
std::string RenderMassTable(const MassFunction& m, bool rational);
std::string RenderMassTableJson(const MassFunction& m, bool rational);

}  // namespace dsb
