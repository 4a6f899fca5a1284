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
#include "dsbelief/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <set>
#include <sstream>

#include "dsbelief/error.hpp"
#include "json.hpp"

namespace dsb {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

std::string Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> Split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(Trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

[[noreturn]] void ParseFail(const std::string& what) {
  throw Error(ErrorCode::kParse, what);
}

json ParseJson(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    ParseFail(std::string(what) + ": " + e.what());
  }
}

}  // namespace

std::vector<AttributeDecl> ParseFrameDecl(const std::string& text) {
  std::vector<AttributeDecl> out;
  const std::string trimmed = Trim(text);
  if (!trimmed.empty() && trimmed.front() == '{') {
    const json doc = ParseJson(trimmed, "frame declaration");
    try {
      for (const auto& a : doc.at("attributes")) {
        out.push_back({a.at("name").get<std::string>(),
                       a.at("atoms").get<std::vector<std::string>>()});
      }
    } catch (const json::exception& e) {
      ParseFail(std::string("frame declaration: ") + e.what());
    }
  } else {
    std::string normalized = trimmed;
    std::replace(normalized.begin(), normalized.end(), '\n', ';');
    for (const auto& part : Split(normalized, ';')) {
      if (part.empty()) continue;
      const auto eq = part.find('=');
      if (eq == std::string::npos) {
        ParseFail("frame declaration '" + part + "' is not name=atom,atom,...");
      }
      AttributeDecl decl{Trim(part.substr(0, eq)), Split(part.substr(eq + 1), ',')};
      if (decl.name.empty()) ParseFail("frame declaration with an empty name");
      out.push_back(std::move(decl));
    }
  }
  if (out.empty()) ParseFail("frame declaration lists no attributes");
  std::set<std::string> names;
  for (const auto& a : out) {
    if (!names.insert(a.name).second) {
      ParseFail("attribute '" + a.name + "' declared twice");
    }
  }
  return out;
}

Frame FrameFromDecl(const std::vector<AttributeDecl>& attributes) {
  if (attributes.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no attributes declared");
  }
  std::vector<Frame> factors;
  for (const auto& a : attributes) factors.push_back(Frame::Make(a.atoms));
  if (factors.size() == 1) return factors.front();
  return Frame::Product(factors);
}

Population ParsePopulationCsv(const std::string& csv,
                              const std::vector<AttributeDecl>& attributes) {
  std::istringstream in(csv);
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++line_no;
    if (!Trim(line).empty()) {
      header = Split(line, ',');
      break;
    }
  }
  if (header.empty()) ParseFail("CSV has no header row");
  const std::string header_at = "line " + std::to_string(line_no);

  std::ptrdiff_t count_col = -1;
  std::vector<const AttributeDecl*> columns(header.size(), nullptr);
  std::vector<AttributeDecl> ordered;
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (header[c] == "count") {
      if (count_col >= 0) ParseFail(header_at + ": duplicate 'count' column");
      count_col = static_cast<std::ptrdiff_t>(c);
      continue;
    }
    auto it = std::find_if(attributes.begin(), attributes.end(),
                           [&](const AttributeDecl& a) { return a.name == header[c]; });
    if (it == attributes.end()) {
      ParseFail(header_at + ": column '" + header[c] +
                "' is not a declared attribute");
    }
    if (std::any_of(ordered.begin(), ordered.end(),
                    [&](const AttributeDecl& a) { return a.name == it->name; })) {
      ParseFail(header_at + ": column '" + header[c] + "' appears twice");
    }
    ordered.push_back(*it);
  }
  for (const auto& a : attributes) {
    if (std::none_of(ordered.begin(), ordered.end(),
                     [&](const AttributeDecl& o) { return o.name == a.name; })) {
      ParseFail(header_at + ": declared attribute '" + a.name +
                "' has no column");
    }
  }
  const Frame frame = FrameFromDecl(ordered);
  std::vector<Frame> factor_frames;
  if (frame.is_product()) {
    factor_frames = frame.factors();
  } else {
    factor_frames.push_back(frame);
  }

  std::vector<SetValuedRecord> records;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    const std::string at = "line " + std::to_string(line_no);
    const auto cells = Split(line, ',');
    if (cells.size() != header.size()) {
      ParseFail(at + ": expected " + std::to_string(header.size()) +
                " cells, found " + std::to_string(cells.size()));
    }
    std::uint64_t weight = 1;
    std::vector<Mask> cell_masks;
    std::size_t factor = 0;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (static_cast<std::ptrdiff_t>(c) == count_col) {
        const auto& s = cells[c];
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), weight);
        if (ec != std::errc() || ptr != s.data() + s.size() || weight == 0) {
          ParseFail(at + ": count '" + s + "' is not a positive integer");
        }
        continue;
      }
      const Frame& f = factor_frames[factor];
      Mask mask = 0;
      for (const auto& token : Split(cells[c], '|')) {
        if (token.empty()) {
          ParseFail(at + ": empty atom in column '" + header[c] + "'");
        }
        auto idx = f.index_of(token);
        if (!idx) {
          throw Error(ErrorCode::kUnknownAtom, at + ": unknown atom '" + token +
                                                   "' in column '" + header[c] +
                                                   "'");
        }
        mask |= Mask{1} << *idx;
      }
      cell_masks.push_back(mask);
      ++factor;
    }
    Mask value = 0;
    if (!frame.is_product()) {
      value = cell_masks.front();
    } else {
      for (std::size_t i = 0; i < frame.size(); ++i) {
        bool inside = true;
        for (std::size_t k = 0; k < cell_masks.size() && inside; ++k) {
          inside = (cell_masks[k] >> frame.coordinate(i, k)) & 1U;
        }
        if (inside) value |= Mask{1} << i;
      }
    }
    records.push_back({frame.FromMask(value), weight});
  }
  if (records.empty()) ParseFail("CSV has no data rows");
  return Population(frame, records);
}

MassFunction MassFromJson(const std::string& text) {
  const json doc = ParseJson(text, "mass JSON");
  try {
    const Frame frame = Frame::Make(doc.at("frame").get<std::vector<std::string>>());
    std::map<Mask, Scalar> entries;
    for (const auto& e : doc.at("mass")) {
      const Subset set =
          frame.Encode(e.at("set").get<std::vector<std::string>>());
      const json& m = e.at("m");
      Scalar value;
      if (m.is_string()) {
        value = ParseScalar(m.get<std::string>());
      } else if (m.is_number_integer()) {
        value = Scalar(Rational(m.get<long long>()));
      } else if (m.is_number()) {
        value = Scalar(m.get<double>());
      } else {
        ParseFail("mass JSON: 'm' must be a number or a \"p/q\" string");
      }
      if (!entries.emplace(set.mask(), value).second) {
        ParseFail("mass JSON: set " + set.ToString() + " listed twice");
      }
    }
    return MassFunction::FromMasks(frame, entries);
  } catch (const json::exception& e) {
    ParseFail(std::string("mass JSON: ") + e.what());
  }
}

std::string MassToJson(const MassFunction& m) {
  ordered_json doc;
  doc["frame"] = m.frame().atoms();
  doc["mass"] = ordered_json::array();
  for (const auto& fe : m.FocalElements()) {
    ordered_json entry;
    entry["set"] = fe.set.Decode();
    if (fe.mass.is_exact()) {
      entry["m"] = fe.mass.ToString();
    } else {
      entry["m"] = fe.mass.to_double();
    }
    doc["mass"].push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

std::string SimulationReportToJson(const SimulationReport& report) {
  ordered_json doc;
  doc["rng"] = report.rng_algorithm;
  doc["seed"] = report.seed;
  doc["chunks"] = report.chunks;
  doc["draws_attempted"] = report.draws_attempted;
  doc["draws_discarded"] = report.draws_discarded;
  doc["discard_fraction"] = report.discard_fraction();
  return doc.dump(2) + "\n";
}

namespace {

std::string Show(const Scalar& s, bool rational) {
  if (rational && s.is_exact()) return s.ToString();
  return s.ToDecimal(6);
}

}  // namespace

std::string RenderMassTable(const MassFunction& m, bool rational) {
  std::vector<std::array<std::string, 4>> rows;
  rows.push_back({"set", "m", "Bel", "Pl"});
  for (const auto& fe : m.FocalElements()) {
    rows.push_back({fe.set.ToString(), Show(fe.mass, rational),
                    Show(Bel(m, fe.set), rational), Show(Pl(m, fe.set), rational)});
  }
  std::array<std::size_t, 4> width{};
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < 4; ++c) width[c] = std::max(width[c], r[c].size());
  }
  std::string out;
  for (const auto& r : rows) {
    std::string line = r[0] + std::string(width[0] - r[0].size(), ' ');
    for (std::size_t c = 1; c < 4; ++c) {
      line += "  " + std::string(width[c] - r[c].size(), ' ') + r[c];
    }
    out += line + "\n";
  }
  return out;
}

std::string RenderMassTableJson(const MassFunction& m, bool rational) {
  auto value = [&](const Scalar& s) -> ordered_json {
    if (s.is_exact() && rational) return s.ToString();
    return s.to_double();
  };
  ordered_json doc;
  doc["frame"] = m.frame().atoms();
  doc["rows"] = ordered_json::array();
  for (const auto& fe : m.FocalElements()) {
    ordered_json row;
    row["set"] = fe.set.Decode();
    row["m"] = value(fe.mass);
    row["bel"] = value(Bel(m, fe.set));
    row["pl"] = value(Pl(m, fe.set));
    doc["rows"].push_back(std::move(row));
  }
  return doc.dump(2) + "\n";
}

}  // namespace dsb
