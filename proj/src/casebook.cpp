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
#include "dsbelief/casebook.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "dsbelief/error.hpp"
#include "dsbelief/io.hpp"
#include "dsbelief/population.hpp"
#include "json.hpp"

#ifndef DSB_CASEBOOK_DIR
#define DSB_CASEBOOK_DIR "data/casebook"
#endif

namespace dsb {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Rough-set experts

RoughSetParams RoughSetParams::FromFree(Scalar p1, Scalar e1_d1, Scalar e2_d2,
                                        Scalar f1_d1, Scalar f2_d2) {
  RoughSetParams r;
  r.p1 = p1;
  r.p2 = Scalar(1) - p1;
  r.e1_d1 = e1_d1;
  r.e3_d1 = Scalar(1) - e1_d1;
  r.e2_d2 = e2_d2;
  r.e3_d2 = Scalar(1) - e2_d2;
  r.f1_d1 = f1_d1;
  r.f3_d1 = Scalar(1) - f1_d1;
  r.f2_d2 = f2_d2;
  r.f3_d2 = Scalar(1) - f2_d2;
  r.Validate();
  return r;
}

void RoughSetParams::Validate() const {
  const std::pair<const char*, const Scalar*> values[] = {
      {"p1", &p1},       {"p2", &p2},       {"e1'", &e1_d1}, {"e3'", &e3_d1},
      {"e2''", &e2_d2},  {"e3''", &e3_d2},  {"f1'", &f1_d1}, {"f3'", &f3_d1},
      {"f2''", &f2_d2},  {"f3''", &f3_d2}};
  for (const auto& [name, v] : values) {
    if (v->sign() < 0 || *v > Scalar(1)) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string(name) + " = " + v->ToString() + " is outside [0, 1]");
    }
  }
  auto pair = [](const char* what, const Scalar& a, const Scalar& b) {
    const Scalar sum = a + b;
    const bool ok = sum.is_exact() ? sum == Scalar(1)
                                   : std::fabs(sum.to_double() - 1.0) <= kPropertyTolerance;
    if (!ok) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string(what) + " sum to " + sum.ToString() + ", expected 1");
    }
  };
  pair("p1, p2", p1, p2);
  pair("e1', e3'", e1_d1, e3_d1);
  pair("e2'', e3''", e2_d2, e3_d2);
  pair("f1', f3'", f1_d1, f3_d1);
  pair("f2'', f3''", f2_d2, f3_d2);
}

Frame RoughSetFrame() {
  static const Frame frame = Frame::Make({"d1", "d2"});
  return frame;
}

namespace {

constexpr Mask kD1 = 1, kD2 = 2, kBoth = 3;

}  // namespace

std::pair<MassFunction, MassFunction> RsExpertMasses(const RoughSetParams& r) {
  r.Validate();
  const Frame frame = RoughSetFrame();
  auto m1 = MassFunction::FromMasks(
      frame, {{kD1, r.e1_d1 * r.p1},
              {kD2, r.e2_d2 * r.p2},
              {kBoth, r.e3_d1 * r.p1 + r.e3_d2 * r.p2}});
  auto m2 = MassFunction::FromMasks(
      frame, {{kD1, r.f1_d1 * r.p1},
              {kD2, r.f2_d2 * r.p2},
              {kBoth, r.f3_d1 * r.p1 + r.f3_d2 * r.p2}});
  return {std::move(m1), std::move(m2)};
}

MassFunction RsCombinedConditional(const RoughSetParams& r) {
  r.Validate();
  return MassFunction::FromMasks(
      RoughSetFrame(),
      {{kD1, r.p1 * (r.e1_d1 * r.f1_d1 + r.e1_d1 * r.f3_d1 + r.e3_d1 * r.f1_d1)},
       {kD2, r.p2 * (r.e2_d2 * r.f2_d2 + r.e2_d2 * r.f3_d2 + r.e3_d2 * r.f2_d2)},
       {kBoth, r.e3_d1 * r.f3_d1 * r.p1 + r.e3_d2 * r.f3_d2 * r.p2}});
}

double RsGap(const RoughSetParams& r) {
  const auto [m1, m2] = RsExpertMasses(r);
  return MaxMassDifference(RsCombinedConditional(r), CombineDempster(m1, m2).result);
}

// ---------------------------------------------------------------------------
// Case files

std::string DefaultCasebookDir() {
  if (const char* env = std::getenv("DSB_CASEBOOK_DIR"); env && *env) return env;
  return DSB_CASEBOOK_DIR;
}

std::vector<std::string> ListCases(const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  std::vector<std::string> names;
  for (const auto& entry : fs::directory_iterator(dir, ec)) {
    if (entry.path().extension() == ".json") {
      names.push_back(entry.path().stem().string());
    }
  }
  if (ec) {
    throw Error(ErrorCode::kIo, "cannot read casebook directory '" + dir +
                                    "': " + ec.message());
  }
  std::sort(names.begin(), names.end());
  return names;
}

namespace {

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string Join(const std::vector<std::string>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

}  // namespace

Case LoadCase(const std::string& dir, const std::string& name) {
  const auto names = ListCases(dir);
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    throw Error(ErrorCode::kUnknownCase, "unknown case '" + name +
                                             "'; available: " + Join(names, ", "));
  }
  const auto path = std::filesystem::path(dir) / (name + ".json");
  try {
    const json doc = json::parse(ReadFile(path));
    Case c;
    c.name = doc.at("name").get<std::string>();
    c.description = doc.value("description", "");
    for (const auto& e : doc.at("expected")) {
      ExpectedValue ev;
      ev.quantity = e.at("quantity").get<std::string>();
      ev.set = e.value("set", std::vector<std::string>{});
      ev.value = e.at("value").get<std::string>();
      ev.relation = e.value("relation", "eq");
      ev.source = e.at("source").get<std::string>();
      if (ev.relation != "eq" && ev.relation != "gt" && ev.relation != "lt") {
        throw Error(ErrorCode::kParse, "case " + name + ": unknown relation '" +
                                           ev.relation + "'");
      }
      c.expected.push_back(std::move(ev));
    }
    c.notes = doc.value("notes", std::vector<std::string>{});
    c.inputs_json = doc.at("inputs").dump();
    return c;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, "case " + name + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// Case evaluation

namespace {

using Evaluator = std::function<Scalar(const ExpectedValue&)>;

struct Prepared {
  Evaluator evaluate;
  std::vector<std::string> notes;
};

[[noreturn]] void UnknownQuantity(const ExpectedValue& ev) {
  throw Error(ErrorCode::kInvalidArgument, "no rule computes '" + ev.quantity + "'");
}

MassFunction MassFromList(const Frame& frame, const json& list) {
  std::vector<std::pair<Subset, Scalar>> entries;
  for (const auto& e : list) {
    entries.emplace_back(frame.Encode(e.at("set").get<std::vector<std::string>>()),
                         ParseScalar(e.at("m").get<std::string>()));
  }
  return MassFunction::FromEntries(frame, entries);
}

// Joint value quality_set x shop_set on a two-attribute product frame.
Subset ProductValue(const Frame& joint, const json& spec,
                    const std::vector<AttributeDecl>& attributes) {
  Subset value = joint.Full();
  for (std::size_t k = 0; k < attributes.size(); ++k) {
    const auto names = spec.at(attributes[k].name).get<std::vector<std::string>>();
    value = value.Intersect(
        CylindricalExtension(joint, k, joint.factors()[k].Encode(names)));
  }
  return value;
}

struct TablePopulation {
  std::vector<AttributeDecl> attributes;
  Frame frame;
  Population population;
};

TablePopulation LoadTablePopulation(const json& in) {
  std::vector<AttributeDecl> attributes = ParseFrameDecl(
      json{{"attributes", in.at("attributes")}}.dump());
  Frame frame = FrameFromDecl(attributes);
  std::vector<SetValuedRecord> records;
  for (const auto& row : in.at("rows")) {
    records.push_back({ProductValue(frame, row, attributes),
                       row.at("count").get<std::uint64_t>()});
  }
  Population population(frame, records);
  return {std::move(attributes), std::move(frame), std::move(population)};
}

Prepared PrepareShampoo(const json& in) {
  auto table = std::make_shared<TablePopulation>(LoadTablePopulation(in));
  auto mass = std::make_shared<MassFunction>(FreqMass(table->population));
  return {[table, mass](const ExpectedValue& ev) -> Scalar {
            const Subset a = table->frame.Encode(ev.set);
            if (ev.quantity == "m") return mass->mass(a);
            if (ev.quantity == "Bel") return FreqBel(table->population, a);
            if (ev.quantity == "Pl") return FreqPl(table->population, a);
            UnknownQuantity(ev);
          },
          {}};
}

Prepared PrepareShampooRelabel(const json& in) {
  auto table = std::make_shared<TablePopulation>(LoadTablePopulation(in));
  LabelingSpec labeling(table->frame);
  for (const auto& rule : in.at("labeling")) {
    const Subset value = ProductValue(table->frame, rule, table->attributes);
    const Subset label = rule.at("label").is_null()
                             ? table->frame.Empty()
                             : ProductValue(table->frame, rule.at("label"),
                                            table->attributes);
    labeling.Set(value, label);
  }
  auto labelled = std::make_shared<Population>(ApplyLabeling(table->population, labeling));
  auto mass = std::make_shared<MassFunction>(FreqMass(*labelled));

  // Total weight of records whose projection onto `factor` is exactly `set`.
  auto marginal_total = [table, labelled](std::size_t factor,
                                          const std::vector<std::string>& set) {
    const Subset target = table->frame.factors()[factor].Encode(set);
    std::uint64_t total = 0;
    for (const auto& r : labelled->records()) {
      if (ProjectSubset(table->frame, factor, r.value) == target) total += r.weight;
    }
    return total;
  };
  return {[=](const ExpectedValue& ev) -> Scalar {
            if (ev.quantity == "weight") {
              return Scalar(Rational(labelled->weight_of(table->frame.Encode(ev.set))));
            }
            if (ev.quantity == "row_total") return Scalar(Rational(marginal_total(0, ev.set)));
            if (ev.quantity == "column_total") return Scalar(Rational(marginal_total(1, ev.set)));
            if (ev.quantity == "total") return Scalar(Rational(labelled->total_weight()));
            if (ev.quantity == "m") return mass->mass(table->frame.Encode(ev.set));
            UnknownQuantity(ev);
          },
          {}};
}

Prepared PrepareCombination(const Frame& frame, const json& in) {
  auto report = std::make_shared<CombinationReport>(
      CombineDempster(MassFromList(frame, in.at("m1")), MassFromList(frame, in.at("m2"))));
  return {[frame, report](const ExpectedValue& ev) -> Scalar {
            if (ev.quantity == "m") return report->result.mass(frame.Encode(ev.set));
            if (ev.quantity == "conflict") return report->conflict_mass;
            if (ev.quantity == "unnormalized") {
              return report->result.mass(frame.Encode(ev.set)) *
                     (Scalar(1) - report->conflict_mass);
            }
            UnknownQuantity(ev);
          },
          {}};
}

Prepared PrepareMaterialImplication(const json& in) {
  std::vector<Frame> factors;
  for (const auto& f : in.at("factors")) {
    factors.push_back(Frame::Make(f.get<std::vector<std::string>>()));
  }
  return PrepareCombination(Frame::Product(factors), in);
}

Prepared PrepareTwoExperts(const json& in) {
  return PrepareCombination(Frame::Make(in.at("frame").get<std::vector<std::string>>()), in);
}

// Mass over `frame` of the value chosen by one of `agents` independent
// random devices, each drawing the first atom with probability `p_first`,
// when the selection among agents is unknown: each joint outcome of the
// devices supports the set of values the agents drew.
MassFunction AdversarialSelection(const Frame& frame, const Scalar& p_first,
                                  std::size_t agents) {
  const auto device = MassFunction::FromEntries(
      frame, {{frame.Singleton(0), p_first}, {frame.Singleton(1), Scalar(1) - p_first}});
  const std::vector<Frame> copies(agents, Frame::Make(frame.atoms()));
  const Frame joint = Frame::Product(copies);
  MassFunction combined = MassFunction::Vacuous(joint);
  for (std::size_t k = 0; k < agents; ++k) {
    combined = CombineDempster(combined, ExtendToJoint(joint, k, device)).result;
  }
  std::map<Mask, Scalar> selected;
  for (const auto& [mask, value] : combined.masses()) {
    Mask support = 0;
    for (std::size_t atom : joint.FromMask(mask).Indices()) {
      for (std::size_t k = 0; k < agents; ++k) {
        support |= Mask{1} << joint.coordinate(atom, k);
      }
    }
    auto [it, inserted] = selected.emplace(support, value);
    if (!inserted) it->second += value;
  }
  return MassFunction::FromMasks(frame, selected);
}

Prepared PrepareKiller(const json& in) {
  const Frame weapons = Frame::Make(in.at("weapons").get<std::vector<std::string>>());
  const Frame outcomes = Frame::Make(in.at("outcomes").get<std::vector<std::string>>());
  const auto agents = in.at("agents").get<std::size_t>();
  const Frame joint = Frame::Product(weapons, outcomes);

  auto weapon_mass = std::make_shared<MassFunction>(
      AdversarialSelection(weapons, ParseScalar(in.at("p_gun").get<std::string>()), agents));
  auto rescue_mass = std::make_shared<MassFunction>(AdversarialSelection(
      outcomes, ParseScalar(in.at("p_rescue_given_gun").get<std::string>()), agents));

  const MassFunction stored = MassFromList(joint, in.at("stored_m12"));
  const MassFunction weapon_joint = ExtendToJoint(joint, 0, *weapon_mass);
  auto final_report = std::make_shared<CombinationReport>(CombineDempster(weapon_joint, stored));

  // Conditional beliefs embedded as (not B) or A.
  const Subset gun = CylindricalExtension(joint, 0, weapons.Encode({"gun"}));
  const Subset knife = CylindricalExtension(joint, 0, weapons.Encode({"knife"}));
  const MassFunction physician =
      ConditionEmbed(joint, gun, ExtendToJoint(joint, 1, *rescue_mass));
  const MassFunction after_knife = ConditionEmbed(
      joint, knife,
      ExtendToJoint(joint, 1,
                    MassFunction::FromEntries(outcomes, {{outcomes.Encode({"let die"}), Scalar(1)}})));
  const MassFunction derived = CombineDempster(physician, after_knife).result;
  auto derived_final =
      std::make_shared<CombinationReport>(CombineDempster(weapon_joint, derived));

  std::vector<std::string> notes;
  if (derived == stored) {
    notes.push_back("conditional embedding reproduces the stored m12 focal sets");
  } else {
    for (const auto& fe : stored.FocalElements()) {
      if (derived.mass(fe.set) != fe.mass) {
        notes.push_back("stored m12 " + fe.set.ToString() + " = " + fe.mass.ToString() +
                        ", conditional embedding gives " + derived.mass(fe.set).ToString());
      }
    }
    for (const auto& fe : derived.FocalElements()) {
      if (stored.mass(fe.set).is_zero()) {
        notes.push_back("conditional embedding puts " + fe.mass.ToString() + " on " +
                        fe.set.ToString() + ", absent from the stored m12");
      }
    }
  }

  return {[=](const ExpectedValue& ev) -> Scalar {
            if (ev.quantity == "Bel_weapon") return Bel(*weapon_mass, weapons.Encode(ev.set));
            if (ev.quantity == "Bel_rescue_given_gun") {
              return Bel(*rescue_mass, outcomes.Encode(ev.set));
            }
            if (ev.quantity == "m_final") return final_report->result.mass(joint.Encode(ev.set));
            if (ev.quantity == "conflict_final") return final_report->conflict_mass;
            if (ev.quantity == "m_final_derived") {
              return derived_final->result.mass(joint.Encode(ev.set));
            }
            UnknownQuantity(ev);
          },
          std::move(notes)};
}

RoughSetParams ParamsFromJson(const json& j) {
  auto get = [&](const char* key) { return ParseScalar(j.at(key).get<std::string>()); };
  return RoughSetParams::FromFree(get("p1"), get("e1_d1"), get("e2_d2"), get("f1_d1"),
                                  get("f2_d2"));
}

Prepared PrepareRoughSet(const json& in) {
  const RoughSetParams params = ParamsFromJson(in.at("instance"));
  const RoughSetParams vacuous = ParamsFromJson(in.at("vacuous"));
  auto experts = std::make_shared<std::pair<MassFunction, MassFunction>>(RsExpertMasses(params));
  auto joint = std::make_shared<MassFunction>(RsCombinedConditional(params));
  auto dempster =
      std::make_shared<CombinationReport>(CombineDempster(experts->first, experts->second));
  const double gap = RsGap(params);
  const double gap_vacuous = RsGap(vacuous);
  const Frame frame = RoughSetFrame();
  return {[=](const ExpectedValue& ev) -> Scalar {
            if (ev.quantity == "m1") return experts->first.mass(frame.Encode(ev.set));
            if (ev.quantity == "m2") return experts->second.mass(frame.Encode(ev.set));
            if (ev.quantity == "m12") return joint->mass(frame.Encode(ev.set));
            if (ev.quantity == "dempster") return dempster->result.mass(frame.Encode(ev.set));
            if (ev.quantity == "conflict") return dempster->conflict_mass;
            if (ev.quantity == "gap") return Scalar(gap);
            if (ev.quantity == "gap_vacuous") return Scalar(gap_vacuous);
            UnknownQuantity(ev);
          },
          {}};
}

const std::map<std::string, std::function<Prepared(const json&)>>& Preparers() {
  static const std::map<std::string, std::function<Prepared(const json&)>> table = {
      {"shampoo_base", PrepareShampoo},
      {"shampoo_measurements", PrepareShampoo},
      {"shampoo_relabel", PrepareShampooRelabel},
      {"material_implication", PrepareMaterialImplication},
      {"two_experts", PrepareTwoExperts},
      {"killer", PrepareKiller},
      {"rough_set", PrepareRoughSet},
  };
  return table;
}

bool Compare(const Scalar& computed, const Scalar& expected, const std::string& relation) {
  if (relation == "gt") return computed > expected;
  if (relation == "lt") return computed < expected;
  if (computed.is_exact() && expected.is_exact()) return computed == expected;
  return std::fabs(computed.to_double() - expected.to_double()) <= kCaseTolerance;
}

}  // namespace

bool CaseReport::passed() const { return failures() == 0; }

std::size_t CaseReport::failures() const {
  return std::count_if(checks.begin(), checks.end(),
                       [](const QuantityCheck& c) { return !c.passed; });
}

std::string CaseReport::Render() const {
  std::string out;
  for (const auto& c : checks) {
    const char* op = c.relation == "gt" ? " > " : c.relation == "lt" ? " < " : " = ";
    out += std::string(c.passed ? "[PASS] " : "[FAIL] ") + name + ": " + c.label +
           " computed " + c.computed + ", expected" + op + c.expected + "\n";
  }
  for (const auto& n : notes) out += "[NOTE] " + name + ": " + n + "\n";
  out += name + ": " + std::to_string(checks.size() - failures()) + "/" +
         std::to_string(checks.size()) + " checks passed\n";
  return out;
}

CaseReport RunCase(const std::string& dir, const std::string& name) {
  const Case c = LoadCase(dir, name);
  auto it = Preparers().find(c.name);
  if (it == Preparers().end()) {
    throw Error(ErrorCode::kUnknownCase, "case '" + c.name + "' has no evaluator");
  }
  Prepared prepared;
  try {
    prepared = it->second(json::parse(c.inputs_json));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, "case " + name + " inputs: " + e.what());
  }

  CaseReport report;
  report.name = c.name;
  report.notes = c.notes;
  report.notes.insert(report.notes.end(), prepared.notes.begin(), prepared.notes.end());
  for (const auto& ev : c.expected) {
    QuantityCheck check;
    check.label = ev.quantity + (ev.set.empty() && ev.quantity != "m"
                                     ? std::string()
                                     : "({" + Join(ev.set, ",") + "})");
    check.relation = ev.relation;
    check.expected = ev.value;
    check.source = ev.source;
    try {
      const Scalar computed = prepared.evaluate(ev);
      check.computed = computed.ToString();
      check.passed = Compare(computed, ParseScalar(ev.value), ev.relation);
    } catch (const Error& e) {
      check.computed = std::string("error: ") + e.what();
      check.passed = false;
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace dsb
