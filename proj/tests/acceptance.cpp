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
// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <boost/math/distributions/normal.hpp>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "dsbelief/belief.hpp"
#include "dsbelief/casebook.hpp"
#include "dsbelief/error.hpp"
#include "dsbelief/estimate.hpp"
#include "dsbelief/population.hpp"
#include "dsbelief/relabel.hpp"
#include "test_support.hpp"

namespace dsb {
namespace {

using testing::ProductSet;
using testing::RandomFrame;
using testing::RandomMass;
using testing::RandomPopulation;
using testing::Rng;
using testing::ShampooPopulation;

struct Outcome {
  bool pass = true;
  std::string detail;

  void Require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

// 1. Shampoo golden table.
Outcome ShampooGolden() {
  Outcome out;
  const Population p = ShampooPopulation();
  const Frame& f = p.frame();
  const MassFunction m = FreqMass(p);
  struct Row {
    std::vector<std::string> q, s;
    int mass, bel;
  };
  const std::vector<Row> rows = {
      {{"H"}, {"B"}, 20, 20},          {{"H"}, {"G"}, 100, 100},
      {{"H"}, {"B", "G"}, 70, 190},    {{"M"}, {"B"}, 80, 80},
      {{"M"}, {"G"}, 100, 100},        {{"M"}, {"B", "G"}, 110, 290},
      {{"S"}, {"B"}, 50, 50},          {{"S"}, {"G"}, 5, 5},
      {{"S"}, {"B", "G"}, 15, 70},     {{"D"}, {"B"}, 10, 10},
      {{"D"}, {"G"}, 1, 1},            {{"D"}, {"B", "G"}, 3, 14},
      {{"H", "S"}, {"B"}, 15, 85},     {{"H", "S"}, {"G"}, 10, 115},
      {{"H", "S"}, {"B", "G"}, 14, 299}, {{"M", "S"}, {"B"}, 30, 160},
      {{"M", "S"}, {"G"}, 20, 125},    {{"M", "S"}, {"B", "G"}, 25, 435},
      {{"H", "D"}, {"B"}, 8, 38},      {{"H", "D"}, {"G"}, 2, 103},
      {{"H", "D"}, {"B", "G"}, 3, 217}, {{"M", "D"}, {"B"}, 15, 105},
      {{"M", "D"}, {"G"}, 7, 108},     {{"M", "D"}, {"B", "G"}, 10, 336}};
  int matched = 0;
  for (const auto& row : rows) {
    const Subset set = ProductSet(f, row.q, row.s);
    const bool ok = m.mass(set) == Scalar::Fraction(row.mass, 723) &&
                    FreqBel(p, set) == Scalar::Fraction(row.bel, 723);
    out.Require(ok, "row " + set.ToString() + " differs");
    matched += ok;
  }
  out.Require(m.focal_count() == 24, "unexpected focal count");
  if (out.pass) out.detail = std::to_string(matched) + "/24 rows exact over 723";
  return out;
}

// 2. Labeling golden table.
Outcome LabelingGolden() {
  Outcome out;
  const Population p = ShampooPopulation();
  const Frame& f = p.frame();
  const Subset quality_hm = ProductSet(f, {"H", "M"}, {"B", "G"});
  const Subset bad_shop = ProductSet(f, {"H", "M", "S", "D"}, {"B"});
  LabelingSpec labels(f);
  labels.Set(ProductSet(f, {"S"}, {"G"}), f.Empty());
  labels.Set(ProductSet(f, {"D"}, {"G"}), f.Empty());
  for (const auto& q : std::vector<std::vector<std::string>>{
           {"H", "S"}, {"M", "S"}, {"H", "D"}, {"M", "D"}}) {
    labels.Set(ProductSet(f, q, {"G"}), quality_hm);
  }
  labels.Set(ProductSet(f, {"S"}, {"B", "G"}), bad_shop);
  labels.Set(ProductSet(f, {"D"}, {"B", "G"}), bad_shop);
  const Population relabelled = ApplyLabeling(p, labels);

  const std::vector<std::vector<std::string>> rows = {
      {"H"}, {"M"}, {"S"}, {"D"}, {"H", "S"}, {"M", "S"}, {"H", "D"}, {"M", "D"}};
  const std::vector<std::vector<std::string>> cols = {{"B"}, {"G"}, {"B", "G"}};
  const std::uint64_t expected[8][3] = {{20, 112, 70}, {80, 127, 110}, {65, 0, 0},
                                        {13, 0, 0},    {15, 0, 14},    {30, 0, 25},
                                        {8, 0, 3},     {15, 0, 10}};
  std::uint64_t col_total[3] = {0, 0, 0};
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const std::uint64_t w = relabelled.weight_of(ProductSet(f, rows[r], cols[c]));
      out.Require(w == expected[r][c], "cell " + ProductSet(f, rows[r], cols[c]).ToString() +
                                           " = " + std::to_string(w));
      col_total[c] += w;
    }
  }
  out.Require(col_total[0] == 246 && col_total[1] == 239 && col_total[2] == 232,
              "column totals differ");
  out.Require(relabelled.total_weight() == 717, "grand total differs");
  out.Require(FreqMass(relabelled).mass(ProductSet(f, {"H"}, {"G"})) ==
                  Scalar::Fraction(112, 717),
              "m((H,G)) differs");
  if (out.pass) out.detail = "24 cells exact, totals 246/239/232, grand total 717";
  return out;
}

// 3. Material implication.
Outcome MaterialImplication() {
  Outcome out;
  const Frame p = Frame::Make({"P", "~P"});
  const Frame q = Frame::Make({"Q", "~Q"});
  const Frame joint = Frame::Product(p, q);
  const Subset imp = joint.Encode({"(P,Q)", "(~P,Q)", "(~P,~Q)"});
  const Scalar half = Scalar::Fraction(1, 2);
  const auto m1 = MassFunction::FromEntries(joint, {{imp, half}, {imp.Complement(), half}});
  const auto m2 = ExtendToJoint(
      joint, 0, MassFunction::FromEntries(p, {{p.Encode({"P"}), half}, {p.Encode({"~P"}), half}}));
  const auto r = CombineDempster(m1, m2);
  const Scalar third = Scalar::Fraction(1, 3);
  out.Require(r.result.is_exact(), "result not exact");
  out.Require(r.conflict_mass == Scalar::Fraction(1, 4), "conflict " + r.conflict_mass.ToString());
  out.Require(r.result.focal_count() == 3, "focal count");
  out.Require(r.result.mass(joint.Encode({"(P,Q)"})) == third, "m({(P,Q)})");
  out.Require(r.result.mass(joint.Encode({"(P,~Q)"})) == third, "m({(P,~Q)})");
  out.Require(r.result.mass(joint.Encode({"(~P,Q)", "(~P,~Q)"})) == third, "m(~P)");
  if (out.pass) out.detail = "masses 1/3, 1/3, 1/3, conflict 1/4";
  return out;
}

// 4. Killer example.
Outcome Killer() {
  Outcome out;
  const Frame weapon = Frame::Make({"gun", "knife"});
  const std::vector<Frame> agents(3, weapon);
  const Frame choices = Frame::Product(agents);
  const Scalar p_gun(0.2);
  MassFunction joint = MassFunction::Vacuous(choices);
  for (std::size_t k = 0; k < agents.size(); ++k) {
    const auto device = MassFunction::FromMasks(
        weapon, {{weapon.Encode({"gun"}).mask(), p_gun},
                 {weapon.Encode({"knife"}).mask(), Scalar(1) - p_gun}});
    joint = CombineDempster(joint, ExtendToJoint(choices, k, device)).result;
  }
  // Push every joint choice forward to the set of weapons it offers.
  std::map<Mask, Scalar> pushed;
  for (const auto& [mask, v] : joint.masses()) {
    Mask offered = 0;
    for (std::size_t atom : choices.FromMask(mask).Indices()) {
      for (std::size_t k = 0; k < agents.size(); ++k) {
        offered |= Mask{1} << choices.coordinate(atom, k);
      }
    }
    pushed[offered] += v;
  }
  const auto m = MassFunction::FromMasks(weapon, pushed);
  const double bel_gun = Bel(m, weapon.Encode({"gun"})).to_double();
  const double bel_knife = Bel(m, weapon.Encode({"knife"})).to_double();
  out.Require(std::abs(bel_gun - 0.008) < 1e-9, "Bel(gun) " + std::to_string(bel_gun));
  out.Require(std::abs(bel_knife - 0.512) < 1e-9, "Bel(knife) " + std::to_string(bel_knife));

  const Frame outcome = Frame::Make({"rescue", "let die"});
  const Frame world = Frame::Product(weapon, outcome);
  const auto m12 = MassFunction::FromEntries(
      world, {{world.Encode({"(gun,let die)", "(knife,let die)", "(knife,rescue)"}), Scalar(0.48)},
              {world.Encode({"(gun,rescue)", "(knife,rescue)"}), Scalar(0.008)},
              {world.Encode({"(gun,let die)", "(knife,rescue)"}), Scalar(0.512)}});
  const auto final = CombineDempster(ExtendToJoint(world, 0, m), m12);
  const double value = final.result.mass(world.Encode({"(gun,let die)"})).to_double();
  out.Require(std::abs(value - 0.008 * 0.992) < 1e-9, "m({(gun,let die)}) " + std::to_string(value));
  out.Require(RunCase(DefaultCasebookDir(), "killer").passed(), "killer case fails");
  if (out.pass) {
    std::ostringstream ss;
    ss.precision(10);
    ss << "Bel(gun) " << bel_gun << ", Bel(knife) " << bel_knife
       << ", m({(gun,let die)}) " << value;
    out.detail = ss.str();
  }
  return out;
}

// 5. Relabeling equals Dempster's rule.
Outcome RelabelTheorem() {
  Outcome out;
  Rng rng(20260501);
  int compared = 0;
  while (compared < 100) {
    const Frame f = RandomFrame(rng, 2, 6);
    const MassFunction pm = FreqMass(RandomPopulation(rng, f));
    const LabelDistribution labels{RandomMass(rng, f)};
    CombinationReport expected{pm, Scalar(0)};
    try {
      expected = CombineDempster(pm, labels.mass);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kTotalConflict) throw;
      continue;
    }
    const MassFunction relabelled = RelabelExact(pm, labels);
    out.Require(relabelled.is_exact() && relabelled == expected.result,
                "instance " + std::to_string(compared) + " differs");
    ++compared;
  }

  const Population p = ShampooPopulation();
  const Frame& f = p.frame();
  const LabelDistribution labels{MassFunction::FromEntries(
      f, {{ProductSet(f, {"H", "M"}, {"B", "G"}), Scalar::Fraction(1, 2)},
          {ProductSet(f, {"S", "D"}, {"B"}), Scalar::Fraction(3, 10)},
          {f.Full(), Scalar::Fraction(1, 5)}})};
  const std::uint64_t n = 200000;
  const auto sim = RelabelSimulate(p, labels, n, 20260501, 4);
  const auto exact = CombineDempster(FreqMass(p), labels.mass);
  const double linf = MaxMassDifference(sim.empirical, exact.result);
  const double k = exact.conflict_mass.to_double();
  const double se = std::sqrt(k * (1 - k) / static_cast<double>(n));
  const double dev = std::abs(sim.discard_fraction() - k);
  out.Require(linf <= 0.01, "simulation L-inf " + std::to_string(linf));
  out.Require(dev <= 3 * se, "discard fraction off by " + std::to_string(dev / se) + " SE");
  if (out.pass) {
    std::ostringstream ss;
    ss.precision(4);
    ss << "100 exact instances equal; simulation L-inf " << linf << ", discard "
       << sim.discard_fraction() << " vs conflict " << k << " (" << dev / se << " SE)";
    out.detail = ss.str();
  }
  return out;
}

// 6. Moebius round trip.
Outcome MobiusRoundTrip() {
  Outcome out;
  Rng rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const Frame f = RandomFrame(rng, 1, 6);
    const MassFunction m = RandomMass(rng, f, true, 10);
    const auto bel = BeliefTable(m);
    out.Require(MassFromBel(f, bel) == m, "trial " + std::to_string(trial));
    const auto oracle = testing::MobiusOracle(bel);
    for (Mask a = 0; a <= f.full_mask(); ++a) {
      out.Require(oracle[a] == m.mass(f.FromMask(a)), "oracle disagrees");
    }
  }
  if (out.pass) out.detail = "100 random exact masses recovered";
  return out;
}

// 7. Rough-set gap.
Outcome RoughSetGap() {
  Outcome out;
  const auto r = RoughSetParams::FromFree(Scalar::Fraction(3, 5), Scalar::Fraction(7, 10),
                                          Scalar::Fraction(1, 2), Scalar::Fraction(2, 5),
                                          Scalar::Fraction(4, 5));
  // Enumerate the 2 * 3 * 3 joint outcomes of (D, E1, E2).
  const Scalar zero;
  const Scalar prior[2] = {r.p1, r.p2};
  const Scalar e1[2][3] = {{r.e1_d1, zero, r.e3_d1}, {zero, r.e2_d2, r.e3_d2}};
  const Scalar e2[2][3] = {{r.f1_d1, zero, r.f3_d1}, {zero, r.f2_d2, r.f3_d2}};
  const Mask points_to[3] = {0b01, 0b10, 0b11};
  std::map<Mask, Scalar> brute;
  for (int d = 0; d < 2; ++d) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        const Scalar p = prior[d] * e1[d][i] * e2[d][j];
        if (!p.is_zero()) brute[points_to[i] & points_to[j]] += p;
      }
    }
  }
  const MassFunction combined = RsCombinedConditional(r);
  out.Require(combined == MassFunction::FromMasks(RoughSetFrame(), brute),
              "formulas disagree with enumeration");
  const auto [m1, m2] = RsExpertMasses(r);
  const double gap = MaxMassDifference(combined, CombineDempster(m1, m2).result);
  out.Require(gap > 0.01, "gap " + std::to_string(gap));
  out.Require(std::abs(RsGap(r) - gap) < 1e-15, "rs_gap inconsistent");
  const double vacuous = RsGap(RoughSetParams::FromFree(Scalar::Fraction(1, 2), 0, 0, 0, 0));
  out.Require(vacuous == 0.0, "vacuous gap " + std::to_string(vacuous));
  if (out.pass) out.detail = "gap " + std::to_string(gap) + ", vacuous gap 0";
  return out;
}

// 8. Algebraic properties.
Outcome Algebra() {
  Outcome out;
  Rng rng(8);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const Frame f = RandomFrame(rng, 2, 6);
    const Mask shared = Mask{1} << std::uniform_int_distribution<std::size_t>(0, f.size() - 1)(rng);
    const auto a = RandomMass(rng, f, true, 5, shared);
    const auto b = RandomMass(rng, f, true, 5, shared);
    const auto c = RandomMass(rng, f, true, 5, shared);
    out.Require(CombineDempster(a, b).result == CombineDempster(b, a).result, "not commutative");
    const auto fa = a.AsFloating(), fb = b.AsFloating(), fc = c.AsFloating();
    const double diff =
        MaxMassDifference(CombineDempster(CombineDempster(fa, fb).result, fc).result,
                          CombineDempster(fa, CombineDempster(fb, fc).result).result);
    worst = std::max(worst, diff);
    out.Require(diff <= kPropertyTolerance, "not associative");
    const auto v = MassFunction::Vacuous(f);
    out.Require(CombineDempster(a, v).result == a && CombineDempster(v, a).result == a,
                "vacuous not neutral");
  }
  if (out.pass) {
    std::ostringstream ss;
    ss << "100 triples, worst associativity gap " << worst;
    out.detail = ss.str();
  }
  return out;
}

// 9. Estimation.
Outcome Estimation() {
  Outcome out;
  const CountTable table = CountTable::FromPopulation(ShampooPopulation());
  const MassFunction raw = EstimateRaw(table);
  out.Require(EstimateWithConfidence(table, 1.0) == raw, "alpha=1 differs from raw");
  const MassFunction est = EstimateWithConfidence(table, 0.05);
  const double z = boost::math::quantile(boost::math::normal(), 0.95);
  const double n = static_cast<double>(table.total());
  double total = 0.0;
  double committed = 0.0;
  for (const auto& [mask, count] : table.counts()) {
    if (mask == table.frame().full_mask()) continue;
    const double ph = count / n;
    const double lb = (ph + z * z / (2 * n) -
                       z * std::sqrt(ph * (1 - ph) / n + z * z / (4 * n * n))) /
                      (1 + z * z / n);
    const double got = est.mass(table.frame().FromMask(mask)).to_double();
    out.Require(got < ph, "not below raw fraction");
    out.Require(std::abs(got - lb) <= 1e-9, "oracle mismatch");
    committed += lb;
  }
  for (const auto& [mask, v] : est.masses()) total += v.to_double();
  out.Require(std::abs(total - 1.0) <= 1e-12, "total " + std::to_string(total));
  out.Require(std::abs(est.mass(table.frame().Full()).to_double() - (1 - committed)) <= 1e-9,
              "frame mass differs");
  if (out.pass) out.detail = "24 cells below raw, Wilson oracle agrees, total 1";
  return out;
}

}  // namespace
}  // namespace dsb

int main() {
  using dsb::Outcome;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"shampoo golden table", dsb::ShampooGolden},
      {"labeling golden table", dsb::LabelingGolden},
      {"material implication", dsb::MaterialImplication},
      {"killer example", dsb::Killer},
      {"relabeling equals Dempster", dsb::RelabelTheorem},
      {"Moebius round trip", dsb::MobiusRoundTrip},
      {"rough-set gap", dsb::RoughSetGap},
      {"algebraic properties", dsb::Algebra},
      {"estimation", dsb::Estimation},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += !o.pass;
    std::printf("[%s] criterion %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first, o.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed ? 1 : 0;
}
