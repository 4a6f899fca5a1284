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
#include "dsbelief/relabel.hpp"

#include <algorithm>
#include <map>
#include <thread>
#include <vector>

#include "dsbelief/error.hpp"

namespace dsb {

std::uint64_t SplitMix64::Next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::UniformBelow(std::uint64_t bound) {
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = -bound % bound;
  for (;;) {
    const std::uint64_t r = Next();
    if (r >= limit) return r % bound;
  }
}

double SplitMix64::UniformUnit() {
  return static_cast<double>(Next() >> 11) * 0x1.0p-53;
}

std::uint64_t SplitMix64::ChunkSeed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 g(seed ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
  return g.Next();
}

MassFunction RelabelExact(const MassFunction& population_mass,
                          const LabelDistribution& labels) {
  const MassFunction& values = population_mass;
  const MassFunction& drawn = labels.mass;
  RequireSameFrame(values.frame(), drawn.frame());
  const bool exact = values.is_exact() && drawn.is_exact();
  const Scalar zero = exact ? Scalar(0) : Scalar(0.0);

  // Joint law of (value, label): the label is independent of the value.
  std::map<Mask, Scalar> outcome;
  Scalar kept = zero;
  for (const auto& [value, p_value] : values.masses()) {
    for (const auto& [label, p_label] : drawn.masses()) {
      const Mask result = value & label;
      if (result == 0) continue;
      const Scalar p = p_value * p_label;
      kept += p;
      auto [it, inserted] = outcome.emplace(result, zero);
      it->second += p;
    }
  }
  if (kept.is_zero()) {
    throw Error(ErrorCode::kTotalConflict,
                "every label is discarded: no value meets any label");
  }
  for (auto& [mask, p] : outcome) p /= kept;
  return MassFunction::FromMasks(values.frame(), outcome);
}

namespace {

struct ChunkTally {
  std::map<Mask, std::uint64_t> kept;
  std::uint64_t discarded = 0;
};

}  // namespace

SimulationReport RelabelSimulate(const Population& p,
                                 const LabelDistribution& labels,
                                 std::uint64_t n_draws, std::uint64_t seed,
                                 unsigned chunks) {
  RequireSameFrame(p.frame(), labels.mass.frame());
  if (n_draws == 0) {
    throw Error(ErrorCode::kInvalidArgument, "n_draws must be at least 1");
  }
  if (chunks == 0) {
    throw Error(ErrorCode::kInvalidArgument, "chunk count must be at least 1");
  }

  std::vector<std::uint64_t> cumulative_weight;
  std::vector<Mask> record_values;
  std::uint64_t running = 0;
  for (const auto& r : p.records()) {
    running += r.weight;
    cumulative_weight.push_back(running);
    record_values.push_back(r.value.mask());
  }
  std::vector<double> cumulative_label;
  std::vector<Mask> label_sets;
  double label_running = 0.0;
  for (const auto& [mask, m] : labels.mass.masses()) {
    label_running += m.to_double();
    cumulative_label.push_back(label_running);
    label_sets.push_back(mask);
  }

  auto run_chunk = [&](std::uint64_t index, std::uint64_t draws,
                       ChunkTally& tally) {
    SplitMix64 rng(SplitMix64::ChunkSeed(seed, index));
    for (std::uint64_t d = 0; d < draws; ++d) {
      const std::uint64_t w = rng.UniformBelow(running);
      const auto ri = std::upper_bound(cumulative_weight.begin(),
                                       cumulative_weight.end(), w) -
                      cumulative_weight.begin();
      const double u = rng.UniformUnit() * label_running;
      auto li = std::upper_bound(cumulative_label.begin(),
                                 cumulative_label.end(), u) -
                cumulative_label.begin();
      li = std::min<std::ptrdiff_t>(li, cumulative_label.size() - 1);
      const Mask result = record_values[ri] & label_sets[li];
      if (result == 0) {
        ++tally.discarded;
      } else {
        ++tally.kept[result];
      }
    }
  };

  std::vector<ChunkTally> tallies(chunks);
  if (chunks == 1) {
    run_chunk(0, n_draws, tallies[0]);
  } else {
    std::vector<std::jthread> workers;
    for (unsigned c = 0; c < chunks; ++c) {
      const std::uint64_t draws = n_draws / chunks + (c < n_draws % chunks);
      workers.emplace_back(run_chunk, c, draws, std::ref(tallies[c]));
    }
  }

  ChunkTally total;
  for (const auto& t : tallies) {
    total.discarded += t.discarded;
    for (const auto& [mask, count] : t.kept) total.kept[mask] += count;
  }
  const std::uint64_t kept = n_draws - total.discarded;
  if (kept == 0) {
    throw Error(ErrorCode::kAllDiscarded,
                "all " + std::to_string(n_draws) +
                    " draws were discarded (seed " + std::to_string(seed) + ")");
  }
  std::map<Mask, Scalar> empirical;
  for (const auto& [mask, count] : total.kept) {
    empirical.emplace(mask, Scalar(Rational(count, kept)));
  }
  SimulationReport report{MassFunction::FromMasks(p.frame(), empirical)};
  report.draws_attempted = n_draws;
  report.draws_discarded = total.discarded;
  report.seed = seed;
  report.chunks = chunks;
  return report;
}

MassFunction RelabelIterate(const MassFunction& population_mass,
                            std::span<const LabelDistribution> label_sequence) {
  if (label_sequence.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty label sequence");
  }
  MassFunction current = population_mass;
  for (const auto& labels : label_sequence) {
    current = RelabelExact(current, labels);
  }
  return current;
}

}  // namespace dsb
