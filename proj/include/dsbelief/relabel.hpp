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
#include <span>
#include <string>

#include "dsbelief/belief.hpp"
#include "dsbelief/population.hpp"

namespace dsb {

// Distribution from which every object's label is drawn, identically and
// independently of the object's value.
struct LabelDistribution {
  MassFunction mass;
};

inline constexpr const char* kRngAlgorithm = "splitmix64";

/// SplitMix64 (Steele, Lea and Flood 2014): 64-bit state advanced by the
/// golden-ratio increment, output through the variant-13 finalizer.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t Next();
  // Uniform in [0, bound) by rejection; bound > 0.
  std::uint64_t UniformBelow(std::uint64_t bound);
  // Uniform in [0, 1) with 53 random bits.
  double UniformUnit();

  // Seed of simulation chunk `index`, derived from the run seed.
  static std::uint64_t ChunkSeed(std::uint64_t seed, std::uint64_t index);

 private:
  std::uint64_t state_;
};

struct SimulationReport {
  MassFunction empirical;
  std::uint64_t draws_attempted = 0;
  std::uint64_t draws_discarded = 0;
  std::uint64_t seed = 0;
  unsigned chunks = 1;
  std::string rng_algorithm = kRngAlgorithm;

  double discard_fraction() const {
    return static_cast<double>(draws_discarded) /
           static_cast<double>(draws_attempted);
  }
};

// Distribution of value-intersect-label conditioned on a nonempty
// intersection, computed by explicit conditioning over focal pairs. Throws
// kTotalConflict when every pair is discarded.
MassFunction RelabelExact(const MassFunction& population_mass,
                          const LabelDistribution& labels);

// Monte Carlo relabeling: each draw picks a record by weight and a label
// from `labels`, discards the draw on an empty intersection and tallies the
// intersection otherwise. Draws are split into `chunks` independently
// seeded streams that run in parallel; the result depends only on
// (seed, n_draws, chunks). Throws kAllDiscarded when no draw is kept.
SimulationReport RelabelSimulate(const Population& p,
                                 const LabelDistribution& labels,
                                 std::uint64_t n_draws, std::uint64_t seed,
                                 unsigned chunks = 1);

// Left fold of RelabelExact over a nonempty label sequence.
MassFunction RelabelIterate(const MassFunction& population_mass,
                            std::span<const LabelDistribution> label_sequence);

}  // namespace dsb
