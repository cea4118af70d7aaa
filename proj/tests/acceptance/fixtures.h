// Copyright 2026 The hyperdiffuse Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Fixed generator settings and calibrated constants for the acceptance run.

#ifndef HYPERDIFFUSE_TESTS_ACCEPTANCE_FIXTURES_H_
#define HYPERDIFFUSE_TESTS_ACCEPTANCE_FIXTURES_H_

#include <cstdint>

#include "hyperdiffuse/synthgen.h"

namespace hyperdiffuse::acceptance {

inline constexpr std::uint64_t kSuiteSeed = 20260101;
inline constexpr std::uint64_t kDominanceSeed = 20260202;
inline constexpr std::uint64_t kFamilySeed = 20260303;
inline constexpr std::uint64_t kConsistencySeed = 20260404;
inline constexpr std::uint64_t kReplaySeed = 20260909;

// Planted two-block fixtures: graph t uses rng seed kPlantedGraphSeed + t.
inline constexpr std::uint64_t kPlantedGraphSeed = 7000;
inline constexpr std::uint64_t kPlantedSeedSeed = 8000;
inline constexpr int kPlantedTrials = 30;

// Chosen once on planted graphs with rng seeds 900000..900029 (disjoint
// from the fixtures above): median F1 was 1.000 for every kappa in
// [1e-4, 2.5e-3] and fell to 0.575 at 1e-2.
inline constexpr double kPlantedKappa = 0.00025;
inline constexpr double kPlantedMedianF1 = 0.8;

inline PlantedOptions planted_options(int trial) {
  PlantedOptions o;
  o.blocks = {200, 200};
  o.edges_per_block = 600;
  o.min_edge_size = 3;
  o.max_edge_size = 6;
  o.cross_fraction = 0.05;
  o.delta = 1.0;
  o.rng_seed = kPlantedGraphSeed + static_cast<std::uint64_t>(trial);
  return o;
}

inline PlantedOptions chain_options(std::size_t communities) {
  PlantedOptions o;
  o.blocks.assign(communities, 50);
  o.edges_per_block = 150;
  o.min_edge_size = 3;
  o.max_edge_size = 6;
  o.cross_fraction = 0.05;
  o.pattern = CrossPattern::kChain;
  o.rng_seed = 6000;
  return o;
}

}  // namespace hyperdiffuse::acceptance

#endif  // HYPERDIFFUSE_TESTS_ACCEPTANCE_FIXTURES_H_
