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


// Shared fixtures and hand-rolled random instance generators.

#ifndef HYPERDIFFUSE_TESTS_SUPPORT_FIXTURES_H_
#define HYPERDIFFUSE_TESTS_SUPPORT_FIXTURES_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hyperdiffuse/diffusion.h"
#include "hyperdiffuse/hypergraph.h"
#include "hyperdiffuse/random.h"

namespace hyperdiffuse::testing {

// 4 nodes, e1 = {1,2,3}, e2 = {2,3,4} (0-based {0,1,2}, {1,2,3}).
Hypergraph four_node(double delta = 1.0);

// 3 nodes, one hyperedge {1,2,3}.
Hypergraph triangle(double delta = 1.0);

struct RandomSpec {
  std::size_t min_nodes = 3;
  std::size_t max_nodes = 12;
  std::size_t min_edges = 1;
  std::size_t max_edges = 12;
  std::size_t max_edge_size = 5;
  std::vector<double> deltas{1.0};
  // Probability of a second gadget on an edge (random c, delta).
  double extra_gadget_prob = 0.0;
};

Hypergraph random_hypergraph(SplitMix64& rng, const RandomSpec& spec);

// `count` distinct positive-degree nodes (fewer if the graph has fewer).
NodeSet random_seeds(SplitMix64& rng, const Hypergraph& h, std::size_t count);

std::vector<bool> random_mask(SplitMix64& rng, std::size_t n);

// Recomputed sum over V of g for the quadratic solver state.
double recomputed_g_sum(const Hypergraph& h, const DiffusionState& st,
                        const DiffusionConfig& cfg);

// Sum over V of g plus (1/gamma) times all auxiliary residuals; constant
// under auxpush.
double conserved_g_total(const Hypergraph& h, const DiffusionState& st,
                         const DiffusionConfig& cfg);

// sum_{R} d (1 - x) - sum_{not R} d x.
double g_identity(const Hypergraph& h, const DiffusionState& st);

}  // namespace hyperdiffuse::testing

#endif  // HYPERDIFFUSE_TESTS_SUPPORT_FIXTURES_H_
