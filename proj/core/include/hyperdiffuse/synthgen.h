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


// Planted-partition hypergraphs and seed sampling, driven only by an
// explicit 64-bit seed through SplitMix64.

#ifndef HYPERDIFFUSE_SYNTHGEN_H_
#define HYPERDIFFUSE_SYNTHGEN_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "hyperdiffuse/hypergraph.h"

namespace hyperdiffuse {

enum class CrossPattern {
  kUniform,  // partner block drawn uniformly among the other blocks
  kChain,    // block b pairs with b + 1 (the last block with its predecessor)
};

struct PlantedOptions {
  std::vector<std::size_t> blocks;
  std::size_t edges_per_block = 0;
  std::size_t min_edge_size = 2;
  std::size_t max_edge_size = 2;
  double cross_fraction = 0.0;
  CrossPattern pattern = CrossPattern::kUniform;
  double delta = 1.0;
  std::uint64_t rng_seed = 0;
};

struct PlantedHypergraph {
  Hypergraph graph;
  std::vector<std::uint32_t> labels;  // block id per node

  NodeSet block(std::uint32_t b) const;
};

/**
 * Nodes are numbered block by block. Block b (in order) emits
 * round(cross_fraction * edges_per_block) cross edges and the rest intra
 * edges; the intra edges come first. Every edge draws its size uniformly
 * from [min_edge_size, max_edge_size]; an intra edge then draws distinct
 * members of b by rejection, a cross edge draws k1 uniform in [1, size - 1]
 * members of b and size - k1 of the partner block. Node lists are sorted.
 *
 * Throws std::invalid_argument for no blocks, a block smaller than
 * max_edge_size, min_edge_size < 2, min > max, a fraction outside [0, 1],
 * or cross edges with a single block.
 */
PlantedHypergraph planted_hypergraph(const PlantedOptions& opts);

enum class SeedMode { kUniform, kDegreeProportional };

// k distinct positive-degree members of `block`, drawn sequentially without
// replacement (degree-proportional: probability d_v / remaining volume).
// Throws std::invalid_argument when the block has no positive-degree member
// or fewer than k of them, or k == 0.
NodeSet sample_seeds(const Hypergraph& h, std::span<const std::uint32_t> labels,
                     std::uint32_t block, std::size_t k, SeedMode mode, std::uint64_t rng_seed);

// "node_id block_id" per line, node ids 1-based.
void write_labels(std::ostream& out, std::span<const std::uint32_t> labels);
std::vector<std::uint32_t> read_labels(std::istream& in, std::size_t num_nodes);

}  // namespace hyperdiffuse

#endif  // HYPERDIFFUSE_SYNTHGEN_H_
