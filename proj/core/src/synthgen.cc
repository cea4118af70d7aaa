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


#include "hyperdiffuse/synthgen.h"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "hyperdiffuse/random.h"

namespace hyperdiffuse {

namespace {

void draw_distinct(SplitMix64& rng, std::size_t base, std::size_t size, std::size_t k,
                   std::vector<NodeId>& out) {
  const std::size_t start = out.size();
  while (out.size() - start < k) {
    const auto v = static_cast<NodeId>(base + rng.below(size));
    if (std::find(out.begin() + static_cast<std::ptrdiff_t>(start), out.end(), v) == out.end()) {
      out.push_back(v);
    }
  }
}

}  // namespace

NodeSet PlantedHypergraph::block(std::uint32_t b) const {
  std::vector<NodeId> ids;
  for (NodeId v = 0; v < labels.size(); ++v) {
    if (labels[v] == b) ids.push_back(v);
  }
  return NodeSet(std::move(ids), labels.size());
}

PlantedHypergraph planted_hypergraph(const PlantedOptions& opts) {
  if (opts.blocks.empty()) throw std::invalid_argument("at least one block is required");
  if (opts.min_edge_size < 2 || opts.min_edge_size > opts.max_edge_size) {
    throw std::invalid_argument("edge sizes must satisfy 2 <= min <= max");
  }
  if (!(opts.cross_fraction >= 0.0 && opts.cross_fraction <= 1.0)) {
    throw std::invalid_argument("cross fraction must lie in [0, 1]");
  }
  for (std::size_t b : opts.blocks) {
    if (b < opts.max_edge_size) {
      throw std::invalid_argument("every block must hold at least max_edge_size nodes");
    }
  }
  const auto cross =
      static_cast<std::size_t>(std::llround(opts.cross_fraction * opts.edges_per_block));
  if (cross > 0 && opts.blocks.size() < 2) {
    throw std::invalid_argument("cross edges need at least two blocks");
  }

  std::vector<std::size_t> offsets{0};
  for (std::size_t b : opts.blocks) offsets.push_back(offsets.back() + b);
  const std::size_t n = offsets.back();
  const std::size_t num_blocks = opts.blocks.size();

  PlantedHypergraph out;
  out.labels.resize(n);
  for (std::size_t b = 0; b < num_blocks; ++b) {
    for (std::size_t v = offsets[b]; v < offsets[b + 1]; ++v) {
      out.labels[v] = static_cast<std::uint32_t>(b);
    }
  }

  SplitMix64 rng(opts.rng_seed);
  std::vector<std::vector<NodeId>> edges;
  edges.reserve(num_blocks * opts.edges_per_block);
  for (std::size_t b = 0; b < num_blocks; ++b) {
    for (std::size_t k = 0; k < opts.edges_per_block; ++k) {
      const auto size =
          static_cast<std::size_t>(rng.between(opts.min_edge_size, opts.max_edge_size));
      std::vector<NodeId> edge;
      if (k < opts.edges_per_block - cross) {
        draw_distinct(rng, offsets[b], opts.blocks[b], size, edge);
      } else {
        std::size_t partner = 0;
        if (opts.pattern == CrossPattern::kChain) {
          partner = b + 1 < num_blocks ? b + 1 : b - 1;
        } else {
          partner = static_cast<std::size_t>(rng.below(num_blocks - 1));
          if (partner >= b) ++partner;
        }
        const auto here = static_cast<std::size_t>(rng.between(1, size - 1));
        draw_distinct(rng, offsets[b], opts.blocks[b], here, edge);
        draw_distinct(rng, offsets[partner], opts.blocks[partner], size - here, edge);
      }
      std::sort(edge.begin(), edge.end());
      edges.push_back(std::move(edge));
    }
  }
  out.graph = Hypergraph::uniform(n, std::move(edges), opts.delta);
  return out;
}

NodeSet sample_seeds(const Hypergraph& h, std::span<const std::uint32_t> labels,
                     std::uint32_t block, std::size_t k, SeedMode mode,
                     std::uint64_t rng_seed) {
  if (labels.size() != h.num_nodes()) throw std::invalid_argument("labels size mismatch");
  if (k == 0) throw std::invalid_argument("seed count must be positive");
  std::vector<NodeId> pool;
  for (NodeId v = 0; v < labels.size(); ++v) {
    if (labels[v] == block && h.degree(v) > 0.0) pool.push_back(v);
  }
  if (pool.empty()) throw std::invalid_argument("block has no positive-degree node");
  if (k > pool.size()) throw std::invalid_argument("more seeds requested than block members");

  SplitMix64 rng(rng_seed);
  std::vector<NodeId> picked;
  while (picked.size() < k) {
    std::size_t idx = 0;
    if (mode == SeedMode::kUniform) {
      idx = static_cast<std::size_t>(rng.below(pool.size()));
    } else {
      double total = 0.0;
      for (NodeId v : pool) total += h.degree(v);
      double target = rng.unit() * total;
      idx = pool.size() - 1;
      for (std::size_t j = 0; j < pool.size(); ++j) {
        target -= h.degree(pool[j]);
        if (target < 0.0) {
          idx = j;
          break;
        }
      }
    }
    picked.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return NodeSet(std::move(picked), h.num_nodes());
}

void write_labels(std::ostream& out, std::span<const std::uint32_t> labels) {
  for (std::size_t v = 0; v < labels.size(); ++v) out << (v + 1) << ' ' << labels[v] << '\n';
}

std::vector<std::uint32_t> read_labels(std::istream& in, std::size_t num_nodes) {
  std::vector<std::uint32_t> labels(num_nodes, 0);
  std::vector<bool> seen(num_nodes, false);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    long long node = 0;
    long long block = 0;
    if (!(ls >> node)) continue;
    if (!(ls >> block) || block < 0) throw ParseError("expected 'node_id block_id'", line_no);
    if (node < 1 || static_cast<std::size_t>(node) > num_nodes) {
      throw ParseError("node id out of range", line_no);
    }
    labels[node - 1] = static_cast<std::uint32_t>(block);
    seen[node - 1] = true;
  }
  for (std::size_t v = 0; v < num_nodes; ++v) {
    if (!seen[v]) throw ParseError("missing label for node " + std::to_string(v + 1), 0);
  }
  return labels;
}

}  // namespace hyperdiffuse
