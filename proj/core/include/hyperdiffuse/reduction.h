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

#ifndef HYPERDIFFUSE_REDUCTION_H_
#define HYPERDIFFUSE_REDUCTION_H_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "hyperdiffuse/hypergraph.h"

namespace hyperdiffuse {

struct Arc {
  std::size_t tail = 0;
  std::size_t head = 0;
  double weight = 0.0;
};

/**
 * Explicit directed graph obtained by replacing every gadget with an
 * auxiliary pair (a, b):  v -> a (c),  b -> v (c) for v in e,  a -> b (c*delta).
 *
 * Node numbering: original nodes keep ids [0, n); gadget j gets
 * a = n + 2j and b = n + 2j + 1. A localized graph appends the source
 * s = n + 2G and sink t = n + 2G + 1.
 *
 * The diffusion solvers never build this; it exists for the oracles,
 * tests and the debug arc dump.
 */
struct ReducedGraph {
  std::size_t num_original = 0;
  std::size_t node_count = 0;
  std::vector<Arc> arcs;
  std::vector<std::pair<std::size_t, std::size_t>> aux_pairs;  // per gadget (a, b)
  std::vector<double> degree;  // d_v for originals, 0 for auxiliary, s and t
  std::optional<std::size_t> source;
  std::optional<std::size_t> sink;
};

ReducedGraph build_reduced_graph(const Hypergraph& h);

// Adds s -> r (gamma * d_r) for seeds and v -> t (gamma * d_v) for all other
// original nodes. Throws std::invalid_argument on an empty seed set, a
// zero-degree seed or gamma <= 0.
ReducedGraph build_localized_cut_graph(const ReducedGraph& g, const Hypergraph& h,
                                       const NodeSet& seeds, double gamma);

// Total weight of arcs leaving `s_side` (membership bitmap over g's nodes).
double directed_cut(const ReducedGraph& g, const std::vector<bool>& s_side);

// CSV dump "tail,head,weight" with 0-based ids.
void write_arcs_csv(std::ostream& out, const ReducedGraph& g);

}  // namespace hyperdiffuse

#endif  // HYPERDIFFUSE_REDUCTION_H_
