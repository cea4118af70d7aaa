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


#ifndef HYPERDIFFUSE_SWEEPCUT_H_
#define HYPERDIFFUSE_SWEEPCUT_H_

#include <cstddef>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "hyperdiffuse/hypergraph.h"

namespace hyperdiffuse {

/**
 * Result of sweeping a diffusion vector. Entry k of the prefix arrays
 * describes the set {order[0], ..., order[k]}. A prefix whose smaller side
 * has zero volume has conductance +inf and can never be selected unless
 * every prefix is in that situation.
 */
struct SweepProfile {
  std::vector<NodeId> order;  // positive support, x descending, ties by id
  std::vector<double> x;
  std::vector<double> prefix_volume;
  std::vector<double> prefix_cut;
  std::vector<double> prefix_conductance;
  NodeSet best_set;
  std::size_t best_size = 0;
  double best_conductance = 0.0;
  // max over hyperedges cut by best_set of max_j min(delta_j, |e| / 2);
  // 0 when best_set has no boundary.
  double boundary_delta_bar = 0.0;
};

// Throws std::invalid_argument on a negative or out-of-range entry, or when
// no entry is positive.
SweepProfile sweepcut(const Hypergraph& h, std::span<const std::pair<NodeId, double>> x);

// Dense overload: x[v] for v in [0, num_nodes).
SweepProfile sweepcut(const Hypergraph& h, std::span<const double> x);

struct PrF1 {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Empty prediction or empty truth gives zeros.
PrF1 prf1(const NodeSet& pred, const NodeSet& truth);

// CSV "rank,node,x,prefix_vol,prefix_cut,prefix_conductance", ranks and
// node ids 1-based.
void write_profile_csv(std::ostream& out, const SweepProfile& profile);

}  // namespace hyperdiffuse

#endif  // HYPERDIFFUSE_SWEEPCUT_H_
