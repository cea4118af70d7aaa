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


#include "support/fixtures.h"

#include <algorithm>

#include "hyperdiffuse/lhqd.h"

namespace hyperdiffuse::testing {

Hypergraph four_node(double delta) {
  return Hypergraph::uniform(4, {{0, 1, 2}, {1, 2, 3}}, delta);
}

Hypergraph triangle(double delta) { return Hypergraph::uniform(3, {{0, 1, 2}}, delta); }

Hypergraph random_hypergraph(SplitMix64& rng, const RandomSpec& spec) {
  const auto n = static_cast<std::size_t>(rng.between(spec.min_nodes, spec.max_nodes));
  const auto m = static_cast<std::size_t>(rng.between(spec.min_edges, spec.max_edges));
  const std::size_t max_size = std::min(spec.max_edge_size, n);
  std::vector<std::vector<NodeId>> edges;
  std::vector<std::vector<GadgetParams>> gadgets;
  for (std::size_t e = 0; e < m; ++e) {
    const auto size = static_cast<std::size_t>(rng.between(2, max_size));
    std::vector<NodeId> nodes;
    while (nodes.size() < size) {
      const auto v = static_cast<NodeId>(rng.below(n));
      if (std::find(nodes.begin(), nodes.end(), v) == nodes.end()) nodes.push_back(v);
    }
    edges.push_back(std::move(nodes));
    std::vector<GadgetParams> list{
        {1.0, spec.deltas[static_cast<std::size_t>(rng.below(spec.deltas.size()))]}};
    if (rng.unit() < spec.extra_gadget_prob) {
      list.push_back({0.25 + rng.unit(), 1.0 + 2.0 * rng.unit()});
    }
    gadgets.push_back(std::move(list));
  }
  return Hypergraph(n, std::move(edges), std::move(gadgets));
}

NodeSet random_seeds(SplitMix64& rng, const Hypergraph& h, std::size_t count) {
  std::vector<NodeId> pool;
  for (NodeId v = 0; v < h.num_nodes(); ++v) {
    if (h.degree(v) > 0.0) pool.push_back(v);
  }
  std::vector<NodeId> picked;
  while (picked.size() < count && !pool.empty()) {
    const auto idx = static_cast<std::size_t>(rng.below(pool.size()));
    picked.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return NodeSet(std::move(picked), h.num_nodes());
}

std::vector<bool> random_mask(SplitMix64& rng, std::size_t n) {
  std::vector<bool> m(n);
  for (std::size_t v = 0; v < n; ++v) m[v] = (rng.next() & 1U) != 0;
  return m;
}

double recomputed_g_sum(const Hypergraph& h, const DiffusionState& st,
                        const DiffusionConfig& cfg) {
  double total = 0.0;
  for (NodeId v = 0; v < h.num_nodes(); ++v) total += node_residual(h, st, cfg, v);
  return total;
}

double conserved_g_total(const Hypergraph& h, const DiffusionState& st,
                         const DiffusionConfig& cfg) {
  double total = recomputed_g_sum(h, st, cfg);
  for (GadgetId g = 0; g < h.num_gadgets(); ++g) {
    const AuxResiduals r = aux_residuals(h, st, g);
    total += (r.r_a + r.r_b) / cfg.gamma;
  }
  return total;
}

double g_identity(const Hypergraph& h, const DiffusionState& st) {
  double total = 0.0;
  for (NodeId v = 0; v < h.num_nodes(); ++v) {
    const double x = st.x_of(v);
    total += st.is_seed(v) ? h.degree(v) * (1.0 - x) : -h.degree(v) * x;
  }
  return total;
}

}  // namespace hyperdiffuse::testing
