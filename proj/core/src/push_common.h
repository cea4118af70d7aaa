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

#ifndef HYPERDIFFUSE_SRC_PUSH_COMMON_H_
#define HYPERDIFFUSE_SRC_PUSH_COMMON_H_

#include <vector>

#include "hyperdiffuse/diffusion.h"
#include "hyperdiffuse/hypergraph.h"

namespace hyperdiffuse::internal {

// Relative slack on the violation test; keeps rounding noise from
// re-queueing a node that sits exactly on kappa * d.
inline constexpr double kViolationSlack = 1e-12;

inline bool violates(double r, double d, double kappa) {
  return d > 0.0 && r > kappa * d * (1.0 + kViolationSlack);
}

inline void maybe_enqueue(DiffusionState& st, const Hypergraph& h, const DiffusionConfig& cfg,
                          NodeId v) {
  if (st.queued.contains(v)) return;
  if (violates(st.r_of(v), h.degree(v), cfg.kappa)) {
    st.queue.push_back(v);
    st.queued.insert(v);
  }
}

template <typename F>
void for_each_gadget(const Hypergraph& h, NodeId v, F&& f) {
  for (EdgeId e : h.incident_edges(v)) {
    const GadgetId first = h.first_gadget(e);
    const auto count = static_cast<GadgetId>(h.gadgets(e).size());
    for (GadgetId g = first; g < first + count; ++g) f(g);
  }
}

// Current node values of the gadget's hyperedge, in edge order.
inline void gather_edge_values(const Hypergraph& h, const DiffusionState& st, GadgetId g,
                               std::vector<double>& out) {
  const auto nodes = h.edge(h.gadget_edge(g));
  out.resize(nodes.size());
  for (std::size_t k = 0; k < nodes.size(); ++k) out[k] = st.x_of(nodes[k]);
}

// Shared push loop; Push(i) performs one hyperpush plus the auxpushes.
template <typename Push>
bool run_push_loop(const Hypergraph& h, DiffusionState& st, const DiffusionConfig& cfg,
                   Push&& push) {
  while (!st.queue.empty()) {
    if (st.ledger.hyperpushes >= cfg.max_pushes) return false;
    const NodeId i = st.queue.front();
    st.queue.pop_front();
    st.queued.erase(i);
    if (!violates(st.r_of(i), h.degree(i), cfg.kappa)) continue;
    push(i);
    maybe_enqueue(st, h, cfg, i);
  }
  return true;
}

}  // namespace hyperdiffuse::internal

#endif  // HYPERDIFFUSE_SRC_PUSH_COMMON_H_
