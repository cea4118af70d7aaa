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

#include "hyperdiffuse/reduction.h"

#include <ostream>
#include <stdexcept>

namespace hyperdiffuse {

ReducedGraph build_reduced_graph(const Hypergraph& h) {
  ReducedGraph g;
  const std::size_t n = h.num_nodes();
  g.num_original = n;
  g.node_count = n + 2 * h.num_gadgets();
  g.degree.assign(g.node_count, 0.0);
  for (NodeId v = 0; v < n; ++v) g.degree[v] = h.degree(v);

  std::size_t arc_count = 0;
  for (GadgetId j = 0; j < h.num_gadgets(); ++j) {
    arc_count += 2 * h.edge_size(h.gadget_edge(j)) + 1;
  }
  g.arcs.reserve(arc_count);
  g.aux_pairs.reserve(h.num_gadgets());

  for (GadgetId j = 0; j < h.num_gadgets(); ++j) {
    const GadgetParams& p = h.gadget(j);
    const auto nodes = h.edge(h.gadget_edge(j));
    const std::size_t a = n + 2 * static_cast<std::size_t>(j);
    const std::size_t b = a + 1;
    g.aux_pairs.emplace_back(a, b);
    for (NodeId v : nodes) g.arcs.push_back({v, a, p.c});
    for (NodeId v : nodes) g.arcs.push_back({b, v, p.c});
    g.arcs.push_back({a, b, p.c * p.delta});
  }
  return g;
}

ReducedGraph build_localized_cut_graph(const ReducedGraph& g, const Hypergraph& h,
                                       const NodeSet& seeds, double gamma) {
  if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be positive");
  if (seeds.empty()) throw std::invalid_argument("seed set is empty");
  if (g.source || g.sink) throw std::invalid_argument("graph is already localized");
  for (NodeId r : seeds) {
    if (r >= g.num_original) throw std::invalid_argument("seed out of range");
    if (!(h.degree(r) > 0.0)) throw std::invalid_argument("seed has zero degree");
  }

  ReducedGraph out = g;
  const std::size_t s = g.node_count;
  const std::size_t t = g.node_count + 1;
  out.node_count = g.node_count + 2;
  out.degree.push_back(0.0);
  out.degree.push_back(0.0);
  out.source = s;
  out.sink = t;
  const auto is_seed = seeds.mask(g.num_original);
  for (std::size_t v = 0; v < g.num_original; ++v) {
    if (is_seed[v]) {
      out.arcs.push_back({s, v, gamma * g.degree[v]});
    }
  }
  for (std::size_t v = 0; v < g.num_original; ++v) {
    if (!is_seed[v]) {
      out.arcs.push_back({v, t, gamma * g.degree[v]});
    }
  }
  return out;
}

double directed_cut(const ReducedGraph& g, const std::vector<bool>& s_side) {
  if (s_side.size() != g.node_count) throw std::invalid_argument("membership size mismatch");
  double total = 0.0;
  for (const Arc& arc : g.arcs) {
    if (s_side[arc.tail] && !s_side[arc.head]) total += arc.weight;
  }
  return total;
}

void write_arcs_csv(std::ostream& out, const ReducedGraph& g) {
  const auto old_precision = out.precision(17);
  out << "tail,head,weight\n";
  for (const Arc& arc : g.arcs) {
    out << arc.tail << ',' << arc.head << ',' << arc.weight << '\n';
  }
  out.precision(old_precision);
}

}  // namespace hyperdiffuse
