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


#include "hyperdiffuse/sweepcut.h"

#include <algorithm>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <unordered_map>

namespace hyperdiffuse {

SweepProfile sweepcut(const Hypergraph& h, std::span<const std::pair<NodeId, double>> x) {
  std::vector<std::pair<NodeId, double>> support;
  for (const auto& [v, value] : x) {
    if (v >= h.num_nodes()) throw std::invalid_argument("sweepcut: node id out of range");
    if (!(value >= 0.0)) throw std::invalid_argument("sweepcut: negative or NaN entry");
    if (value > 0.0) support.emplace_back(v, value);
  }
  if (support.empty()) throw std::invalid_argument("sweepcut: vector has no positive entry");
  std::sort(support.begin(), support.end(), [](const auto& l, const auto& r) {
    return l.second != r.second ? l.second > r.second : l.first < r.first;
  });
  for (std::size_t k = 1; k < support.size(); ++k) {
    if (support[k].first == support[k - 1].first) {
      throw std::invalid_argument("sweepcut: duplicate node id");
    }
  }

  SweepProfile out;
  const std::size_t n = support.size();
  out.order.reserve(n);
  out.x.reserve(n);
  out.prefix_volume.reserve(n);
  out.prefix_cut.reserve(n);
  out.prefix_conductance.reserve(n);

  std::unordered_map<EdgeId, std::size_t> inside;
  double volume = 0.0;
  double cut = 0.0;
  double best = std::numeric_limits<double>::infinity();
  std::size_t best_size = 1;
  for (std::size_t k = 0; k < n; ++k) {
    const NodeId v = support[k].first;
    volume += h.degree(v);
    for (EdgeId e : h.incident_edges(v)) {
      std::size_t& count = inside[e];
      const auto gadgets = h.gadgets(e);
      const std::size_t size = h.edge_size(e);
      cut += splitting_penalty(gadgets, count + 1, size) - splitting_penalty(gadgets, count, size);
      ++count;
    }
    // Closing edges can leave rounding noise below zero.
    if (cut < 0.0) cut = 0.0;
    const double denom = std::min(volume, h.total_volume() - volume);
    const double phi = denom > 0.0 ? cut / denom : std::numeric_limits<double>::infinity();
    out.order.push_back(v);
    out.x.push_back(support[k].second);
    out.prefix_volume.push_back(volume);
    out.prefix_cut.push_back(cut);
    out.prefix_conductance.push_back(phi);
    if (phi < best) {
      best = phi;
      best_size = k + 1;
    }
  }

  out.best_size = best_size;
  out.best_conductance = out.prefix_conductance[best_size - 1];
  std::vector<NodeId> ids(out.order.begin(), out.order.begin() + best_size);
  out.best_set = NodeSet(std::move(ids), h.num_nodes());

  const auto mask = out.best_set.mask(h.num_nodes());
  std::vector<bool> seen(h.num_edges(), false);
  for (NodeId v : out.best_set) {
    for (EdgeId e : h.incident_edges(v)) {
      if (seen[e]) continue;
      seen[e] = true;
      std::size_t in = 0;
      for (NodeId u : h.edge(e)) in += mask[u] ? 1 : 0;
      if (in == h.edge_size(e)) continue;
      const double half = static_cast<double>(h.edge_size(e)) / 2.0;
      for (const GadgetParams& gp : h.gadgets(e)) {
        out.boundary_delta_bar = std::max(out.boundary_delta_bar, std::min(gp.delta, half));
      }
    }
  }
  return out;
}

SweepProfile sweepcut(const Hypergraph& h, std::span<const double> x) {
  if (x.size() != h.num_nodes()) throw std::invalid_argument("sweepcut: dense size mismatch");
  std::vector<std::pair<NodeId, double>> sparse;
  for (NodeId v = 0; v < x.size(); ++v) {
    if (x[v] != 0.0) sparse.emplace_back(v, x[v]);
  }
  return sweepcut(h, std::span<const std::pair<NodeId, double>>(sparse));
}

PrF1 prf1(const NodeSet& pred, const NodeSet& truth) {
  std::size_t hits = 0;
  for (NodeId v : pred) hits += truth.contains(v) ? 1 : 0;
  PrF1 out;
  if (!pred.empty()) out.precision = static_cast<double>(hits) / static_cast<double>(pred.size());
  if (!truth.empty()) out.recall = static_cast<double>(hits) / static_cast<double>(truth.size());
  const double sum = out.precision + out.recall;
  out.f1 = sum > 0.0 ? 2.0 * out.precision * out.recall / sum : 0.0;
  return out;
}

void write_profile_csv(std::ostream& out, const SweepProfile& profile) {
  const auto old_precision = out.precision(17);
  out << "rank,node,x,prefix_vol,prefix_cut,prefix_conductance\n";
  for (std::size_t k = 0; k < profile.order.size(); ++k) {
    out << (k + 1) << ',' << (profile.order[k] + 1) << ',' << profile.x[k] << ','
        << profile.prefix_volume[k] << ',' << profile.prefix_cut[k] << ','
        << profile.prefix_conductance[k] << '\n';
  }
  out.precision(old_precision);
}

}  // namespace hyperdiffuse
