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

#include "hyperdiffuse/diffusion.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hyperdiffuse {

void DiffusionConfig::validate() const {
  auto fail = [](const std::string& what) { throw std::invalid_argument(what); };
  if (!(gamma > 0.0) || !std::isfinite(gamma)) fail("gamma must be positive");
  if (!(kappa > 0.0) || !std::isfinite(kappa)) fail("kappa must be positive");
  if (!(rho > 0.0 && rho < 1.0)) fail("rho must lie in (0, 1)");
  if (!(delta >= 1.0) || !std::isfinite(delta)) fail("delta must be >= 1");
  if (!(p > 1.0 && p <= 2.0)) fail("p must lie in (1, 2]");
  if (!(eps > 0.0)) fail("eps must be positive");
  if (max_pushes == 0) fail("max_pushes must be positive");
}

double DiffusionResult::value(NodeId v) const {
  auto it = std::lower_bound(x.begin(), x.end(), v,
                             [](const auto& entry, NodeId id) { return entry.first < id; });
  return (it != x.end() && it->first == v) ? it->second : 0.0;
}

std::vector<double> DiffusionResult::dense(std::size_t num_nodes) const {
  std::vector<double> out(num_nodes, 0.0);
  for (const auto& [v, value] : x) out[v] = value;
  return out;
}

double seed_volume(const Hypergraph& h, const NodeSet& seeds) {
  double vol = 0.0;
  for (NodeId r : seeds) vol += h.degree(r);
  return vol;
}

double quadratic_ledger_bound(const DiffusionConfig& cfg, double delta_max, double seed_vol) {
  const double gk = cfg.gamma * cfg.kappa;
  return (gk + delta_max) * seed_vol / (gk * (1.0 - cfg.rho));
}

double pnorm_ledger_bound(const DiffusionConfig& cfg, double delta_max, double seed_vol) {
  const double gk = cfg.gamma * cfg.kappa;
  const double inv = 1.0 / (cfg.p - 1.0);
  return std::pow(gk + delta_max, inv) * seed_vol /
         ((cfg.p - 1.0) * std::pow(gk * (1.0 - cfg.rho), inv));
}

DiffusionResult make_result(const DiffusionState& state, bool converged) {
  DiffusionResult out;
  out.x.reserve(state.x.size());
  for (const auto& [v, value] : state.x) {
    if (value > 0.0) out.x.emplace_back(v, value);
  }
  std::sort(out.x.begin(), out.x.end());
  for (const auto& [g, value] : state.aux) {
    if (value.a != 0.0 || value.b != 0.0) out.aux.push_back({g, value.a, value.b});
  }
  std::sort(out.aux.begin(), out.aux.end(),
            [](const AuxEntry& l, const AuxEntry& r) { return l.gadget < r.gadget; });
  out.ledger = state.ledger;
  out.touched_nodes = state.touched_nodes();
  out.converged = converged;
  return out;
}

}  // namespace hyperdiffuse
