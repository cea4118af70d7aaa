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

// Types shared by the quadratic and p-norm push solvers.

#ifndef HYPERDIFFUSE_DIFFUSION_H_
#define HYPERDIFFUSE_DIFFUSION_H_

#include <cstddef>
#include <deque>
#include <functional>
#include <limits>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "hyperdiffuse/hypergraph.h"

namespace hyperdiffuse {

struct DiffusionConfig {
  double gamma = 0.1;   // locality: weight of the source/sink arcs is gamma * d
  double kappa = 0.0;   // sparsity; has no universal default and must be set
  double rho = 0.5;     // each hyperpush leaves residual rho * kappa * d
  double delta = 1.0;   // uniform gadget threshold used when loading graphs
  double p = 2.0;       // loss exponent, 1 < p <= 2
  double eps = 1e-8;    // bisection width for the p-norm solver
  std::size_t max_pushes = 50'000'000;

  // Throws std::invalid_argument naming the first bad field.
  void validate() const;
};

// s_a, s_b: weight of incident gadgets with x_a < x_i resp. x_b > x_i.
// a_min, b_min: smallest x_a >= x_i resp. x_b > x_i (+inf when none).
struct NodeCache {
  double s_a = 0.0;
  double s_b = 0.0;
  double a_min = std::numeric_limits<double>::infinity();
  double b_min = std::numeric_limits<double>::infinity();
};

// z_a: weight of edge nodes above x_a; z_b: weight of edge nodes below x_b.
// x_min_a: smallest node value above x_a; x_min_b: smallest node value >= x_b.
struct GadgetCache {
  double z_a = 0.0;
  double z_b = 0.0;
  double x_min_a = std::numeric_limits<double>::infinity();
  double x_min_b = std::numeric_limits<double>::infinity();
};

struct AuxValue {
  double a = 0.0;
  double b = 0.0;
};

struct PushLedger {
  std::size_t hyperpushes = 0;
  std::size_t auxpushes = 0;
  double pushed_volume = 0.0;  // sum of d_i over hyperpushes
  std::size_t hyperpush_fast = 0;
  std::size_t hyperpush_search = 0;
  std::size_t auxpush_noop = 0;
  std::size_t auxpush_fast = 0;
  std::size_t auxpush_search = 0;
};

/**
 * Sparse solver state. Entries missing from `x`, `r` and `aux` are exactly
 * zero. `r` holds residuals of original nodes only: auxiliary residuals are
 * restored to zero by the auxpush that follows every hyperpush, and can be
 * recomputed on demand from `x` and `aux`.
 */
struct DiffusionState {
  std::unordered_map<NodeId, double> x;
  std::unordered_map<NodeId, double> r;
  std::unordered_map<GadgetId, AuxValue> aux;
  std::unordered_set<NodeId> seeds;
  std::deque<NodeId> queue;
  std::unordered_set<NodeId> queued;
  std::unordered_map<NodeId, NodeCache> node_caches;
  std::unordered_map<GadgetId, GadgetCache> gadget_caches;
  PushLedger ledger;

  double x_of(NodeId v) const {
    auto it = x.find(v);
    return it == x.end() ? 0.0 : it->second;
  }
  double r_of(NodeId v) const {
    auto it = r.find(v);
    return it == r.end() ? 0.0 : it->second;
  }
  AuxValue aux_of(GadgetId g) const {
    auto it = aux.find(g);
    return it == aux.end() ? AuxValue{} : it->second;
  }
  bool is_seed(NodeId v) const { return seeds.contains(v); }

  // Nodes whose residual or value was ever written.
  std::size_t touched_nodes() const { return r.size(); }
};

struct AuxResiduals {
  double r_a = 0.0;
  double r_b = 0.0;
};

struct AuxIncrement {
  double delta_a = 0.0;
  double delta_b = 0.0;
};

enum class PushKind {
  kHyperpushStart,  // caches refreshed, x not yet changed
  kHyperpush,       // x_i raised, auxiliaries not yet updated
  kAuxpush,         // one gadget rebalanced
};

struct PushEvent {
  PushKind kind = PushKind::kHyperpush;
  NodeId node = 0;
  GadgetId gadget = 0;
  double delta_x = 0.0;
  AuxIncrement aux{};
};

using PushObserver = std::function<void(const PushEvent&, const DiffusionState&)>;

struct AuxEntry {
  GadgetId gadget = 0;
  double a = 0.0;
  double b = 0.0;
};

struct DiffusionResult {
  std::vector<std::pair<NodeId, double>> x;  // positive entries, ascending id
  std::vector<AuxEntry> aux;                  // nonzero auxiliary pairs, ascending id
  PushLedger ledger;
  std::size_t touched_nodes = 0;
  bool converged = true;

  double value(NodeId v) const;
  // Dense copy of x over [0, num_nodes).
  std::vector<double> dense(std::size_t num_nodes) const;
};

// Sum over seeds of d_r.
double seed_volume(const Hypergraph& h, const NodeSet& seeds);

// (gamma*kappa + delta_max) * vol(R) / (gamma*kappa*(1 - rho)).
double quadratic_ledger_bound(const DiffusionConfig& cfg, double delta_max, double seed_vol);

// (gamma*kappa + delta_max)^(1/(p-1)) * vol(R)
//   / ((p - 1) * (gamma*kappa*(1 - rho))^(1/(p-1))).
double pnorm_ledger_bound(const DiffusionConfig& cfg, double delta_max, double seed_vol);

// Collects the state into a result (drops zero entries, sorts by id).
DiffusionResult make_result(const DiffusionState& state, bool converged);

}  // namespace hyperdiffuse

#endif  // HYPERDIFFUSE_DIFFUSION_H_
