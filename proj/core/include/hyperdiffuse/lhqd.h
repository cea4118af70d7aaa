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

// Strongly local push solver for the localized quadratic hypergraph
// diffusion
//
//   min_x  1/2 w^T (Bx)_+^2 + kappa * gamma * sum_{i in V} d_i x_i
//   s.t.   x_s = 1, x_t = 0, x >= 0
//
// over the gadget-reduced graph with source/sink arcs of weight gamma * d.
// The reduced graph is never materialized: gadget j of hyperedge e has
// arcs v -> a (c_j), b -> v (c_j) for v in e and a -> b (c_j * delta_j).
//
// Node residual (original nodes):
//   g_i = 1/gamma * sum_b w_bi (x_b - x_i)_+ - 1/gamma * sum_a w_ia (x_i - x_a)_+
//         + d_i (1[i in R] - x_i)
// Auxiliary residuals (per gadget):
//   r_a = -w_ab (x_a - x_b) + sum_i w_ia (x_i - x_a)_+
//   r_b =  w_ab (x_a - x_b) - sum_i w_bi (x_b - x_i)_+
//
// A node violates optimality when g_i > kappa * d_i. Each hyperpush raises
// x_i until g_i = rho * kappa * d_i; every incident gadget is then
// rebalanced (auxpush) so that r_a = r_b = 0 again.

#ifndef HYPERDIFFUSE_LHQD_H_
#define HYPERDIFFUSE_LHQD_H_

#include <span>

#include "hyperdiffuse/diffusion.h"
#include "hyperdiffuse/hypergraph.h"

namespace hyperdiffuse {

// Seeds must be non-empty with positive degree; cfg must validate.
DiffusionState init_state(const Hypergraph& h, const NodeSet& seeds,
                          const DiffusionConfig& cfg);

// Recomputes g_i from x and the auxiliary values (ignores the stored r).
double node_residual(const Hypergraph& h, const DiffusionState& state,
                     const DiffusionConfig& cfg, NodeId i);

AuxResiduals aux_residuals(const Hypergraph& h, const DiffusionState& state, GadgetId g);

// Raises x_i so that its residual drops to rho*kappa*d_i. Throws
// std::logic_error if i is not violating. Returns the increment.
double hyperpush(const Hypergraph& h, DiffusionState& state, const DiffusionConfig& cfg,
                 NodeId i);

// Restores r_a = r_b = 0 on gadget g after x_i was raised by delta_xi, then
// updates the residuals of the gadget's original nodes (queueing any new
// violations).
AuxIncrement auxpush(const Hypergraph& h, DiffusionState& state, const DiffusionConfig& cfg,
                     GadgetId g, NodeId i, double delta_xi);

// FIFO push loop. A non-converged result (max_pushes hit) keeps the partial
// state. kappa >= 1 yields the zero vector.
DiffusionResult solve(const Hypergraph& h, const NodeSet& seeds, const DiffusionConfig& cfg,
                      const PushObserver& observer = {});

namespace detail {

struct GadgetEquilibrium {
  double a = 0.0;
  double b = 0.0;
};

// Unique (x_a, x_b) with zero auxiliary residuals for fixed node values:
//   delta (a - b) = sum (y - a)_+ = sum (b - y)_+.
// Exact for the piecewise-linear system (breakpoint scan plus one linear
// interpolation). The gadget scale c cancels.
GadgetEquilibrium solve_gadget_equilibrium(std::span<const double> values, double delta);

// Closed-form increment assuming the ordering of x_i among its adjacent
// auxiliaries does not change.
inline double linear_push_step(double r_i, double target, double s_a, double s_b,
                               double gamma, double d_i) {
  return (r_i - target) / ((s_a + s_b) / gamma + d_i);
}

}  // namespace detail

}  // namespace hyperdiffuse

#endif  // HYPERDIFFUSE_LHQD_H_
