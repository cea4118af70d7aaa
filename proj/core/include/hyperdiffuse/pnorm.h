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

// p-norm variant of the localized diffusion: the squared arc penalty is
// replaced by w * l((Bx)_+) with l(z) = z^p / p, 1 < p <= 2, so every arc
// contributes w * (.)_+^(p-1) to the residuals. No closed form exists for a
// push, so both pushes bisect:
//
//  - hyperpush: bisection on dx_i in [0, 1 - x_i] to width eps, returning
//    the upper end (residual at or below rho*kappa*d_i, never negative).
//  - auxpush: the common arc flow t = sum (y - x_a)_+^(p-1)
//    = sum (x_b - y)_+^(p-1) determines both auxiliaries; t is the root of
//    delta (x_a(t) - x_b(t))^(p-1) = t, found to full double precision with
//    a bracketing solver, as are the inner inverses x_a(t) and x_b(t).

#ifndef HYPERDIFFUSE_PNORM_H_
#define HYPERDIFFUSE_PNORM_H_

#include <span>

#include "hyperdiffuse/diffusion.h"
#include "hyperdiffuse/hypergraph.h"

namespace hyperdiffuse {

// l'(z) = z^(p-1) for z > 0, 0 otherwise.
double loss_derivative(double z, double p);

double pnorm_node_residual(const Hypergraph& h, const DiffusionState& state,
                           const DiffusionConfig& cfg, NodeId i);

AuxResiduals pnorm_aux_residuals(const Hypergraph& h, const DiffusionState& state,
                                 const DiffusionConfig& cfg, GadgetId g);

double pnorm_hyperpush(const Hypergraph& h, DiffusionState& state, const DiffusionConfig& cfg,
                       NodeId i);

AuxIncrement pnorm_auxpush(const Hypergraph& h, DiffusionState& state,
                           const DiffusionConfig& cfg, GadgetId g, NodeId i, double delta_xi);

DiffusionResult pnorm_solve(const Hypergraph& h, const NodeSet& seeds,
                            const DiffusionConfig& cfg, const PushObserver& observer = {});

// Dispatches on cfg.p: the closed-form quadratic solver for p == 2 unless
// `force_bisection`, otherwise pnorm_solve.
DiffusionResult diffuse(const Hypergraph& h, const NodeSet& seeds, const DiffusionConfig& cfg,
                        bool force_bisection = false);

namespace detail {

// Zero-residual auxiliary pair for fixed node values. `a_floor` is a known
// lower bound on x_a (the previous value) used to tighten the bracket.
struct PnormEquilibrium {
  double a = 0.0;
  double b = 0.0;
};
PnormEquilibrium solve_pnorm_gadget(std::span<const double> values, double delta, double p,
                                    double a_floor);

}  // namespace detail

}  // namespace hyperdiffuse

#endif  // HYPERDIFFUSE_PNORM_H_
