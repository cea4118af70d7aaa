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

#include "hyperdiffuse/pnorm.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include <boost/math/tools/toms748_solve.hpp>

#include "hyperdiffuse/lhqd.h"
#include "push_common.h"

namespace hyperdiffuse {

using internal::for_each_gadget;
using internal::maybe_enqueue;
using internal::violates;

namespace {

constexpr int kMaxBisectionSteps = 400;
constexpr std::uintmax_t kMaxRootIterations = 200;

// |z|^(p-1) * sign(z)
double signed_power(double z, double p) {
  if (z > 0.0) return std::pow(z, p - 1.0);
  if (z < 0.0) return -std::pow(-z, p - 1.0);
  return 0.0;
}

void check_p(const DiffusionConfig& cfg) {
  if (!(cfg.p > 1.0 && cfg.p <= 2.0)) throw std::invalid_argument("p must lie in (1, 2]");
}

}  // namespace

double loss_derivative(double z, double p) {
  if (z <= 0.0) return 0.0;
  return p == 2.0 ? z : std::pow(z, p - 1.0);
}

double pnorm_node_residual(const Hypergraph& h, const DiffusionState& st,
                           const DiffusionConfig& cfg, NodeId i) {
  check_p(cfg);
  const double xi = st.x_of(i);
  double flow = 0.0;
  for_each_gadget(h, i, [&](GadgetId g) {
    const double c = h.gadget(g).c;
    const AuxValue av = st.aux_of(g);
    flow += c * (loss_derivative(av.b - xi, cfg.p) - loss_derivative(xi - av.a, cfg.p));
  });
  const double anchor = (st.is_seed(i) ? 1.0 : 0.0) - xi;
  return flow / cfg.gamma + h.degree(i) * signed_power(anchor, cfg.p);
}

AuxResiduals pnorm_aux_residuals(const Hypergraph& h, const DiffusionState& st,
                                 const DiffusionConfig& cfg, GadgetId g) {
  check_p(cfg);
  const GadgetParams& gp = h.gadget(g);
  const AuxValue av = st.aux_of(g);
  double into_a = 0.0;
  double out_of_b = 0.0;
  for (NodeId v : h.edge(h.gadget_edge(g))) {
    const double xv = st.x_of(v);
    into_a += loss_derivative(xv - av.a, cfg.p);
    out_of_b += loss_derivative(av.b - xv, cfg.p);
  }
  const double ab = gp.c * gp.delta * loss_derivative(av.a - av.b, cfg.p);
  return {-ab + gp.c * into_a, ab - gp.c * out_of_b};
}

namespace detail {

PnormEquilibrium solve_pnorm_gadget(std::span<const double> values, double delta, double p,
                                    double a_floor) {
  const auto [min_it, max_it] = std::minmax_element(values.begin(), values.end());
  const double y_min = *min_it;
  const double y_max = *max_it;
  if (y_min == y_max) return {y_min, y_min};

  auto above = [&](double u) {
    double s = 0.0;
    for (double y : values) s += loss_derivative(y - u, p);
    return s;
  };
  auto below = [&](double l) {
    double s = 0.0;
    for (double y : values) s += loss_derivative(l - y, p);
    return s;
  };
  // Both sums are monotone on [y_min, y_max], so each inverse is bracketed.
  auto root = [](auto&& f, double lo, double hi, double f_lo, double f_hi) {
    if (f_lo == 0.0) return lo;
    if (f_hi == 0.0) return hi;
    std::uintmax_t iters = kMaxRootIterations;
    const boost::math::tools::eps_tolerance<double> tol(std::numeric_limits<double>::digits);
    const auto [l, h] = boost::math::tools::toms748_solve(f, lo, hi, f_lo, f_hi, tol, iters);
    return 0.5 * (l + h);
  };
  auto a_of = [&](double t) {
    return root([&](double u) { return above(u) - t; }, y_min, y_max, above(y_min) - t, -t);
  };
  auto b_of = [&](double t) {
    return root([&](double l) { return below(l) - t; }, y_min, y_max, -t, below(y_max) - t);
  };
  // The common arc flow t = sum (y - a)_+^(p-1) = sum (b - y)_+^(p-1) fixes
  // both auxiliaries; the a -> b arc must carry the same flow.
  auto excess = [&](double t) {
    return delta * loss_derivative(a_of(t) - b_of(t), p) - t;
  };

  double t_hi = std::min(above(y_min), below(y_max));
  double e_hi = excess(t_hi);
  if (a_floor > y_min && a_floor < y_max) {
    const double t_floor = above(a_floor);
    if (t_floor < t_hi) {
      const double e_floor = excess(t_floor);
      if (e_floor <= 0.0) {
        t_hi = t_floor;
        e_hi = e_floor;
      }
    }
  }
  const double t = root(excess, 0.0, t_hi, delta * std::pow(y_max - y_min, p - 1.0), e_hi);
  const double a = a_of(t);
  return {a, std::min(b_of(t), a)};
}

}  // namespace detail

double pnorm_hyperpush(const Hypergraph& h, DiffusionState& st, const DiffusionConfig& cfg,
                       NodeId i) {
  check_p(cfg);
  const double d = h.degree(i);
  const double r_i = st.r_of(i);
  if (!violates(r_i, d, cfg.kappa)) {
    throw std::logic_error("hyperpush called on a node that satisfies g_i <= kappa d_i");
  }
  const double target = cfg.rho * cfg.kappa * d;
  const double xi = st.x_of(i);
  const double anchor = (st.is_seed(i) ? 1.0 : 0.0) - xi;

  struct Neighbor {
    double w;
    AuxValue av;
  };
  std::vector<Neighbor> nbrs;
  for_each_gadget(h, i,
                  [&](GadgetId g) { nbrs.push_back({h.gadget(g).c / cfg.gamma, st.aux_of(g)}); });

  // Residual after raising x_i by dx, relative to the maintained r_i.
  auto residual_at = [&](double dx) {
    double change = 0.0;
    for (const Neighbor& nb : nbrs) {
      change += nb.w * (loss_derivative(nb.av.b - xi - dx, cfg.p) -
                        loss_derivative(nb.av.b - xi, cfg.p));
      change -= nb.w * (loss_derivative(xi + dx - nb.av.a, cfg.p) -
                        loss_derivative(xi - nb.av.a, cfg.p));
    }
    change += d * (signed_power(anchor - dx, cfg.p) - signed_power(anchor, cfg.p));
    return r_i + change;
  };

  double lo = 0.0;
  double hi = std::max(1.0 - xi, cfg.eps);
  double r_hi = residual_at(hi);
  for (int grow = 0; grow < 64 && r_hi > target; ++grow) {
    lo = hi;
    hi *= 2.0;
    r_hi = residual_at(hi);
  }
  for (int it = 0; it < kMaxBisectionSteps; ++it) {
    if (hi - lo <= cfg.eps && r_hi >= 0.0) break;
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double r_mid = residual_at(mid);
    if (r_mid > target) {
      lo = mid;
    } else {
      hi = mid;
      r_hi = r_mid;
    }
  }
  ++st.ledger.hyperpush_search;
  st.x[i] = xi + hi;
  st.r[i] = r_hi;
  ++st.ledger.hyperpushes;
  st.ledger.pushed_volume += d;
  return hi;
}

AuxIncrement pnorm_auxpush(const Hypergraph& h, DiffusionState& st, const DiffusionConfig& cfg,
                           GadgetId g, NodeId i, double delta_xi) {
  check_p(cfg);
  const GadgetParams& gp = h.gadget(g);
  const AuxValue old = st.aux_of(g);
  const double xi_new = st.x_of(i);
  const double xi_old = xi_new - delta_xi;
  ++st.ledger.auxpushes;
  if (xi_new <= old.a && xi_old >= old.b) {
    ++st.ledger.auxpush_noop;
    return {};
  }

  std::vector<double> values;
  internal::gather_edge_values(h, st, g, values);
  const auto eq = detail::solve_pnorm_gadget(values, gp.delta, cfg.p, old.a);
  ++st.ledger.auxpush_search;
  const double a_new = std::max(eq.a, old.a);
  const double b_new = std::min(std::max(eq.b, old.b), a_new);
  st.aux[g] = {a_new, b_new};

  const double w = gp.c / cfg.gamma;
  const auto nodes = h.edge(h.gadget_edge(g));
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const double xv = values[k];
    const double change =
        w * (loss_derivative(xv - old.a, cfg.p) - loss_derivative(xv - a_new, cfg.p) +
             loss_derivative(b_new - xv, cfg.p) - loss_derivative(old.b - xv, cfg.p));
    if (change != 0.0) {
      st.r[nodes[k]] += change;
      maybe_enqueue(st, h, cfg, nodes[k]);
    }
  }
  return {a_new - old.a, b_new - old.b};
}

DiffusionResult pnorm_solve(const Hypergraph& h, const NodeSet& seeds,
                            const DiffusionConfig& cfg, const PushObserver& observer) {
  DiffusionState st = init_state(h, seeds, cfg);
  const bool converged = internal::run_push_loop(h, st, cfg, [&](NodeId i) {
    if (observer) observer({PushKind::kHyperpushStart, i, 0, 0.0, {}}, st);
    const double dx = pnorm_hyperpush(h, st, cfg, i);
    if (observer) observer({PushKind::kHyperpush, i, 0, dx, {}}, st);
    for_each_gadget(h, i, [&](GadgetId g) {
      const AuxIncrement inc = pnorm_auxpush(h, st, cfg, g, i, dx);
      if (observer) observer({PushKind::kAuxpush, i, g, dx, inc}, st);
    });
  });
  return make_result(st, converged);
}

DiffusionResult diffuse(const Hypergraph& h, const NodeSet& seeds, const DiffusionConfig& cfg,
                        bool force_bisection) {
  if (cfg.p == 2.0 && !force_bisection) return solve(h, seeds, cfg);
  return pnorm_solve(h, seeds, cfg);
}

}  // namespace hyperdiffuse
