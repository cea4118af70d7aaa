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

#include "hyperdiffuse/lhqd.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "push_common.h"

namespace hyperdiffuse {

using internal::for_each_gadget;
using internal::maybe_enqueue;
using internal::violates;

DiffusionState init_state(const Hypergraph& h, const NodeSet& seeds,
                          const DiffusionConfig& cfg) {
  cfg.validate();
  if (seeds.empty()) throw std::invalid_argument("seed set is empty");
  DiffusionState st;
  for (NodeId r : seeds) {
    if (r >= h.num_nodes()) throw std::invalid_argument("seed out of range");
    if (!(h.degree(r) > 0.0)) {
      throw std::invalid_argument("seed " + std::to_string(r + 1) + " has zero degree");
    }
    st.seeds.insert(r);
  }
  for (NodeId r : seeds) {
    st.r[r] = h.degree(r);
    maybe_enqueue(st, h, cfg, r);
  }
  return st;
}

double node_residual(const Hypergraph& h, const DiffusionState& st, const DiffusionConfig& cfg,
                     NodeId i) {
  const double xi = st.x_of(i);
  double inflow = 0.0;
  double outflow = 0.0;
  for_each_gadget(h, i, [&](GadgetId g) {
    const double c = h.gadget(g).c;
    const AuxValue av = st.aux_of(g);
    if (av.b > xi) inflow += c * (av.b - xi);
    if (xi > av.a) outflow += c * (xi - av.a);
  });
  const double anchor = (st.is_seed(i) ? 1.0 : 0.0) - xi;
  return (inflow - outflow) / cfg.gamma + h.degree(i) * anchor;
}

AuxResiduals aux_residuals(const Hypergraph& h, const DiffusionState& st, GadgetId g) {
  const GadgetParams& p = h.gadget(g);
  const AuxValue av = st.aux_of(g);
  double into_a = 0.0;
  double out_of_b = 0.0;
  for (NodeId v : h.edge(h.gadget_edge(g))) {
    const double xv = st.x_of(v);
    if (xv > av.a) into_a += xv - av.a;
    if (av.b > xv) out_of_b += av.b - xv;
  }
  const double ab = p.c * p.delta * (av.a - av.b);
  return {-ab + p.c * into_a, ab - p.c * out_of_b};
}

namespace detail {

GadgetEquilibrium solve_gadget_equilibrium(std::span<const double> values, double delta) {
  std::vector<double> y(values.begin(), values.end());
  std::sort(y.begin(), y.end());
  const std::size_t k = y.size();
  if (k == 0) return {};
  if (y.front() == y.back()) return {y.front(), y.front()};

  std::vector<double> prefix(k + 1, 0.0);
  for (std::size_t j = 0; j < k; ++j) prefix[j + 1] = prefix[j] + y[j];
  const double total = prefix[k];

  // A(u) = sum (y - u)_+ (non-increasing), B(l) = sum (l - y)_+ (non-decreasing).
  auto above = [&](double u) {
    const auto idx = static_cast<std::size_t>(std::upper_bound(y.begin(), y.end(), u) - y.begin());
    return (total - prefix[idx]) - static_cast<double>(k - idx) * u;
  };
  auto below_at = [&](std::size_t q) { return static_cast<double>(q) * y[q] - prefix[q]; };
  // Smallest l with B(l) = t for t > 0; y.front() for t <= 0.
  auto below_inverse = [&](double t) {
    if (t <= 0.0) return y.front();
    std::size_t lo = 1;
    std::size_t hi = k;  // first q in [1, k) with B(y_q) >= t, or k
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      if (below_at(mid) >= t) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    return (t + prefix[lo]) / static_cast<double>(lo);
  };
  auto above_at = [&](std::size_t j) {
    return (total - prefix[j + 1]) - static_cast<double>(k - j - 1) * y[j];
  };
  // u in [y_0, y_{k-1}] with A(u) = t, for 0 < t <= A(y_0).
  auto above_inverse = [&](double t) {
    std::size_t lo = 0;
    std::size_t hi = k - 2;  // largest j in [0, k-2] with A(y_j) >= t
    while (lo < hi) {
      const std::size_t mid = (lo + hi + 1) / 2;
      if (above_at(mid) >= t) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    return ((total - prefix[lo + 1]) - t) / static_cast<double>(k - lo - 1);
  };
  auto h_of = [&](double u) {
    const double a_val = above(u);
    return delta * (u - below_inverse(a_val)) - a_val;
  };

  // h is increasing and linear between consecutive breakpoints: the node
  // values and the u where A(u) crosses some B(y_q).
  std::vector<double> breaks(y.begin(), y.end());
  const double a_max = above_at(0);
  for (std::size_t q = 1; q < k; ++q) {
    const double t = below_at(q);
    if (t > 0.0 && t <= a_max) breaks.push_back(above_inverse(t));
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  double lo = breaks.front();
  double h_lo = h_of(lo);
  double u = breaks.back();
  for (std::size_t m = 1; m < breaks.size(); ++m) {
    const double hi = breaks[m];
    const double h_hi = h_of(hi);
    if (h_hi >= 0.0) {
      u = (h_hi > h_lo) ? lo + (-h_lo) * (hi - lo) / (h_hi - h_lo) : lo;
      u = std::clamp(u, lo, hi);
      break;
    }
    lo = hi;
    h_lo = h_hi;
  }
  const double b = std::min(below_inverse(above(u)), u);
  return {u, b};
}

}  // namespace detail

namespace {

NodeCache scan_node_cache(const Hypergraph& h, const DiffusionState& st, NodeId i, double xi) {
  NodeCache nc;
  for_each_gadget(h, i, [&](GadgetId g) {
    const double c = h.gadget(g).c;
    const AuxValue av = st.aux_of(g);
    if (av.a < xi) {
      nc.s_a += c;
    } else {
      nc.a_min = std::min(nc.a_min, av.a);
    }
    if (av.b > xi) {
      nc.s_b += c;
      nc.b_min = std::min(nc.b_min, av.b);
    }
  });
  return nc;
}

// Exact root of the piecewise-linear residual g(t), t >= x_i, g(x_i) = r_i.
double breakpoint_push_step(const Hypergraph& h, const DiffusionState& st,
                            const DiffusionConfig& cfg, NodeId i, double xi, double r_i,
                            double target, const NodeCache& nc) {
  struct Event {
    double at;
    double slope_change;
  };
  std::vector<Event> events;
  for_each_gadget(h, i, [&](GadgetId g) {
    const double w = h.gadget(g).c / cfg.gamma;
    const AuxValue av = st.aux_of(g);
    if (av.a >= xi) events.push_back({av.a, +w});
    if (av.b > xi) events.push_back({av.b, -w});
  });
  std::sort(events.begin(), events.end(),
            [](const Event& l, const Event& r) { return l.at < r.at; });

  double t = xi;
  double g = r_i;
  double slope = (nc.s_a + nc.s_b) / cfg.gamma + h.degree(i);
  for (const Event& ev : events) {
    const double g_next = g - slope * (ev.at - t);
    if (g_next <= target) break;
    t = ev.at;
    g = g_next;
    slope += ev.slope_change;
  }
  return t + (g - target) / slope - xi;
}

}  // namespace

double hyperpush(const Hypergraph& h, DiffusionState& st, const DiffusionConfig& cfg,
                 NodeId i) {
  const double d = h.degree(i);
  const double r_i = st.r_of(i);
  if (!violates(r_i, d, cfg.kappa)) {
    throw std::logic_error("hyperpush called on a node that satisfies g_i <= kappa d_i");
  }
  const double target = cfg.rho * cfg.kappa * d;
  const double xi = st.x_of(i);

  const NodeCache nc = scan_node_cache(h, st, i, xi);
  st.node_caches[i] = nc;

  double dx = detail::linear_push_step(r_i, target, nc.s_a, nc.s_b, cfg.gamma, d);
  if (xi + dx <= std::min(nc.a_min, nc.b_min)) {
    ++st.ledger.hyperpush_fast;
  } else {
    dx = breakpoint_push_step(h, st, cfg, i, xi, r_i, target, nc);
    ++st.ledger.hyperpush_search;
  }
  dx = std::max(dx, 0.0);
  st.x[i] = xi + dx;
  st.r[i] = target;
  ++st.ledger.hyperpushes;
  st.ledger.pushed_volume += d;
  return dx;
}

AuxIncrement auxpush(const Hypergraph& h, DiffusionState& st, const DiffusionConfig& cfg,
                     GadgetId g, NodeId i, double delta_xi) {
  const GadgetParams& p = h.gadget(g);
  const AuxValue old = st.aux_of(g);
  const double xi_new = st.x_of(i);
  const double xi_old = xi_new - delta_xi;
  ++st.ledger.auxpushes;

  // Both of i's terms in r_a, r_b are unchanged: (x_i - x_a)_+ stays 0 and
  // (x_b - x_i)_+ was already 0.
  if (xi_new <= old.a && xi_old >= old.b) {
    ++st.ledger.auxpush_noop;
    return {};
  }

  const auto nodes = h.edge(h.gadget_edge(g));
  GadgetCache gc;
  double sum_above = 0.0;
  double sum_below = 0.0;
  for (NodeId v : nodes) {
    const double xv = st.x_of(v);
    if (xv > old.a) {
      gc.z_a += p.c;
      sum_above += xv;
      gc.x_min_a = std::min(gc.x_min_a, xv);
    }
    if (xv < old.b) {
      gc.z_b += p.c;
      sum_below += xv;
    } else {
      gc.x_min_b = std::min(gc.x_min_b, xv);
    }
  }
  st.gadget_caches[g] = gc;

  // Ordering unchanged: delta (a - b) = S_A - k_A a = k_B b - S_B.
  const double k_a = gc.z_a / p.c;
  const double k_b = gc.z_b / p.c;
  const double denom = p.delta * (k_a + k_b) + k_a * k_b;
  bool fast = false;
  double a_new = old.a;
  double b_new = old.b;
  if (denom > 0.0) {
    a_new = (sum_above * k_b + p.delta * (sum_above + sum_below)) / denom;
    b_new = a_new - (sum_above - k_a * a_new) / p.delta;
    fast = a_new >= old.a && a_new <= gc.x_min_a && b_new >= old.b && b_new <= gc.x_min_b &&
           b_new <= a_new;
  }
  if (fast) {
    ++st.ledger.auxpush_fast;
  } else {
    std::vector<double> values;
    internal::gather_edge_values(h, st, g, values);
    const auto eq = detail::solve_gadget_equilibrium(values, p.delta);
    a_new = eq.a;
    b_new = eq.b;
    ++st.ledger.auxpush_search;
  }
  // Increments are non-negative in exact arithmetic; clamp rounding noise.
  a_new = std::max(a_new, old.a);
  b_new = std::min(std::max(b_new, old.b), a_new);
  st.aux[g] = {a_new, b_new};

  const double w = p.c / cfg.gamma;
  for (NodeId v : nodes) {
    const double xv = st.x_of(v);
    const double change = w * (std::max(xv - old.a, 0.0) - std::max(xv - a_new, 0.0) +
                               std::max(b_new - xv, 0.0) - std::max(old.b - xv, 0.0));
    if (change != 0.0) {
      st.r[v] += change;
      maybe_enqueue(st, h, cfg, v);
    }
  }
  return {a_new - old.a, b_new - old.b};
}

DiffusionResult solve(const Hypergraph& h, const NodeSet& seeds, const DiffusionConfig& cfg,
                      const PushObserver& observer) {
  DiffusionState st = init_state(h, seeds, cfg);
  const bool converged = internal::run_push_loop(h, st, cfg, [&](NodeId i) {
    if (observer) {
      // Caches are refreshed inside hyperpush; report the scan that it will see.
      st.node_caches[i] = scan_node_cache(h, st, i, st.x_of(i));
      observer({PushKind::kHyperpushStart, i, 0, 0.0, {}}, st);
    }
    const double dx = hyperpush(h, st, cfg, i);
    if (observer) observer({PushKind::kHyperpush, i, 0, dx, {}}, st);
    for_each_gadget(h, i, [&](GadgetId g) {
      const AuxIncrement inc = auxpush(h, st, cfg, g, i, dx);
      if (observer) observer({PushKind::kAuxpush, i, g, dx, inc}, st);
    });
  });
  return make_result(st, converged);
}

}  // namespace hyperdiffuse
