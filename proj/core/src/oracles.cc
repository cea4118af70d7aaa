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


#include "hyperdiffuse/oracles.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include "hyperdiffuse/reduction.h"

namespace hyperdiffuse::oracles {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTieTol = 1e-12;

double dloss(double z, double p) {
  if (z <= 0.0) return 0.0;
  return p == 2.0 ? z : std::pow(z, p - 1.0);
}

double loss(double z, double p) {
  if (z <= 0.0) return 0.0;
  return p == 2.0 ? 0.5 * z * z : std::pow(z, p) / p;
}

double signed_dloss(double z, double p) { return z >= 0.0 ? dloss(z, p) : -dloss(-z, p); }

// f_e(A) for |A| = k written out directly from the threshold form.
double edge_penalty(const Hypergraph& h, EdgeId e, std::size_t k) {
  const std::size_t size = h.edge_size(e);
  const double m = static_cast<double>(std::min(k, size - k));
  double total = 0.0;
  for (const GadgetParams& gp : h.gadgets(e)) total += gp.c * std::min(m, gp.delta);
  return total;
}

std::vector<double> own_degrees(const Hypergraph& h) {
  std::vector<double> d(h.num_nodes(), 0.0);
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    const double f1 = edge_penalty(h, e, 1);
    for (NodeId v : h.edge(e)) d[v] += f1;
  }
  return d;
}

NodeSet mask_to_set(std::uint64_t mask, std::size_t n) {
  std::vector<NodeId> ids;
  for (NodeId v = 0; v < n; ++v) {
    if (mask >> v & 1U) ids.push_back(v);
  }
  return NodeSet(std::move(ids), n);
}

bool lex_less(const NodeSet& l, const NodeSet& r) {
  return std::lexicographical_compare(l.begin(), l.end(), r.begin(), r.end());
}

bool within_tie(double value, double best) {
  return value <= best + kTieTol * std::max(1.0, std::abs(best));
}

struct Scored {
  std::uint64_t mask;
  double phi;
};

std::vector<NodeSet> family_from(const std::vector<Scored>& scored, std::size_t n) {
  double best = kInf;
  for (const Scored& s : scored) best = std::min(best, s.phi);
  std::vector<NodeSet> out;
  if (!std::isfinite(best)) return out;
  std::vector<std::uint64_t> masks;
  for (const Scored& s : scored) {
    if (within_tie(s.phi, best)) masks.push_back(s.mask);
  }
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  for (std::uint64_t m : masks) out.push_back(mask_to_set(m, n));
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

std::vector<Scored> score_all_subsets(const Hypergraph& h) {
  const std::size_t n = h.num_nodes();
  if (n > kBruteMaxNodes) {
    throw std::invalid_argument("brute force limited to " + std::to_string(kBruteMaxNodes) +
                                " nodes");
  }
  const auto d = own_degrees(h);
  double total = 0.0;
  for (double v : d) total += v;
  std::vector<std::uint64_t> edge_masks(h.num_edges(), 0);
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    for (NodeId v : h.edge(e)) edge_masks[e] |= std::uint64_t{1} << v;
  }
  std::vector<Scored> out;
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    double vol = 0.0;
    for (NodeId v = 0; v < n; ++v) {
      if (mask >> v & 1U) vol += d[v];
    }
    double cut = 0.0;
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
      cut += edge_penalty(h, e, static_cast<std::size_t>(std::popcount(mask & edge_masks[e])));
    }
    const double denom = std::min(vol, total - vol);
    out.push_back({mask, denom > 0.0 ? cut / denom : kInf});
  }
  return out;
}

}  // namespace

BruteConductance brute_min_conductance(const Hypergraph& h) {
  const auto scored = score_all_subsets(h);
  const auto family = family_from(scored, h.num_nodes());
  if (family.empty()) return {NodeSet(), kInf};
  std::uint64_t mask = 0;
  for (NodeId v : family.front()) mask |= std::uint64_t{1} << v;
  // Masks are enumerated in increasing order starting at 1.
  return {family.front(), scored[mask - 1].phi};
}

std::vector<NodeSet> min_conductance_family(const Hypergraph& h) {
  return family_from(score_all_subsets(h), h.num_nodes());
}

std::vector<NodeSet> reduced_min_conductance_family(const Hypergraph& h) {
  const ReducedGraph g = build_reduced_graph(h);
  const std::size_t total_nodes = g.node_count;
  if (total_nodes > kReducedBruteMaxNodes) {
    throw std::invalid_argument("reduced brute force limited to " +
                                std::to_string(kReducedBruteMaxNodes) + " nodes");
  }
  const std::size_t n = h.num_nodes();
  const auto d = own_degrees(h);
  double total = 0.0;
  for (double v : d) total += v;
  const std::uint64_t original = (std::uint64_t{1} << n) - 1;
  std::vector<Scored> scored;
  for (std::uint64_t t = 0; t < (std::uint64_t{1} << total_nodes); ++t) {
    const std::uint64_t s = t & original;
    if (s == 0 || s == original) continue;
    double vol = 0.0;
    for (NodeId v = 0; v < n; ++v) {
      if (s >> v & 1U) vol += d[v];
    }
    double cut = 0.0;
    for (const Arc& arc : g.arcs) {
      if ((t >> arc.tail & 1U) && !(t >> arc.head & 1U)) cut += arc.weight;
    }
    const double denom = std::min(vol, total - vol);
    scored.push_back({s, denom > 0.0 ? cut / denom : kInf});
  }
  return family_from(scored, n);
}

CutPreservation cut_preservation_check(const Hypergraph& h, const std::vector<bool>& s) {
  if (h.num_gadgets() > kCutCheckMaxGadgets) {
    throw std::invalid_argument("cut preservation check limited to " +
                                std::to_string(kCutCheckMaxGadgets) + " gadgets");
  }
  if (s.size() != h.num_nodes()) throw std::invalid_argument("membership size mismatch");
  CutPreservation out;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    std::size_t k = 0;
    for (NodeId v : h.edge(e)) k += s[v] ? 1 : 0;
    out.hyper_cut += edge_penalty(h, e, k);
  }

  const ReducedGraph g = build_reduced_graph(h);
  std::vector<char> side(g.node_count, 0);
  for (NodeId v = 0; v < h.num_nodes(); ++v) side[v] = s[v] ? 1 : 0;
  const std::size_t gadgets = h.num_gadgets();
  double best = kInf;
  for (std::uint64_t placement = 0; placement < (std::uint64_t{1} << (2 * gadgets));
       ++placement) {
    for (std::size_t j = 0; j < gadgets; ++j) {
      side[g.aux_pairs[j].first] = static_cast<char>(placement >> (2 * j) & 1U);
      side[g.aux_pairs[j].second] = static_cast<char>(placement >> (2 * j + 1) & 1U);
    }
    double cut = 0.0;
    for (const Arc& arc : g.arcs) {
      if (side[arc.tail] && !side[arc.head]) cut += arc.weight;
    }
    best = std::min(best, cut);
  }
  out.min_directed_cut = best;
  out.equal = std::abs(out.hyper_cut - out.min_directed_cut) <= 1e-12;
  return out;
}

CutPreservation cut_preservation_check(const Hypergraph& h, const NodeSet& s) {
  return cut_preservation_check(h, s.mask(h.num_nodes()));
}

std::vector<AuxPair> aux_from_entries(std::span<const AuxEntry> entries,
                                      std::size_t num_gadgets) {
  std::vector<AuxPair> out(num_gadgets);
  for (const AuxEntry& e : entries) {
    if (e.gadget >= num_gadgets) throw std::invalid_argument("gadget id out of range");
    out[e.gadget] = {e.a, e.b};
  }
  return out;
}

namespace {

// One term of a 1-D coordinate subproblem: w * l(t - u) when the variable is
// the arc tail, w * l(u - t) when it is the head.
struct Term {
  double w;
  double u;
  bool tail;
};

double slope(std::span<const Term> terms, double lin, double t, double p) {
  double s = lin;
  for (const Term& term : terms) {
    s += term.tail ? term.w * dloss(t - term.u, p) : -term.w * dloss(term.u - t, p);
  }
  return s;
}

// Minimizer over t >= 0 of the convex 1-D function with derivative `slope`;
// on a flat piece the point closest to `current` is returned.
double minimize_quadratic(std::span<const Term> terms, double lin, double current) {
  std::vector<double> pts{0.0};
  double right_slope = 0.0;
  for (const Term& term : terms) {
    if (term.u > 0.0) pts.push_back(term.u);
    if (term.tail) right_slope += term.w;
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<double> vals(pts.size());
  for (std::size_t k = 0; k < pts.size(); ++k) vals[k] = slope(terms, lin, pts[k], 2.0);
  if (vals[0] > 0.0) return 0.0;

  std::size_t j = 0;
  while (j < pts.size() && vals[j] < 0.0) ++j;
  double lower = 0.0;
  double upper = 0.0;
  if (j == pts.size()) {
    if (right_slope <= 0.0) throw std::runtime_error("coordinate subproblem is unbounded");
    lower = pts.back() - vals.back() / right_slope;
    upper = lower;
  } else if (vals[j] == 0.0) {
    std::size_t k = j;
    while (k + 1 < pts.size() && vals[k + 1] == 0.0) ++k;
    lower = pts[j];
    upper = pts[k];
    if (k + 1 == pts.size() && right_slope == 0.0) upper = kInf;
  } else {
    lower = pts[j - 1] - vals[j - 1] * (pts[j] - pts[j - 1]) / (vals[j] - vals[j - 1]);
    upper = lower;
  }
  return std::clamp(current, lower, upper);
}

double minimize_general(std::span<const Term> terms, double lin, double current, double p) {
  auto f = [&](double t) { return slope(terms, lin, t, p); };
  if (f(0.0) > 0.0) return 0.0;
  double reach = 1.0;
  for (const Term& term : terms) reach = std::max(reach, term.u + 1.0);
  // lower = inf {t : f(t) >= 0}
  double lower = 0.0;
  if (f(0.0) < 0.0) {
    double lo = 0.0;
    double hi = reach;
    while (f(hi) < 0.0) hi *= 2.0;
    for (int it = 0; it < 2000; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      (f(mid) < 0.0 ? lo : hi) = mid;
    }
    lower = hi;
  }
  // upper = sup {t : f(t) <= 0}
  double upper = lower;
  if (f(lower) <= 0.0) {
    double lo = lower;
    double hi = std::max(reach, lower + 1.0);
    while (f(hi) <= 0.0) hi *= 2.0;
    for (int it = 0; it < 2000; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      (f(mid) <= 0.0 ? lo : hi) = mid;
    }
    upper = lo;
  }
  return std::clamp(current, lower, upper);
}

double minimize_coordinate(std::span<const Term> terms, double lin, double current, double p) {
  return p == 2.0 ? minimize_quadratic(terms, lin, current)
                  : minimize_general(terms, lin, current, p);
}

void check_inputs(const Hypergraph& h, const DiffusionConfig& cfg, std::span<const double> x,
                  std::span<const AuxPair> aux) {
  if (!(cfg.gamma > 0.0)) throw std::invalid_argument("gamma must be positive");
  if (!(cfg.p > 1.0 && cfg.p <= 2.0)) throw std::invalid_argument("p must lie in (1, 2]");
  if (x.size() != h.num_nodes()) throw std::invalid_argument("x must be dense over V");
  if (!aux.empty() && aux.size() != h.num_gadgets()) {
    throw std::invalid_argument("aux must be dense over gadgets");
  }
}

std::vector<AuxPair> complete_aux(const Hypergraph& h, double p, std::span<const double> x,
                                  std::span<const AuxPair> aux) {
  if (!aux.empty()) return {aux.begin(), aux.end()};
  std::vector<AuxPair> out(h.num_gadgets());
  std::vector<double> values;
  for (GadgetId g = 0; g < h.num_gadgets(); ++g) {
    values.clear();
    for (NodeId v : h.edge(h.gadget_edge(g))) values.push_back(x[v]);
    out[g] = gadget_minimizer(values, h.gadget(g).delta, p);
  }
  return out;
}

struct AuxRes {
  double a;
  double b;
};

AuxRes aux_res(const Hypergraph& h, double p, std::span<const double> x, GadgetId g,
               const AuxPair& av) {
  const GadgetParams& gp = h.gadget(g);
  double into_a = 0.0;
  double out_b = 0.0;
  for (NodeId v : h.edge(h.gadget_edge(g))) {
    into_a += dloss(x[v] - av.a, p);
    out_b += dloss(av.b - x[v], p);
  }
  const double ab = gp.c * gp.delta * dloss(av.a - av.b, p);
  return {-ab + gp.c * into_a, ab - gp.c * out_b};
}

}  // namespace

AuxPair gadget_minimizer(std::span<const double> values, double delta, double p) {
  if (values.empty()) return {};
  double a = *std::max_element(values.begin(), values.end());
  double b = *std::min_element(values.begin(), values.end());
  std::vector<Term> ta;
  std::vector<Term> tb;
  for (int it = 0; it < 1'000'000; ++it) {
    ta.clear();
    for (double y : values) ta.push_back({1.0, y, false});
    ta.push_back({delta, b, true});
    const double a_new = minimize_coordinate(ta, 0.0, a, p);
    tb.clear();
    for (double y : values) tb.push_back({1.0, y, true});
    tb.push_back({delta, a_new, false});
    const double b_new = minimize_coordinate(tb, 0.0, b, p);
    const bool settled = std::abs(a_new - a) <= 1e-17 && std::abs(b_new - b) <= 1e-17;
    a = a_new;
    b = b_new;
    if (settled) break;
  }
  return {a, b};
}

std::vector<double> residuals(const Hypergraph& h, const NodeSet& seeds,
                              const DiffusionConfig& cfg, std::span<const double> x,
                              std::span<const AuxPair> aux_in) {
  check_inputs(h, cfg, x, aux_in);
  const auto aux = complete_aux(h, cfg.p, x, aux_in);
  const auto d = own_degrees(h);
  const double p = cfg.p;
  std::vector<double> g(h.num_nodes(), 0.0);
  for (NodeId v = 0; v < h.num_nodes(); ++v) {
    g[v] = d[v] * signed_dloss((seeds.contains(v) ? 1.0 : 0.0) - x[v], p);
  }
  for (GadgetId j = 0; j < h.num_gadgets(); ++j) {
    const double w = h.gadget(j).c / cfg.gamma;
    for (NodeId v : h.edge(h.gadget_edge(j))) {
      g[v] += w * (dloss(aux[j].b - x[v], p) - dloss(x[v] - aux[j].a, p));
    }
  }
  return g;
}

double KktReport::worst() const {
  return std::max({negative_residual, excess_residual, slackness, aux_residual, box});
}

KktReport kkt_check(const Hypergraph& h, const NodeSet& seeds, const DiffusionConfig& cfg,
                    std::span<const double> x, std::span<const AuxPair> aux_in) {
  check_inputs(h, cfg, x, aux_in);
  const auto aux = complete_aux(h, cfg.p, x, aux_in);
  const auto g = residuals(h, seeds, cfg, x, aux);
  const auto d = own_degrees(h);
  KktReport rep;
  auto box = [&](double v) { rep.box = std::max({rep.box, -v, v - 1.0}); };
  for (NodeId v = 0; v < h.num_nodes(); ++v) {
    rep.negative_residual = std::max(rep.negative_residual, -g[v]);
    rep.excess_residual = std::max(rep.excess_residual, g[v] - cfg.kappa * d[v]);
    rep.slackness = std::max(rep.slackness, std::abs((cfg.kappa * d[v] - g[v]) * x[v]));
    box(x[v]);
  }
  for (GadgetId j = 0; j < h.num_gadgets(); ++j) {
    const AuxRes r = aux_res(h, cfg.p, x, j, aux[j]);
    rep.aux_residual = std::max({rep.aux_residual, std::abs(r.a), std::abs(r.b)});
    box(aux[j].a);
    box(aux[j].b);
  }
  return rep;
}

double objective(const Hypergraph& h, const NodeSet& seeds, const DiffusionConfig& cfg,
                 std::span<const double> x, std::span<const AuxPair> aux_in) {
  check_inputs(h, cfg, x, aux_in);
  const auto aux = complete_aux(h, cfg.p, x, aux_in);
  const auto d = own_degrees(h);
  const double p = cfg.p;
  double f = 0.0;
  for (NodeId v = 0; v < h.num_nodes(); ++v) {
    const double anchor = seeds.contains(v) ? 1.0 - x[v] : x[v];
    f += cfg.gamma * d[v] * loss(anchor, p) + cfg.kappa * cfg.gamma * d[v] * x[v];
  }
  for (GadgetId j = 0; j < h.num_gadgets(); ++j) {
    const GadgetParams& gp = h.gadget(j);
    for (NodeId v : h.edge(h.gadget_edge(j))) {
      f += gp.c * (loss(x[v] - aux[j].a, p) + loss(aux[j].b - x[v], p));
    }
    f += gp.c * gp.delta * loss(aux[j].a - aux[j].b, p);
  }
  return f;
}

ReferenceSolution reference_qp_solver(const Hypergraph& h, const NodeSet& seeds,
                                      const DiffusionConfig& cfg,
                                      const ReferenceOptions& opts) {
  const std::size_t n = h.num_nodes();
  const std::size_t gadgets = h.num_gadgets();
  if (n + 2 * gadgets > kReferenceMaxVariables) {
    throw std::invalid_argument("reference solver limited to " +
                                std::to_string(kReferenceMaxVariables) + " variables");
  }
  if (!(cfg.gamma > 0.0) || !(cfg.kappa >= 0.0)) {
    throw std::invalid_argument("gamma must be positive and kappa nonnegative");
  }
  if (!(cfg.p > 1.0 && cfg.p <= 2.0)) throw std::invalid_argument("p must lie in (1, 2]");
  const auto d = own_degrees(h);
  const double p = cfg.p;

  ReferenceSolution sol;
  sol.x.assign(n, 0.0);
  sol.aux.assign(gadgets, {});
  std::vector<std::vector<GadgetId>> node_gadgets(n);
  for (GadgetId j = 0; j < gadgets; ++j) {
    for (NodeId v : h.edge(h.gadget_edge(j))) node_gadgets[v].push_back(j);
  }

  std::vector<Term> terms;
  for (std::size_t sweep = 0; sweep < opts.max_sweeps; ++sweep) {
    for (NodeId v = 0; v < n; ++v) {
      terms.clear();
      for (GadgetId j : node_gadgets[v]) {
        const double c = h.gadget(j).c;
        terms.push_back({c, sol.aux[j].a, true});
        terms.push_back({c, sol.aux[j].b, false});
      }
      if (seeds.contains(v)) {
        terms.push_back({cfg.gamma * d[v], 1.0, false});
      } else {
        terms.push_back({cfg.gamma * d[v], 0.0, true});
      }
      sol.x[v] = minimize_coordinate(terms, cfg.kappa * cfg.gamma * d[v], sol.x[v], p);
    }
    for (GadgetId j = 0; j < gadgets; ++j) {
      const GadgetParams& gp = h.gadget(j);
      const auto nodes = h.edge(h.gadget_edge(j));
      terms.clear();
      for (NodeId v : nodes) terms.push_back({gp.c, sol.x[v], false});
      terms.push_back({gp.c * gp.delta, sol.aux[j].b, true});
      sol.aux[j].a = minimize_coordinate(terms, 0.0, sol.aux[j].a, p);
      terms.clear();
      for (NodeId v : nodes) terms.push_back({gp.c, sol.x[v], true});
      terms.push_back({gp.c * gp.delta, sol.aux[j].a, false});
      sol.aux[j].b = minimize_coordinate(terms, 0.0, sol.aux[j].b, p);
    }
    sol.sweeps = sweep + 1;
    sol.objective.push_back(objective(h, seeds, cfg, sol.x, sol.aux));
    if (kkt_check(h, seeds, cfg, sol.x, sol.aux).worst() <= opts.kkt_tol) return sol;
  }
  throw std::runtime_error("reference solver hit the sweep cap");
}

}  // namespace hyperdiffuse::oracles
