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


// Brute-force and dense reference computations for validating the solvers
// and the gadget reduction on small instances. Nothing here calls into the
// push solvers; only the data types are shared.

#ifndef HYPERDIFFUSE_ORACLES_H_
#define HYPERDIFFUSE_ORACLES_H_

#include <cstddef>
#include <span>
#include <vector>

#include "hyperdiffuse/diffusion.h"
#include "hyperdiffuse/hypergraph.h"

namespace hyperdiffuse::oracles {

inline constexpr std::size_t kBruteMaxNodes = 20;
inline constexpr std::size_t kCutCheckMaxGadgets = 8;
inline constexpr std::size_t kReducedBruteMaxNodes = 24;
inline constexpr std::size_t kReferenceMaxVariables = 2000;

struct BruteConductance {
  NodeSet set;
  double conductance = 0.0;
};

// Exact minimizer over all nonempty proper subsets; among ties the set whose
// sorted id list is lexicographically smallest. Throws std::invalid_argument
// when n > kBruteMaxNodes.
BruteConductance brute_min_conductance(const Hypergraph& h);

// Every subset attaining the minimum conductance (relative tie tolerance
// 1e-12), in lexicographic order. Empty when no subset has finite conductance.
std::vector<NodeSet> min_conductance_family(const Hypergraph& h);

// Same family computed on the explicit reduced graph: every T over original
// and auxiliary nodes is scored by directed_cut(T) / min(vol(T n V),
// vol(V \ T)) with auxiliary degree 0, and minimizers are projected to V.
std::vector<NodeSet> reduced_min_conductance_family(const Hypergraph& h);

struct CutPreservation {
  double hyper_cut = 0.0;
  double min_directed_cut = 0.0;
  bool equal = false;  // |difference| <= 1e-12
};

// Enumerates all 4^G placements of the auxiliary pairs around `s`.
CutPreservation cut_preservation_check(const Hypergraph& h, const NodeSet& s);
CutPreservation cut_preservation_check(const Hypergraph& h, const std::vector<bool>& s);

struct AuxPair {
  double a = 0.0;
  double b = 0.0;
};

// Dense auxiliary vector from a solver result (missing gadgets are zero).
std::vector<AuxPair> aux_from_entries(std::span<const AuxEntry> entries,
                                      std::size_t num_gadgets);

struct ReferenceSolution {
  std::vector<double> x;          // over V
  std::vector<AuxPair> aux;       // per gadget
  std::vector<double> objective;  // after each sweep
  std::size_t sweeps = 0;
};

struct ReferenceOptions {
  double kkt_tol = 1e-10;
  std::size_t max_sweeps = 2'000'000;
};

// Cyclic exact coordinate minimization of the localized objective over all
// original and auxiliary coordinates, starting from zero. Stops once the
// KKT report is within kkt_tol everywhere. Throws std::invalid_argument on
// oversized input and std::runtime_error when max_sweeps is reached.
ReferenceSolution reference_qp_solver(const Hypergraph& h, const NodeSet& seeds,
                                      const DiffusionConfig& cfg,
                                      const ReferenceOptions& opts = {});

struct KktReport {
  double negative_residual = 0.0;  // max (-g_v)_+
  double excess_residual = 0.0;    // max (g_v - kappa d_v)_+
  double slackness = 0.0;          // max |(kappa d_v - g_v) x_v|
  double aux_residual = 0.0;       // max |r_a|, |r_b|
  double box = 0.0;                // max violation of 0 <= x <= 1

  double worst() const;
};

// `x` is dense over V. When `aux` is empty the auxiliary pairs are rebuilt
// by exact per-gadget minimization.
KktReport kkt_check(const Hypergraph& h, const NodeSet& seeds, const DiffusionConfig& cfg,
                    std::span<const double> x, std::span<const AuxPair> aux = {});

// Node residuals g over V (same conventions as kkt_check).
std::vector<double> residuals(const Hypergraph& h, const NodeSet& seeds,
                              const DiffusionConfig& cfg, std::span<const double> x,
                              std::span<const AuxPair> aux);

// sum_arcs w l((Bx)_+) + kappa gamma sum_V d x, with l(z) = z^p / p and
// the source/sink arcs of weight gamma d.
double objective(const Hypergraph& h, const NodeSet& seeds, const DiffusionConfig& cfg,
                 std::span<const double> x, std::span<const AuxPair> aux);

// Minimizing auxiliary pair of one gadget for fixed node values.
AuxPair gadget_minimizer(std::span<const double> values, double delta, double p);

}  // namespace hyperdiffuse::oracles

#endif  // HYPERDIFFUSE_ORACLES_H_
