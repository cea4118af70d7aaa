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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>
#include <vector>

#include "support/fixtures.h"

namespace hyperdiffuse {
namespace {

using Sparse = std::vector<std::pair<NodeId, double>>;

TEST(Sweepcut, FourNodeExample) {
  const Hypergraph h = testing::four_node();
  const Sparse x{{0, 0.9}, {1, 0.6}};
  const SweepProfile p = sweepcut(h, x);
  EXPECT_EQ(p.order, (std::vector<NodeId>{0, 1}));
  ASSERT_EQ(p.prefix_conductance.size(), 2u);
  EXPECT_DOUBLE_EQ(p.prefix_conductance[0], 1.0);
  EXPECT_DOUBLE_EQ(p.prefix_conductance[1], 2.0 / 3.0);
  EXPECT_EQ(p.best_set, NodeSet({0, 1}, 4));
  EXPECT_DOUBLE_EQ(p.best_conductance, 2.0 / 3.0);
  EXPECT_EQ(p.best_size, 2u);
  EXPECT_DOUBLE_EQ(p.boundary_delta_bar, 1.0);
}

TEST(Sweepcut, SinglePositiveEntry) {
  const Hypergraph h = testing::four_node();
  const Sparse x{{2, 0.3}, {0, 0.0}};
  const SweepProfile p = sweepcut(h, x);
  EXPECT_EQ(p.best_set, NodeSet({2}, 4));
  EXPECT_DOUBLE_EQ(p.best_conductance, set_metrics(h, NodeSet({2}, 4)).conductance);
}

TEST(Sweepcut, TiesBrokenByAscendingId) {
  const Hypergraph h = testing::four_node();
  const Sparse x{{3, 0.5}, {1, 0.5}, {2, 0.7}, {0, 0.5}};
  const SweepProfile p = sweepcut(h, x);
  EXPECT_EQ(p.order, (std::vector<NodeId>{2, 0, 1, 3}));
}

TEST(Sweepcut, FullSupportLastPrefixIsInfinite) {
  const Hypergraph h = testing::four_node();
  const std::vector<double> dense{0.4, 0.3, 0.2, 0.1};
  const SweepProfile p = sweepcut(h, std::span<const double>(dense));
  EXPECT_TRUE(std::isinf(p.prefix_conductance.back()));
  EXPECT_TRUE(std::isfinite(p.best_conductance));
}

TEST(Sweepcut, Errors) {
  const Hypergraph h = testing::four_node();
  EXPECT_THROW(sweepcut(h, Sparse{{0, 0.0}}), std::invalid_argument);
  EXPECT_THROW(sweepcut(h, Sparse{}), std::invalid_argument);
  EXPECT_THROW(sweepcut(h, Sparse{{0, -0.1}, {1, 0.5}}), std::invalid_argument);
  EXPECT_THROW(sweepcut(h, Sparse{{7, 0.1}}), std::invalid_argument);
  EXPECT_THROW(sweepcut(h, Sparse{{1, 0.1}, {1, 0.1}}), std::invalid_argument);
  const std::vector<double> short_dense{0.1};
  EXPECT_THROW(sweepcut(h, std::span<const double>(short_dense)), std::invalid_argument);
}

TEST(Sweepcut, IncrementalPrefixesMatchFromScratch) {
  SplitMix64 rng(97);
  testing::RandomSpec spec;
  spec.min_nodes = 10;
  spec.max_nodes = 50;
  spec.min_edges = 5;
  spec.max_edges = 80;
  spec.max_edge_size = 7;
  spec.deltas = {1.0, 2.0, 3.0};
  spec.extra_gadget_prob = 0.3;
  for (int trial = 0; trial < 40; ++trial) {
    const Hypergraph h = testing::random_hypergraph(rng, spec);
    std::vector<double> x(h.num_nodes());
    for (double& v : x) v = rng.unit() < 0.3 ? 0.0 : std::floor(rng.unit() * 8) / 8.0;
    if (std::all_of(x.begin(), x.end(), [](double v) { return v == 0.0; })) x[0] = 1.0;
    const SweepProfile p = sweepcut(h, std::span<const double>(x));
    std::vector<bool> in(h.num_nodes(), false);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < p.order.size(); ++k) {
      EXPECT_GT(x[p.order[k]], 0.0);
      if (k > 0) {
        EXPECT_TRUE(p.x[k - 1] > p.x[k] || (p.x[k - 1] == p.x[k] && p.order[k - 1] < p.order[k]));
      }
      in[p.order[k]] = true;
      const SetMetrics m = set_metrics(h, in);
      EXPECT_NEAR(p.prefix_cut[k], m.cut, 1e-9);
      EXPECT_NEAR(p.prefix_volume[k], m.volume, 1e-9);
      if (std::isfinite(m.conductance)) {
        EXPECT_NEAR(p.prefix_conductance[k], m.conductance, 1e-9);
      } else {
        EXPECT_TRUE(std::isinf(p.prefix_conductance[k]));
      }
      EXPECT_LE(p.best_conductance, p.prefix_conductance[k]);
      best = std::min(best, p.prefix_conductance[k]);
    }
    EXPECT_EQ(p.best_conductance, best);
    // Earliest minimizing prefix.
    for (std::size_t k = 0; k + 1 < p.best_size; ++k) {
      EXPECT_GT(p.prefix_conductance[k], p.best_conductance);
    }

    // Boundary statistic recomputed from scratch.
    const auto mask = p.best_set.mask(h.num_nodes());
    double delta_bar = 0.0;
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
      std::size_t inside = 0;
      for (NodeId v : h.edge(e)) inside += mask[v] ? 1 : 0;
      if (inside == 0 || inside == h.edge_size(e)) continue;
      for (const GadgetParams& g : h.gadgets(e)) {
        delta_bar = std::max(delta_bar, std::min(g.delta, h.edge_size(e) / 2.0));
      }
    }
    EXPECT_EQ(p.boundary_delta_bar, delta_bar);
  }
}

TEST(Sweepcut, InvariantUnderPositiveRescaling) {
  SplitMix64 rng(101);
  for (int trial = 0; trial < 20; ++trial) {
    const Hypergraph h = testing::random_hypergraph(rng, {});
    std::vector<double> x(h.num_nodes());
    for (double& v : x) v = rng.unit();
    std::vector<double> scaled = x;
    for (double& v : scaled) v *= 0.125;
    const SweepProfile a = sweepcut(h, std::span<const double>(x));
    const SweepProfile b = sweepcut(h, std::span<const double>(scaled));
    EXPECT_EQ(a.order, b.order);
    EXPECT_EQ(a.best_set, b.best_set);
    EXPECT_EQ(a.best_conductance, b.best_conductance);
  }
}

TEST(PrF1Test, Examples) {
  const PrF1 half = prf1(NodeSet({0, 1}, 4), NodeSet({1, 2}, 4));
  EXPECT_DOUBLE_EQ(half.precision, 0.5);
  EXPECT_DOUBLE_EQ(half.recall, 0.5);
  EXPECT_DOUBLE_EQ(half.f1, 0.5);
  const PrF1 same = prf1(NodeSet({0, 3}, 4), NodeSet({0, 3}, 4));
  EXPECT_DOUBLE_EQ(same.f1, 1.0);
  const PrF1 none = prf1(NodeSet({0}, 4), NodeSet({3}, 4));
  EXPECT_EQ(none.precision, 0.0);
  EXPECT_EQ(none.recall, 0.0);
  EXPECT_EQ(none.f1, 0.0);
  const PrF1 empty = prf1(NodeSet({}, 4), NodeSet({3}, 4));
  EXPECT_EQ(empty.f1, 0.0);
}

TEST(ProfileCsv, Format) {
  const Hypergraph h = testing::four_node();
  const SweepProfile p = sweepcut(h, Sparse{{0, 0.5}, {1, 0.25}});
  std::ostringstream out;
  write_profile_csv(out, p);
  EXPECT_EQ(out.str(),
            "rank,node,x,prefix_vol,prefix_cut,prefix_conductance\n"
            "1,1,0.5,1,1,1\n"
            "2,2,0.25,3,2,0.66666666666666663\n");
}

}  // namespace
}  // namespace hyperdiffuse
