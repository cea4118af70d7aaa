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


// Push solvers and sweep on planted two-block hypergraphs.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <map>

#include "hyperdiffuse/lhqd.h"
#include "hyperdiffuse/pnorm.h"
#include "hyperdiffuse/sweepcut.h"
#include "hyperdiffuse/synthgen.h"

namespace hyperdiffuse {
namespace {

const PlantedHypergraph& planted(std::size_t block_size) {
  static std::map<std::size_t, PlantedHypergraph> cache;
  auto it = cache.find(block_size);
  if (it == cache.end()) {
    PlantedOptions o;
    o.blocks = {block_size, block_size};
    o.edges_per_block = 3 * block_size;
    o.min_edge_size = 3;
    o.max_edge_size = 6;
    o.cross_fraction = 0.05;
    o.rng_seed = 42;
    it = cache.emplace(block_size, planted_hypergraph(o)).first;
  }
  return it->second;
}

NodeSet seeds_for(const PlantedHypergraph& p) {
  return sample_seeds(p.graph, p.labels, 0, 2, SeedMode::kUniform, 43);
}

void BM_Solve(benchmark::State& state) {
  const PlantedHypergraph& p = planted(static_cast<std::size_t>(state.range(0)));
  const NodeSet seeds = seeds_for(p);
  DiffusionConfig cfg;
  cfg.kappa = 0.00025;
  std::size_t pushes = 0;
  for (auto _ : state) {
    const DiffusionResult res = solve(p.graph, seeds, cfg);
    pushes = res.ledger.hyperpushes;
    benchmark::DoNotOptimize(res.x.data());
  }
  state.counters["hyperpushes"] = static_cast<double>(pushes);
}
BENCHMARK(BM_Solve)->Arg(200)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond);

void BM_PnormSolve(benchmark::State& state) {
  const PlantedHypergraph& p = planted(200);
  const NodeSet seeds = seeds_for(p);
  DiffusionConfig cfg;
  cfg.kappa = 0.0025;
  cfg.p = static_cast<double>(state.range(0)) / 10.0;
  for (auto _ : state) {
    const DiffusionResult res = pnorm_solve(p.graph, seeds, cfg);
    benchmark::DoNotOptimize(res.x.data());
  }
}
BENCHMARK(BM_PnormSolve)->Arg(14)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_Sweepcut(benchmark::State& state) {
  const PlantedHypergraph& p = planted(static_cast<std::size_t>(state.range(0)));
  DiffusionConfig cfg;
  cfg.kappa = 0.00025;
  const DiffusionResult res = solve(p.graph, seeds_for(p), cfg);
  for (auto _ : state) {
    const SweepProfile prof = sweepcut(p.graph, res.x);
    benchmark::DoNotOptimize(prof.best_conductance);
  }
  state.counters["support"] = static_cast<double>(res.x.size());
}
BENCHMARK(BM_Sweepcut)->Arg(200)->Arg(2000)->Arg(20000)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace hyperdiffuse

BENCHMARK_MAIN();
