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


// hyperdiffuse: command-line driver for local hypergraph clustering.
//
//   hyperdiffuse diffuse --graph g.hgr --seeds s.txt --kappa 0.01 --out run/
//   hyperdiffuse sweep   --graph g.hgr --x run/solution.csv
//   hyperdiffuse eval    --pred run/cluster.txt --truth truth.txt
//   hyperdiffuse gen     --blocks 100,100 --epb 300 --sizes 3:6 --cross 0.05 --rng 7 --out g
//   hyperdiffuse check   --graph small.hgr --seeds s.txt --kappa 0.1
//
// Exit status: 0 success, 1 usage, 2 I/O, 3 non-convergence or failed check.

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <iostream>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "hyperdiffuse/diffusion.h"
#include "hyperdiffuse/hypergraph.h"
#include "hyperdiffuse/lhqd.h"
#include "hyperdiffuse/oracles.h"
#include "hyperdiffuse/pnorm.h"
#include "hyperdiffuse/sweepcut.h"
#include "hyperdiffuse/synthgen.h"
#include "io.h"
#include "json.hpp"

namespace hyperdiffuse::cli {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

enum ExitCode : int { kOk = 0, kUsage = 1, kIo = 2, kFailure = 3 };

struct GraphArgs {
  std::string graph;
  std::string gadgets;
  double delta = 1.0;

  void add(CLI::App* app) {
    app->add_option("--graph", graph, "hypergraph in .hgr format")->required();
    app->add_option("--gadgets", gadgets, "per-hyperedge gadget file (c:delta tokens)");
    app->add_option("--delta", delta, "uniform threshold when --gadgets is absent")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
  }
  Hypergraph load() const { return load_graph(graph, gadgets, delta); }
};

struct SolverArgs {
  DiffusionConfig cfg;

  void add(CLI::App* app, bool kappa_required) {
    cfg.kappa = 0.1;
    auto* kappa = app->add_option(
        "--kappa", cfg.kappa,
        "sparsity in (0, 1); no universal default. Useful starting points are "
        "0.00025 for very large sparse hypergraphs and 0.0025 for mid-size ones");
    if (kappa_required) {
      kappa->required();
    } else {
      kappa->capture_default_str();
    }
    app->add_option("--gamma", cfg.gamma, "locality")->capture_default_str();
    app->add_option("--rho", cfg.rho, "push target fraction in (0, 1)")->capture_default_str();
    app->add_option("--p", cfg.p, "loss exponent in (1, 2]")->capture_default_str();
    app->add_option("--eps", cfg.eps, "bisection width for p != 2")->capture_default_str();
    app->add_option("--max-pushes", cfg.max_pushes, "hyperpush budget")->capture_default_str();
  }
};

// ---------------------------------------------------------------- diffuse

struct DiffuseArgs {
  GraphArgs graph;
  SolverArgs solver;
  std::vector<std::string> seeds;
  std::string out;
  unsigned jobs = 1;
};

struct RunOutput {
  json report;
  bool converged = true;
};

RunOutput diffuse_one(const Hypergraph& h, const DiffusionConfig& cfg, const fs::path& seeds_path,
                      const fs::path& dir) {
  const NodeSet seeds = load_node_set(seeds_path, h.num_nodes());
  const auto start = std::chrono::steady_clock::now();
  const DiffusionResult res = diffuse(h, seeds, cfg);
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  NodeSet cluster;
  std::optional<double> conductance;
  if (!res.x.empty()) {
    const SweepProfile prof = sweepcut(h, res.x);
    cluster = prof.best_set;
    if (std::isfinite(prof.best_conductance)) conductance = prof.best_conductance;
  }

  fs::create_directories(dir);
  {
    std::ofstream out = open_output(dir / "solution.csv");
    write_solution(out, res.x);
  }
  {
    std::ofstream out = open_output(dir / "cluster.txt");
    write_node_set(out, cluster);
  }

  const double vol = seed_volume(h, seeds);
  const bool quadratic = cfg.p == 2.0;
  json r;
  r["seeds"] = seeds_path.string();
  r["num_seeds"] = seeds.size();
  r["seed_volume"] = vol;
  r["gamma"] = cfg.gamma;
  r["kappa"] = cfg.kappa;
  r["rho"] = cfg.rho;
  r["p"] = cfg.p;
  r["delta_max"] = h.max_delta();
  r["converged"] = res.converged;
  r["hyperpushes"] = res.ledger.hyperpushes;
  r["auxpushes"] = res.ledger.auxpushes;
  r["pushed_volume"] = res.ledger.pushed_volume;
  r["ledger_bound"] = quadratic ? quadratic_ledger_bound(cfg, h.max_delta(), vol)
                                : pnorm_ledger_bound(cfg, h.max_delta(), vol);
  r["touched_nodes"] = res.touched_nodes;
  r["support"] = res.x.size();
  r["cluster_size"] = cluster.size();
  r["conductance"] = conductance ? json(*conductance) : json(nullptr);
  r["wall_seconds"] = wall;
  return {std::move(r), res.converged};
}

int run_diffuse(const DiffuseArgs& args) {
  DiffusionConfig cfg = args.solver.cfg;
  cfg.delta = args.graph.delta;
  cfg.validate();
  const Hypergraph h = args.graph.load();
  if (cfg.kappa >= 1.0) {
    std::cerr << "warning: kappa >= 1 leaves no violating node; the solution and cluster are "
                 "empty\n";
  }

  const fs::path out(args.out);
  std::vector<fs::path> dirs;
  std::set<std::string> stems;
  for (const std::string& s : args.seeds) {
    const std::string stem = fs::path(s).stem().string();
    if (args.seeds.size() > 1 && !stems.insert(stem).second) {
      throw std::invalid_argument("seed files share the name '" + stem + "'");
    }
    dirs.push_back(args.seeds.size() == 1 ? out : out / stem);
  }

  std::vector<RunOutput> runs(args.seeds.size());
  std::vector<std::exception_ptr> errors(args.seeds.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < args.seeds.size(); k = next++) {
      try {
        runs[k] = diffuse_one(h, cfg, args.seeds[k], dirs[k]);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  {
    const unsigned threads =
        std::max(1u, std::min<unsigned>(args.jobs, static_cast<unsigned>(args.seeds.size())));
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  fs::create_directories(out);
  std::ofstream report = open_output(out / "report.jsonl");
  bool converged = true;
  for (const RunOutput& run : runs) {
    report << run.report.dump() << '\n';
    converged = converged && run.converged;
  }
  if (!converged) {
    std::cerr << "error: push budget exhausted before convergence (see report.jsonl)\n";
    return kFailure;
  }
  return kOk;
}

// ---------------------------------------------------------------- sweep

struct SweepArgs {
  GraphArgs graph;
  std::string x;
  std::string out;
  std::string cluster;
};

int run_sweep(const SweepArgs& args) {
  const Hypergraph h = args.graph.load();
  const auto x = load_solution(args.x, h.num_nodes());
  const SweepProfile prof = sweepcut(h, x);
  if (args.out.empty() || args.out == "-") {
    write_profile_csv(std::cout, prof);
  } else {
    std::ofstream out = open_output(args.out);
    write_profile_csv(out, prof);
  }
  if (!args.cluster.empty()) {
    std::ofstream out = open_output(args.cluster);
    write_node_set(out, prof.best_set);
  }
  return kOk;
}

// ---------------------------------------------------------------- eval

struct EvalArgs {
  std::string pred;
  std::string truth;
  std::string csv;
  std::string label;
};

int run_eval(const EvalArgs& args) {
  constexpr std::size_t kAnyId = std::numeric_limits<NodeId>::max();
  const NodeSet pred = load_node_set(args.pred, kAnyId);
  const NodeSet truth = load_node_set(args.truth, kAnyId);
  const PrF1 m = prf1(pred, truth);
  std::printf("%.4f %.4f %.4f\n", m.precision, m.recall, m.f1);
  if (!args.csv.empty()) {
    const bool fresh = !fs::exists(args.csv) || fs::file_size(args.csv) == 0;
    std::ofstream out = open_output(args.csv, std::ios::app);
    if (fresh) out << "label,precision,recall,f1\n";
    char row[128];
    std::snprintf(row, sizeof row, "%.4f,%.4f,%.4f", m.precision, m.recall, m.f1);
    out << (args.label.empty() ? args.pred : args.label) << ',' << row << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------- gen

struct GenArgs {
  std::vector<std::size_t> blocks;
  std::size_t epb = 0;
  std::string sizes = "2:2";
  double cross = 0.0;
  std::string pattern = "uniform";
  double delta = 1.0;
  std::uint64_t rng = 0;
  std::string out;
};

int run_gen(const GenArgs& args) {
  PlantedOptions o;
  o.blocks = args.blocks;
  o.edges_per_block = args.epb;
  const auto colon = args.sizes.find(':');
  try {
    if (colon == std::string::npos) {
      o.min_edge_size = o.max_edge_size = std::stoul(args.sizes);
    } else {
      o.min_edge_size = std::stoul(args.sizes.substr(0, colon));
      o.max_edge_size = std::stoul(args.sizes.substr(colon + 1));
    }
  } catch (const std::logic_error&) {
    throw std::invalid_argument("--sizes expects MIN:MAX");
  }
  o.cross_fraction = args.cross;
  o.pattern = args.pattern == "chain" ? CrossPattern::kChain : CrossPattern::kUniform;
  o.delta = args.delta;
  o.rng_seed = args.rng;
  const PlantedHypergraph p = planted_hypergraph(o);
  {
    std::ofstream out = open_output(args.out + ".hgr");
    write_hypergraph(out, p.graph);
  }
  std::ofstream out = open_output(args.out + ".labels");
  write_labels(out, p.labels);
  return kOk;
}

// ---------------------------------------------------------------- check

struct CheckArgs {
  GraphArgs graph;
  SolverArgs solver;
  std::string seeds;
};

int run_check(const CheckArgs& args) {
  DiffusionConfig cfg = args.solver.cfg;
  cfg.validate();
  const Hypergraph h = args.graph.load();
  const NodeSet seeds = load_node_set(args.seeds, h.num_nodes());
  bool ok = true;
  auto line = [&](bool pass, const std::string& what) {
    std::cout << (pass ? "ok   " : "FAIL ") << what << '\n';
    ok = ok && pass;
  };
  auto skip = [](const std::string& what) { std::cout << "skip " << what << '\n'; };

  const DiffusionResult res = diffuse(h, seeds, cfg);
  line(res.converged, "solver converged in " + std::to_string(res.ledger.hyperpushes) +
                          " hyperpushes");
  const double vol = seed_volume(h, seeds);
  const double bound = cfg.p == 2.0 ? quadratic_ledger_bound(cfg, h.max_delta(), vol)
                                    : pnorm_ledger_bound(cfg, h.max_delta(), vol);
  line(res.ledger.pushed_volume <= bound, "pushed volume " +
                                              std::to_string(res.ledger.pushed_volume) +
                                              " within bound " + std::to_string(bound));

  const std::vector<double> x = res.dense(h.num_nodes());
  const auto aux = oracles::aux_from_entries(res.aux, h.num_gadgets());
  const oracles::KktReport kkt = oracles::kkt_check(h, seeds, cfg, x, aux);
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "residual bounds: max(-g)=%.3g max(g-kappa d)=%.3g aux=%.3g box=%.3g",
                kkt.negative_residual, kkt.excess_residual, kkt.aux_residual, kkt.box);
  line(kkt.negative_residual <= 1e-9 && kkt.excess_residual <= 1e-9 &&
           kkt.aux_residual <= 1e-8 && kkt.box <= 1e-12,
       buf);

  if (h.num_nodes() + 2 * h.num_gadgets() <= oracles::kReferenceMaxVariables) {
    const auto ref = oracles::reference_qp_solver(h, seeds, cfg);
    const double f_ref = oracles::objective(h, seeds, cfg, ref.x, ref.aux);
    const double f_push = oracles::objective(h, seeds, cfg, x, aux);
    std::snprintf(buf, sizeof buf, "reference objective %.12g <= push objective %.12g", f_ref,
                  f_push);
    line(f_ref <= f_push + 1e-12 * std::abs(f_push), buf);
  } else {
    skip("reference solver (instance too large)");
  }

  if (h.num_nodes() <= 16 && h.num_gadgets() <= oracles::kCutCheckMaxGadgets) {
    std::size_t bad = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << h.num_nodes()); ++s) {
      std::vector<bool> in(h.num_nodes());
      for (std::size_t v = 0; v < h.num_nodes(); ++v) in[v] = (s >> v & 1U) != 0;
      bad += oracles::cut_preservation_check(h, in).equal ? 0 : 1;
    }
    line(bad == 0, "gadget cuts match hypergraph cuts on all " +
                       std::to_string(std::uint64_t{1} << h.num_nodes()) + " subsets");
  } else {
    skip("cut preservation (needs n <= 16 and at most 8 gadgets)");
  }

  if (h.num_nodes() <= oracles::kBruteMaxNodes) {
    const auto best = oracles::brute_min_conductance(h);
    std::snprintf(buf, sizeof buf, "minimum conductance %.6g over all subsets", best.conductance);
    std::cout << "info " << buf << '\n';
    if (!res.x.empty()) {
      const SweepProfile prof = sweepcut(h, res.x);
      line(prof.best_conductance >= best.conductance - 1e-12,
           "sweep conductance " + std::to_string(prof.best_conductance) +
               " is not below the minimum");
    }
  } else {
    skip("brute-force conductance (n > 20)");
  }
  return ok ? kOk : kFailure;
}

}  // namespace
}  // namespace hyperdiffuse::cli

int main(int argc, char** argv) {
  using namespace hyperdiffuse::cli;
  CLI::App app{"Local clustering and semi-supervised diffusion on hypergraphs"};
  app.require_subcommand(1);

  DiffuseArgs diffuse_args;
  auto* diffuse = app.add_subcommand("diffuse", "solve the localized diffusion and sweep");
  diffuse_args.graph.add(diffuse);
  diffuse_args.solver.add(diffuse, true);
  diffuse->add_option("--seeds", diffuse_args.seeds, "seed node file(s), one run per file")
      ->required()
      ->expected(1, -1);
  diffuse->add_option("--out", diffuse_args.out, "output directory")->required();
  diffuse->add_option("--jobs", diffuse_args.jobs, "concurrent runs over the seed files")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "sweep profile of a solution vector");
  sweep_args.graph.add(sweep);
  sweep->add_option("--x", sweep_args.x, "solution CSV (node_id,x)")->required();
  sweep->add_option("--out", sweep_args.out, "profile CSV (default: standard output)");
  sweep->add_option("--cluster", sweep_args.cluster, "also write the best prefix set");

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "precision, recall and F1 of a predicted set");
  eval->add_option("--pred", eval_args.pred, "predicted node ids")->required();
  eval->add_option("--truth", eval_args.truth, "reference node ids")->required();
  eval->add_option("--csv", eval_args.csv, "append a row to this CSV file");
  eval->add_option("--label", eval_args.label, "row label for --csv (default: --pred path)");

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "planted-cluster hypergraph and labels");
  gen->add_option("--blocks", gen_args.blocks, "block sizes, comma separated")
      ->required()
      ->delimiter(',');
  gen->add_option("--epb", gen_args.epb, "hyperedges per block")->required();
  gen->add_option("--sizes", gen_args.sizes, "hyperedge size range MIN:MAX")
      ->capture_default_str();
  gen->add_option("--cross", gen_args.cross, "fraction of each block's edges that cross")
      ->capture_default_str();
  gen->add_option("--pattern", gen_args.pattern, "partner block of cross edges")
      ->capture_default_str()
      ->check(CLI::IsMember({"uniform", "chain"}));
  gen->add_option("--delta", gen_args.delta, "threshold used to validate the output")
      ->capture_default_str();
  gen->add_option("--rng", gen_args.rng, "generator seed")->required();
  gen->add_option("--out", gen_args.out, "output prefix (.hgr and .labels are appended)")
      ->required();

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "compare the solver against brute-force oracles");
  check_args.graph.add(check);
  check_args.solver.add(check, false);
  check->add_option("--seeds", check_args.seeds, "seed node file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*diffuse) return run_diffuse(diffuse_args);
    if (*sweep) return run_sweep(sweep_args);
    if (*eval) return run_eval(eval_args);
    if (*gen) return run_gen(gen_args);
    if (*check) return run_check(check_args);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const hyperdiffuse::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}
