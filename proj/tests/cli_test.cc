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


// Runs the hyperdiffuse binary and compares its files with the same
// pipeline composed directly from the library.

#include <sys/wait.h>

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hyperdiffuse/diffusion.h"
#include "hyperdiffuse/hypergraph.h"
#include "hyperdiffuse/lhqd.h"
#include "hyperdiffuse/pnorm.h"
#include "hyperdiffuse/sweepcut.h"
#include "hyperdiffuse/synthgen.h"
#include "json.hpp"

namespace hyperdiffuse {
namespace {

namespace fs = std::filesystem;

const fs::path kData = HYPERDIFFUSE_TEST_DATA;

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Invocation {
  int status = -1;
  std::string out;
  std::string err;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() /
           (std::string("hyperdiffuse_cli_") + info->test_suite_name() + "_" + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  Invocation run(const std::string& args) const {
    const std::string cmd = std::string("\"") + HYPERDIFFUSE_CLI_PATH + "\" " + args + " > \"" +
                            (dir_ / "stdout").string() + "\" 2> \"" +
                            (dir_ / "stderr").string() + "\"";
    const int raw = std::system(cmd.c_str());
    Invocation r;
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    r.out = slurp(dir_ / "stdout");
    r.err = slurp(dir_ / "stderr");
    return r;
  }

  std::string data(const std::string& name) const { return "\"" + (kData / name).string() + "\""; }
  std::string tmp(const std::string& name) const { return "\"" + (dir_ / name).string() + "\""; }

  fs::path dir_;
};

Hypergraph load(const std::string& name) {
  std::ifstream in(kData / name);
  return parse_hypergraph(in);
}

std::vector<std::pair<NodeId, double>> read_solution(const fs::path& path) {
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "node_id,x");
  std::vector<std::pair<NodeId, double>> x;
  while (std::getline(in, line)) {
    const auto comma = line.find(',');
    x.emplace_back(static_cast<NodeId>(std::stoul(line.substr(0, comma)) - 1),
                   std::stod(line.substr(comma + 1)));
  }
  std::sort(x.begin(), x.end());
  return x;
}

std::string node_lines(const NodeSet& s) {
  std::string out;
  for (NodeId v : s) out += std::to_string(v + 1) + "\n";
  return out;
}

TEST_F(CliTest, DiffuseMatchesLibraryComposition) {
  const Invocation r = run("diffuse --graph " + data("triangle.hgr") + " --seeds " +
                    data("triangle_seeds.txt") +
                    " --gamma 0.1 --kappa 0.1 --rho 0.5 --delta 1 --out " + tmp("run"));
  ASSERT_EQ(r.status, 0) << r.err;

  const Hypergraph h = load("triangle.hgr");
  DiffusionConfig cfg;
  cfg.kappa = 0.1;
  const NodeSet seeds({0}, 3);
  const DiffusionResult res = solve(h, seeds, cfg);
  EXPECT_EQ(read_solution(dir_ / "run" / "solution.csv"), res.x);
  EXPECT_EQ(slurp(dir_ / "run" / "cluster.txt"), node_lines(sweepcut(h, res.x).best_set));

  std::ifstream report(dir_ / "run" / "report.jsonl");
  std::string line;
  ASSERT_TRUE(std::getline(report, line));
  const auto j = nlohmann::json::parse(line);
  EXPECT_EQ(j["hyperpushes"].get<std::size_t>(), res.ledger.hyperpushes);
  EXPECT_EQ(j["pushed_volume"].get<double>(), res.ledger.pushed_volume);
  EXPECT_DOUBLE_EQ(j["ledger_bound"].get<double>(), (0.01 + 1.0) * 1.0 / (0.01 * 0.5));
  EXPECT_TRUE(j["converged"].get<bool>());
  EXPECT_GE(j["wall_seconds"].get<double>(), 0.0);
  EXPECT_EQ(j["conductance"].get<double>(), sweepcut(h, res.x).best_conductance);
  EXPECT_FALSE(std::getline(report, line));
}

TEST_F(CliTest, SolutionIsSortedDescending) {
  ASSERT_EQ(run("diffuse --graph " + data("path.hgr") + " --seeds " + data("path_seed_a.txt") +
                " --kappa 0.01 --out " + tmp("run"))
                .status,
            0);
  std::ifstream in(dir_ / "run" / "solution.csv");
  std::string line;
  std::getline(in, line);
  double prev = 2.0;
  while (std::getline(in, line)) {
    const double x = std::stod(line.substr(line.find(',') + 1));
    EXPECT_GT(x, 0.0);
    EXPECT_LE(x, prev);
    prev = x;
  }
}

TEST_F(CliTest, PnormFlagRoutesToPnormSolver) {
  const Invocation r = run("diffuse --graph " + data("triangle.hgr") + " --seeds " +
                    data("triangle_seeds.txt") + " --kappa 0.1 --p 1.4 --out " + tmp("run"));
  ASSERT_EQ(r.status, 0) << r.err;
  DiffusionConfig cfg;
  cfg.kappa = 0.1;
  cfg.p = 1.4;
  const DiffusionResult res = pnorm_solve(load("triangle.hgr"), NodeSet({0}, 3), cfg);
  EXPECT_EQ(read_solution(dir_ / "run" / "solution.csv"), res.x);
  const auto j = nlohmann::json::parse(slurp(dir_ / "run" / "report.jsonl"));
  EXPECT_EQ(j["p"].get<double>(), 1.4);
  EXPECT_EQ(j["ledger_bound"].get<double>(), pnorm_ledger_bound(cfg, 1.0, 1.0));
}

TEST_F(CliTest, KappaOneWarnsAndWritesEmptyCluster) {
  const Invocation r = run("diffuse --graph " + data("triangle.hgr") + " --seeds " +
                    data("triangle_seeds.txt") + " --kappa 1.0 --out " + tmp("run"));
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.err.find("warning"), std::string::npos);
  EXPECT_EQ(slurp(dir_ / "run" / "cluster.txt"), "");
  EXPECT_EQ(slurp(dir_ / "run" / "solution.csv"), "node_id,x\n");
}

TEST_F(CliTest, SeedFilesFanOutAcrossJobs) {
  const Invocation r = run("diffuse --graph " + data("path.hgr") + " --seeds " +
                    data("path_seed_a.txt") + " " + data("path_seed_b.txt") +
                    " --kappa 0.01 --jobs 2 --out " + tmp("run"));
  ASSERT_EQ(r.status, 0) << r.err;
  const Hypergraph h = load("path.hgr");
  DiffusionConfig cfg;
  cfg.kappa = 0.01;
  EXPECT_EQ(read_solution(dir_ / "run" / "path_seed_a" / "solution.csv"),
            solve(h, NodeSet({0}, 6), cfg).x);
  EXPECT_EQ(read_solution(dir_ / "run" / "path_seed_b" / "solution.csv"),
            solve(h, NodeSet({5}, 6), cfg).x);
  std::ifstream report(dir_ / "run" / "report.jsonl");
  std::string first;
  std::string second;
  std::getline(report, first);
  std::getline(report, second);
  EXPECT_NE(nlohmann::json::parse(first)["seeds"].get<std::string>().find("path_seed_a"),
            std::string::npos);
  EXPECT_NE(nlohmann::json::parse(second)["seeds"].get<std::string>().find("path_seed_b"),
            std::string::npos);
}

TEST_F(CliTest, NonConvergenceExitsThreeWithPartialReport) {
  const Invocation r = run("diffuse --graph " + data("triangle.hgr") + " --seeds " +
                    data("triangle_seeds.txt") + " --kappa 0.1 --max-pushes 2 --out " +
                    tmp("run"));
  EXPECT_EQ(r.status, 3);
  const auto j = nlohmann::json::parse(slurp(dir_ / "run" / "report.jsonl"));
  EXPECT_FALSE(j["converged"].get<bool>());
  EXPECT_EQ(j["hyperpushes"].get<std::size_t>(), 2u);
}

TEST_F(CliTest, GadgetSidecarIsUsed) {
  const Invocation r = run("diffuse --graph " + data("four_node.hgr") + " --gadgets " +
                    data("four_node.gadgets") + " --seeds " + data("four_node_seeds.txt") +
                    " --kappa 0.05 --out " + tmp("run"));
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = nlohmann::json::parse(slurp(dir_ / "run" / "report.jsonl"));
  EXPECT_EQ(j["delta_max"].get<double>(), 2.0);
}

TEST_F(CliTest, EvalExamples) {
  Invocation r = run("eval --pred " + data("pred.txt") + " --truth " + data("truth.txt"));
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "0.5000 0.5000 0.5000\n");
  r = run("eval --pred " + data("truth.txt") + " --truth " + data("truth.txt"));
  EXPECT_EQ(r.out, "1.0000 1.0000 1.0000\n");
  std::ofstream(dir_ / "empty.txt").close();
  r = run("eval --pred " + tmp("empty.txt") + " --truth " + data("truth.txt"));
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "0.0000 0.0000 0.0000\n");
}

TEST_F(CliTest, EvalAppendsCsvRows) {
  ASSERT_EQ(run("eval --pred " + data("pred.txt") + " --truth " + data("truth.txt") +
                " --csv " + tmp("m.csv") + " --label first")
                .status,
            0);
  ASSERT_EQ(run("eval --pred " + data("truth.txt") + " --truth " + data("truth.txt") +
                " --csv " + tmp("m.csv") + " --label second")
                .status,
            0);
  EXPECT_EQ(slurp(dir_ / "m.csv"),
            "label,precision,recall,f1\nfirst,0.5000,0.5000,0.5000\nsecond,1.0000,1.0000,1.0000\n");
}

TEST_F(CliTest, GenIsDeterministicAndMatchesLibrary) {
  const std::string args = "gen --blocks 100,100 --epb 300 --sizes 3:6 --cross 0.05 --rng 7";
  ASSERT_EQ(run(args + " --out " + tmp("a")).status, 0);
  ASSERT_EQ(run(args + " --out " + tmp("b")).status, 0);
  EXPECT_EQ(slurp(dir_ / "a.hgr"), slurp(dir_ / "b.hgr"));
  EXPECT_EQ(slurp(dir_ / "a.labels"), slurp(dir_ / "b.labels"));

  PlantedOptions o;
  o.blocks = {100, 100};
  o.edges_per_block = 300;
  o.min_edge_size = 3;
  o.max_edge_size = 6;
  o.cross_fraction = 0.05;
  o.rng_seed = 7;
  const PlantedHypergraph p = planted_hypergraph(o);
  std::ostringstream hgr;
  write_hypergraph(hgr, p.graph);
  std::ostringstream labels;
  write_labels(labels, p.labels);
  EXPECT_EQ(slurp(dir_ / "a.hgr"), hgr.str());
  EXPECT_EQ(slurp(dir_ / "a.labels"), labels.str());
}

TEST_F(CliTest, GenRejectsInfeasibleParameters) {
  const Invocation r = run("gen --blocks 4,4 --epb 10 --sizes 3:6 --rng 1 --out " + tmp("g"));
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.err.find("error"), std::string::npos);
}

TEST_F(CliTest, SweepMatchesLibraryProfile) {
  const Invocation r =
      run("sweep --graph " + data("four_node.hgr") + " --x " + data("four_node_x.csv") +
          " --delta 1 --out " + tmp("profile.csv") + " --cluster " + tmp("best.txt"));
  ASSERT_EQ(r.status, 0) << r.err;
  const Hypergraph h = load("four_node.hgr");
  const std::vector<std::pair<NodeId, double>> x{{0, 0.5}, {1, 0.25}};
  std::ostringstream expected;
  write_profile_csv(expected, sweepcut(h, x));
  EXPECT_EQ(slurp(dir_ / "profile.csv"), expected.str());
  EXPECT_EQ(slurp(dir_ / "profile.csv"),
            "rank,node,x,prefix_vol,prefix_cut,prefix_conductance\n"
            "1,1,0.5,1,1,1\n2,2,0.25,3,2,0.66666666666666663\n");
  EXPECT_EQ(slurp(dir_ / "best.txt"), "1\n2\n");
}

TEST_F(CliTest, UsageErrorsExitOne) {
  EXPECT_EQ(run("sweep --x " + data("four_node_x.csv")).status, 1);
  EXPECT_EQ(run("diffuse --graph " + data("triangle.hgr") + " --seeds " +
                data("triangle_seeds.txt") + " --out " + tmp("run"))
                .status,
            1);
  EXPECT_EQ(run("").status, 1);
  EXPECT_EQ(run("--help").status, 0);
}

TEST_F(CliTest, IoErrorsExitTwo) {
  EXPECT_EQ(run("sweep --graph " + tmp("missing.hgr") + " --x " + data("four_node_x.csv"))
                .status,
            2);
  const Invocation bad = run("sweep --graph " + data("bad.hgr") + " --x " + data("four_node_x.csv"));
  EXPECT_EQ(bad.status, 2);
  EXPECT_NE(bad.err.find("line 2"), std::string::npos);
  EXPECT_EQ(run("eval --pred " + tmp("missing.txt") + " --truth " + data("truth.txt")).status,
            2);
}

TEST_F(CliTest, CheckPassesOnSmallInstance) {
  const Invocation r = run("check --graph " + data("four_node.hgr") + " --seeds " +
                    data("four_node_seeds.txt") + " --kappa 0.05");
  EXPECT_EQ(r.status, 0) << r.out << r.err;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  EXPECT_NE(r.out.find("ok   gadget cuts match"), std::string::npos);
}

}  // namespace
}  // namespace hyperdiffuse
