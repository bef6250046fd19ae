// Copyright 2026 The cdim Authors.
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

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.h"
#include "gtest/gtest.h"
#include "json.hpp"

namespace cdim {
namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome Invoke(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  Outcome o;
  o.code = RunCli(args, in, out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

std::string Gen(const std::vector<std::string>& args) {
  std::vector<std::string> full = {"gen"};
  full.insert(full.end(), args.begin(), args.end());
  const Outcome o = Invoke(full);
  EXPECT_EQ(o.code, 0) << o.err;
  return o.out;
}

nlohmann::json Json(const Outcome& o) { return nlohmann::json::parse(o.out); }

TEST(CliTest, CdimOnFigureOne) {
  const Outcome o = Invoke({"cdim", "--method", "exact"}, Gen({"figure1"}));
  ASSERT_EQ(o.code, 0) << o.err;
  const auto j = Json(o);
  EXPECT_EQ(j["value"], 2);
  EXPECT_EQ(j["method"], "exact");
  EXPECT_EQ(j["conclusive"], true);
  EXPECT_TRUE(j["bounds"].contains("best_lower"));
}

TEST(CliTest, CheckOnFigureOne) {
  const Outcome o = Invoke({"check", "--set", "2,7"}, Gen({"figure1"}));
  ASSERT_EQ(o.code, 0) << o.err;
  const auto j = Json(o);
  EXPECT_EQ(j["resolving"], true);
  EXPECT_EQ(j["representations"][7]["representation"][1], "inf");

  const auto bad = Json(Invoke({"check", "--set", "0,3,7"}, Gen({"figure1"})));
  EXPECT_EQ(bad["resolving"], false);
  EXPECT_EQ(bad["witness"], nlohmann::json::array({1, 2}));
}

TEST(CliTest, GenTrianglesPipeline) {
  const auto j = Json(Invoke({"cdim"}, Gen({"triangles", "6"})));
  EXPECT_EQ(j["value"], 4);
}

TEST(CliTest, GenRoundTripMatchesPredictions) {
  const std::vector<std::vector<std::string>> fixtures = {
      {"threshold", "1,1,0,1,1"}, {"threshold", "0,1,0,1,0,1"},
      {"threshold", "1,1,0,0"},   {"triangles", "5"},
      {"house"},                  {"path", "6"},
      {"cycle", "6"},             {"complete", "5"},
      {"star", "5"}};
  for (const auto& args : fixtures) {
    std::vector<std::string> gen_args = args;
    gen_args.push_back("--json");
    const auto meta = nlohmann::json::parse(Gen(gen_args));
    const auto result = Json(Invoke({"cdim", "--method", "exact"}, Gen(args)));
    EXPECT_EQ(result["value"], meta["predicted_cdim"]) << args[0];
  }
}

TEST(CliTest, SidecarAndMapFiles) {
  const std::string path = ::testing::TempDir() + "cdim_sidecar.json";
  const std::string g6 = Gen({"triangles", "6", "--sidecar", path});
  std::ifstream file(path);
  const auto meta = nlohmann::json::parse(file);
  EXPECT_EQ(meta["predicted_cdim"], 4);
  EXPECT_EQ(meta["graph6"].get<std::string>() + "\n", g6);
  std::remove(path.c_str());

  const std::string map_path = ::testing::TempDir() + "cdim_map.json";
  const Outcome r = Invoke({"reduce", "--map", map_path}, "p cnf 3 1\n1 2 -3 0\n");
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream map_file(map_path);
  const auto map = nlohmann::json::parse(map_file);
  EXPECT_EQ(map["num_vertices"], 21);
  std::remove(map_path.c_str());
  const auto kappa = Json(Invoke({"kappa"}, r.out));
  EXPECT_EQ(kappa["n"], 21);
}

TEST(CliTest, SatAndReduce) {
  const auto sat = Json(Invoke({"sat"}, "p cnf 3 2\n1 2 -3 0\n-1 2 -3 0\n"));
  EXPECT_EQ(sat["status"], "sat");
  EXPECT_EQ(sat["graph_vertices"], 27);
  EXPECT_EQ(sat["normalization_assumed"], true);
  const auto reduced = Json(Invoke({"reduce", "--json"}, "p cnf 3 1\n1 2 -3 0\n"));
  EXPECT_EQ(reduced["num_edges"], 48);
}

TEST(CliTest, OtherSubcommands) {
  const std::string fig1 = Gen({"figure1"});
  EXPECT_EQ(Json(Invoke({"kappa"}, fig1))["kappa"][0][0], "inf");
  EXPECT_EQ(Json(Invoke({"blocks"}, fig1))["block_count"], 3);
  EXPECT_EQ(Json(Invoke({"bounds"}, fig1))["blocks_bound"], 2);
  EXPECT_EQ(Json(Invoke({"mdim"}, Gen({"path", "10"})))["value"], 1);
  EXPECT_EQ(Json(Invoke({"cdim", "--method", "greedy"}, fig1))["method"], "greedy-upper");
  EXPECT_EQ(Json(Invoke({"cdim", "--method", "decompose"}, Gen({"figure5"})))["value"], 7);
  const Outcome edgelist =
      Invoke({"--format", "edgelist", "cdim"}, "n 3\n0 1\n1 2\n");
  EXPECT_EQ(Json(edgelist)["value"], 2);
  const Outcome pretty = Invoke({"kappa", "--pretty"}, Gen({"path", "3"}));
  EXPECT_EQ(pretty.code, 0);
  EXPECT_NE(pretty.out.find("inf"), std::string::npos);
}

TEST(CliTest, ExitCodes) {
  EXPECT_EQ(Invoke({"frobnicate"}).code, 1);
  EXPECT_EQ(Invoke({"cdim", "--bogus"}, "A_").code, 1);
  const Outcome malformed = Invoke({"cdim"}, "A_ garbage");
  EXPECT_EQ(malformed.code, 1);
  EXPECT_EQ(std::count(malformed.err.begin(), malformed.err.end(), '\n'), 1);
  EXPECT_EQ(Invoke({"--format", "dimacs", "cdim"}, "A_").code, 1);
  EXPECT_EQ(Invoke({"--format", "graph6", "sat"}, "p cnf 3 1\n1 2 3 0\n").code, 1);
  EXPECT_EQ(Invoke({"sat"}, "p cnf 3 1\n1 1 2 0\n").code, 1);
  EXPECT_EQ(Invoke({"gen", "wheel", "5"}).code, 1);
  EXPECT_EQ(Invoke({"blocks"}, "A?").code, 1);
  const Outcome budget = Invoke({"cdim", "--budget", "1"}, Gen({"cycle", "12"}));
  EXPECT_EQ(budget.code, 2);
  EXPECT_EQ(Json(budget)["conclusive"], false);
  EXPECT_EQ(Invoke({"--help"}).code, 0);
}

TEST(CliTest, OutputIsDeterministicAcrossThreadCounts) {
  const std::string g = Gen({"threshold", "0,1,0,1,0,1,0,1"});
  const Outcome one = Invoke({"--threads", "1", "cdim"}, g);
  const Outcome four = Invoke({"--threads", "4", "cdim"}, g);
  EXPECT_EQ(one.out, four.out);
  EXPECT_EQ(one.out, Invoke({"--threads", "1", "cdim"}, g).out);
}

}  // namespace
}  // namespace cdim
