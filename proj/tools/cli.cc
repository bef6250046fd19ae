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

#include "cli.h"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cdim/connectivity.h"
#include "cdim/error.h"
#include "cdim/families.h"
#include "cdim/graph.h"
#include "cdim/json_io.h"
#include "cdim/reduction.h"
#include "cdim/resolver.h"
#include "cdim/solver.h"

namespace cdim {
namespace {

struct Settings {
  std::string format;
  int threads = 0;
  bool pretty = false;
  std::string input;
};

std::string ReadInput(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kInvalidArgument, "cannot open " + path);
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

Graph LoadGraph(const Settings& s, std::istream& in) {
  const std::string format = s.format.empty() ? "graph6" : s.format;
  if (format == "dimacs") {
    throw Error(ErrorCode::kInvalidArgument,
                "dimacs input is only accepted by reduce and sat");
  }
  const std::string text = ReadInput(s.input, in);
  return format == "graph6" ? ParseGraph6(text) : ParseEdgeList(text);
}

CnfFormula LoadFormula(const Settings& s, std::istream& in, std::ostream& err) {
  if (!s.format.empty() && s.format != "dimacs") {
    throw Error(ErrorCode::kInvalidArgument, "reduce and sat read dimacs input");
  }
  std::vector<std::string> warnings;
  CnfFormula f = ParseDimacs(ReadInput(s.input, in), &warnings);
  for (const auto& w : warnings) err << "warning: " << w << '\n';
  return f;
}

int ParseInt(const std::string& text, const std::string& what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "bad " + what + " '" + text + "'");
  }
  return value;
}

std::vector<int> ParseSet(const std::string& text) {
  std::vector<int> set;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    if (!token.empty()) set.push_back(ParseInt(token, "vertex"));
  }
  return set;
}

void Emit(std::ostream& out, const Json& json, bool pretty) {
  out << (pretty ? json.dump(2) : json.dump()) << '\n';
}

void EmitKappaTable(std::ostream& out, const KappaMatrix& km) {
  out << std::setw(4) << "";
  for (int v = 0; v < km.n(); ++v) out << std::setw(4) << v;
  out << '\n';
  for (int u = 0; u < km.n(); ++u) {
    out << std::setw(4) << u;
    for (int v = 0; v < km.n(); ++v) out << std::setw(4) << km.at(u, v).ToString();
    out << '\n';
  }
}

std::optional<BoundsReport> MaybeBounds(const Graph& g, const SolveOptions& options) {
  if (g.num_vertices() < 2 || !IsConnected(g)) return std::nullopt;
  return LowerBounds(g, options);
}

struct Generated {
  Graph graph;
  std::optional<int> predicted;
  std::string formula;
};

Generated Generate(const std::string& kind, const std::string& param) {
  auto need_param = [&] {
    if (param.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "gen " + kind + " needs a parameter");
    }
  };
  if (kind == "threshold") {
    need_param();
    const ThresholdSequence seq = ThresholdSequence::Parse(param);
    return {ThresholdGraph(seq), ThresholdCdimRouted(seq), "threshold"};
  }
  if (kind == "triangles") {
    need_param();
    const int b = ParseInt(param, "block count");
    return {TriangleChain(b), TriangleChainCdim(b), "triangle-chain"};
  }
  if (kind == "house") {
    return {StandardGraph(kind),
            ThresholdCdim(ThresholdSequence({1, 1, 0, 1, 1})), "threshold"};
  }
  if (kind == "figure1" || kind == "figure5") {
    return {StandardGraph(kind), std::nullopt, ""};
  }
  if (kind == "path" || kind == "cycle" || kind == "complete" || kind == "star") {
    need_param();
    const int n = ParseInt(param, "vertex count");
    Graph g = StandardGraph(kind, n);
    return {g, n >= 2 ? n - 1 : 0, "uniformly-connected"};
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown generator '" + kind + "'");
}

void WriteFile(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
  file << content;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::istream& in,
           std::ostream& out, std::ostream& err) {
  CLI::App app{"Connectivity dimension toolkit", "cdim"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Settings s;
  app.add_option("--format", s.format, "graph6 | edgelist | dimacs")
      ->check(CLI::IsMember({"graph6", "edgelist", "dimacs"}));
  app.add_option("--threads", s.threads, "worker threads, 0 = all cores");
  app.add_flag("--pretty", s.pretty, "indented output, tables where useful");

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", s.input, "input file (default: standard input)");
  };

  CLI::App* kappa = app.add_subcommand("kappa", "local connectivity matrix");
  add_input(kappa);

  std::string set_text;
  CLI::App* check = app.add_subcommand("check", "test a landmark set");
  check->add_option("--set", set_text, "comma separated vertices")->required();
  add_input(check);

  std::string method = "exact";
  std::int64_t budget = SolveOptions{}.node_budget;
  CLI::App* cdim = app.add_subcommand("cdim", "connectivity dimension");
  cdim->add_option("--method", method)
      ->check(CLI::IsMember({"exact", "greedy", "decompose"}));
  cdim->add_option("--budget", budget, "search node budget");
  add_input(cdim);

  CLI::App* mdim = app.add_subcommand("mdim", "metric dimension");
  mdim->add_option("--budget", budget, "search node budget");
  add_input(mdim);

  CLI::App* bounds = app.add_subcommand("bounds", "lower bounds and greedy upper bound");
  add_input(bounds);

  CLI::App* blocks = app.add_subcommand("blocks", "block-cut tree");
  add_input(blocks);

  std::string gen_kind;
  std::string gen_param;
  bool as_json = false;
  std::string sidecar;
  CLI::App* gen = app.add_subcommand("gen", "generate a named graph as graph6");
  gen->add_option("kind", gen_kind,
                  "threshold | triangles | house | figure1 | figure5 | path | "
                  "cycle | complete | star")
      ->required();
  gen->add_option("parameter", gen_param, "bits, block count or vertex count");
  gen->add_flag("--json", as_json, "print graph6 and metadata as JSON");
  gen->add_option("--sidecar", sidecar, "also write metadata JSON to this file");

  std::string map_path;
  CLI::App* reduce = app.add_subcommand("reduce", "3-CNF to gadget graph");
  reduce->add_flag("--json", as_json, "print graph6 and gadget map as JSON");
  reduce->add_option("--map", map_path, "also write the gadget map to this file");
  add_input(reduce);

  CLI::App* sat = app.add_subcommand("sat", "decide 3-CNF via the gadget graph");
  add_input(sat);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  SolveOptions options;
  options.threads = s.threads;
  options.node_budget = budget;

  try {
    if (kappa->parsed()) {
      const KappaMatrix km = ComputeKappaMatrix(LoadGraph(s, in), s.threads);
      if (s.pretty) {
        EmitKappaTable(out, km);
      } else {
        Emit(out, ToJson(km), false);
      }
    } else if (check->parsed()) {
      const Graph g = LoadGraph(s, in);
      const std::vector<int> set = ParseSet(set_text);
      const KappaMatrix km = ComputeKappaMatrix(g, s.threads);
      const ResolveVerdict verdict = IsResolving(km, set);
      Json reps = Json::array();
      for (int v = 0; v < g.num_vertices(); ++v) {
        reps.push_back(ToJson(RepresentationOf(km, v, set)));
      }
      Json result;
      result["set"] = set;
      result["resolving"] = verdict.resolving;
      result["witness"] = verdict.witness
                              ? Json::array({verdict.witness->first, verdict.witness->second})
                              : Json(nullptr);
      result["representations"] = std::move(reps);
      Emit(out, result, s.pretty);
    } else if (cdim->parsed()) {
      const Graph g = LoadGraph(s, in);
      DimensionResult result = method == "greedy"      ? CdimGreedy(g, options)
                               : method == "decompose" ? CdimDecompose(g, options)
                                                       : CdimExact(g, options);
      Emit(out, ToJson(result, MaybeBounds(g, options)), s.pretty);
      if (!result.conclusive) return kExitInconclusive;
    } else if (mdim->parsed()) {
      const DimensionResult result = MdimExact(LoadGraph(s, in), options);
      Emit(out, ToJson(result), s.pretty);
      if (!result.conclusive) return kExitInconclusive;
    } else if (bounds->parsed()) {
      Emit(out, ToJson(LowerBounds(LoadGraph(s, in), options)), s.pretty);
    } else if (blocks->parsed()) {
      const Graph g = LoadGraph(s, in);
      Json result = ToJson(ComputeBlockCutTree(g));
      Json bridges = Json::array();
      for (const Edge& e : Bridges(g)) bridges.push_back({e.u, e.v});
      result["bridges"] = std::move(bridges);
      Emit(out, result, s.pretty);
    } else if (gen->parsed()) {
      const Generated generated = Generate(gen_kind, gen_param);
      Json meta;
      meta["kind"] = gen_kind;
      meta["parameter"] = gen_param;
      meta["n"] = generated.graph.num_vertices();
      meta["edges"] = generated.graph.num_edges();
      meta["graph6"] = ToGraph6(generated.graph);
      meta["predicted_cdim"] =
          generated.predicted ? Json(*generated.predicted) : Json(nullptr);
      meta["formula"] =
          generated.formula.empty() ? Json(nullptr) : Json(generated.formula);
      if (!sidecar.empty()) WriteFile(sidecar, meta.dump(2) + "\n");
      if (as_json) {
        Emit(out, meta, s.pretty);
      } else {
        out << ToGraph6(generated.graph) << '\n';
      }
    } else if (reduce->parsed()) {
      const Reduction r = BuildReduction(LoadFormula(s, in, err));
      const Json map = ToJson(r.map);
      if (!map_path.empty()) WriteFile(map_path, map.dump(2) + "\n");
      if (as_json) {
        Emit(out,
             {{"graph6", ToGraph6(r.graph)},
              {"num_vertices", r.graph.num_vertices()},
              {"num_edges", r.graph.num_edges()},
              {"map", map}},
             s.pretty);
      } else {
        out << ToGraph6(r.graph) << '\n';
      }
    } else if (sat->parsed()) {
      Emit(out, ToJson(DecideSat(LoadFormula(s, in, err), s.threads)), s.pretty);
    }
  } catch (const FormatError& e) {
    err << "error: " << e.what() << " (position " << e.offset() << ")\n";
    return kExitInputError;
  } catch (const Error& e) {
    err << "error: " << ErrorCodeName(e.code()) << ": " << e.what() << '\n';
    return e.code() == ErrorCode::kInconclusive ? kExitInconclusive
                                                : kExitInputError;
  }
  return kExitOk;
}

}  // namespace cdim
