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

#include "cdim/reduction.h"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <string>

#include "cdim/error.h"
#include "cdim/resolver.h"

namespace cdim {
namespace {

constexpr int kVariableSlots = 5;
constexpr int kClauseSlots = 6;

std::string ClauseProblem(const std::vector<Literal>& clause) {
  if (clause.size() != 3) {
    return "has " + std::to_string(clause.size()) + " literals, expected 3";
  }
  for (int a = 0; a < 3; ++a) {
    for (int b = a + 1; b < 3; ++b) {
      if (clause[a].variable != clause[b].variable) continue;
      return clause[a].positive == clause[b].positive
                 ? "repeats a variable"
                 : "is tautological";
    }
  }
  return "";
}

void AddEdge(std::vector<Edge>& edges, int u, int v) { edges.push_back({u, v}); }

std::vector<int> Candidate(const GadgetMap& map,
                           const std::vector<bool>& assignment) {
  std::vector<int> set;
  for (int j = 0; j < map.num_clauses(); ++j) {
    set.push_back(map.clause_vertex(j, 4));
    set.push_back(map.clause_vertex(j, 5));
  }
  for (int i = 0; i < map.num_variables(); ++i) {
    set.push_back(map.var_vertex(i, 5));
    set.push_back(map.var_vertex(i, assignment[i] ? 1 : 2));
  }
  std::sort(set.begin(), set.end());
  return set;
}

KappaPrediction Exact(int k) {
  return {KappaPrediction::Kind::kExact, KappaValue::Finite(k)};
}

}  // namespace

void ValidateFormula(const CnfFormula& f) {
  if (f.clauses.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "formula has no clauses");
  }
  std::vector<char> used(f.num_variables, 0);
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    const Clause& c = f.clauses[j];
    for (const Literal& lit : c) {
      if (lit.variable < 0 || lit.variable >= f.num_variables) {
        throw Error(ErrorCode::kInvalidArgument,
                    "clause " + std::to_string(j) + " uses an unknown variable");
      }
      used[lit.variable] = 1;
    }
    const std::string problem = ClauseProblem({c.begin(), c.end()});
    if (!problem.empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "clause " + std::to_string(j) + " " + problem);
    }
  }
  for (int i = 0; i < f.num_variables; ++i) {
    if (!used[i]) {
      throw Error(ErrorCode::kInvalidArgument,
                  "variable " + std::to_string(i + 1) + " occurs in no clause");
    }
  }
}

CnfFormula ParseDimacs(std::string_view text,
                       std::vector<std::string>* warnings) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  long declared_vars = -1;
  long declared_clauses = -1;
  std::vector<std::vector<Literal>> clauses;
  std::vector<std::size_t> clause_lines;
  std::vector<Literal> current;

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first) || first[0] == 'c') continue;
    if (first == "%") break;
    if (first == "p") {
      std::string kind;
      if (declared_vars >= 0 || !(tokens >> kind >> declared_vars >> declared_clauses) ||
          kind != "cnf" || declared_vars < 0 || declared_clauses < 0) {
        throw FormatError(line_no, "bad or repeated 'p cnf <vars> <clauses>' header");
      }
      continue;
    }
    if (declared_vars < 0) throw FormatError(line_no, "clause before header");
    tokens.clear();
    tokens.seekg(0);
    std::string token;
    while (tokens >> token) {
      char* end = nullptr;
      const long lit = std::strtol(token.c_str(), &end, 10);
      if (*end != '\0') throw FormatError(line_no, "bad literal '" + token + "'");
      if (lit == 0) {
        clauses.push_back(current);
        clause_lines.push_back(line_no);
        current.clear();
        continue;
      }
      if (std::labs(lit) > declared_vars) {
        throw FormatError(line_no, "literal " + token + " exceeds the declared variables");
      }
      current.push_back({static_cast<int>(std::labs(lit)) - 1, lit > 0});
    }
  }
  if (declared_vars < 0) throw FormatError(line_no, "missing 'p cnf' header");
  if (!current.empty()) throw FormatError(line_no, "last clause lacks a terminating 0");
  if (static_cast<long>(clauses.size()) != declared_clauses) {
    throw FormatError(line_no, "header declares " + std::to_string(declared_clauses) +
                                   " clauses, found " + std::to_string(clauses.size()));
  }
  for (std::size_t j = 0; j < clauses.size(); ++j) {
    const std::string problem = ClauseProblem(clauses[j]);
    if (!problem.empty()) {
      throw FormatError(clause_lines[j],
                        "clause " + std::to_string(j + 1) + " " + problem);
    }
  }
  if (clauses.empty()) throw FormatError(line_no, "formula has no clauses");

  std::vector<int> renumber(declared_vars, -1);
  for (const auto& clause : clauses) {
    for (const Literal& lit : clause) renumber[lit.variable] = 0;
  }
  int next = 0;
  for (long v = 0; v < declared_vars; ++v) {
    if (renumber[v] == 0) {
      renumber[v] = next++;
    } else if (warnings != nullptr) {
      warnings->push_back("variable " + std::to_string(v + 1) +
                          " occurs in no clause and was dropped");
    }
  }
  CnfFormula f;
  f.num_variables = next;
  for (const auto& clause : clauses) {
    Clause c;
    for (int k = 0; k < 3; ++k) {
      c[k] = {renumber[clause[k].variable], clause[k].positive};
    }
    f.clauses.push_back(c);
  }
  return f;
}

bool Satisfies(const CnfFormula& f, const std::vector<bool>& assignment) {
  if (static_cast<int>(assignment.size()) != f.num_variables) {
    throw Error(ErrorCode::kInvalidArgument, "assignment has the wrong length");
  }
  return std::all_of(f.clauses.begin(), f.clauses.end(), [&](const Clause& c) {
    return std::any_of(c.begin(), c.end(), [&](const Literal& lit) {
      return assignment[lit.variable] == lit.positive;
    });
  });
}

GadgetMap::GadgetMap(const CnfFormula& f)
    : n_(f.num_variables),
      m_(static_cast<int>(f.clauses.size())),
      alpha_(f.num_variables, 0),
      beta_(f.num_variables, 0),
      signs_(static_cast<std::size_t>(m_) * n_, 0) {
  ValidateFormula(f);
  for (int j = 0; j < m_; ++j) {
    for (const Literal& lit : f.clauses[j]) {
      ++(lit.positive ? alpha_ : beta_)[lit.variable];
      signs_[j * n_ + lit.variable] = lit.positive ? 1 : -1;
    }
  }
}

int GadgetMap::var_vertex(int i, int a) const {
  if (i < 0 || i >= n_ || a < 1 || a > kVariableSlots) {
    throw Error(ErrorCode::kInvalidArgument, "no such variable vertex");
  }
  return kVariableSlots * i + a - 1;
}

int GadgetMap::clause_vertex(int j, int b) const {
  if (j < 0 || j >= m_ || b < 1 || b > kClauseSlots) {
    throw Error(ErrorCode::kInvalidArgument, "no such clause vertex");
  }
  return kVariableSlots * n_ + kClauseSlots * j + b - 1;
}

GadgetLabel GadgetMap::label(int vertex) const {
  if (vertex < 0 || vertex >= num_vertices()) {
    throw Error(ErrorCode::kInvalidArgument,
                "vertex " + std::to_string(vertex) + " is not labeled");
  }
  if (vertex < kVariableSlots * n_) {
    return {GadgetLabel::Kind::kVariable, vertex / kVariableSlots,
            vertex % kVariableSlots + 1};
  }
  const int offset = vertex - kVariableSlots * n_;
  return {GadgetLabel::Kind::kClause, offset / kClauseSlots,
          offset % kClauseSlots + 1};
}

Reduction BuildReduction(const CnfFormula& f) {
  GadgetMap map(f);
  std::vector<Edge> edges;
  for (int i = 0; i < map.num_variables(); ++i) {
    for (int a = 1; a <= 5; ++a) {
      for (int b = a + 1; b <= 5; ++b) {
        if (a == 4 && b == 5) continue;
        AddEdge(edges, map.var_vertex(i, a), map.var_vertex(i, b));
      }
    }
  }
  for (int j = 0; j < map.num_clauses(); ++j) {
    for (int a = 1; a <= 6; ++a) {
      for (int b = a + 1; b <= 6; ++b) {
        if ((a == 1 && b == 2) || (a == 1 && b == 6) || (a == 2 && b == 6)) {
          continue;
        }
        AddEdge(edges, map.clause_vertex(j, a), map.clause_vertex(j, b));
      }
    }
    for (const Literal& lit : f.clauses[j]) {
      const int x1 = map.var_vertex(lit.variable, 1);
      const int x2 = map.var_vertex(lit.variable, 2);
      const int c1 = map.clause_vertex(j, 1);
      const int c2 = map.clause_vertex(j, 2);
      AddEdge(edges, c1, x1);
      AddEdge(edges, c2, x2);
      AddEdge(edges, lit.positive ? c2 : c1, lit.positive ? x1 : x2);
    }
    for (int k = j + 1; k < map.num_clauses(); ++k) {
      for (int a = 1; a <= 2; ++a) {
        for (int b = 1; b <= 2; ++b) {
          AddEdge(edges, map.clause_vertex(j, a), map.clause_vertex(k, b));
        }
      }
    }
  }
  Reduction reduction{Graph::FromEdges(map.num_vertices(), edges), map};
  if (!IsConnected(reduction.graph)) {
    throw Error(ErrorCode::kLemmaViolation, "gadget graph is disconnected");
  }
  return reduction;
}

bool KappaPrediction::Admits(KappaValue actual) const {
  switch (kind) {
    case Kind::kExact:
      return actual == value;
    case Kind::kGreaterThan:
      return actual > value;
    case Kind::kAtLeast:
      return actual >= value;
  }
  return false;
}

const char* PredictionKindName(KappaPrediction::Kind kind) {
  switch (kind) {
    case KappaPrediction::Kind::kExact:
      return "exact";
    case KappaPrediction::Kind::kGreaterThan:
      return "greater-than";
    case KappaPrediction::Kind::kAtLeast:
      return "at-least";
  }
  return "unknown";
}

KappaPrediction PredictedKappa(const GadgetMap& map, int p, int q) {
  GadgetLabel s = map.label(p);
  GadgetLabel t = map.label(q);
  using Kind = GadgetLabel::Kind;
  if (p == q) return {KappaPrediction::Kind::kExact, KappaValue::Infinity()};

  if (s.kind == t.kind && s.index == t.index) {
    const int a = std::min(s.slot, t.slot);
    const int b = std::max(s.slot, t.slot);
    if (s.kind == Kind::kVariable) {
      if (a == 1 && b == 2) {
        return {KappaPrediction::Kind::kGreaterThan, KappaValue::Finite(4)};
      }
      return Exact(b == 3 && a <= 2 ? 4 : 3);
    }
    if (a == 1 && b == 2) {
      return {KappaPrediction::Kind::kGreaterThan, KappaValue::Finite(5)};
    }
    const auto middle = [](int x) { return x >= 3 && x <= 5; };
    if (middle(a) && middle(b)) return Exact(5);
    if (a <= 2 && middle(b)) return Exact(4);
    return Exact(3);
  }

  if (s.slot >= 3 || t.slot >= 3) return Exact(2);

  if (s.kind != t.kind) {
    const GadgetLabel& c = s.kind == Kind::kClause ? s : t;
    const GadgetLabel& x = s.kind == Kind::kClause ? t : s;
    const int sign = map.sign(c.index, x.index);
    if (sign != 0) {
      const bool special = sign > 0 ? (c.slot == 2 && x.slot == 1)
                                    : (c.slot == 1 && x.slot == 2);
      if (map.num_clauses() == 1) return Exact(special ? 3 : 2);
      const int al = map.alpha(x.index);
      const int be = map.beta(x.index);
      const int base = sign > 0 ? 2 * al + be : al + 2 * be;
      return Exact(base + (special ? 3 : 2));
    }
  }
  return {KappaPrediction::Kind::kAtLeast, KappaValue::Finite(2)};
}

std::vector<int> BasisFromAssignment(const CnfFormula& f, const GadgetMap& map,
                                     const std::vector<bool>& assignment) {
  if (!Satisfies(f, assignment)) {
    throw Error(ErrorCode::kUnsatisfied, "assignment does not satisfy the formula");
  }
  return Candidate(map, assignment);
}

std::vector<bool> ExtractAssignment(const CnfFormula& f, const GadgetMap& map,
                                    const KappaMatrix& km,
                                    std::span<const int> basis) {
  std::vector<int> set(basis.begin(), basis.end());
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  const int expected = 2 * (map.num_clauses() + map.num_variables());
  if (static_cast<int>(set.size()) != expected) {
    throw Error(ErrorCode::kInvalidArgument,
                "basis has " + std::to_string(set.size()) + " vertices, expected " +
                    std::to_string(expected));
  }
  if (km.n() != map.num_vertices() || !IsResolving(km, set).resolving) {
    throw Error(ErrorCode::kInvalidArgument, "set does not resolve G(S)");
  }
  std::vector<bool> assignment(map.num_variables());
  for (int i = 0; i < map.num_variables(); ++i) {
    assignment[i] = std::binary_search(set.begin(), set.end(), map.var_vertex(i, 1));
  }
  if (!Satisfies(f, assignment)) {
    throw Error(ErrorCode::kLemmaViolation,
                "assignment read from a resolving set fails the formula");
  }
  return assignment;
}

SatDecision DecideSat(const CnfFormula& f, int threads) {
  const Reduction reduction = BuildReduction(f);
  const KappaMatrix km = ComputeKappaMatrix(reduction.graph, threads);
  const DistinguishTable table = DistinguishTable::FromKappa(km);
  const int n = f.num_variables;
  SatDecision decision;
  decision.graph_vertices = reduction.graph.num_vertices();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<bool> assignment(n);
    for (int i = 0; i < n; ++i) assignment[i] = (mask >> (n - 1 - i)) & 1;
    std::vector<int> candidate = Candidate(reduction.map, assignment);
    ++decision.candidates_checked;
    if (IsResolving(table, candidate).resolving) {
      decision.satisfiable = true;
      decision.assignment = std::move(assignment);
      decision.basis = std::move(candidate);
      break;
    }
  }
  return decision;
}

LemmaReport VerifyGadgetLemmas(const CnfFormula& f, const GadgetMap& map,
                               std::span<const int> basis) {
  LemmaReport report;
  std::vector<char> in(map.num_vertices(), 0);
  for (int v : basis) {
    map.label(v);
    in[v] = 1;
  }
  auto fail = [&](std::string message) {
    report.ok = false;
    report.violations.push_back(std::move(message));
  };
  for (int j = 0; j < map.num_clauses(); ++j) {
    const int middle = in[map.clause_vertex(j, 3)] + in[map.clause_vertex(j, 4)] +
                       in[map.clause_vertex(j, 5)];
    if (middle != 2) {
      fail("clause " + std::to_string(j + 1) + " has " + std::to_string(middle) +
           " of c^3, c^4, c^5");
    }
  }
  for (int i = 0; i < map.num_variables(); ++i) {
    if (!in[map.var_vertex(i, 4)] && !in[map.var_vertex(i, 5)]) {
      fail("variable " + std::to_string(i + 1) + " has neither x^4 nor x^5");
    }
    int count = 0;
    for (int a = 1; a <= 5; ++a) count += in[map.var_vertex(i, a)];
    if (count < 2) {
      fail("variable " + std::to_string(i + 1) + " gadget holds " +
           std::to_string(count) + " landmarks");
    }
  }
  const int total = static_cast<int>(std::count(in.begin(), in.end(), 1));
  const int floor = 2 * (static_cast<int>(f.clauses.size()) + f.num_variables);
  if (total < floor) {
    fail("basis has " + std::to_string(total) + " vertices, below 2(m + n) = " +
         std::to_string(floor));
  }
  return report;
}

}  // namespace cdim
