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

#ifndef CDIM_REDUCTION_H_
#define CDIM_REDUCTION_H_

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cdim/connectivity.h"
#include "cdim/graph.h"

namespace cdim {

struct Literal {
  int variable = 0;  // 0-based
  bool positive = true;

  friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 3>;

struct CnfFormula {
  int num_variables = 0;
  std::vector<Clause> clauses;
};

// Throws Error(kInvalidArgument) unless every clause has three distinct
// in-range variables and every variable occurs somewhere.
void ValidateFormula(const CnfFormula& f);

// DIMACS CNF. Variables that never occur are dropped and the rest renumbered
// in order, with a note appended to `warnings`. Throws FormatError (offset =
// line number) on malformed text, on clauses without exactly three distinct
// variables, on tautological clauses and on a clause count mismatch.
CnfFormula ParseDimacs(std::string_view text,
                       std::vector<std::string>* warnings = nullptr);

bool Satisfies(const CnfFormula& f, const std::vector<bool>& assignment);

struct GadgetLabel {
  enum class Kind { kVariable, kClause };
  Kind kind = Kind::kVariable;
  int index = 0;  // variable i or clause j, 0-based
  int slot = 1;   // a in 1..5 or b in 1..6
};

// Vertex layout of G(S): x_i^a at 5i + a - 1, then c_j^b at 5n + 6j + b - 1.
class GadgetMap {
 public:
  GadgetMap() = default;
  explicit GadgetMap(const CnfFormula& f);

  int num_variables() const { return n_; }
  int num_clauses() const { return m_; }
  int num_vertices() const { return 5 * n_ + 6 * m_; }

  int var_vertex(int i, int a) const;
  int clause_vertex(int j, int b) const;
  GadgetLabel label(int vertex) const;

  // Clauses containing X_i positively / negatively.
  int alpha(int i) const { return alpha_[i]; }
  int beta(int i) const { return beta_[i]; }
  // +1, -1 or 0 for the sign of X_i in C_j.
  int sign(int j, int i) const { return signs_[j * n_ + i]; }

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<int> alpha_;
  std::vector<int> beta_;
  std::vector<int> signs_;
};

struct Reduction {
  Graph graph;
  GadgetMap map;
};

Reduction BuildReduction(const CnfFormula& f);

struct KappaPrediction {
  enum class Kind {
    kExact,        // kappa == value
    kGreaterThan,  // kappa > value
    kAtLeast,      // kappa >= value
  };
  Kind kind = Kind::kExact;
  KappaValue value;

  bool Admits(KappaValue actual) const;
};

const char* PredictionKindName(KappaPrediction::Kind kind);

// Closed-form connectivity between two labeled vertices of G(S). Variable
// and clause vertex pairs inside a gadget, across gadgets via the
// separating pairs, and clause/variable pairs with both slots in {1, 2}
// when the variable occurs in the clause; the last case uses the
// single-clause table when m == 1 and the occurrence-count formula
// otherwise. Pairs with no formula get the >= 2 separator bound.
KappaPrediction PredictedKappa(const GadgetMap& map, int p, int q);

// {c_j^4, c_j^5} for every clause, x_i^5 for every variable, and x_i^1 or
// x_i^2 as X_i is true or false. Throws Error(kUnsatisfied) if the
// assignment does not satisfy f.
std::vector<int> BasisFromAssignment(const CnfFormula& f, const GadgetMap& map,
                                     const std::vector<bool>& assignment);

// X_i is true iff x_i^1 is in the basis. Throws Error(kInvalidArgument) if
// the set is not of size 2(m + n) or not resolving, and
// Error(kLemmaViolation) if the read-off assignment fails f.
std::vector<bool> ExtractAssignment(const CnfFormula& f, const GadgetMap& map,
                                    const KappaMatrix& km,
                                    std::span<const int> basis);

struct SatDecision {
  bool satisfiable = false;
  std::vector<bool> assignment;  // empty when unsatisfiable
  std::vector<int> basis;        // the resolving candidate found
  int graph_vertices = 0;
  int candidates_checked = 0;
};

// Tries the 2^n normalized candidate sets in assignment order (X_1 most
// significant, false before true) and reports the first one that resolves
// G(S). Unsatisfiability relies on the normalization of minimum resolving
// sets of G(S).
SatDecision DecideSat(const CnfFormula& f, int threads = 1);

struct LemmaReport {
  bool ok = true;
  std::vector<std::string> violations;
};

// Per-gadget landmark counts of a basis of G(S): exactly two of c_j^3..5,
// at least one of x_i^4, x_i^5, at least two vertices of each variable
// gadget, and at least 2(m + n) in total.
LemmaReport VerifyGadgetLemmas(const CnfFormula& f, const GadgetMap& map,
                               std::span<const int> basis);

}  // namespace cdim

#endif  // CDIM_REDUCTION_H_
