//  Copyright 2026 The emalp Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#ifndef EMALP_TRANSFORM_HPP_
#define EMALP_TRANSFORM_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "emalp/program.hpp"
#include "emalp/semantics.hpp"

namespace emalp {

enum class Method { kFc, kJanssen, kManlp };

std::string_view to_string(Method m);
std::optional<Method> method_from_name(std::string_view name);

enum class FreshRole {
  kBottomWitness,    // p_bot, forced to bottom in every stable model
  kConstantWitness,  // p_c of the g_c encoding, equal to c
  kNegationWitness,  // not_q, equal to neg(q)
};

std::string_view to_string(FreshRole r);
std::optional<FreshRole> fresh_role_from_name(std::string_view name);

struct FreshAtom {
  std::string name;
  FreshRole role = FreshRole::kBottomWitness;
  std::string origin;         // q for not_q
  TruthValue constant = 0.0;  // c for p_c

  bool operator==(const FreshAtom& other) const = default;
};

struct TranslationRecord {
  Method method = Method::kFc;
  Program source;
  Program target;
  std::vector<FreshAtom> fresh_atoms;
  AdjointPair impl = AdjointPair::kLukasiewicz;
  AdjointPair conj = AdjointPair::kGodel;
  Negation negation = Negation::kNeg1;
  // fc only: the constraint's own implication was kept.
  bool impl_from_constraint = false;
};

struct FcOptions {
  // Implication of the rewritten rule; empty keeps the constraint's own.
  std::optional<AdjointPair> impl;
  AdjointPair conj = AdjointPair::kGodel;
  Negation negation = Negation::kNeg1;
};

// Each constraint <c <-i B; 1> becomes
//   <p_bot <-i and(f(0, neg(p_bot)), f(c, B)); 1>
// with one p_bot shared by all constraints. Other rules are copied.
TranslationRecord eliminate_constraints_fc(const Program& program,
                                           const FcOptions& options = {});

struct JanssenOptions {
  // Implication of the two rules added per constraint constant.
  AdjointPair impl = AdjointPair::kLukasiewicz;
  AdjointPair conj = AdjointPair::kGodel;
  Negation negation = Negation::kNeg1;
};

// Each constraint head c is replaced by a fresh atom p_c; per distinct c the
// rules <p_c <-j c; 1> and <p_bot <-j and(g(0, neg(p_bot)), g(c, p_c)); 1>
// are appended.
TranslationRecord eliminate_constraints_janssen(
    const Program& program, const JanssenOptions& options = {});

struct ManlpOptions {
  Negation negation = Negation::kNeg1;
  AdjointPair impl = AdjointPair::kGodel;
};

// For each atom q with a negative occurrence, adds <not_q <-G neg(q); 1>
// and rewires every negative occurrence of q to neg(not_q). Throws Error on
// constraints or a non-involutive negation.
TranslationRecord to_manlp(const Program& program,
                           const ManlpOptions& options = {});

// Extends m (total on the source) to the target's fresh atoms.
Interpretation lift_interpretation(const Interpretation& m,
                                   const TranslationRecord& rec);
// Restricts m to the source atoms.
Interpretation project_interpretation(const Interpretation& m,
                                      const TranslationRecord& rec);

struct ContinuityReport {
  bool continuous = true;
  bool constraint_free = true;
  // Existence hypotheses hold syntactically: continuous builtins and
  // conjunctors, no constraints, and a continuous involutive negation (neg1)
  // is always available on the unit interval.
  bool existence_guaranteed = true;
  std::vector<std::string> discontinuities;  // "rule N: op"
};

ContinuityReport check_continuity(const Program& program);

struct EquivalenceOptions {
  double grid_step = 0.5;
  double tol = kDefaultTolerance;
  std::size_t max_iter = kDefaultMaxIter;
  std::size_t max_points = 1'000'000;
};

struct EquivalenceReport {
  bool bijection = false;
  // Every target stable model gives p_bot bottom and p_c = c.
  bool witnesses_ok = true;
  // Every target stable model gives not_q = neg(q).
  bool negations_ok = true;
  std::size_t source_points = 0;
  std::size_t target_points = 0;
  std::vector<Interpretation> source_models;
  std::vector<Interpretation> target_models;
  std::vector<std::pair<Interpretation, Interpretation>> witnesses;
  std::vector<std::string> counterexamples;
};

// Grid-exhaustive comparison of the stable models of rec.source and
// rec.target. Source atoms range over the grid; fresh atoms additionally
// over their lift images. Throws BudgetExceeded past max_points.
EquivalenceReport verify_equivalence(const TranslationRecord& rec,
                                     const EquivalenceOptions& options = {});

}  // namespace emalp

#endif  // EMALP_TRANSFORM_HPP_
