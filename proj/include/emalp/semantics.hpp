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

#ifndef EMALP_SEMANTICS_HPP_
#define EMALP_SEMANTICS_HPP_

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "emalp/program.hpp"

namespace emalp {

inline constexpr std::size_t kDefaultMaxIter = 10000;

struct FixpointTrace {
  std::vector<Interpretation> iterates;  // I_bot, T(I_bot), T^2(I_bot), ...
  bool converged = false;
  std::size_t iterations = 0;
};

Interpretation bottom_interpretation(const Program& program);
Interpretation top_interpretation(const Program& program);

// Throws Error unless every atom of the program has a value.
void require_total(const Program& program, const Interpretation& interp);

// Max-norm distance over the keys of `a`.
double max_distance(const Interpretation& a, const Interpretation& b);

bool satisfies(const Interpretation& interp, const Rule& rule,
               double tol = kDefaultTolerance);
bool is_model(const Interpretation& interp, const Program& program,
              double tol = kDefaultTolerance);

// Freezes every negative-polarity atom occurrence at its value under m.
Program reduct(const Program& program, const Interpretation& m);

// The program without its constraints.
Program constraint_free_part(const Program& program);

// T_P(I). Constraints are skipped; atoms heading no rule map to bottom.
Interpretation immediate_consequence(const Program& program,
                                     const Interpretation& interp,
                                     double tol = kDefaultTolerance);

struct LeastModelResult {
  Interpretation model;
  FixpointTrace trace;
};

// Kleene iteration of T_P from bottom. The program must have no negative
// occurrences (Error otherwise); constraints are ignored.
LeastModelResult least_model(const Program& program,
                             double tol = kDefaultTolerance,
                             std::size_t max_iter = kDefaultMaxIter);

enum class Stability { kStable, kNotStable, kIndeterminate };

std::string_view to_string(Stability s);

struct StabilityResult {
  Stability verdict = Stability::kNotStable;
  bool constraints_ok = false;
  // Least model of the constraint-free part of the reduct w.r.t. m.
  Interpretation least;
  FixpointTrace trace;
};

StabilityResult check_stability(const Program& program, const Interpretation& m,
                                double tol = kDefaultTolerance,
                                std::size_t max_iter = kDefaultMaxIter);

// True only for a definite kStable verdict.
bool is_stable(const Program& program, const Interpretation& m,
               double tol = kDefaultTolerance,
               std::size_t max_iter = kDefaultMaxIter);

struct StableOperatorResult {
  Interpretation image;
  bool converged = false;
};

// least_model of the constraint-free part of reduct(P, m).
StableOperatorResult stable_operator(const Program& program,
                                     const Interpretation& m,
                                     double tol = kDefaultTolerance,
                                     std::size_t max_iter = kDefaultMaxIter);

enum class SearchMode { kGrid, kIterate };

struct StableSearchConfig {
  SearchMode mode = SearchMode::kIterate;
  double grid_step = 0.5;
  std::size_t seeds = 16;
  double tol = kDefaultTolerance;
  std::size_t max_iter = kDefaultMaxIter;
  std::uint64_t rng_seed = 0;
  // Grid mode throws BudgetExceeded beyond this many points.
  std::size_t max_points = 1'000'000;
};

// Grid mode is complete relative to the grid; iterate mode runs the stable
// operator from bottom, top and seeds - 2 random starts. Results are
// verified, merged within tol and sorted lexicographically by atom values.
std::vector<Interpretation> find_stable_models(const Program& program,
                                               const StableSearchConfig& cfg);

// No grid interpretation strictly below m is a model. m itself is always a
// candidate value for each atom, so off-grid models can be checked too.
bool is_minimal_model(const Program& program, const Interpretation& m,
                      double grid_step, double tol = kDefaultTolerance,
                      std::size_t max_points = 10'000'000);

}  // namespace emalp

#endif  // EMALP_SEMANTICS_HPP_
