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

#ifndef EMALP_LATTICE_HPP_
#define EMALP_LATTICE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace emalp {

// Elements of the unit interval [0,1]. Bottom is 0, top is 1.
using TruthValue = double;

inline constexpr TruthValue kBottom = 0.0;
inline constexpr TruthValue kTop = 1.0;

// Absolute tolerance used for every order/equality test on truth values.
inline constexpr double kDefaultTolerance = 1e-9;
// Bound for neg(neg(x)) = x on binary64.
inline constexpr double kInvolutionTolerance = 1e-15;

inline bool leq(TruthValue a, TruthValue b, double tol = kDefaultTolerance) {
  return a <= b + tol;
}

inline bool approx_equal(TruthValue a, TruthValue b,
                         double tol = kDefaultTolerance) {
  return a <= b + tol && b <= a + tol;
}

// A conjunctor together with its residuated implication.
enum class AdjointPair { kGodel, kProduct, kLukasiewicz };

enum class Negation {
  kNeg1,  // 1 - x
  kNeg2,  // sqrt(1 - x^2)
};

// Order-preserving two-valued threshold maps.
//   f_c(x) = 0 if x <= c, 1 otherwise
//   g_c(x) = 1 if c < x, 0 otherwise
// On a chain the two coincide.
struct Threshold {
  enum class Kind { kF, kG };
  Kind kind = Kind::kF;
  TruthValue c = kBottom;
};

TruthValue eval_conjunctor(AdjointPair kind, TruthValue x, TruthValue y);

// z <- y. The Gödel and product residua return top whenever y <= z + tol,
// so that the adjoint property holds under tolerant comparison. The product
// residuum at y = 0 is top.
TruthValue eval_implication(AdjointPair kind, TruthValue z, TruthValue y,
                            double tol = kDefaultTolerance);

TruthValue eval_negation(Negation kind, TruthValue x);

TruthValue eval_threshold(const Threshold& t, TruthValue x,
                          double tol = kDefaultTolerance);

bool is_involutive(Negation kind);

std::string_view to_string(AdjointPair kind);
std::string_view to_string(Negation kind);
// Single-letter tag used by the rule syntax: g, p or l.
char tag_of(AdjointPair kind);
std::optional<AdjointPair> adjoint_pair_from_tag(std::string_view tag);
std::optional<Negation> negation_from_name(std::string_view name);

// {0, step, 2 step, ..., 1}, computed as i/n to avoid drift. Throws
// std::invalid_argument unless step lies in (0, 1] and divides 1 within
// tolerance.
std::vector<TruthValue> unit_grid(double step);

struct PropertyViolation {
  std::string property;
  std::string detail;
};

struct PropertyReport {
  std::string subject;
  std::size_t checked = 0;
  std::vector<PropertyViolation> violations;

  bool ok() const { return violations.empty(); }
};

// Exhaustive check of the adjoint-pair laws on the sample grid with the
// given step: monotonicity of the conjunctor in both arguments, monotonicity
// of the implication in its consequent and antitonicity in its antecedent,
// the adjoint property x <= (z <- y) iff (x & y) <= z, and top as identity.
PropertyReport check_adjoint_pair(AdjointPair kind, double grid_step,
                                  double tol = kDefaultTolerance);

// Antitonicity, the boundary conditions neg(0) = 1, neg(1) = 0, and
// involutivity for neg1.
PropertyReport check_negation(Negation kind, double grid_step);

// Order preservation of f_c and g_c for every grid value of c.
PropertyReport check_thresholds(double grid_step,
                                double tol = kDefaultTolerance);

}  // namespace emalp

#endif  // EMALP_LATTICE_HPP_
