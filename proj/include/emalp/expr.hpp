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

#ifndef EMALP_EXPR_HPP_
#define EMALP_EXPR_HPP_

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "emalp/lattice.hpp"

namespace emalp {

// Total map from propositional symbols to truth values. Constants evaluate
// to themselves and are never stored here.
using Interpretation = std::map<std::string, TruthValue>;

// Builtin operators usable in rule bodies.
enum class Op {
  kMin,
  kMax,
  kAndG,
  kAndP,
  kAndL,
  kOrL,
  kNeg1,
  kNeg2,
  kF,  // f(c, x)
  kG,  // g(c, x)
  kAdd,
  kSub,
  kMul,
  kDiv1,  // min(x / y, 1), with y = 0 giving 1
};

struct OpInfo {
  std::string_view name;
  std::size_t min_arity;
  std::size_t max_arity;
  bool continuous;
  // Arguments must be truth values (checked by interval analysis).
  bool lattice_arguments;
  // Arguments must be non-negative for the monotonicity rules to hold.
  bool nonnegative_arguments;
  // Carries a threshold parameter in addition to its expression argument.
  bool parameterized;
};

const OpInfo& op_info(Op op);
std::optional<Op> op_from_name(std::string_view name);

// +1 if op is order-preserving in argument `index`, -1 if order-reversing.
int argument_sign(Op op, std::size_t index);

// Applies the builtin. `param` is the threshold of f/g and ignored
// otherwise.
double apply_op(Op op, TruthValue param, std::span<const double> args,
                double tol = kDefaultTolerance);

// Expression tree over constants, atoms and builtin applications.
class Expr {
 public:
  enum class Kind { kConstant, kAtom, kApply };

  Expr() = default;

  static Expr constant(TruthValue value);
  static Expr atom(std::string name);
  static Expr apply(Op op, std::vector<Expr> args);
  static Expr threshold(Op op, TruthValue c, Expr arg);

  Kind kind() const { return kind_; }
  bool is_constant() const { return kind_ == Kind::kConstant; }
  bool is_atom() const { return kind_ == Kind::kAtom; }
  bool is_apply() const { return kind_ == Kind::kApply; }

  // Constant value, or the threshold parameter of f/g.
  TruthValue value() const { return value_; }
  const std::string& name() const { return name_; }
  Op op() const { return op_; }
  const std::vector<Expr>& args() const { return args_; }

  bool operator==(const Expr& other) const = default;

 private:
  Kind kind_ = Kind::kConstant;
  TruthValue value_ = 0.0;
  std::string name_;
  Op op_ = Op::kMin;
  std::vector<Expr> args_;
};

enum class Polarity { kPositive, kNegative, kAbsent, kMixed };

std::string_view to_string(Polarity p);

// Polarity of every atom occurring in the body. Atoms not occurring are
// absent from the map (their polarity is kAbsent).
std::map<std::string, Polarity> polarity_of(const Expr& body);

struct OccurrenceCount {
  std::size_t positive = 0;
  std::size_t negative = 0;
};

std::map<std::string, OccurrenceCount> count_occurrences(const Expr& body);

// Visits every atom leaf with the sign (+1/-1) of its path from the root.
void for_each_atom_occurrence(
    const Expr& body,
    const std::function<void(const std::string&, int sign)>& visit);

// Rebuilds the tree, replacing each atom leaf by `rewrite(name, sign)`.
Expr rewrite_atoms(
    const Expr& body,
    const std::function<Expr(const std::string& name, int sign)>& rewrite);

// Homomorphic evaluation without a range check on the result.
double eval_raw(const Expr& body, const Interpretation& interp,
                double tol = kDefaultTolerance);

// Homomorphic evaluation; the result is clamped into [0,1] when within tol
// of it, otherwise RangeError is thrown. Throws Error if an atom is missing
// from the interpretation.
TruthValue eval_body(const Expr& body, const Interpretation& interp,
                     double tol = kDefaultTolerance);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

// Natural interval extension with every atom ranging over [0,1].
Interval interval_of(const Expr& body);

// Problems found by interval analysis: lattice-typed operator arguments
// outside [0,1], possibly negative arguments to mul/div1, and a top-level
// range outside [0,1].
std::vector<std::string> range_issues(const Expr& body,
                                      double tol = kDefaultTolerance);

bool is_continuous(const Expr& body);

// Canonical literal spelling: shortest round-trip fixed notation.
std::string format_literal(TruthValue v);
std::string to_string(const Expr& body);

}  // namespace emalp

#endif  // EMALP_EXPR_HPP_
