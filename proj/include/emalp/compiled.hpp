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

#ifndef EMALP_COMPILED_HPP_
#define EMALP_COMPILED_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "emalp/program.hpp"

namespace emalp {

// Index-based form of a program for repeated evaluation. Every atom leaf is
// resolved to a slot in the sorted atom list and tagged with the polarity of
// its occurrence. Bodies are evaluated against two valuations: positive
// leaves read `current`, negative leaves read `frozen`. With frozen = M this
// evaluates the reduct of the program with respect to M without building it.
class CompiledProgram {
 public:
  using Values = std::vector<double>;

  explicit CompiledProgram(const Program& program,
                           double tol = kDefaultTolerance);

  const std::vector<std::string>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  std::optional<std::size_t> index_of(const std::string& atom) const;

  Values to_values(const Interpretation& interp) const;
  Interpretation to_interpretation(std::span<const double> values) const;

  // T of the reduct w.r.t. `frozen`, applied to `current`. Constraints are
  // skipped.
  void consequence(std::span<const double> current,
                   std::span<const double> frozen, std::span<double> out) const;

  struct Fixpoint {
    Values values;
    bool converged = false;
    std::size_t iterations = 0;
    std::vector<Values> trace;
  };

  // Kleene iteration of consequence(., frozen) from bottom, stopping once
  // successive iterates differ by less than `tol` at every atom.
  Fixpoint least_fixpoint(std::span<const double> frozen, double tol,
                          std::size_t max_iter, bool keep_trace = false) const;

  bool satisfies(std::size_t rule, std::span<const double> current,
                 std::span<const double> frozen, double tol) const;
  bool is_model(std::span<const double> values, double tol) const;
  // Every constraint of the reduct w.r.t. m is satisfied by m.
  bool constraints_hold(std::span<const double> m, double tol) const;

  enum class Verdict { kStable, kNotStable, kIndeterminate };

  struct StableCheck {
    Verdict verdict = Verdict::kNotStable;
    bool constraints_ok = false;
    Fixpoint fixpoint;
  };

  // Inner iterations run at tol / 100; the comparison with m uses tol.
  StableCheck check_stable(std::span<const double> m, double tol,
                           std::size_t max_iter, bool keep_trace = false) const;

 private:
  struct Node {
    Expr::Kind kind = Expr::Kind::kConstant;
    Op op = Op::kMin;
    double value = 0.0;
    std::size_t atom = 0;
    bool negative = false;
    std::vector<std::size_t> children;
  };

  struct CompiledRule {
    bool constraint = false;
    std::size_t head = 0;  // atom slot, unless constraint
    double bound = 0.0;    // constraint head
    AdjointPair impl = AdjointPair::kGodel;
    double weight = 1.0;
    std::size_t root = 0;
  };

  std::size_t compile(const Expr& e, int sign);
  double eval(std::size_t node, std::span<const double> current,
              std::span<const double> frozen) const;
  double body_value(const CompiledRule& rule, std::span<const double> current,
                    std::span<const double> frozen) const;

  double tol_;
  std::vector<std::string> atoms_;
  std::vector<Node> nodes_;
  std::vector<CompiledRule> rules_;
};

}  // namespace emalp

#endif  // EMALP_COMPILED_HPP_
