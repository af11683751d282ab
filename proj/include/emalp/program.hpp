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

#ifndef EMALP_PROGRAM_HPP_
#define EMALP_PROGRAM_HPP_

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "emalp/expr.hpp"
#include "emalp/lattice.hpp"

namespace emalp {

// Weighted rule <head <-_impl body; weight>. A constant head makes the rule
// a constraint, whose weight must be top.
struct Rule {
  std::variant<std::string, TruthValue> head;
  AdjointPair impl = AdjointPair::kGodel;
  Expr body;
  TruthValue weight = kTop;

  static Rule make(std::string head_atom, AdjointPair impl, Expr body,
                   TruthValue weight);
  static Rule constraint(TruthValue bound, AdjointPair impl, Expr body);

  bool is_constraint() const {
    return std::holds_alternative<TruthValue>(head);
  }
  const std::string& head_atom() const { return std::get<std::string>(head); }
  TruthValue head_constant() const { return std::get<TruthValue>(head); }

  bool operator==(const Rule& other) const = default;
};

enum class ProgramClass { kPositive, kManlp, kConstraintFree, kEmalp };

std::string_view to_string(ProgramClass c);

struct Program {
  std::vector<Rule> rules;

  // Propositional symbols occurring in heads or bodies, sorted.
  std::vector<std::string> atoms() const;
  std::size_t constraint_count() const;
  // Atoms with a negative occurrence in some body, sorted.
  std::vector<std::string> negative_atoms() const;
  ProgramClass classify() const;

  bool operator==(const Program& other) const = default;
};

struct ValidationOptions {
  bool allow_repeats = false;
  double tol = kDefaultTolerance;
};

struct ValidationIssue {
  std::size_t rule = 0;
  std::string message;
};

struct ValidationReport {
  bool valid = true;
  ProgramClass program_class = ProgramClass::kPositive;
  std::vector<ValidationIssue> issues;
};

ValidationReport validate_program(const Program& program,
                                  const ValidationOptions& options = {});

// Parses and validates. Throws ParseError on malformed text and
// ValidationError (with every issue in the message) on an invalid program.
Program parse_program(std::string_view text,
                      const ValidationOptions& options = {});

// Parses without validation.
Program parse_program_unchecked(std::string_view text);

// Parses a single literal ("0.25" or "1/4").
TruthValue parse_literal(std::string_view text);

std::string serialize_rule(const Rule& rule);
// One declaration per line, no trailing newline.
std::string serialize_program(const Program& program);

}  // namespace emalp

#endif  // EMALP_PROGRAM_HPP_
