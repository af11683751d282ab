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

#include "emalp/program.hpp"

#include <algorithm>

namespace emalp {

Rule Rule::make(std::string head_atom, AdjointPair impl, Expr body,
                TruthValue weight) {
  return Rule{std::move(head_atom), impl, std::move(body), weight};
}

Rule Rule::constraint(TruthValue bound, AdjointPair impl, Expr body) {
  return Rule{bound, impl, std::move(body), kTop};
}

std::string_view to_string(ProgramClass c) {
  switch (c) {
    case ProgramClass::kPositive:
      return "positive";
    case ProgramClass::kManlp:
      return "MANLP";
    case ProgramClass::kConstraintFree:
      return "constraint-free EMALP";
    case ProgramClass::kEmalp:
      return "EMALP";
  }
  return "?";
}

std::vector<std::string> Program::atoms() const {
  std::set<std::string> names;
  for (const auto& rule : rules) {
    if (!rule.is_constraint()) names.insert(rule.head_atom());
    for_each_atom_occurrence(rule.body, [&](const std::string& n, int) {
      names.insert(n);
    });
  }
  return {names.begin(), names.end()};
}

std::size_t Program::constraint_count() const {
  return static_cast<std::size_t>(
      std::count_if(rules.begin(), rules.end(),
                    [](const Rule& r) { return r.is_constraint(); }));
}

std::vector<std::string> Program::negative_atoms() const {
  std::set<std::string> names;
  for (const auto& rule : rules) {
    for_each_atom_occurrence(rule.body, [&](const std::string& n, int sign) {
      if (sign < 0) names.insert(n);
    });
  }
  return {names.begin(), names.end()};
}

namespace {

// True if every negative atom occurrence is a direct neg1/neg2 argument.
bool negations_are_direct(const Expr& e, int sign, bool under_negation) {
  switch (e.kind()) {
    case Expr::Kind::kConstant:
      return true;
    case Expr::Kind::kAtom:
      return sign > 0 || under_negation;
    case Expr::Kind::kApply:
      break;
  }
  const bool is_neg = e.op() == Op::kNeg1 || e.op() == Op::kNeg2;
  for (std::size_t i = 0; i < e.args().size(); ++i) {
    if (!negations_are_direct(e.args()[i], sign * argument_sign(e.op(), i),
                              is_neg)) {
      return false;
    }
  }
  return true;
}

bool in_unit(double v, double tol) { return v >= -tol && v <= 1.0 + tol; }

void check_literals(const Expr& e, double tol, std::size_t index,
                    std::vector<ValidationIssue>& issues) {
  if (e.is_constant() && !in_unit(e.value(), tol)) {
    issues.push_back({index, "constant " + format_literal(e.value()) +
                                 " outside [0,1]"});
  }
  if (!e.is_apply()) return;
  const OpInfo& info = op_info(e.op());
  if (e.args().size() < info.min_arity || e.args().size() > info.max_arity) {
    issues.push_back({index, "arity mismatch for " + std::string(info.name)});
  }
  if (info.parameterized && !in_unit(e.value(), tol)) {
    issues.push_back({index, "threshold " + format_literal(e.value()) +
                                 " outside [0,1]"});
  }
  for (const auto& arg : e.args()) check_literals(arg, tol, index, issues);
}

}  // namespace

ProgramClass Program::classify() const {
  bool has_constraint = false;
  bool has_negative = false;
  bool direct = true;
  for (const auto& rule : rules) {
    has_constraint = has_constraint || rule.is_constraint();
    for_each_atom_occurrence(rule.body, [&](const std::string&, int sign) {
      if (sign < 0) has_negative = true;
    });
    direct = direct && negations_are_direct(rule.body, 1, false);
  }
  if (has_constraint) return ProgramClass::kEmalp;
  if (!has_negative) return ProgramClass::kPositive;
  return direct ? ProgramClass::kManlp : ProgramClass::kConstraintFree;
}

ValidationReport validate_program(const Program& program,
                                  const ValidationOptions& options) {
  ValidationReport report;
  const double tol = options.tol;
  for (std::size_t i = 0; i < program.rules.size(); ++i) {
    const Rule& rule = program.rules[i];
    auto& issues = report.issues;
    if (!in_unit(rule.weight, tol)) {
      issues.push_back({i, "weight " + format_literal(rule.weight) +
                               " outside [0,1]"});
    }
    if (rule.is_constraint()) {
      if (!in_unit(rule.head_constant(), tol)) {
        issues.push_back({i, "constraint head " +
                                 format_literal(rule.head_constant()) +
                                 " outside [0,1]"});
      }
      if (!approx_equal(rule.weight, kTop, tol)) {
        issues.push_back({i, "constraint weight must be 1"});
      }
    }
    check_literals(rule.body, tol, i, issues);
    for (const auto& [name, count] : count_occurrences(rule.body)) {
      if (count.positive > 0 && count.negative > 0) {
        issues.push_back({i, "atom '" + name + "' has mixed polarity"});
      } else if (!options.allow_repeats &&
                 (count.positive > 1 || count.negative > 1)) {
        issues.push_back({i, "atom '" + name +
                                 "' occurs more than once with the same "
                                 "polarity"});
      }
    }
    for (auto& message : range_issues(rule.body, tol)) {
      issues.push_back({i, std::move(message)});
    }
  }
  report.valid = report.issues.empty();
  report.program_class = program.classify();
  return report;
}

std::string serialize_rule(const Rule& rule) {
  std::string out = rule.is_constraint() ? format_literal(rule.head_constant())
                                         : rule.head_atom();
  out += " <-";
  out += tag_of(rule.impl);
  out += ' ';
  out += to_string(rule.body);
  out += " with ";
  out += format_literal(rule.weight);
  out += ';';
  return out;
}

std::string serialize_program(const Program& program) {
  std::string out;
  for (std::size_t i = 0; i < program.rules.size(); ++i) {
    if (i > 0) out += '\n';
    out += serialize_rule(program.rules[i]);
  }
  return out;
}

}  // namespace emalp
