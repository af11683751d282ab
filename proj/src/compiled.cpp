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

#include "emalp/compiled.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "emalp/error.hpp"

namespace emalp {

CompiledProgram::CompiledProgram(const Program& program, double tol)
    : tol_(tol), atoms_(program.atoms()) {
  rules_.reserve(program.rules.size());
  for (const auto& rule : program.rules) {
    CompiledRule r;
    r.constraint = rule.is_constraint();
    if (r.constraint) {
      r.bound = rule.head_constant();
    } else {
      r.head = *index_of(rule.head_atom());
    }
    r.impl = rule.impl;
    r.weight = rule.weight;
    r.root = compile(rule.body, 1);
    rules_.push_back(r);
  }
}

std::optional<std::size_t> CompiledProgram::index_of(
    const std::string& atom) const {
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), atom);
  if (it == atoms_.end() || *it != atom) return std::nullopt;
  return static_cast<std::size_t>(it - atoms_.begin());
}

CompiledProgram::Values CompiledProgram::to_values(
    const Interpretation& interp) const {
  Values values(atoms_.size());
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    auto it = interp.find(atoms_[i]);
    if (it == interp.end()) {
      throw Error("interpretation has no value for atom '" + atoms_[i] + "'");
    }
    values[i] = it->second;
  }
  return values;
}

Interpretation CompiledProgram::to_interpretation(
    std::span<const double> values) const {
  Interpretation interp;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    interp.emplace(atoms_[i], values[i]);
  }
  return interp;
}

std::size_t CompiledProgram::compile(const Expr& e, int sign) {
  Node node;
  node.kind = e.kind();
  node.value = e.value();
  node.negative = sign < 0;
  if (e.is_atom()) node.atom = *index_of(e.name());
  if (e.is_apply()) {
    node.op = e.op();
    for (std::size_t i = 0; i < e.args().size(); ++i) {
      node.children.push_back(
          compile(e.args()[i], sign * argument_sign(e.op(), i)));
    }
  }
  nodes_.push_back(std::move(node));
  return nodes_.size() - 1;
}

double CompiledProgram::eval(std::size_t index,
                             std::span<const double> current,
                             std::span<const double> frozen) const {
  const Node& n = nodes_[index];
  switch (n.kind) {
    case Expr::Kind::kConstant:
      return n.value;
    case Expr::Kind::kAtom:
      return n.negative ? frozen[n.atom] : current[n.atom];
    case Expr::Kind::kApply:
      break;
  }
  if (n.op == Op::kMin || n.op == Op::kMax) {
    double acc = eval(n.children.front(), current, frozen);
    for (std::size_t i = 1; i < n.children.size(); ++i) {
      const double v = eval(n.children[i], current, frozen);
      acc = n.op == Op::kMin ? std::min(acc, v) : std::max(acc, v);
    }
    return acc;
  }
  std::array<double, 2> args{};
  for (std::size_t i = 0; i < n.children.size(); ++i) {
    args[i] = eval(n.children[i], current, frozen);
  }
  return apply_op(n.op, n.value,
                  std::span<const double>(args.data(), n.children.size()),
                  tol_);
}

double CompiledProgram::body_value(const CompiledRule& rule,
                                   std::span<const double> current,
                                   std::span<const double> frozen) const {
  return std::clamp(eval(rule.root, current, frozen), 0.0, 1.0);
}

void CompiledProgram::consequence(std::span<const double> current,
                                  std::span<const double> frozen,
                                  std::span<double> out) const {
  std::fill(out.begin(), out.end(), kBottom);
  for (const auto& rule : rules_) {
    if (rule.constraint) continue;
    const double v =
        eval_conjunctor(rule.impl, rule.weight, body_value(rule, current, frozen));
    out[rule.head] = std::max(out[rule.head], v);
  }
}

CompiledProgram::Fixpoint CompiledProgram::least_fixpoint(
    std::span<const double> frozen, double tol, std::size_t max_iter,
    bool keep_trace) const {
  Fixpoint fix;
  Values current(atoms_.size(), kBottom);
  Values next(atoms_.size(), kBottom);
  if (keep_trace) fix.trace.push_back(current);
  for (std::size_t k = 1; k <= max_iter; ++k) {
    consequence(current, frozen, next);
    double diff = 0.0;
    for (std::size_t i = 0; i < current.size(); ++i) {
      diff = std::max(diff, std::abs(next[i] - current[i]));
    }
    fix.iterations = k;
    if (keep_trace) fix.trace.push_back(next);
    current.swap(next);
    if (diff < tol) {
      fix.converged = true;
      break;
    }
  }
  fix.values = std::move(current);
  return fix;
}

bool CompiledProgram::satisfies(std::size_t index,
                                std::span<const double> current,
                                std::span<const double> frozen,
                                double tol) const {
  const CompiledRule& rule = rules_[index];
  const double head = rule.constraint ? rule.bound : current[rule.head];
  const double body = body_value(rule, current, frozen);
  return leq(rule.weight, eval_implication(rule.impl, head, body, tol), tol);
}

bool CompiledProgram::is_model(std::span<const double> values,
                               double tol) const {
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    if (!satisfies(i, values, values, tol)) return false;
  }
  return true;
}

bool CompiledProgram::constraints_hold(std::span<const double> m,
                                       double tol) const {
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    if (rules_[i].constraint && !satisfies(i, m, m, tol)) return false;
  }
  return true;
}

CompiledProgram::StableCheck CompiledProgram::check_stable(
    std::span<const double> m, double tol, std::size_t max_iter,
    bool keep_trace) const {
  StableCheck check;
  check.constraints_ok = constraints_hold(m, tol);
  check.fixpoint = least_fixpoint(m, tol / 100.0, max_iter, keep_trace);
  if (!check.constraints_ok) {
    check.verdict = Verdict::kNotStable;
    return check;
  }
  if (!check.fixpoint.converged) {
    check.verdict = Verdict::kIndeterminate;
    return check;
  }
  bool equal = true;
  for (std::size_t i = 0; i < m.size(); ++i) {
    equal = equal && approx_equal(check.fixpoint.values[i], m[i], tol);
  }
  check.verdict = equal ? Verdict::kStable : Verdict::kNotStable;
  return check;
}

}  // namespace emalp
