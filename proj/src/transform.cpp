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

#include "emalp/transform.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "emalp/compiled.hpp"
#include "emalp/error.hpp"
#include "product_grid.hpp"

namespace emalp {

namespace {

// Picks `base`, or base_1, base_2, ... if taken, and reserves it.
std::string fresh_name(const std::string& base, std::set<std::string>& taken) {
  std::string name = base;
  for (std::size_t k = 1; taken.contains(name); ++k) {
    name = base + "_" + std::to_string(k);
  }
  taken.insert(name);
  return name;
}

std::set<std::string> atom_set(const Program& program) {
  const auto atoms = program.atoms();
  return {atoms.begin(), atoms.end()};
}

std::string constant_atom_base(TruthValue c) {
  std::string numeral = format_literal(c);
  std::replace(numeral.begin(), numeral.end(), '.', '_');
  return "p_c_" + numeral;
}

Expr conj_of(AdjointPair conj, Expr a, Expr b) {
  Op op = Op::kAndG;
  switch (conj) {
    case AdjointPair::kGodel:
      op = Op::kAndG;
      break;
    case AdjointPair::kProduct:
      op = Op::kAndP;
      break;
    case AdjointPair::kLukasiewicz:
      op = Op::kAndL;
      break;
  }
  return Expr::apply(op, {std::move(a), std::move(b)});
}

Expr neg_of(Negation neg, Expr arg) {
  return Expr::apply(neg == Negation::kNeg1 ? Op::kNeg1 : Op::kNeg2,
                     {std::move(arg)});
}

// and(th(0, neg(p_bot)), th(c, arg))
Expr bottom_guard(const TranslationRecord& rec, Op threshold,
                  const std::string& bottom, TruthValue c, Expr arg) {
  return conj_of(
      rec.conj,
      Expr::threshold(threshold, kBottom,
                      neg_of(rec.negation, Expr::atom(bottom))),
      Expr::threshold(threshold, c, std::move(arg)));
}

std::string format_interpretation(const Interpretation& m) {
  std::string out = "{";
  for (const auto& [atom, v] : m) {
    if (out.size() > 1) out += ", ";
    out += atom + ": " + format_literal(v);
  }
  return out + "}";
}

}  // namespace

std::string_view to_string(Method m) {
  switch (m) {
    case Method::kFc:
      return "fc";
    case Method::kJanssen:
      return "janssen";
    case Method::kManlp:
      return "manlp";
  }
  return "?";
}

std::optional<Method> method_from_name(std::string_view name) {
  for (Method m : {Method::kFc, Method::kJanssen, Method::kManlp}) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

std::string_view to_string(FreshRole r) {
  switch (r) {
    case FreshRole::kBottomWitness:
      return "bottom_witness";
    case FreshRole::kConstantWitness:
      return "constant_witness";
    case FreshRole::kNegationWitness:
      return "negation_witness";
  }
  return "?";
}

std::optional<FreshRole> fresh_role_from_name(std::string_view name) {
  for (FreshRole r : {FreshRole::kBottomWitness, FreshRole::kConstantWitness,
                      FreshRole::kNegationWitness}) {
    if (to_string(r) == name) return r;
  }
  return std::nullopt;
}

TranslationRecord eliminate_constraints_fc(const Program& program,
                                           const FcOptions& options) {
  TranslationRecord rec;
  rec.method = Method::kFc;
  rec.source = program;
  rec.conj = options.conj;
  rec.negation = options.negation;
  rec.impl_from_constraint = !options.impl.has_value();
  rec.impl = options.impl.value_or(AdjointPair::kLukasiewicz);
  if (program.constraint_count() == 0) {
    rec.target = program;
    return rec;
  }
  std::set<std::string> taken = atom_set(program);
  const std::string bottom = fresh_name("p_bot", taken);
  rec.fresh_atoms.push_back({bottom, FreshRole::kBottomWitness, "", kBottom});
  for (const auto& rule : program.rules) {
    if (!rule.is_constraint()) {
      rec.target.rules.push_back(rule);
      continue;
    }
    const AdjointPair impl = options.impl.value_or(rule.impl);
    rec.target.rules.push_back(Rule::make(
        bottom, impl,
        bottom_guard(rec, Op::kF, bottom, rule.head_constant(), rule.body),
        kTop));
  }
  return rec;
}

TranslationRecord eliminate_constraints_janssen(const Program& program,
                                                const JanssenOptions& options) {
  TranslationRecord rec;
  rec.method = Method::kJanssen;
  rec.source = program;
  rec.impl = options.impl;
  rec.conj = options.conj;
  rec.negation = options.negation;
  if (program.constraint_count() == 0) {
    rec.target = program;
    return rec;
  }
  std::set<std::string> taken = atom_set(program);
  const std::string bottom = fresh_name("p_bot", taken);
  rec.fresh_atoms.push_back({bottom, FreshRole::kBottomWitness, "", kBottom});

  std::set<TruthValue> constants;
  for (const auto& rule : program.rules) {
    if (rule.is_constraint()) constants.insert(rule.head_constant());
  }
  std::map<TruthValue, std::string> witness;
  for (TruthValue c : constants) {
    witness[c] = fresh_name(constant_atom_base(c), taken);
    rec.fresh_atoms.push_back({witness[c], FreshRole::kConstantWitness, "", c});
  }

  for (const auto& rule : program.rules) {
    if (!rule.is_constraint()) {
      rec.target.rules.push_back(rule);
      continue;
    }
    rec.target.rules.push_back(Rule::make(witness.at(rule.head_constant()),
                                          rule.impl, rule.body, rule.weight));
  }
  for (TruthValue c : constants) {
    const std::string& pc = witness.at(c);
    rec.target.rules.push_back(
        Rule::make(pc, options.impl, Expr::constant(c), kTop));
    rec.target.rules.push_back(Rule::make(
        bottom, options.impl,
        bottom_guard(rec, Op::kG, bottom, c, Expr::atom(pc)), kTop));
  }
  return rec;
}

TranslationRecord to_manlp(const Program& program,
                           const ManlpOptions& options) {
  if (program.constraint_count() > 0) {
    throw Error(
        "program has constraints; eliminate them first (method fc or janssen)");
  }
  if (!is_involutive(options.negation)) {
    throw Error("negation " + std::string(to_string(options.negation)) +
                " is not involutive");
  }
  TranslationRecord rec;
  rec.method = Method::kManlp;
  rec.source = program;
  rec.impl = options.impl;
  rec.negation = options.negation;

  std::set<std::string> taken = atom_set(program);
  std::map<std::string, std::string> not_atom;
  for (const auto& q : program.negative_atoms()) {
    not_atom[q] = fresh_name("not_" + q, taken);
    rec.fresh_atoms.push_back(
        {not_atom[q], FreshRole::kNegationWitness, q, kBottom});
  }
  for (const auto& rule : program.rules) {
    Rule r = rule;
    r.body = rewrite_atoms(rule.body, [&](const std::string& name, int sign) {
      if (sign > 0) return Expr::atom(name);
      return neg_of(options.negation, Expr::atom(not_atom.at(name)));
    });
    rec.target.rules.push_back(std::move(r));
  }
  for (const auto& [q, name] : not_atom) {
    rec.target.rules.push_back(Rule::make(
        name, options.impl, neg_of(options.negation, Expr::atom(q)), kTop));
  }
  return rec;
}

Interpretation lift_interpretation(const Interpretation& m,
                                   const TranslationRecord& rec) {
  require_total(rec.source, m);
  Interpretation out = project_interpretation(m, rec);
  for (const auto& fresh : rec.fresh_atoms) {
    switch (fresh.role) {
      case FreshRole::kBottomWitness:
        out[fresh.name] = kBottom;
        break;
      case FreshRole::kConstantWitness:
        out[fresh.name] = fresh.constant;
        break;
      case FreshRole::kNegationWitness:
        out[fresh.name] = eval_negation(rec.negation, m.at(fresh.origin));
        break;
    }
  }
  return out;
}

Interpretation project_interpretation(const Interpretation& m,
                                      const TranslationRecord& rec) {
  Interpretation out;
  for (const auto& atom : rec.source.atoms()) {
    auto it = m.find(atom);
    if (it == m.end()) {
      throw Error("interpretation has no value for atom '" + atom + "'");
    }
    out.emplace(atom, it->second);
  }
  return out;
}

ContinuityReport check_continuity(const Program& program) {
  ContinuityReport report;
  std::function<void(const Expr&, std::size_t)> walk = [&](const Expr& e,
                                                           std::size_t rule) {
    if (!e.is_apply()) return;
    if (!op_info(e.op()).continuous) {
      report.continuous = false;
      report.discontinuities.push_back("rule " + std::to_string(rule + 1) +
                                       ": " +
                                       std::string(op_info(e.op()).name));
    }
    for (const auto& arg : e.args()) walk(arg, rule);
  };
  for (std::size_t i = 0; i < program.rules.size(); ++i) {
    walk(program.rules[i].body, i);
    if (program.rules[i].is_constraint()) report.constraint_free = false;
  }
  report.existence_guaranteed = report.continuous && report.constraint_free;
  return report;
}

EquivalenceReport verify_equivalence(const TranslationRecord& rec,
                                     const EquivalenceOptions& options) {
  EquivalenceReport report;
  const double tol = options.tol;
  const std::vector<double> grid = unit_grid(options.grid_step);

  const auto source_atoms = rec.source.atoms();
  const std::set<std::string> source_set(source_atoms.begin(),
                                         source_atoms.end());
  for (const auto& fresh : rec.fresh_atoms) {
    if (source_set.contains(fresh.name)) {
      throw Error("fresh atom '" + fresh.name + "' occurs in the source");
    }
  }

  StableSearchConfig cfg;
  cfg.mode = SearchMode::kGrid;
  cfg.grid_step = options.grid_step;
  cfg.tol = tol;
  cfg.max_iter = options.max_iter;
  cfg.max_points = options.max_points;
  report.source_models = find_stable_models(rec.source, cfg);
  report.source_points = detail::product_size(
      std::vector<std::vector<double>>(source_atoms.size(), grid),
      options.max_points);

  // Target candidates: the grid, plus the lift images of grid values for
  // fresh atoms.
  const CompiledProgram target(rec.target, tol);
  std::vector<std::vector<double>> choices;
  for (const auto& atom : target.atoms()) {
    std::vector<double> values = grid;
    auto fresh = std::find_if(
        rec.fresh_atoms.begin(), rec.fresh_atoms.end(),
        [&](const FreshAtom& f) { return f.name == atom; });
    if (fresh != rec.fresh_atoms.end()) {
      if (fresh->role == FreshRole::kConstantWitness) {
        values.push_back(fresh->constant);
      } else if (fresh->role == FreshRole::kNegationWitness) {
        for (double g : grid) values.push_back(eval_negation(rec.negation, g));
      }
    } else if (!source_set.contains(atom)) {
      throw Error("target atom '" + atom +
                  "' is neither a source atom nor a recorded fresh atom");
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end(),
                             [](double a, double b) {
                               return std::abs(a - b) <= 1e-12;
                             }),
                 values.end());
    choices.push_back(std::move(values));
  }
  report.target_points = detail::product_size(choices, options.max_points);
  if (report.target_points > options.max_points) {
    throw BudgetExceeded("target enumeration exceeds " +
                         std::to_string(options.max_points) + " points");
  }
  detail::for_each_point(choices, [&](const std::vector<double>& point) {
    const auto check = target.check_stable(point, tol, options.max_iter);
    if (check.verdict == CompiledProgram::Verdict::kStable) {
      report.target_models.push_back(target.to_interpretation(point));
    }
    return true;
  });

  bool ok = report.source_models.size() == report.target_models.size();
  if (!ok) {
    report.counterexamples.push_back(
        "source has " + std::to_string(report.source_models.size()) +
        " grid stable model(s), target has " +
        std::to_string(report.target_models.size()));
  }

  for (const auto& m : report.source_models) {
    const Interpretation lifted = lift_interpretation(m, rec);
    const auto verdict =
        check_stability(rec.target, lifted, tol, options.max_iter).verdict;
    if (verdict == Stability::kStable) {
      report.witnesses.emplace_back(m, lifted);
    } else {
      ok = false;
      report.counterexamples.push_back("lift of source stable model " +
                                       format_interpretation(m) + " is " +
                                       std::string(to_string(verdict)) +
                                       " in the target");
    }
  }

  for (const auto& t : report.target_models) {
    const Interpretation projected = project_interpretation(t, rec);
    for (const auto& fresh : rec.fresh_atoms) {
      const double v = t.at(fresh.name);
      switch (fresh.role) {
        case FreshRole::kBottomWitness:
        case FreshRole::kConstantWitness:
          if (!approx_equal(v, fresh.constant, tol)) {
            report.witnesses_ok = false;
            report.counterexamples.push_back(
                "target stable model " + format_interpretation(t) + " gives " +
                fresh.name + " = " + format_literal(v));
          }
          break;
        case FreshRole::kNegationWitness: {
          const double expected =
              eval_negation(rec.negation, t.at(fresh.origin));
          if (!approx_equal(v, expected, tol)) {
            report.negations_ok = false;
            report.counterexamples.push_back(
                "target stable model " + format_interpretation(t) + " gives " +
                fresh.name + " = " + format_literal(v) + ", expected " +
                format_literal(expected));
          }
          break;
        }
      }
    }
    const auto verdict =
        check_stability(rec.source, projected, tol, options.max_iter).verdict;
    if (verdict != Stability::kStable) {
      ok = false;
      report.counterexamples.push_back("projection of target stable model " +
                                       format_interpretation(t) + " is " +
                                       std::string(to_string(verdict)) +
                                       " in the source");
    }
  }

  report.bijection = ok && report.witnesses_ok && report.negations_ok;
  return report;
}

}  // namespace emalp
