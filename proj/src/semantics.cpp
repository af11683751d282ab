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

#include "emalp/semantics.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "emalp/compiled.hpp"
#include "emalp/error.hpp"
#include "product_grid.hpp"

namespace emalp {

namespace {

using Values = CompiledProgram::Values;
using detail::for_each_point;
using detail::product_size;

Interpretation constant_interpretation(const Program& program, double v) {
  Interpretation interp;
  for (const auto& atom : program.atoms()) interp.emplace(atom, v);
  return interp;
}

double distance(const Values& a, const Values& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    d = std::max(d, std::abs(a[i] - b[i]));
  }
  return d;
}

FixpointTrace to_trace(const CompiledProgram& compiled,
                       const CompiledProgram::Fixpoint& fix) {
  FixpointTrace trace;
  trace.converged = fix.converged;
  trace.iterations = fix.iterations;
  for (const auto& row : fix.trace) {
    trace.iterates.push_back(compiled.to_interpretation(row));
  }
  return trace;
}

void sort_and_merge(std::vector<Values>& found, double tol) {
  std::vector<Values> merged;
  for (auto& v : found) {
    const bool dup = std::any_of(merged.begin(), merged.end(), [&](const Values& m) {
      return distance(m, v) <= tol;
    });
    if (!dup) merged.push_back(std::move(v));
  }
  std::sort(merged.begin(), merged.end());
  found = std::move(merged);
}

// Fixpoint of the stable operator from `start`. Plain iteration first; if
// that cycles, the averaged map M <- (M + S(M)) / 2 is iterated instead.
// Returns false if neither settles.
bool stable_operator_fixpoint(const CompiledProgram& compiled, Values& m,
                              const StableSearchConfig& cfg) {
  const double inner = cfg.tol / 100.0;
  const double stop = cfg.tol / 10.0;
  const Values start = m;
  for (int averaged = 0; averaged < 2; ++averaged) {
    m = start;
    for (std::size_t k = 0; k < cfg.max_iter; ++k) {
      auto fix = compiled.least_fixpoint(m, inner, cfg.max_iter);
      if (!fix.converged) return false;
      const double d = distance(fix.values, m);
      if (averaged) {
        for (std::size_t i = 0; i < m.size(); ++i) {
          m[i] = 0.5 * (m[i] + fix.values[i]);
        }
      } else {
        m = std::move(fix.values);
      }
      if (d < stop) return true;
    }
  }
  return false;
}

}  // namespace

Interpretation bottom_interpretation(const Program& program) {
  return constant_interpretation(program, kBottom);
}

Interpretation top_interpretation(const Program& program) {
  return constant_interpretation(program, kTop);
}

void require_total(const Program& program, const Interpretation& interp) {
  for (const auto& atom : program.atoms()) {
    if (!interp.contains(atom)) {
      throw Error("interpretation has no value for atom '" + atom + "'");
    }
  }
}

double max_distance(const Interpretation& a, const Interpretation& b) {
  double d = 0.0;
  for (const auto& [atom, v] : a) {
    auto it = b.find(atom);
    if (it == b.end()) {
      throw Error("interpretation has no value for atom '" + atom + "'");
    }
    d = std::max(d, std::abs(v - it->second));
  }
  return d;
}

bool satisfies(const Interpretation& interp, const Rule& rule, double tol) {
  double head = 0.0;
  if (rule.is_constraint()) {
    head = rule.head_constant();
  } else {
    auto it = interp.find(rule.head_atom());
    if (it == interp.end()) {
      throw Error("interpretation has no value for atom '" + rule.head_atom() +
                  "'");
    }
    head = it->second;
  }
  const double body = eval_body(rule.body, interp, tol);
  return leq(rule.weight, eval_implication(rule.impl, head, body, tol), tol);
}

bool is_model(const Interpretation& interp, const Program& program,
              double tol) {
  return std::all_of(program.rules.begin(), program.rules.end(),
                     [&](const Rule& r) { return satisfies(interp, r, tol); });
}

Program reduct(const Program& program, const Interpretation& m) {
  require_total(program, m);
  Program out;
  out.rules.reserve(program.rules.size());
  for (const auto& rule : program.rules) {
    Rule r = rule;
    r.body = rewrite_atoms(rule.body, [&](const std::string& name, int sign) {
      return sign < 0 ? Expr::constant(m.at(name)) : Expr::atom(name);
    });
    out.rules.push_back(std::move(r));
  }
  return out;
}

Program constraint_free_part(const Program& program) {
  Program out;
  for (const auto& rule : program.rules) {
    if (!rule.is_constraint()) out.rules.push_back(rule);
  }
  return out;
}

Interpretation immediate_consequence(const Program& program,
                                     const Interpretation& interp,
                                     double tol) {
  Interpretation out = bottom_interpretation(program);
  for (const auto& rule : program.rules) {
    if (rule.is_constraint()) continue;
    const double v = eval_conjunctor(rule.impl, rule.weight,
                                     eval_body(rule.body, interp, tol));
    double& slot = out[rule.head_atom()];
    slot = std::max(slot, v);
  }
  return out;
}

LeastModelResult least_model(const Program& program, double tol,
                             std::size_t max_iter) {
  if (!program.negative_atoms().empty()) {
    throw Error("least_model needs a program without negative occurrences");
  }
  LeastModelResult result;
  Interpretation current = bottom_interpretation(program);
  result.trace.iterates.push_back(current);
  if (current.empty()) {
    result.trace.converged = true;
    result.model = std::move(current);
    return result;
  }
  for (std::size_t k = 1; k <= max_iter; ++k) {
    Interpretation next = immediate_consequence(program, current, tol);
    const double d = max_distance(next, current);
    result.trace.iterations = k;
    result.trace.iterates.push_back(next);
    current = std::move(next);
    if (d < tol) {
      result.trace.converged = true;
      break;
    }
  }
  result.model = std::move(current);
  return result;
}

std::string_view to_string(Stability s) {
  switch (s) {
    case Stability::kStable:
      return "stable";
    case Stability::kNotStable:
      return "not stable";
    case Stability::kIndeterminate:
      return "indeterminate";
  }
  return "?";
}

StabilityResult check_stability(const Program& program, const Interpretation& m,
                                double tol, std::size_t max_iter) {
  require_total(program, m);
  const CompiledProgram compiled(program, tol);
  const Values values = compiled.to_values(m);
  const auto check = compiled.check_stable(values, tol, max_iter, true);
  StabilityResult result;
  result.constraints_ok = check.constraints_ok;
  result.least = compiled.to_interpretation(check.fixpoint.values);
  result.trace = to_trace(compiled, check.fixpoint);
  switch (check.verdict) {
    case CompiledProgram::Verdict::kStable:
      result.verdict = Stability::kStable;
      break;
    case CompiledProgram::Verdict::kNotStable:
      result.verdict = Stability::kNotStable;
      break;
    case CompiledProgram::Verdict::kIndeterminate:
      result.verdict = Stability::kIndeterminate;
      break;
  }
  return result;
}

bool is_stable(const Program& program, const Interpretation& m, double tol,
               std::size_t max_iter) {
  return check_stability(program, m, tol, max_iter).verdict ==
         Stability::kStable;
}

StableOperatorResult stable_operator(const Program& program,
                                     const Interpretation& m, double tol,
                                     std::size_t max_iter) {
  require_total(program, m);
  const CompiledProgram compiled(program, tol);
  const auto fix =
      compiled.least_fixpoint(compiled.to_values(m), tol / 100.0, max_iter);
  return {compiled.to_interpretation(fix.values), fix.converged};
}

std::vector<Interpretation> find_stable_models(const Program& program,
                                               const StableSearchConfig& cfg) {
  if (cfg.seeds < 1) throw std::invalid_argument("seeds must be at least 1");
  const CompiledProgram compiled(program, cfg.tol);
  const std::size_t n = compiled.size();
  std::vector<Values> found;

  if (cfg.mode == SearchMode::kGrid) {
    const std::vector<double> grid = unit_grid(cfg.grid_step);
    const std::vector<std::vector<double>> choices(n, grid);
    if (product_size(choices, cfg.max_points) > cfg.max_points) {
      throw BudgetExceeded("grid has more than " +
                           std::to_string(cfg.max_points) + " points");
    }
    for_each_point(choices, [&](const Values& point) {
      const auto check = compiled.check_stable(point, cfg.tol, cfg.max_iter);
      if (check.verdict == CompiledProgram::Verdict::kStable) {
        found.push_back(point);
      }
      return true;
    });
  } else {
    std::vector<Values> starts;
    starts.emplace_back(n, kBottom);
    if (cfg.seeds >= 2) starts.emplace_back(n, kTop);
    std::mt19937_64 rng(cfg.rng_seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (std::size_t s = 2; s < cfg.seeds; ++s) {
      Values v(n);
      for (auto& x : v) x = unit(rng);
      starts.push_back(std::move(v));
    }
    for (auto& m : starts) {
      if (!stable_operator_fixpoint(compiled, m, cfg)) continue;
      const auto check = compiled.check_stable(m, cfg.tol, cfg.max_iter);
      if (check.verdict == CompiledProgram::Verdict::kStable) {
        found.push_back(std::move(m));
      }
    }
  }

  sort_and_merge(found, cfg.tol);
  std::vector<Interpretation> out;
  out.reserve(found.size());
  for (const auto& v : found) out.push_back(compiled.to_interpretation(v));
  return out;
}

bool is_minimal_model(const Program& program, const Interpretation& m,
                      double grid_step, double tol, std::size_t max_points) {
  require_total(program, m);
  const CompiledProgram compiled(program, tol);
  const Values target = compiled.to_values(m);
  const std::vector<double> grid = unit_grid(grid_step);
  std::vector<std::vector<double>> choices;
  for (double v : target) {
    std::vector<double> below;
    for (double g : grid) {
      if (g < v - tol) below.push_back(g);
    }
    below.push_back(v);
    choices.push_back(std::move(below));
  }
  if (product_size(choices, max_points) > max_points) {
    throw BudgetExceeded("more than " + std::to_string(max_points) +
                         " interpretations below the model");
  }
  bool minimal = true;
  for_each_point(choices, [&](const Values& point) {
    if (point != target && compiled.is_model(point, tol)) {
      minimal = false;
      return false;
    }
    return true;
  });
  return minimal;
}

}  // namespace emalp
