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

#include "emalp/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "emalp/error.hpp"
#include "emalp/json_io.hpp"
#include "emalp/semantics.hpp"
#include "emalp/transform.hpp"

namespace emalp {

namespace {

struct Options {
  double tol = kDefaultTolerance;
  std::size_t max_iter = kDefaultMaxIter;
  std::string output = "json";
  bool allow_repeats = false;

  std::string file;
  std::string target_file;
  std::string interp_path;
  std::string out_path;
  std::string record_path;
  std::string method;
  std::string impl;
  std::string conj = "g";
  std::string neg = "neg1";
  double grid = 0.0;
  std::size_t seeds = 16;
  std::uint64_t rng_seed = 0;
  std::size_t budget = 1'000'000;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

ValidationOptions validation(const Options& o) {
  return {o.allow_repeats, o.tol};
}

Program load_program(const std::string& path, const Options& o) {
  const std::string text = read_file(path);
  try {
    return parse_program(text, validation(o));
  } catch (const ParseError& e) {
    throw Error(path + ":" + e.what());
  } catch (const ValidationError& e) {
    throw Error(path + ": " + e.what());
  }
}

Interpretation load_interpretation(const std::string& path,
                                   const Program& program) {
  Json j;
  try {
    j = Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw Error(path + ": " + e.what());
  }
  Interpretation interp = interpretation_from_json(j);
  const auto atoms = program.atoms();
  for (const auto& [atom, v] : interp) {
    if (!std::binary_search(atoms.begin(), atoms.end(), atom)) {
      throw Error(path + ": atom '" + atom + "' does not occur in the program");
    }
  }
  require_total(program, interp);
  return interp;
}

AdjointPair parse_pair(const std::string& name) {
  const auto pair = adjoint_pair_from_tag(name);
  if (!pair) throw Error("unknown adjoint pair '" + name + "'");
  return *pair;
}

Negation parse_negation(const std::string& name) {
  const auto neg = negation_from_name(name);
  if (!neg) throw Error("unknown negation '" + name + "'");
  return *neg;
}

std::string cell(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

void print_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size(), 0);
  auto widen = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      width[i] = std::max(width[i], row[i].size());
    }
  };
  widen(header);
  for (const auto& row : rows) widen(row);
  auto line = [&](const std::vector<std::string>& row) {
    std::string text;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) text += "  ";
      text += row[i] + std::string(width[i] - row[i].size(), ' ');
    }
    while (!text.empty() && text.back() == ' ') text.pop_back();
    out << text << '\n';
  };
  line(header);
  std::size_t total = 0;
  for (std::size_t w : width) total += w;
  out << std::string(total + 2 * (width.size() - 1), '-') << '\n';
  for (const auto& row : rows) line(row);
}

void print_interpretations(std::ostream& out,
                           const std::vector<Interpretation>& rows,
                           const std::vector<std::string>& labels) {
  std::vector<std::string> header{""};
  if (!rows.empty()) {
    for (const auto& [atom, v] : rows.front()) header.push_back(atom);
  }
  std::vector<std::vector<std::string>> cells;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::vector<std::string> row{labels[i]};
    for (const auto& [atom, v] : rows[i]) row.push_back(cell(v));
    cells.push_back(std::move(row));
  }
  print_table(out, header, cells);
}

void print_trace(std::ostream& out, const FixpointTrace& trace) {
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < trace.iterates.size(); ++k) {
    labels.push_back(k == 0 ? "I_bot" : "T^" + std::to_string(k));
  }
  print_interpretations(out, trace.iterates, labels);
  out << "converged: " << (trace.converged ? "true" : "false")
      << ", iterations: " << trace.iterations << '\n';
}

void print_fields(std::ostream& out, const Json& j) {
  for (const auto& [key, value] : j.items()) {
    out << key << ": "
        << (value.is_string() ? value.get<std::string>() : value.dump())
        << '\n';
  }
}

bool table(const Options& o) { return o.output == "table"; }

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
  Program program;
  try {
    program = parse_program_unchecked(read_file(o.file));
  } catch (const ParseError& e) {
    throw Error(o.file + ":" + e.what());
  }
  const ValidationReport report = validate_program(program, validation(o));
  Json polarity = Json::array();
  for (std::size_t i = 0; i < program.rules.size(); ++i) {
    Json atoms = Json::object();
    for (const auto& [atom, p] : polarity_of(program.rules[i].body)) {
      atoms[atom] = to_string(p);
    }
    polarity.push_back({{"rule", i + 1}, {"atoms", atoms}});
  }
  Json j = to_json(report);
  j["rules"] = program.rules.size();
  j["constraints"] = program.constraint_count();
  j["atoms"] = program.atoms();
  j["negative_atoms"] = program.negative_atoms();
  j["polarity"] = polarity;
  j["continuity"] = to_json(check_continuity(program));
  if (table(o)) {
    print_fields(out, j);
  } else {
    out << j.dump(2) << '\n';
  }
  for (const auto& issue : report.issues) {
    err << o.file << ": rule " << issue.rule + 1 << ": " << issue.message
        << '\n';
  }
  return report.valid ? kExitOk : kExitInputError;
}

int cmd_eval(const Options& o, std::ostream& out) {
  const Program program = load_program(o.file, o);
  const Interpretation m = load_interpretation(o.interp_path, program);
  Json rules = Json::array();
  bool model = true;
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < program.rules.size(); ++i) {
    const Rule& rule = program.rules[i];
    const double head =
        rule.is_constraint() ? rule.head_constant() : m.at(rule.head_atom());
    const double body = eval_body(rule.body, m, o.tol);
    const double implication = eval_implication(rule.impl, head, body, o.tol);
    const bool ok = satisfies(m, rule, o.tol);
    model = model && ok;
    rules.push_back({{"rule", i + 1},
                     {"text", serialize_rule(rule)},
                     {"head", head},
                     {"body", body},
                     {"implication", implication},
                     {"weight", rule.weight},
                     {"satisfied", ok}});
    rows.push_back({std::to_string(i + 1), cell(head), cell(body),
                    cell(implication), cell(rule.weight), ok ? "yes" : "no"});
  }
  if (table(o)) {
    print_table(out, {"rule", "head", "body", "implication", "weight", "ok"},
                rows);
    out << "model: " << (model ? "true" : "false") << '\n';
  } else {
    out << Json{{"model", model}, {"rules", rules}}.dump(2) << '\n';
  }
  return kExitOk;
}

int cmd_reduct(const Options& o, std::ostream& out) {
  const Program program = load_program(o.file, o);
  const Interpretation m = load_interpretation(o.interp_path, program);
  const std::string text = serialize_program(reduct(program, m)) + "\n";
  if (o.out_path.empty()) {
    out << text;
  } else {
    write_file(o.out_path, text);
  }
  return kExitOk;
}

int cmd_lfp(const Options& o, std::ostream& out) {
  const Program program = load_program(o.file, o);
  const LeastModelResult result = least_model(program, o.tol, o.max_iter);
  if (table(o)) {
    print_trace(out, result.trace);
  } else {
    out << Json{{"model", to_json(result.model)},
                {"trace", to_json(result.trace)}}
               .dump(2)
        << '\n';
  }
  return kExitOk;
}

int cmd_stable_verify(const Options& o, std::ostream& out) {
  const Program program = load_program(o.file, o);
  const Interpretation m = load_interpretation(o.interp_path, program);
  const StabilityResult result = check_stability(program, m, o.tol, o.max_iter);
  Json verdict = result.verdict == Stability::kIndeterminate
                     ? Json("indeterminate")
                     : Json(result.verdict == Stability::kStable);
  if (table(o)) {
    out << "stable: "
        << (verdict.is_string() ? verdict.get<std::string>() : verdict.dump())
        << '\n';
    out << "constraints_ok: " << (result.constraints_ok ? "true" : "false")
        << '\n';
    print_trace(out, result.trace);
  } else {
    out << Json{{"stable", verdict},
                {"constraints_ok", result.constraints_ok},
                {"least", to_json(result.least)},
                {"trace", to_json(result.trace)}}
               .dump(2)
        << '\n';
  }
  return kExitOk;
}

int cmd_stable_search(const Options& o, std::ostream& out) {
  const Program program = load_program(o.file, o);
  StableSearchConfig cfg;
  cfg.tol = o.tol;
  cfg.max_iter = o.max_iter;
  cfg.seeds = o.seeds;
  cfg.rng_seed = o.rng_seed;
  cfg.max_points = o.budget;
  if (o.grid > 0.0) {
    if (o.grid > 0.5) throw Error("--grid must lie in (0, 0.5]");
    cfg.mode = SearchMode::kGrid;
    cfg.grid_step = o.grid;
  }
  const auto models = find_stable_models(program, cfg);
  if (table(o)) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < models.size(); ++i) {
      labels.push_back("M" + std::to_string(i + 1));
    }
    out << "stable models: " << models.size() << '\n';
    if (!models.empty()) print_interpretations(out, models, labels);
    return kExitOk;
  }
  Json list = Json::array();
  for (const auto& m : models) list.push_back(to_json(m));
  Json j = {{"mode", cfg.mode == SearchMode::kGrid ? "grid" : "iterate"}};
  if (cfg.mode == SearchMode::kGrid) {
    j["grid_step"] = cfg.grid_step;
  } else {
    j["seeds"] = cfg.seeds;
    j["rng_seed"] = cfg.rng_seed;
  }
  j["count"] = models.size();
  j["models"] = list;
  out << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_transform(const Options& o, std::ostream& out) {
  const Program program = load_program(o.file, o);
  const auto method = method_from_name(o.method);
  if (!method) throw Error("unknown method '" + o.method + "'");
  TranslationRecord rec;
  switch (*method) {
    case Method::kFc: {
      FcOptions fc;
      if (!o.impl.empty() && o.impl != "constraint") fc.impl = parse_pair(o.impl);
      fc.conj = parse_pair(o.conj);
      fc.negation = parse_negation(o.neg);
      rec = eliminate_constraints_fc(program, fc);
      break;
    }
    case Method::kJanssen: {
      JanssenOptions janssen;
      if (!o.impl.empty()) janssen.impl = parse_pair(o.impl);
      janssen.conj = parse_pair(o.conj);
      janssen.negation = parse_negation(o.neg);
      rec = eliminate_constraints_janssen(program, janssen);
      break;
    }
    case Method::kManlp: {
      ManlpOptions manlp;
      if (!o.impl.empty()) manlp.impl = parse_pair(o.impl);
      manlp.negation = parse_negation(o.neg);
      rec = to_manlp(program, manlp);
      break;
    }
  }
  const std::string record_path =
      o.record_path.empty() ? o.out_path + ".record.json" : o.record_path;
  write_file(o.out_path, serialize_program(rec.target) + "\n");
  write_file(record_path, to_json(rec).dump(2) + "\n");
  std::vector<std::string> fresh;
  for (const auto& f : rec.fresh_atoms) fresh.push_back(f.name);
  Json j = {{"method", to_string(rec.method)},
            {"source_rules", rec.source.rules.size()},
            {"target_rules", rec.target.rules.size()},
            {"target_class", to_string(rec.target.classify())},
            {"fresh_atoms", fresh},
            {"target", o.out_path},
            {"record", record_path}};
  if (table(o)) {
    print_fields(out, j);
  } else {
    out << j.dump(2) << '\n';
  }
  return kExitOk;
}

int cmd_equiv(const Options& o, std::ostream& out) {
  Program source = load_program(o.file, o);
  Program target = load_program(o.target_file, o);
  Json manifest;
  try {
    manifest = Json::parse(read_file(o.record_path));
  } catch (const Json::parse_error& e) {
    throw Error(o.record_path + ": " + e.what());
  }
  const TranslationRecord rec =
      record_from_json(manifest, std::move(source), std::move(target));
  EquivalenceOptions eq;
  eq.grid_step = o.grid > 0.0 ? o.grid : 0.5;
  eq.tol = o.tol;
  eq.max_iter = o.max_iter;
  eq.max_points = o.budget;
  const EquivalenceReport report = verify_equivalence(rec, eq);
  if (table(o)) {
    out << "bijection: " << (report.bijection ? "true" : "false") << '\n'
        << "source stable models: " << report.source_models.size() << '\n'
        << "target stable models: " << report.target_models.size() << '\n';
    for (const auto& [s, t] : report.witnesses) {
      out << "witness: " << to_json(s).dump() << " -> " << to_json(t).dump()
          << '\n';
    }
    for (const auto& c : report.counterexamples) {
      out << "counterexample: " << c << '\n';
    }
  } else {
    out << to_json(report).dump(2) << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  Options o;
  CLI::App app{"Extended multi-adjoint logic programs: checking, semantics "
               "and transformations",
               "emalp"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--tol", o.tol, "Comparison tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-iter", o.max_iter, "Fixpoint iteration cap")
      ->check(CLI::PositiveNumber);
  app.add_option("--output", o.output, "Report format")
      ->check(CLI::IsMember({"json", "table"}));
  app.add_flag("--allow-repeats", o.allow_repeats,
               "Accept repeated same-polarity atoms in a body");

  auto* check = app.add_subcommand("check", "Parse, validate and classify");
  check->add_option("file", o.file)->required();

  auto* eval = app.add_subcommand("eval", "Model check of an interpretation");
  eval->add_option("file", o.file)->required();
  eval->add_option("--interp", o.interp_path, "Interpretation JSON")
      ->required();

  auto* red = app.add_subcommand("reduct", "Reduct w.r.t. an interpretation");
  red->add_option("file", o.file)->required();
  red->add_option("--interp", o.interp_path, "Interpretation JSON")
      ->required();
  red->add_option("--out", o.out_path, "Write the reduct here");

  auto* lfp = app.add_subcommand("lfp", "Least model of a positive program");
  lfp->add_option("file", o.file)->required();

  auto* stable = app.add_subcommand("stable", "Stable models");
  stable->require_subcommand(1);
  auto* verify = stable->add_subcommand("verify", "Check one interpretation");
  verify->add_option("file", o.file)->required();
  verify->add_option("--interp", o.interp_path, "Interpretation JSON")
      ->required();
  auto* search = stable->add_subcommand("search", "Search for stable models");
  search->add_option("file", o.file)->required();
  search->add_option("--grid", o.grid, "Exhaustive grid step (grid mode)");
  search->add_option("--seeds", o.seeds, "Starts for iterate mode")
      ->check(CLI::PositiveNumber);
  search->add_option("--rng-seed", o.rng_seed, "Seed for random starts");
  search->add_option("--budget", o.budget, "Grid point budget");

  auto* transform = app.add_subcommand("transform", "Translate a program");
  transform->add_option("file", o.file)->required();
  transform->add_option("--method", o.method, "fc, janssen or manlp")
      ->required()
      ->check(CLI::IsMember({"fc", "janssen", "manlp"}));
  transform->add_option("--impl", o.impl,
                        "Implication of added rules (g, p, l; fc also "
                        "accepts 'constraint')");
  transform->add_option("--conj", o.conj, "Conjunctor of guard rules");
  transform->add_option("--neg", o.neg, "Negation (neg1 or neg2)");
  transform->add_option("--out", o.out_path, "Target program file")
      ->required();
  transform->add_option("--record", o.record_path,
                        "Record file (default <out>.record.json)");

  auto* equiv = app.add_subcommand("equiv", "Compare stable models");
  equiv->add_option("source", o.file)->required();
  equiv->add_option("target", o.target_file)->required();
  equiv->add_option("--record", o.record_path, "Translation record")
      ->required();
  equiv->add_option("--grid", o.grid, "Grid step (default 0.5)");
  equiv->add_option("--budget", o.budget, "Enumeration point budget");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*check) return cmd_check(o, out, err);
    if (*eval) return cmd_eval(o, out);
    if (*red) return cmd_reduct(o, out);
    if (*lfp) return cmd_lfp(o, out);
    if (*verify) return cmd_stable_verify(o, out);
    if (*search) return cmd_stable_search(o, out);
    if (*transform) return cmd_transform(o, out);
    if (*equiv) return cmd_equiv(o, out);
  } catch (const BudgetExceeded& e) {
    err << "error: budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace emalp
