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

#include "emalp/json_io.hpp"

#include "emalp/error.hpp"

namespace emalp {

namespace {

template <typename T, typename Parse>
T required_enum(const Json& j, const char* key, Parse parse) {
  if (!j.contains(key) || !j[key].is_string()) {
    throw Error(std::string("record: missing string field '") + key + "'");
  }
  const auto value = parse(j[key].get<std::string>());
  if (!value) {
    throw Error(std::string("record: bad value for '") + key + "'");
  }
  return *value;
}

}  // namespace

Json to_json(const Interpretation& interp) {
  Json j = Json::object();
  for (const auto& [atom, v] : interp) j[atom] = v;
  return j;
}

Interpretation interpretation_from_json(const Json& j) {
  if (!j.is_object()) throw Error("interpretation must be a JSON object");
  Interpretation interp;
  for (const auto& [atom, v] : j.items()) {
    if (!v.is_number()) {
      throw Error("value of '" + atom + "' is not a number");
    }
    const double x = v.get<double>();
    if (!(x >= 0.0 && x <= 1.0)) {
      throw Error("value of '" + atom + "' outside [0,1]");
    }
    interp.emplace(atom, x);
  }
  return interp;
}

Json to_json(const FixpointTrace& trace) {
  Json iterates = Json::array();
  for (const auto& row : trace.iterates) iterates.push_back(to_json(row));
  return {{"iterates", iterates},
          {"converged", trace.converged},
          {"iterations", trace.iterations}};
}

Json to_json(const ValidationReport& report) {
  Json issues = Json::array();
  for (const auto& issue : report.issues) {
    issues.push_back({{"rule", issue.rule + 1}, {"message", issue.message}});
  }
  return {{"valid", report.valid},
          {"class", to_string(report.program_class)},
          {"issues", issues}};
}

Json to_json(const ContinuityReport& report) {
  return {{"continuous", report.continuous},
          {"constraint_free", report.constraint_free},
          {"existence_guaranteed", report.existence_guaranteed},
          {"discontinuities", report.discontinuities}};
}

Json to_json(const TranslationRecord& rec) {
  Json fresh = Json::array();
  for (const auto& f : rec.fresh_atoms) {
    Json entry = {{"name", f.name}, {"role", to_string(f.role)}};
    if (f.role == FreshRole::kNegationWitness) entry["origin"] = f.origin;
    if (f.role == FreshRole::kConstantWitness) entry["constant"] = f.constant;
    fresh.push_back(std::move(entry));
  }
  Json j = {{"method", to_string(rec.method)},
            {"negation", to_string(rec.negation)},
            {"conj", to_string(rec.conj)}};
  j["impl"] = rec.impl_from_constraint ? Json("constraint")
                                       : Json(to_string(rec.impl));
  j["source_rules"] = rec.source.rules.size();
  j["target_rules"] = rec.target.rules.size();
  j["fresh_atoms"] = std::move(fresh);
  return j;
}

TranslationRecord record_from_json(const Json& j, Program source,
                                   Program target) {
  if (!j.is_object()) throw Error("record must be a JSON object");
  TranslationRecord rec;
  rec.method = required_enum<Method>(j, "method", method_from_name);
  rec.negation = required_enum<Negation>(j, "negation", negation_from_name);
  rec.conj = required_enum<AdjointPair>(j, "conj", adjoint_pair_from_tag);
  if (j.value("impl", "") == "constraint") {
    rec.impl_from_constraint = true;
  } else {
    rec.impl = required_enum<AdjointPair>(j, "impl", adjoint_pair_from_tag);
  }
  if (!j.contains("fresh_atoms") || !j["fresh_atoms"].is_array()) {
    throw Error("record: missing array field 'fresh_atoms'");
  }
  for (const auto& entry : j["fresh_atoms"]) {
    FreshAtom f;
    if (!entry.contains("name") || !entry["name"].is_string()) {
      throw Error("record: fresh atom without a name");
    }
    f.name = entry["name"].get<std::string>();
    f.role = required_enum<FreshRole>(entry, "role", fresh_role_from_name);
    if (f.role == FreshRole::kNegationWitness) {
      if (!entry.contains("origin") || !entry["origin"].is_string()) {
        throw Error("record: negation witness '" + f.name + "' has no origin");
      }
      f.origin = entry["origin"].get<std::string>();
    }
    if (f.role == FreshRole::kConstantWitness) {
      if (!entry.contains("constant") || !entry["constant"].is_number()) {
        throw Error("record: constant witness '" + f.name +
                    "' has no constant");
      }
      f.constant = entry["constant"].get<double>();
    }
    rec.fresh_atoms.push_back(std::move(f));
  }
  rec.source = std::move(source);
  rec.target = std::move(target);
  return rec;
}

Json to_json(const EquivalenceReport& report) {
  Json source = Json::array();
  for (const auto& m : report.source_models) source.push_back(to_json(m));
  Json target = Json::array();
  for (const auto& m : report.target_models) target.push_back(to_json(m));
  Json witnesses = Json::array();
  for (const auto& [s, t] : report.witnesses) {
    witnesses.push_back({{"source", to_json(s)}, {"target", to_json(t)}});
  }
  return {{"bijection", report.bijection},
          {"witnesses_ok", report.witnesses_ok},
          {"negations_ok", report.negations_ok},
          {"source_points", report.source_points},
          {"target_points", report.target_points},
          {"source_stable", report.source_models.size()},
          {"target_stable", report.target_models.size()},
          {"source_models", source},
          {"target_models", target},
          {"witnesses", witnesses},
          {"counterexamples", report.counterexamples}};
}

}  // namespace emalp
