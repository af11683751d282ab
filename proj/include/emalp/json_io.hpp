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

#ifndef EMALP_JSON_IO_HPP_
#define EMALP_JSON_IO_HPP_

#include <json.hpp>

#include "emalp/program.hpp"
#include "emalp/semantics.hpp"
#include "emalp/transform.hpp"

namespace emalp {

using Json = nlohmann::ordered_json;

Json to_json(const Interpretation& interp);
// Expects an object of atom -> number in [0,1]; throws Error otherwise.
Interpretation interpretation_from_json(const Json& j);

// {"iterates": [...], "converged": bool, "iterations": n}
Json to_json(const FixpointTrace& trace);

Json to_json(const ValidationReport& report);
Json to_json(const ContinuityReport& report);

// The manifest written next to a translated program: method, parameters
// and fresh atoms. Programs are not embedded.
Json to_json(const TranslationRecord& rec);
// Rebuilds a record from its manifest and the two programs.
TranslationRecord record_from_json(const Json& j, Program source,
                                   Program target);

Json to_json(const EquivalenceReport& report);

}  // namespace emalp

#endif  // EMALP_JSON_IO_HPP_
