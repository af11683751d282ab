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

#ifndef EMALP_TESTS_SUPPORT_FIXTURES_HPP_
#define EMALP_TESTS_SUPPORT_FIXTURES_HPP_

#include "emalp/program.hpp"

namespace fixtures {

// Four atoms, three rules with mixed-polarity aggregators, one constraint
// (q >= 0.3) and one fact.
inline constexpr const char* kSensor = R"(
p <-p min(div1(q, add(add(s, t), 0.1)), 1) with 0.5;
q <-p max(neg1(s), neg2(t)) with 0.6;
0.7 <-l neg1(q) with 1;
s <-g 1 with 0.8;
t <-g max(s, 0.7) with 0.8;
)";

// kSensor without the constraint.
inline constexpr const char* kSensorFree = R"(
p <-p min(div1(q, add(add(s, t), 0.1)), 1) with 0.5;
q <-p max(neg1(s), neg2(t)) with 0.6;
s <-g 1 with 0.8;
t <-g max(s, 0.7) with 0.8;
)";

inline constexpr const char* kMutual = R"(
p <-g neg1(q) with 1;
q <-g neg1(p) with 1;
)";

inline constexpr const char* kMutualCapped = R"(
p <-g neg1(q) with 1;
q <-g neg1(p) with 1;
0.5 <-g p with 1;
)";

inline emalp::Program sensor() { return emalp::parse_program(kSensor); }
inline emalp::Program sensor_free() {
  return emalp::parse_program(kSensorFree);
}

// The stable model of kSensor.
inline emalp::Interpretation sensor_stable() {
  return {{"p", 9.0 / 85.0}, {"q", 0.36}, {"s", 0.8}, {"t", 0.8}};
}

// A model of kSensor that is neither minimal nor stable.
inline emalp::Interpretation sensor_model() {
  return {{"p", 0.25}, {"q", 0.4}, {"s", 0.9}, {"t", 0.85}};
}

}  // namespace fixtures

#endif  // EMALP_TESTS_SUPPORT_FIXTURES_HPP_
