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

#include <cmath>

#include "emalp/error.hpp"
#include "emalp/json_io.hpp"
#include "gtest/gtest.h"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace {

using emalp::AdjointPair;
using emalp::FreshRole;
using emalp::Interpretation;
using emalp::Method;
using emalp::Negation;
using emalp::ProgramClass;

emalp::Rule rule(const char* text) {
  return emalp::parse_program(text).rules.at(0);
}

emalp::TranslationRecord sensor_fc() {
  emalp::FcOptions opts;
  opts.impl = AdjointPair::kLukasiewicz;
  return emalp::eliminate_constraints_fc(fixtures::sensor(), opts);
}

TEST(Fc, SensorConstraintRewrite) {
  const auto rec = sensor_fc();
  EXPECT_EQ(Method::kFc, rec.method);
  ASSERT_EQ(5u, rec.target.rules.size());
  EXPECT_EQ(rule("p_bot <-l and_g(f(0, neg1(p_bot)), f(0.7, neg1(q))) with 1;"),
            rec.target.rules[2]);
  for (std::size_t i : {0u, 1u, 3u, 4u}) {
    EXPECT_EQ(fixtures::sensor().rules[i], rec.target.rules[i]);
  }
  ASSERT_EQ(1u, rec.fresh_atoms.size());
  EXPECT_EQ("p_bot", rec.fresh_atoms[0].name);
  EXPECT_EQ(FreshRole::kBottomWitness, rec.fresh_atoms[0].role);
  EXPECT_EQ(0u, rec.target.constraint_count());
  EXPECT_TRUE(emalp::validate_program(rec.target).valid);
}

TEST(Fc, DefaultKeepsConstraintImplication) {
  const auto rec = emalp::eliminate_constraints_fc(
      emalp::parse_program("0.5 <-p q with 1; q <-g 1 with 0.9;"));
  EXPECT_TRUE(rec.impl_from_constraint);
  EXPECT_EQ(AdjointPair::kProduct, rec.target.rules[0].impl);
}

TEST(Fc, SharedBottomWitness) {
  const auto rec = emalp::eliminate_constraints_fc(emalp::parse_program(
      "0.5 <-g p with 1; 0.2 <-g q with 1; p <-g 1 with 0.4;"));
  EXPECT_EQ(1u, rec.fresh_atoms.size());
  EXPECT_EQ(3u, rec.target.rules.size());
  EXPECT_EQ("p_bot", rec.target.rules[0].head_atom());
  EXPECT_EQ("p_bot", rec.target.rules[1].head_atom());
}

TEST(Fc, ConstraintFreeIsIdentity) {
  const auto src = fixtures::sensor_free();
  const auto rec = emalp::eliminate_constraints_fc(src);
  EXPECT_EQ(src, rec.target);
  EXPECT_TRUE(rec.fresh_atoms.empty());
}

TEST(Fc, FreshNameCollision) {
  const auto rec = emalp::eliminate_constraints_fc(emalp::parse_program(
      "p_bot <-g 1 with 0.3; p_bot_1 <-g 1 with 0.2; 0.5 <-g p_bot with 1;"));
  ASSERT_EQ(1u, rec.fresh_atoms.size());
  EXPECT_EQ("p_bot_2", rec.fresh_atoms[0].name);
  EXPECT_EQ("p_bot_2", rec.target.rules[2].head_atom());
}

TEST(Janssen, SensorCount) {
  const auto rec = emalp::eliminate_constraints_janssen(fixtures::sensor());
  EXPECT_EQ(7u, rec.target.rules.size());
  EXPECT_EQ(0u, rec.target.constraint_count());
  ASSERT_EQ(2u, rec.fresh_atoms.size());
  EXPECT_EQ(FreshRole::kConstantWitness, rec.fresh_atoms[1].role);
  EXPECT_EQ(0.7, rec.fresh_atoms[1].constant);
  const std::string pc = rec.fresh_atoms[1].name;
  EXPECT_EQ(pc, rec.target.rules[2].head_atom());
  EXPECT_EQ(rule("x <-l 0.7 with 1;").body, rec.target.rules[5].body);
  EXPECT_EQ(pc, rec.target.rules[5].head_atom());
}

TEST(Janssen, SharedConstantAddsTwoRules) {
  const auto src = emalp::parse_program(
      "0.7 <-g p with 1; 0.7 <-l q with 1; p <-g 1 with 0.5; q <-g 1 with 0.5;");
  const auto rec = emalp::eliminate_constraints_janssen(src);
  EXPECT_EQ(src.rules.size() + 2, rec.target.rules.size());
  const auto two = emalp::eliminate_constraints_janssen(emalp::parse_program(
      "0.7 <-g p with 1; 0.3 <-l q with 1; p <-g 1 with 0.5; q <-g 1 with 0.5;"));
  EXPECT_EQ(4u + 4u, two.target.rules.size());
}

TEST(Janssen, ConstraintFreeIsIdentity) {
  const auto src = fixtures::sensor_free();
  EXPECT_EQ(src, emalp::eliminate_constraints_janssen(src).target);
}

TEST(Manlp, FromFcTarget) {
  const auto fc = sensor_fc();
  const auto rec = emalp::to_manlp(fc.target);
  ASSERT_EQ(9u, rec.target.rules.size());
  EXPECT_EQ(ProgramClass::kManlp, rec.target.classify());
  EXPECT_EQ((std::vector<std::string>{"p_bot", "q", "s", "t"}),
            fc.target.negative_atoms());
  EXPECT_EQ(rule("not_p_bot <-g neg1(p_bot) with 1;"), rec.target.rules[5]);
  EXPECT_EQ(rule("q <-p max(neg1(neg1(not_s)), neg2(neg1(not_t))) with 0.6;"),
            rec.target.rules[1]);
  ASSERT_EQ(4u, rec.fresh_atoms.size());
  for (const auto& f : rec.fresh_atoms) {
    EXPECT_EQ(FreshRole::kNegationWitness, f.role);
    EXPECT_EQ("not_" + f.origin, f.name);
  }
}

TEST(Manlp, Rejections) {
  EXPECT_THROW(emalp::to_manlp(fixtures::sensor()), emalp::Error);
  emalp::ManlpOptions opts;
  opts.negation = Negation::kNeg2;
  EXPECT_THROW(emalp::to_manlp(fixtures::sensor_free(), opts), emalp::Error);
}

TEST(Manlp, PositiveIsIdentity) {
  const auto src = emalp::parse_program("p <-g q with 1; q <-p 1 with 0.5;");
  const auto rec = emalp::to_manlp(src);
  EXPECT_EQ(src, rec.target);
  EXPECT_TRUE(rec.fresh_atoms.empty());
}

TEST(Lift, SensorChain) {
  const auto fc = sensor_fc();
  const auto n_tilde = emalp::lift_interpretation(fixtures::sensor_stable(), fc);
  EXPECT_EQ(0.0, n_tilde.at("p_bot"));
  EXPECT_EQ(5u, n_tilde.size());
  EXPECT_TRUE(emalp::is_stable(fc.target, n_tilde));

  const auto manlp = emalp::to_manlp(fc.target);
  const auto n = emalp::lift_interpretation(n_tilde, manlp);
  EXPECT_NEAR(0.64, n.at("not_q"), 1e-12);
  EXPECT_NEAR(0.2, n.at("not_s"), 1e-12);
  EXPECT_NEAR(0.2, n.at("not_t"), 1e-12);
  EXPECT_NEAR(1.0, n.at("not_p_bot"), 1e-12);
  EXPECT_TRUE(emalp::is_stable(manlp.target, n));
  EXPECT_TRUE(oracle::is_stable(manlp.target, n));

  EXPECT_EQ(n_tilde, emalp::project_interpretation(n, manlp));
  EXPECT_EQ(fixtures::sensor_stable(),
            emalp::project_interpretation(n_tilde, fc));
}

TEST(Lift, BottomGivesTopNegations) {
  const auto rec = emalp::to_manlp(fixtures::sensor_free());
  const auto lifted = emalp::lift_interpretation(
      emalp::bottom_interpretation(rec.source), rec);
  for (const auto& f : rec.fresh_atoms) EXPECT_EQ(1.0, lifted.at(f.name));
}

TEST(Lift, JanssenConstants) {
  const auto rec = emalp::eliminate_constraints_janssen(fixtures::sensor());
  const auto lifted = emalp::lift_interpretation(fixtures::sensor_stable(), rec);
  EXPECT_EQ(0.7, lifted.at(rec.fresh_atoms[1].name));
  EXPECT_EQ(0.0, lifted.at("p_bot"));
  EXPECT_TRUE(emalp::is_stable(rec.target, lifted));
}

TEST(Continuity, Examples) {
  const auto free = emalp::check_continuity(fixtures::sensor_free());
  EXPECT_TRUE(free.continuous);
  EXPECT_TRUE(free.constraint_free);
  EXPECT_TRUE(free.existence_guaranteed);

  const auto fc = emalp::check_continuity(sensor_fc().target);
  EXPECT_FALSE(fc.continuous);
  EXPECT_FALSE(fc.existence_guaranteed);
  ASSERT_EQ(2u, fc.discontinuities.size());
  EXPECT_EQ("rule 3: f", fc.discontinuities[0]);

  EXPECT_TRUE(emalp::check_continuity(emalp::Program{}).continuous);

  const auto constrained = emalp::check_continuity(fixtures::sensor());
  EXPECT_TRUE(constrained.continuous);
  EXPECT_FALSE(constrained.constraint_free);
  EXPECT_FALSE(constrained.existence_guaranteed);
}

TEST(Equivalence, BoundedChoice) {
  const auto src = emalp::parse_program(fixtures::kMutualCapped);
  const auto report =
      emalp::verify_equivalence(emalp::eliminate_constraints_fc(src));
  EXPECT_TRUE(report.bijection);
  EXPECT_TRUE(report.witnesses_ok);
  EXPECT_EQ(9u, report.source_points);
  ASSERT_EQ(2u, report.source_models.size());
  EXPECT_EQ((Interpretation{{"p", 0.0}, {"q", 1.0}}), report.source_models[0]);
  EXPECT_EQ((Interpretation{{"p", 0.5}, {"q", 0.5}}), report.source_models[1]);
  EXPECT_EQ(2u, report.target_models.size());
  EXPECT_TRUE(report.counterexamples.empty());
}

TEST(Equivalence, AgreesWithOracleGrid) {
  const auto src = emalp::parse_program(fixtures::kMutualCapped);
  const auto report =
      emalp::verify_equivalence(emalp::eliminate_constraints_fc(src));
  EXPECT_EQ(oracle::grid_stable_models(src, 0.5), report.source_models);
}

TEST(Equivalence, AllMethodsOnMutual) {
  const auto src = emalp::parse_program(fixtures::kMutualCapped);
  const auto fc = emalp::eliminate_constraints_fc(src);
  EXPECT_TRUE(emalp::verify_equivalence(
                  emalp::eliminate_constraints_janssen(src))
                  .bijection);
  const auto manlp = emalp::verify_equivalence(emalp::to_manlp(fc.target));
  EXPECT_TRUE(manlp.bijection);
  EXPECT_TRUE(manlp.negations_ok);
}

TEST(Equivalence, TamperedTargetIsCaught) {
  const auto src = emalp::parse_program(fixtures::kMutualCapped);
  auto rec = emalp::eliminate_constraints_fc(src);
  rec.target.rules[1].weight = 0.5;  // q <-g neg1(p) with 0.5
  const auto report = emalp::verify_equivalence(rec);
  EXPECT_FALSE(report.bijection);
  EXPECT_FALSE(report.counterexamples.empty());
}

TEST(Equivalence, IdentityRecord) {
  const auto src = emalp::parse_program("p <-g q with 1; q <-p 1 with 0.5;");
  const auto report =
      emalp::verify_equivalence(emalp::eliminate_constraints_fc(src));
  EXPECT_TRUE(report.bijection);
  EXPECT_EQ(1u, report.source_models.size());
}

TEST(Equivalence, Budget) {
  emalp::EquivalenceOptions opts;
  opts.grid_step = 0.05;
  opts.max_points = 1000;
  EXPECT_THROW(emalp::verify_equivalence(sensor_fc(), opts),
               emalp::BudgetExceeded);
}

TEST(RecordJson, RoundTrip) {
  const auto fc = sensor_fc();
  const auto manlp = emalp::to_manlp(fc.target);
  const auto janssen = emalp::eliminate_constraints_janssen(fixtures::sensor());
  for (const auto* rec : {&fc, &manlp, &janssen}) {
    const auto back =
        emalp::record_from_json(emalp::to_json(*rec), rec->source, rec->target);
    EXPECT_EQ(rec->method, back.method);
    EXPECT_EQ(rec->fresh_atoms, back.fresh_atoms);
    EXPECT_EQ(rec->negation, back.negation);
    EXPECT_EQ(rec->impl_from_constraint, back.impl_from_constraint);
  }
}

TEST(Names, MethodsAndRoles) {
  for (auto m : {Method::kFc, Method::kJanssen, Method::kManlp}) {
    EXPECT_EQ(m, emalp::method_from_name(emalp::to_string(m)));
  }
  EXPECT_FALSE(emalp::method_from_name("gc").has_value());
  EXPECT_EQ("negation_witness",
            emalp::to_string(FreshRole::kNegationWitness));
  EXPECT_EQ(FreshRole::kConstantWitness,
            emalp::fresh_role_from_name("constant_witness"));
}

}  // namespace
