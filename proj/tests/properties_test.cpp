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

// Seeded property checks over randomly generated programs.

#include <algorithm>
#include <random>
#include <set>

#include "emalp/compiled.hpp"
#include "emalp/semantics.hpp"
#include "emalp/transform.hpp"
#include "gtest/gtest.h"
#include "support/oracles.hpp"
#include "support/random_programs.hpp"

namespace {

using emalp::Interpretation;
using emalp::Polarity;
using emalp::Program;

constexpr int kCases = 60;

Interpretation random_interp(const std::vector<std::string>& atoms,
                             std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Interpretation i;
  for (const auto& a : atoms) i[a] = u(rng);
  return i;
}

// Raises every atom of `i` by a random amount, keeping values in [0,1].
Interpretation raise(const Interpretation& i, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Interpretation j = i;
  for (auto& [a, v] : j) v = v + (1.0 - v) * u(rng);
  return j;
}

bool leq(const Interpretation& a, const Interpretation& b, double tol) {
  return std::all_of(a.begin(), a.end(), [&](const auto& kv) {
    return kv.second <= b.at(kv.first) + tol;
  });
}

Program positive_program(std::uint64_t seed) {
  gen::Shape shape;
  shape.max_constraints = 0;
  gen::Generator g(seed, shape);
  for (;;) {
    Program p = g.program();
    if (p.classify() == emalp::ProgramClass::kPositive) return p;
  }
}

TEST(Properties, ConsequenceIsMonotoneOnPositivePrograms) {
  for (int c = 0; c < kCases; ++c) {
    const Program p = positive_program(1000 + c);
    std::mt19937_64 rng(c);
    for (int k = 0; k < 10; ++k) {
      const auto lo = random_interp(p.atoms(), rng);
      const auto hi = raise(lo, rng);
      EXPECT_TRUE(leq(emalp::immediate_consequence(p, lo),
                      emalp::immediate_consequence(p, hi), 1e-9))
          << emalp::serialize_program(p);
    }
  }
}

TEST(Properties, TraceIsIncreasingAndEndsInModel) {
  for (int c = 0; c < kCases; ++c) {
    const Program p = positive_program(2000 + c);
    const auto result = emalp::least_model(p);
    ASSERT_TRUE(result.trace.converged);
    const auto& it = result.trace.iterates;
    for (std::size_t k = 1; k < it.size(); ++k) {
      EXPECT_TRUE(leq(it[k - 1], it[k], 1e-9));
    }
    EXPECT_TRUE(emalp::is_model(result.model, p));
    EXPECT_TRUE(oracle::is_model(p, result.model));
    for (const auto& m : oracle::all_points(p.atoms(), 0.25)) {
      if (oracle::is_model(p, m)) {
        EXPECT_TRUE(leq(result.model, m, 1e-9));
      }
    }
  }
}

TEST(Properties, ConstraintBoundsModels) {
  gen::Generator g(3000, gen::Shape{});
  for (int c = 0; c < kCases; ++c) {
    const Program p = g.program();
    for (const auto& m : oracle::all_points(p.atoms(), 0.25)) {
      if (!emalp::is_model(m, p)) continue;
      for (const auto& r : p.rules) {
        if (!r.is_constraint()) continue;
        EXPECT_LE(emalp::eval_body(r.body, m), r.head_constant() + 1e-9);
      }
    }
  }
}

TEST(Properties, ReductHasNoNegativeOccurrences) {
  gen::Generator g(4000, gen::Shape{});
  std::mt19937_64 rng(4);
  for (int c = 0; c < kCases; ++c) {
    const Program p = g.program();
    const auto r = emalp::reduct(p, random_interp(p.atoms(), rng));
    for (const auto& rule : r.rules) {
      for (const auto& [atom, pol] : emalp::polarity_of(rule.body)) {
        EXPECT_EQ(Polarity::kPositive, pol) << atom;
      }
    }
  }
}

TEST(Properties, GridSearchMatchesOracle) {
  gen::Generator g(5000, gen::Shape{});
  emalp::StableSearchConfig cfg;
  cfg.mode = emalp::SearchMode::kGrid;
  cfg.grid_step = 0.25;
  std::size_t total = 0;
  for (int c = 0; c < kCases; ++c) {
    const Program p = g.program();
    const auto found = emalp::find_stable_models(p, cfg);
    const auto expected = oracle::grid_stable_models(p, 0.25);
    EXPECT_EQ(expected, found) << emalp::serialize_program(p);
    total += found.size();
  }
  EXPECT_GT(total, std::size_t{kCases / 2});
}

TEST(Properties, IterateResultsAreStable) {
  gen::Generator g(6000, gen::Shape{});
  emalp::StableSearchConfig cfg;
  cfg.seeds = 6;
  for (int c = 0; c < kCases; ++c) {
    const Program p = g.program();
    for (const auto& m : emalp::find_stable_models(p, cfg)) {
      EXPECT_TRUE(oracle::is_stable(p, m)) << emalp::serialize_program(p);
    }
  }
}

TEST(Properties, PolaritySoundness) {
  gen::Shape shape;
  shape.max_atoms = 4;
  shape.max_depth = 3;
  gen::Generator g(7000, shape);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::size_t checked = 0;
  for (int c = 0; c < kCases; ++c) {
    const Program p = g.program();
    for (const auto& r : p.rules) {
      for (const auto& [atom, pol] : emalp::polarity_of(r.body)) {
        for (int k = 0; k < 10; ++k) {
          auto lo = random_interp(p.atoms(), rng);
          auto hi = lo;
          hi[atom] = lo[atom] + (1.0 - lo[atom]) * u(rng);
          const double a = emalp::eval_body(r.body, lo);
          const double b = emalp::eval_body(r.body, hi);
          if (pol == Polarity::kPositive) {
            EXPECT_LE(a, b + 1e-9);
          } else {
            EXPECT_GE(a + 1e-9, b);
          }
          ++checked;
        }
      }
    }
  }
  EXPECT_GT(checked, 1000u);
}

TEST(Properties, SerializeRoundTrip) {
  gen::Shape shape;
  shape.max_atoms = 5;
  shape.max_depth = 3;
  shape.values = {0.0, 0.1, 1.0 / 3.0, 0.7, 9.0 / 85.0, 1.0};
  gen::Generator g(8000, shape);
  for (int c = 0; c < kCases; ++c) {
    const Program p = g.program();
    EXPECT_EQ(p, emalp::parse_program(emalp::serialize_program(p)));
  }
}

TEST(Properties, CompiledMatchesTreeEvaluation) {
  gen::Generator g(9000, gen::Shape{});
  std::mt19937_64 rng(9);
  for (int c = 0; c < kCases; ++c) {
    const Program p = g.program();
    const emalp::CompiledProgram compiled(p);
    const auto frozen = random_interp(p.atoms(), rng);
    const auto current = random_interp(p.atoms(), rng);
    const auto expected = emalp::immediate_consequence(
        emalp::constraint_free_part(emalp::reduct(p, frozen)), current);
    std::vector<double> out(compiled.size());
    compiled.consequence(compiled.to_values(current),
                         compiled.to_values(frozen), out);
    const auto actual = compiled.to_interpretation(out);
    for (const auto& [a, v] : expected) EXPECT_NEAR(v, actual.at(a), 1e-12);
  }
}

TEST(Properties, RuleCountLaws) {
  gen::Shape shape;
  shape.max_atoms = 6;
  shape.max_rules = 8;
  shape.max_constraints = 3;
  gen::Generator g(10000, shape);
  for (int c = 0; c < kCases; ++c) {
    const Program p = g.program();
    std::set<double> k;
    for (const auto& r : p.rules) {
      if (r.is_constraint()) k.insert(r.head_constant());
    }
    const auto fc = emalp::eliminate_constraints_fc(p);
    const auto j = emalp::eliminate_constraints_janssen(p);
    EXPECT_EQ(p.rules.size(), fc.target.rules.size());
    EXPECT_EQ(p.rules.size() + 2 * k.size(), j.target.rules.size());
    EXPECT_EQ(0u, fc.target.constraint_count());
    EXPECT_EQ(0u, j.target.constraint_count());
    EXPECT_TRUE(emalp::validate_program(fc.target).valid);
    const auto m = emalp::to_manlp(fc.target);
    const auto cls = m.target.classify();
    EXPECT_TRUE(cls == emalp::ProgramClass::kManlp ||
                cls == emalp::ProgramClass::kPositive);
    EXPECT_EQ(fc.target.rules.size() + fc.target.negative_atoms().size(),
              m.target.rules.size());
    if (!k.empty()) {
      EXPECT_FALSE(emalp::check_continuity(fc.target).continuous);
    }
  }
}

TEST(Properties, FreshAtomsAreDisjoint) {
  gen::Generator g(11000, gen::Shape{});
  for (int c = 0; c < kCases; ++c) {
    const Program p = g.program();
    const auto atoms = p.atoms();
    const auto fc = emalp::eliminate_constraints_fc(p);
    const auto m = emalp::to_manlp(fc.target);
    for (const auto* rec : {&fc, &m}) {
      const auto src = rec->source.atoms();
      for (const auto& f : rec->fresh_atoms) {
        EXPECT_FALSE(std::binary_search(src.begin(), src.end(), f.name));
      }
    }
  }
}

TEST(Properties, LiftProjectRoundTrip) {
  gen::Generator g(12000, gen::Shape{});
  std::mt19937_64 rng(12);
  for (int c = 0; c < kCases; ++c) {
    const Program p = g.program();
    const auto fc = emalp::eliminate_constraints_fc(p);
    const auto j = emalp::eliminate_constraints_janssen(p);
    const auto m = random_interp(p.atoms(), rng);
    EXPECT_EQ(m, emalp::project_interpretation(
                     emalp::lift_interpretation(m, fc), fc));
    EXPECT_EQ(m, emalp::project_interpretation(
                     emalp::lift_interpretation(m, j), j));
  }
}

TEST(Properties, TranslationsPreserveStableModels) {
  gen::Shape shape;
  shape.values = {0.0, 0.5, 1.0};
  gen::Generator g(13000, shape);
  std::size_t total = 0;
  for (int c = 0; c < 30; ++c) {
    const Program p = g.program();
    const auto fc = emalp::eliminate_constraints_fc(p);
    const auto fc_report = emalp::verify_equivalence(fc);
    total += fc_report.source_models.size();
    EXPECT_TRUE(fc_report.bijection) << emalp::serialize_program(p);
    EXPECT_TRUE(fc_report.witnesses_ok);
    for (const auto& t : fc_report.target_models) {
      for (const auto& f : fc.fresh_atoms) EXPECT_EQ(0.0, t.at(f.name));
    }
    const auto j_report =
        emalp::verify_equivalence(emalp::eliminate_constraints_janssen(p));
    EXPECT_TRUE(j_report.bijection) << emalp::serialize_program(p);
    const auto m_report = emalp::verify_equivalence(emalp::to_manlp(fc.target));
    EXPECT_TRUE(m_report.bijection) << emalp::serialize_program(p);
    EXPECT_TRUE(m_report.negations_ok);
  }
  EXPECT_GT(total, 15u);
}

TEST(Properties, StableModelsAreMinimal) {
  gen::Generator g(14000, gen::Shape{});
  emalp::StableSearchConfig cfg;
  cfg.mode = emalp::SearchMode::kGrid;
  cfg.grid_step = 0.25;
  std::size_t total = 0;
  for (int c = 0; c < 30; ++c) {
    const Program p = g.program();
    for (const auto& m : emalp::find_stable_models(p, cfg)) {
      EXPECT_TRUE(emalp::is_minimal_model(p, m, 0.25))
          << emalp::serialize_program(p);
      ++total;
    }
  }
  EXPECT_GT(total, 15u);
}

TEST(Properties, GeneratorIsDeterministic) {
  gen::Generator a(42, gen::Shape{});
  gen::Generator b(42, gen::Shape{});
  for (int c = 0; c < 10; ++c) EXPECT_EQ(a.program(), b.program());
}

}  // namespace
