// Copyright 2026 The galcheck Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <thread>

#include "galcheck/error.hpp"
#include "galcheck/extensive.hpp"
#include "galcheck/structure.hpp"
#include "generators.hpp"

namespace galcheck {
namespace {

class NoInterpretation final : public InterpretationProvider {
 public:
  Element function(const GalStructure&, FunctionId, StateIndex,
                   std::span<const Element>) const override {
    throw Error(ErrorCode::kInterpretation, "no functions");
  }
  bool predicate(const GalStructure&, PredicateId, StateIndex,
                 std::span<const Element>) const override {
    return false;
  }
};

std::shared_ptr<const GalStructure> bare(std::vector<StateDecl> states,
                                         std::vector<std::pair<std::string, std::string>> actions,
                                         std::vector<std::string> initial = {"s"}) {
  Signature sig;
  sig.add_player("1");
  return std::make_shared<const GalStructure>(sig, std::vector<std::vector<std::string>>{},
                                              std::move(states), std::move(actions),
                                              std::move(initial),
                                              std::make_shared<NoInterpretation>());
}

class Example2Test : public ::testing::Test {
 protected:
  Example2Test() : game_(testing::example1_game()), g_(to_gal_structure(game_)) {}
  ExtensiveGame game_;
  std::shared_ptr<const GalStructure> g_;
};

TEST_F(Example2Test, Validates) { EXPECT_TRUE(validate(*g_).empty()); }

TEST_F(Example2Test, Successors) {
  EXPECT_EQ(successors(*g_, "\xE2\x88\x85"), (std::vector<std::string>{"(A)", "(B)"}));
  EXPECT_TRUE(successors(*g_, "(B)").empty());
  EXPECT_THROW(successors(*g_, "(C)"), Error);
}

TEST_F(Example2Test, Deadlocks) {
  EXPECT_TRUE(is_deadlock(*g_, "(A,L)"));
  EXPECT_FALSE(is_deadlock(*g_, "\xE2\x88\x85"));
  EXPECT_THROW(is_deadlock(*g_, "nowhere"), Error);
}

TEST_F(Example2Test, PlayerSets) {
  const auto& sig = g_->signature();
  EXPECT_TRUE(g_->has_player(g_->state_index("\xE2\x88\x85"), *sig.find_player("1")));
  EXPECT_TRUE(g_->has_player(g_->state_index("(A)"), *sig.find_player("2")));
  EXPECT_TRUE(g_->players_at(g_->state_index("(B)")).empty());
}

TEST_F(Example2Test, EvaluatesUtilityOfCurrentHistory) {
  const auto& sig = g_->signature();
  Term h = Term::apply(sig, *sig.find_function("h"), {});
  FunctionId oh = *sig.find_function("Oh");
  SortId s1 = *sig.find_sort("S1"), s2 = *sig.find_sort("S2");
  Variable v1{"v1", s1}, v2{"v2", s2};
  Term t = Term::apply(sig, *sig.find_function("u1"),
                       {Term::apply(sig, oh, {h, Term::variable(v1), Term::variable(v2)})});
  Valuation v;
  v.assign(v1, *g_->find_element(s1, "<B>"));
  v.assign(v2, *g_->find_element(s2, "<R>"));
  StateIndex ar = g_->state_index("(A,R)");
  EXPECT_EQ(g_->element_label(eval_term(*g_, ar, t, v)), "2");
  EXPECT_EQ(eval_term(*g_, ar, t, v), eval_term(*g_, ar, t, v));
  EXPECT_EQ(g_->element_label(eval_term(*g_, g_->state_index("(A)"), t, v)), "2");
  Valuation missing;
  try {
    eval_term(*g_, ar, t, missing);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBinding);
  }
  EXPECT_THROW(v.assign(v1, *g_->find_element(s2, "<R>")), Error);
}

TEST_F(Example2Test, RigidSymbolsIgnoreTheState) {
  const auto& sig = g_->signature();
  FunctionId u1 = *sig.find_function("u1");
  SortId t = *sig.find_sort("T");
  for (std::uint32_t k = 0; k < g_->domain(t).size(); ++k) {
    std::vector<Element> args{Element{t, k}};
    for (StateIndex e = 1; e < g_->state_count(); ++e)
      EXPECT_EQ(g_->function(u1, 0, args), g_->function(u1, e, args));
  }
}

TEST(StructureValidation, PlayerWithoutSuccessorIsOneViolation) {
  auto g = bare({{"s", {"1"}}}, {});
  auto report = validate(*g);
  ASSERT_EQ(report.size(), 1u);
  EXPECT_NE(report[0].find("s"), std::string::npos);
}

TEST(StructureValidation, UndeclaredEndpointIsOneViolation) {
  auto g = bare({{"s", {}}}, {{"s", "t"}});
  auto report = validate(*g);
  ASSERT_EQ(report.size(), 1u);
  EXPECT_NE(report[0].find("t"), std::string::npos);
}

TEST(StructureValidation, OtherViolations) {
  EXPECT_FALSE(validate(*bare({{"s", {"9"}}, {"t", {}}}, {{"s", "t"}})).empty());
  EXPECT_FALSE(validate(*bare({{"s", {}}, {"s", {}}}, {})).empty());
  EXPECT_FALSE(validate(*bare({{"s", {}}}, {}, {"u"})).empty());
  EXPECT_FALSE(validate(*bare({}, {}, {})).empty());
}

TEST(StructureValidation, SingleStateWithoutActions) {
  auto g = bare({{"s", {}}}, {});
  EXPECT_TRUE(validate(*g).empty());
  EXPECT_TRUE(is_deadlock(*g, "s"));
  EXPECT_TRUE(successors(*g, "s").empty());
}

TEST(StructureValidation, DuplicateActionsCollapse) {
  auto g = bare({{"s", {"1"}}, {"t", {}}}, {{"s", "t"}, {"s", "t"}});
  EXPECT_EQ(g->actions().size(), 1u);
}

TEST(StructureProperties, MaximalPathsEndInDeadlockOrClosedCycle) {
  testing::Rng rng(7);
  testing::ModelOptions options;
  options.max_states = 8;
  for (int round = 0; round < 100; ++round) {
    auto g = testing::build(testing::random_model(rng, options));
    ASSERT_TRUE(validate(*g).empty());
    for (StateIndex e = 0; e < g->state_count(); ++e) {
      auto paths = maximal_paths(*g, e);
      ASSERT_FALSE(paths.empty());
      for (const auto& p : paths) {
        EXPECT_TRUE(is_maximal_path(*g, p));
        if (p.finite()) EXPECT_TRUE(is_deadlock(*g, p.states.back()));
      }
    }
  }
}

TEST(StructureProperties, ConcurrentLookupsAgree) {
  testing::Rng rng(11);
  testing::ModelSpec spec;
  do {
    spec = testing::random_model(rng);
  } while (spec.domains.empty());
  auto g = testing::build(spec);
  const auto& sig = g->signature();
  FunctionId f = *sig.find_function("fA");
  auto sweep = [&] {
    std::vector<std::uint32_t> out;
    for (StateIndex e = 0; e < g->state_count(); ++e)
      for (std::uint32_t d = 0; d < g->domain(0).size(); ++d) {
        std::vector<Element> args{Element{0, d}};
        out.push_back(g->function(f, e, args).index);
      }
    return out;
  };
  std::vector<std::vector<std::uint32_t>> results(4);
  std::vector<std::thread> pool;
  for (int t = 0; t < 4; ++t) pool.emplace_back([&, t] { results[t] = sweep(); });
  for (auto& th : pool) th.join();
  for (int t = 1; t < 4; ++t) EXPECT_EQ(results[t], results[0]);
}

}  // namespace
}  // namespace galcheck
