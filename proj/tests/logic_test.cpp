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

#include "galcheck/error.hpp"
#include "galcheck/logic.hpp"
#include "generators.hpp"

namespace galcheck {
namespace {

class LogicTest : public ::testing::Test {
 protected:
  void SetUp() override {
    s_ = sig_.add_sort("S");
    t_ = sig_.add_sort("T");
    a_ = sig_.add_function("a", {}, s_, true);
    f_ = sig_.add_function("f", {s_}, s_, false);
    sig_.add_function("g", {s_, t_}, s_, false);
    p_ = sig_.add_predicate("p", {s_});
    q_ = sig_.add_predicate("q", {s_});
    win_x_ = sig_.add_predicate("winX", {});
    draw_ = sig_.add_predicate("Draw", {});
    sig_.add_player("1");
    sig_.add_player("2");
  }

  Formula parse(std::string_view text) { return parse_formula(text, sig_); }
  std::string print(const Formula& f) { return to_string(f, sig_); }
  Formula p_of(const Term& t) { return Formula::predicate(sig_, p_, {t}); }
  Formula q_of(const Term& t) { return Formula::predicate(sig_, q_, {t}); }

  Signature sig_;
  SortId s_ = 0, t_ = 0;
  FunctionId a_ = 0, f_ = 0;
  PredicateId p_ = 0, q_ = 0, win_x_ = 0, draw_ = 0;
};

TEST_F(LogicTest, ParsesEventuallyWinOrDraw) {
  Formula f = parse("AF (winX | Draw)");
  Formula expected = Formula::modal(
      Connective::kAF, Formula::disjunction(Formula::predicate(sig_, win_x_, {}),
                                            Formula::predicate(sig_, draw_, {})));
  EXPECT_EQ(f, expected);
}

TEST_F(LogicTest, ParsesLiterals) {
  EXPECT_EQ(parse("true"), Formula::top());
  EXPECT_EQ(parse("false"), Formula::bottom());
  EXPECT_EQ(parse("@2"), Formula::player(1));
}

TEST_F(LogicTest, UnknownSortIsUnknownIdentifier) {
  try {
    parse("exists x:U . p(x)");
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownIdentifier);
  }
}

TEST_F(LogicTest, SyntaxErrorReportsPositionAndExpectedTokens) {
  try {
    parse("p(a) & ");
    FAIL() << "expected an error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
    EXPECT_EQ(e.position(), 7u);
    EXPECT_FALSE(e.expected().empty());
  }
  EXPECT_THROW(parse("E[p(a) p(a)]"), ParseError);
  EXPECT_THROW(parse("(p(a)"), ParseError);
  EXPECT_THROW(parse("p(a) p(a)"), ParseError);
}

TEST_F(LogicTest, SortErrors) {
  auto code_of = [&](std::string_view text) {
    try {
      parse(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kIo;
  };
  EXPECT_EQ(code_of("p(a, a)"), ErrorCode::kSort);
  EXPECT_EQ(code_of("a = x:T"), ErrorCode::kSort);
  EXPECT_EQ(code_of("p(x:T)"), ErrorCode::kSort);
  EXPECT_EQ(code_of("@3"), ErrorCode::kUnknownIdentifier);
  EXPECT_EQ(code_of("nope(a)"), ErrorCode::kUnknownIdentifier);
}

TEST_F(LogicTest, PrecedenceAndAssociativity) {
  Formula w = parse("winX"), d = parse("Draw"), pa = parse("p(a)");
  EXPECT_EQ(parse("winX -> Draw -> p(a)"),
            Formula::implication(w, Formula::implication(d, pa)));
  EXPECT_EQ(parse("!winX & Draw | p(a)"),
            Formula::disjunction(Formula::conjunction(Formula::negation(w), d), pa));
  EXPECT_EQ(parse("AG winX & Draw"),
            Formula::modal(Connective::kAG, Formula::conjunction(w, d)));
  EXPECT_EQ(parse("(AG winX) & Draw"),
            Formula::conjunction(Formula::modal(Connective::kAG, w), d));
  EXPECT_EQ(parse("E[winX U Draw]"), Formula::exists_until(w, d));
  EXPECT_EQ(parse("A[true U Draw]"), Formula::always_until(Formula::top(), d));
}

TEST_F(LogicTest, ExpandsEveryAbbreviation) {
  Formula a = parse("winX"), b = parse("Draw");
  auto neg = [](const Formula& x) { return Formula::negation(x); };
  auto tu = [](const Formula& x) { return Formula::exists_until(Formula::top(), x); };
  auto au = [](const Formula& x) { return Formula::always_until(Formula::top(), x); };
  EXPECT_EQ(expand_abbreviations(Formula::bottom()), neg(Formula::top()));
  EXPECT_EQ(expand_abbreviations(Formula::conjunction(a, b)),
            neg(Formula::implication(a, neg(b))));
  EXPECT_EQ(expand_abbreviations(Formula::disjunction(a, b)), Formula::implication(neg(a), b));
  EXPECT_EQ(expand_abbreviations(Formula::modal(Connective::kEX, a)),
            neg(Formula::modal(Connective::kAX, neg(a))));
  EXPECT_EQ(expand_abbreviations(Formula::modal(Connective::kAF, a)), au(a));
  EXPECT_EQ(expand_abbreviations(Formula::modal(Connective::kEF, a)), tu(a));
  EXPECT_EQ(expand_abbreviations(Formula::modal(Connective::kAG, a)), neg(tu(neg(a))));
  EXPECT_EQ(expand_abbreviations(Formula::modal(Connective::kEG, a)), neg(au(neg(a))));
  EXPECT_EQ(expand_abbreviations(Formula::modal(Connective::kAX, a)),
            Formula::modal(Connective::kAX, a));
  Variable x{"x", s_};
  Formula body = p_of(Term::variable(x));
  EXPECT_EQ(expand_abbreviations(Formula::forall(x, body)),
            neg(Formula::exists(x, neg(body))));
}

TEST_F(LogicTest, FreeVariables) {
  Variable x{"x", s_};
  EXPECT_TRUE(free_variables(Formula::exists(x, p_of(Term::variable(x)))).empty());
  EXPECT_EQ(free_variables(p_of(Term::variable(x))), std::set<Variable>{x});

  Signature g;
  SortId h = g.add_sort("H"), t = g.add_sort("T"), u = g.add_sort("U");
  SortId s1 = g.add_sort("S1"), s2 = g.add_sort("S2");
  g.add_function("h", {}, h, false);
  g.add_function("Oh", {h, s1, s2}, t, true);
  g.add_function("u1", {t}, u, true);
  g.add_predicate("geq", {u, u}, true);
  Formula f = parse_formula("geq(u1(Oh(h, v1, v2)), u1(Oh(h, v1, w2)))", g);
  std::set<Variable> expected{{"v1", s1}, {"v2", s2}, {"w2", s2}};
  EXPECT_EQ(free_variables(f), expected);
}

TEST_F(LogicTest, Substitution) {
  Variable x{"x", s_};
  Element d{s_, 0};
  Term c = Term::constant(d);
  EXPECT_EQ(substitute(p_of(Term::variable(x)), x, d), p_of(c));
  Formula bound = Formula::exists(x, p_of(Term::variable(x)));
  EXPECT_EQ(substitute(bound, x, d), bound);
  Formula mixed = Formula::implication(p_of(Term::variable(x)),
                                       Formula::exists(x, q_of(Term::variable(x))));
  EXPECT_EQ(substitute(mixed, x, d),
            Formula::implication(p_of(c), Formula::exists(x, q_of(Term::variable(x)))));
  EXPECT_EQ(print(substitute(p_of(Term::variable(x)), x, d)), "p(#S:0)");
  EXPECT_THROW(substitute(p_of(Term::variable(x)), x, Element{t_, 0}), Error);
}

TEST_F(LogicTest, MetricsCountTheCoreForm) {
  EXPECT_EQ(metrics(parse("AG p(a)")), (FormulaMetrics{1, 0}));
  EXPECT_EQ(metrics(parse("p(a)")), (FormulaMetrics{0, 0}));
  EXPECT_EQ(metrics(parse("forall x:S . EX p(x)")), (FormulaMetrics{1, 1}));
}

TEST_F(LogicTest, BinderCollidingWithFreeVariableIsRenamed) {
  Formula f = parse("p(x:S) -> exists x:S . q(x)");
  auto free = free_variables(f);
  ASSERT_EQ(free.size(), 1u);
  EXPECT_EQ(free.begin()->name, "x");
  EXPECT_NE(f.operand(1).bound().name, "x");
  EXPECT_EQ(parse(print(f)), f);
}

TEST_F(LogicTest, SignatureRejectsCollisionsAndBadNames) {
  EXPECT_THROW(sig_.add_sort("p"), Error);
  EXPECT_THROW(sig_.add_player("S"), Error);
  EXPECT_THROW(sig_.add_predicate("exists", {}), Error);
  EXPECT_THROW(sig_.add_sort("two words"), Error);
}

TEST_F(LogicTest, TermsAreSortChecked) {
  EXPECT_THROW(Term::apply(sig_, f_, {}), Error);
  EXPECT_THROW(Term::apply(sig_, f_, {Term::constant(Element{t_, 0})}), Error);
  EXPECT_THROW(Formula::equal(Term::constant(Element{s_, 0}), Term::constant(Element{t_, 0})),
               Error);
}

TEST(LogicProperties, RoundTripIdempotenceAndSubstitution) {
  testing::Rng rng(20261018);
  for (int round = 0; round < 300; ++round) {
    auto spec = testing::random_model(rng);
    testing::FormulaOptions options;
    options.constants = round % 2 == 0;
    Formula f = testing::random_formula(rng, spec, options);
    std::string text = to_string(f, spec.sig);
    Formula back = parse_formula(text, spec.sig);
    ASSERT_EQ(back, f) << text;
    ASSERT_EQ(to_string(back, spec.sig), text);
    Formula core = expand_abbreviations(f);
    ASSERT_TRUE(is_core(core)) << text;
    ASSERT_EQ(expand_abbreviations(core), core) << text;
    ASSERT_EQ(metrics(f), metrics(core));
    if (!spec.domains.empty()) {
      Variable unused{"zz", 0};
      ASSERT_EQ(substitute(f, unused, Element{0, 0}), f);
    }
  }
}

}  // namespace
}  // namespace galcheck
