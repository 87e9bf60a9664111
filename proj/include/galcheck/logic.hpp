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

#ifndef GALCHECK_LOGIC_HPP_
#define GALCHECK_LOGIC_HPP_

// Many-sorted signatures, terms and formulas of the game analysis logic:
// first-order CTL whose atoms are evaluated against per-state
// interpretations. Terms and formulas are immutable, structurally shared
// values with cached hashes so they can serve directly as label keys.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace galcheck {

using SortId = std::uint32_t;
using FunctionId = std::uint32_t;
using PredicateId = std::uint32_t;
using PlayerId = std::uint32_t;

struct FunctionDecl {
  std::string name;
  std::vector<SortId> args;
  SortId result = 0;
  bool rigid = false;
};

struct PredicateDecl {
  std::string name;
  std::vector<SortId> args;
  bool rigid = false;
};

// Sorts, function symbols, predicate symbols and players. All four share one
// namespace: adding a name that is already taken throws.
class Signature {
 public:
  SortId add_sort(const std::string& name);
  FunctionId add_function(const std::string& name, std::vector<SortId> args,
                          SortId result, bool rigid);
  PredicateId add_predicate(const std::string& name, std::vector<SortId> args,
                            bool rigid = false);
  PlayerId add_player(const std::string& name);

  std::optional<SortId> find_sort(std::string_view name) const;
  std::optional<FunctionId> find_function(std::string_view name) const;
  std::optional<PredicateId> find_predicate(std::string_view name) const;
  std::optional<PlayerId> find_player(std::string_view name) const;

  const std::vector<std::string>& sorts() const { return sorts_; }
  const std::vector<FunctionDecl>& functions() const { return functions_; }
  const std::vector<PredicateDecl>& predicates() const { return predicates_; }
  const std::vector<std::string>& players() const { return players_; }

  const std::string& sort_name(SortId id) const { return sorts_.at(id); }
  const FunctionDecl& function(FunctionId id) const {
    return functions_.at(id);
  }
  const PredicateDecl& predicate(PredicateId id) const {
    return predicates_.at(id);
  }
  const std::string& player_name(PlayerId id) const {
    return players_.at(id);
  }

 private:
  enum class Kind { kSort, kFunction, kPredicate, kPlayer };
  struct Entry {
    Kind kind;
    std::uint32_t id;
  };

  void claim(const std::string& name, Kind kind, std::uint32_t id);
  std::optional<std::uint32_t> find(std::string_view name, Kind kind) const;

  std::vector<std::string> sorts_;
  std::vector<FunctionDecl> functions_;
  std::vector<PredicateDecl> predicates_;
  std::vector<std::string> players_;
  std::unordered_map<std::string, Entry> names_;
};

// A domain element: position `index` in the declared domain of `sort`.
struct Element {
  SortId sort = 0;
  std::uint32_t index = 0;

  friend auto operator<=>(const Element&, const Element&) = default;
};

struct Variable {
  std::string name;
  SortId sort = 0;

  friend auto operator<=>(const Variable&, const Variable&) = default;
};

struct TermNode;
struct FormulaNode;

class Term {
 public:
  enum class Kind { kVariable, kApply, kConstant };

  static Term variable(Variable var);
  // Ground constant naming a domain element; printed as `#sort:index`.
  static Term constant(Element element);
  // Throws a kSort error when the arguments do not match the profile.
  static Term apply(const Signature& sig, FunctionId function,
                    std::vector<Term> args);

  Kind kind() const;
  SortId sort() const;
  const Variable& var() const;
  Element element() const;
  FunctionId function() const;
  std::span<const Term> args() const;

  // Sorted, duplicate-free.
  const std::vector<Variable>& free_variables() const;
  std::size_t hash() const;

  friend bool operator==(const Term& a, const Term& b);

 private:
  friend struct TermAccess;
  explicit Term(std::shared_ptr<const TermNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const TermNode> node_;
};

enum class Connective {
  kTrue,
  kFalse,
  kPlayer,
  kPredicate,
  kEqual,
  kNot,
  kAnd,
  kOr,
  kImplies,
  kEX,
  kAX,
  kEF,
  kAF,
  kEG,
  kAG,
  kEU,
  kAU,
  kExists,
  kForall,
};

bool is_unary_modality(Connective c);
bool is_binary_connective(Connective c);

class Formula {
 public:
  static Formula top();
  static Formula bottom();
  static Formula player(PlayerId player);
  static Formula predicate(const Signature& sig, PredicateId predicate,
                           std::vector<Term> args);
  // Throws a kSort error for terms of different sorts.
  static Formula equal(Term lhs, Term rhs);
  static Formula negation(Formula operand);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  // One of EX, AX, EF, AF, EG, AG.
  static Formula modal(Connective op, Formula operand);
  static Formula exists_until(Formula lhs, Formula rhs);
  static Formula always_until(Formula lhs, Formula rhs);
  static Formula exists(Variable var, Formula body);
  static Formula forall(Variable var, Formula body);

  Connective op() const;
  PlayerId player_id() const;
  PredicateId predicate_id() const;
  // Predicate arguments, or the two sides of an equality.
  std::span<const Term> terms() const;
  std::span<const Formula> operands() const;
  const Formula& operand(std::size_t i) const { return operands()[i]; }
  const Variable& bound() const;

  // Longest chain of nested connectives; atoms have depth 0.
  std::uint32_t depth() const;
  const std::vector<Variable>& free_variables() const;
  std::size_t hash() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  friend struct FormulaAccess;
  explicit Formula(std::shared_ptr<const FormulaNode> node)
      : node_(std::move(node)) {}
  static Formula make(FormulaNode node);

  std::shared_ptr<const FormulaNode> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

struct FormulaMetrics {
  std::size_t modal_count = 0;
  std::size_t quantifier_count = 0;

  friend bool operator==(const FormulaMetrics&,
                         const FormulaMetrics&) = default;
};

// Parses the ASCII surface syntax:
//
//   formula := "true" | "false" | "@" IDENT | IDENT [ "(" terms ")" ]
//            | term "=" term | "!" formula | formula "&" formula
//            | formula "|" formula | formula "->" formula
//            | ("EX"|"AX"|"EF"|"AF"|"EG"|"AG") formula
//            | ("E"|"A") "[" formula "U" formula "]"
//            | ("exists"|"forall") IDENT ":" IDENT "." formula
//            | "(" formula ")"
//   term    := IDENT "(" terms ")" | IDENT | IDENT ":" IDENT
//            | "#" IDENT ":" NUMBER
//
// `!` binds tightest, then `&`, `|`, and right-associative `->`. Modalities
// and quantifiers extend as far right as possible. A bare identifier in term
// position is a bound variable, else a 0-ary function, else a free variable
// whose sort is inferred from its argument position or given as `x:SORT`.
// Binders that would shadow another variable are renamed to `name_k`.
Formula parse_formula(std::string_view text, const Signature& sig);

// Inverse of parse_formula up to whitespace and redundant parentheses.
// Free variables are printed with their sort annotation.
std::string to_string(const Formula& f, const Signature& sig);
std::string to_string(const Term& t, const Signature& sig);

// Rewrites bottom, and, or, EX, AF, EF, AG, EG and forall into the core
// connectives true, player, predicate, =, not, ->, AX, E[U], A[U], exists.
Formula expand_abbreviations(const Formula& f);
bool is_core(const Formula& f);

std::set<Variable> free_variables(const Formula& f);

// f[var <- element]. Bound occurrences are left alone; subtrees without a
// free occurrence are shared with the input.
Formula substitute(const Formula& f, const Variable& var, Element element);
Term substitute(const Term& t, const Variable& var, Element element);

// Counts AX/EU/AU and exists in the expanded core form.
FormulaMetrics metrics(const Formula& f);

}  // namespace galcheck

#endif  // GALCHECK_LOGIC_HPP_
