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

#include <algorithm>
#include <functional>
#include <utility>

#include "galcheck/error.hpp"
#include "galcheck/logic.hpp"
#include "logic_internal.hpp"

namespace galcheck {

struct TermNode {
  Term::Kind kind = Term::Kind::kVariable;
  SortId sort = 0;
  Variable var;
  Element element;
  FunctionId function = 0;
  std::vector<Term> args;
  std::vector<Variable> free;
  std::size_t hash = 0;
};

struct FormulaNode {
  Connective op = Connective::kTrue;
  std::uint32_t symbol = 0;
  Variable bound;
  std::vector<Term> terms;
  std::vector<Formula> operands;
  std::vector<Variable> free;
  std::uint32_t depth = 0;
  std::size_t hash = 0;
};

namespace {

void hash_combine(std::size_t& seed, std::size_t value) {
  seed ^= value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

std::size_t hash_variable(const Variable& v) {
  std::size_t h = std::hash<std::string>{}(v.name);
  hash_combine(h, v.sort);
  return h;
}

void merge_into(std::vector<Variable>& acc, const std::vector<Variable>& more) {
  if (more.empty()) return;
  std::vector<Variable> out;
  out.reserve(acc.size() + more.size());
  std::set_union(acc.begin(), acc.end(), more.begin(), more.end(),
                 std::back_inserter(out));
  acc = std::move(out);
}

bool is_identifier_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_' || c == '\'';
}

}  // namespace

bool is_identifier(std::string_view name) {
  return !name.empty() && std::all_of(name.begin(), name.end(), is_identifier_char);
}

bool is_reserved_word(std::string_view name) {
  static const char* const kReserved[] = {
      "true", "false", "EX", "AX", "EF", "AF", "EG", "AG", "U", "exists", "forall"};
  for (const char* word : kReserved) {
    if (name == word) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Signature

void Signature::claim(const std::string& name, Kind kind, std::uint32_t id) {
  if (!is_identifier(name)) {
    throw Error(ErrorCode::kInvalidArgument,
                "'" + name + "' is not a valid identifier");
  }
  if ((kind == Kind::kFunction || kind == Kind::kPredicate) &&
      is_reserved_word(name)) {
    throw Error(ErrorCode::kInvalidArgument,
                "'" + name + "' is a reserved word");
  }
  if (!names_.emplace(name, Entry{kind, id}).second) {
    throw Error(ErrorCode::kInvalidArgument,
                "name '" + name + "' is already declared");
  }
}

std::optional<std::uint32_t> Signature::find(std::string_view name,
                                             Kind kind) const {
  auto it = names_.find(std::string(name));
  if (it == names_.end() || it->second.kind != kind) return std::nullopt;
  return it->second.id;
}

SortId Signature::add_sort(const std::string& name) {
  auto id = static_cast<SortId>(sorts_.size());
  claim(name, Kind::kSort, id);
  sorts_.push_back(name);
  return id;
}

FunctionId Signature::add_function(const std::string& name,
                                   std::vector<SortId> args, SortId result,
                                   bool rigid) {
  for (SortId s : args) {
    if (s >= sorts_.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "function '" + name + "' uses an undeclared sort");
    }
  }
  if (result >= sorts_.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "function '" + name + "' uses an undeclared sort");
  }
  auto id = static_cast<FunctionId>(functions_.size());
  claim(name, Kind::kFunction, id);
  functions_.push_back(FunctionDecl{name, std::move(args), result, rigid});
  return id;
}

PredicateId Signature::add_predicate(const std::string& name,
                                     std::vector<SortId> args, bool rigid) {
  for (SortId s : args) {
    if (s >= sorts_.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "predicate '" + name + "' uses an undeclared sort");
    }
  }
  auto id = static_cast<PredicateId>(predicates_.size());
  claim(name, Kind::kPredicate, id);
  predicates_.push_back(PredicateDecl{name, std::move(args), rigid});
  return id;
}

PlayerId Signature::add_player(const std::string& name) {
  auto id = static_cast<PlayerId>(players_.size());
  claim(name, Kind::kPlayer, id);
  players_.push_back(name);
  return id;
}

std::optional<SortId> Signature::find_sort(std::string_view name) const {
  return find(name, Kind::kSort);
}
std::optional<FunctionId> Signature::find_function(std::string_view name) const {
  return find(name, Kind::kFunction);
}
std::optional<PredicateId> Signature::find_predicate(
    std::string_view name) const {
  return find(name, Kind::kPredicate);
}
std::optional<PlayerId> Signature::find_player(std::string_view name) const {
  return find(name, Kind::kPlayer);
}

// ---------------------------------------------------------------------------
// Term

Term Term::variable(Variable var) {
  auto node = std::make_shared<TermNode>();
  node->kind = Kind::kVariable;
  node->sort = var.sort;
  node->hash = hash_variable(var);
  node->free = {var};
  node->var = std::move(var);
  return Term(std::move(node));
}

Term Term::constant(Element element) {
  auto node = std::make_shared<TermNode>();
  node->kind = Kind::kConstant;
  node->sort = element.sort;
  node->element = element;
  node->hash = 0x51ed2701;
  hash_combine(node->hash, element.sort);
  hash_combine(node->hash, element.index);
  return Term(std::move(node));
}

Term Term::apply(const Signature& sig, FunctionId function,
                 std::vector<Term> args) {
  const FunctionDecl& decl = sig.function(function);
  if (args.size() != decl.args.size()) {
    throw Error(ErrorCode::kSort,
                "function '" + decl.name + "' expects " +
                    std::to_string(decl.args.size()) + " argument(s), got " +
                    std::to_string(args.size()));
  }
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i].sort() != decl.args[i]) {
      throw Error(ErrorCode::kSort,
                  "argument " + std::to_string(i + 1) + " of '" + decl.name +
                      "' must have sort " + sig.sort_name(decl.args[i]) +
                      ", got " + sig.sort_name(args[i].sort()));
    }
  }
  auto node = std::make_shared<TermNode>();
  node->kind = Kind::kApply;
  node->sort = decl.result;
  node->function = function;
  node->hash = 0x7a9f3b01;
  hash_combine(node->hash, function);
  for (const Term& a : args) {
    hash_combine(node->hash, a.hash());
    merge_into(node->free, a.free_variables());
  }
  node->args = std::move(args);
  return Term(std::move(node));
}

Term::Kind Term::kind() const { return node_->kind; }
SortId Term::sort() const { return node_->sort; }
const Variable& Term::var() const { return node_->var; }
Element Term::element() const { return node_->element; }
FunctionId Term::function() const { return node_->function; }
std::span<const Term> Term::args() const { return node_->args; }
const std::vector<Variable>& Term::free_variables() const {
  return node_->free;
}
std::size_t Term::hash() const { return node_->hash; }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  const TermNode& x = *a.node_;
  const TermNode& y = *b.node_;
  if (x.hash != y.hash || x.kind != y.kind || x.sort != y.sort) return false;
  switch (x.kind) {
    case Term::Kind::kVariable: return x.var == y.var;
    case Term::Kind::kConstant: return x.element == y.element;
    case Term::Kind::kApply: return x.function == y.function && x.args == y.args;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Formula

bool is_unary_modality(Connective c) {
  switch (c) {
    case Connective::kEX:
    case Connective::kAX:
    case Connective::kEF:
    case Connective::kAF:
    case Connective::kEG:
    case Connective::kAG:
      return true;
    default:
      return false;
  }
}

bool is_binary_connective(Connective c) {
  return c == Connective::kAnd || c == Connective::kOr ||
         c == Connective::kImplies;
}

Formula Formula::make(FormulaNode node) {
  node.hash = static_cast<std::size_t>(node.op) * 0x2545f4914f6cdd1dULL;
  hash_combine(node.hash, node.symbol);
  node.depth = 0;
  for (const Term& t : node.terms) {
    hash_combine(node.hash, t.hash());
    merge_into(node.free, t.free_variables());
  }
  for (const Formula& f : node.operands) {
    hash_combine(node.hash, f.hash());
    merge_into(node.free, f.free_variables());
    node.depth = std::max(node.depth, f.depth() + 1);
  }
  if (node.op == Connective::kExists || node.op == Connective::kForall) {
    hash_combine(node.hash, hash_variable(node.bound));
    std::erase(node.free, node.bound);
  }
  if (node.op == Connective::kNot || is_binary_connective(node.op) ||
      is_unary_modality(node.op) || node.op == Connective::kEU ||
      node.op == Connective::kAU || node.op == Connective::kExists ||
      node.op == Connective::kForall) {
    node.depth = std::max<std::uint32_t>(node.depth, 1);
  }
  return Formula(std::make_shared<const FormulaNode>(std::move(node)));
}

Formula Formula::top() {
  static const Formula kTop = make(FormulaNode{.op = Connective::kTrue});
  return kTop;
}

Formula Formula::bottom() {
  static const Formula kBottom = make(FormulaNode{.op = Connective::kFalse});
  return kBottom;
}

Formula Formula::player(PlayerId player) {
  return make(FormulaNode{.op = Connective::kPlayer, .symbol = player});
}

Formula Formula::predicate(const Signature& sig, PredicateId predicate,
                           std::vector<Term> args) {
  const PredicateDecl& decl = sig.predicate(predicate);
  if (args.size() != decl.args.size()) {
    throw Error(ErrorCode::kSort,
                "predicate '" + decl.name + "' expects " +
                    std::to_string(decl.args.size()) + " argument(s), got " +
                    std::to_string(args.size()));
  }
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i].sort() != decl.args[i]) {
      throw Error(ErrorCode::kSort,
                  "argument " + std::to_string(i + 1) + " of '" + decl.name +
                      "' must have sort " + sig.sort_name(decl.args[i]) +
                      ", got " + sig.sort_name(args[i].sort()));
    }
  }
  return make(FormulaNode{.op = Connective::kPredicate,
                          .symbol = predicate,
                          .terms = std::move(args)});
}

Formula Formula::equal(Term lhs, Term rhs) {
  if (lhs.sort() != rhs.sort()) {
    throw Error(ErrorCode::kSort, "equality between terms of different sorts");
  }
  return make(FormulaNode{.op = Connective::kEqual,
                          .terms = {std::move(lhs), std::move(rhs)}});
}

Formula Formula::negation(Formula operand) {
  return make(FormulaNode{.op = Connective::kNot, .operands = {std::move(operand)}});
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return make(FormulaNode{.op = Connective::kAnd,
                          .operands = {std::move(lhs), std::move(rhs)}});
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return make(FormulaNode{.op = Connective::kOr,
                          .operands = {std::move(lhs), std::move(rhs)}});
}

Formula Formula::implication(Formula lhs, Formula rhs) {
  return make(FormulaNode{.op = Connective::kImplies,
                          .operands = {std::move(lhs), std::move(rhs)}});
}

Formula Formula::modal(Connective op, Formula operand) {
  if (!is_unary_modality(op)) {
    throw Error(ErrorCode::kInvalidArgument, "not a unary modality");
  }
  return make(FormulaNode{.op = op, .operands = {std::move(operand)}});
}

Formula Formula::exists_until(Formula lhs, Formula rhs) {
  return make(FormulaNode{.op = Connective::kEU,
                          .operands = {std::move(lhs), std::move(rhs)}});
}

Formula Formula::always_until(Formula lhs, Formula rhs) {
  return make(FormulaNode{.op = Connective::kAU,
                          .operands = {std::move(lhs), std::move(rhs)}});
}

Formula Formula::exists(Variable var, Formula body) {
  return make(FormulaNode{.op = Connective::kExists,
                          .bound = std::move(var),
                          .operands = {std::move(body)}});
}

Formula Formula::forall(Variable var, Formula body) {
  return make(FormulaNode{.op = Connective::kForall,
                          .bound = std::move(var),
                          .operands = {std::move(body)}});
}

Connective Formula::op() const { return node_->op; }
PlayerId Formula::player_id() const { return node_->symbol; }
PredicateId Formula::predicate_id() const { return node_->symbol; }
std::span<const Term> Formula::terms() const { return node_->terms; }
std::span<const Formula> Formula::operands() const { return node_->operands; }
const Variable& Formula::bound() const { return node_->bound; }
std::uint32_t Formula::depth() const { return node_->depth; }
const std::vector<Variable>& Formula::free_variables() const {
  return node_->free;
}
std::size_t Formula::hash() const { return node_->hash; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const FormulaNode& x = *a.node_;
  const FormulaNode& y = *b.node_;
  return x.hash == y.hash && x.op == y.op && x.symbol == y.symbol &&
         x.bound == y.bound && x.terms == y.terms && x.operands == y.operands;
}

// ---------------------------------------------------------------------------
// Transformations

Formula expand_abbreviations(const Formula& f) {
  switch (f.op()) {
    case Connective::kTrue:
    case Connective::kPlayer:
    case Connective::kPredicate:
    case Connective::kEqual:
      return f;
    case Connective::kFalse:
      return Formula::negation(Formula::top());
    default:
      break;
  }
  std::vector<Formula> ops;
  for (const Formula& sub : f.operands()) ops.push_back(expand_abbreviations(sub));
  const Formula& a = ops[0];
  switch (f.op()) {
    case Connective::kNot:
      return Formula::negation(a);
    case Connective::kImplies:
      return Formula::implication(a, ops[1]);
    case Connective::kAnd:
      return Formula::negation(
          Formula::implication(a, Formula::negation(ops[1])));
    case Connective::kOr:
      return Formula::implication(Formula::negation(a), ops[1]);
    case Connective::kAX:
      return Formula::modal(Connective::kAX, a);
    case Connective::kEX:
      return Formula::negation(
          Formula::modal(Connective::kAX, Formula::negation(a)));
    case Connective::kAF:
      return Formula::always_until(Formula::top(), a);
    case Connective::kEF:
      return Formula::exists_until(Formula::top(), a);
    case Connective::kAG:
      return Formula::negation(
          Formula::exists_until(Formula::top(), Formula::negation(a)));
    case Connective::kEG:
      return Formula::negation(
          Formula::always_until(Formula::top(), Formula::negation(a)));
    case Connective::kEU:
      return Formula::exists_until(a, ops[1]);
    case Connective::kAU:
      return Formula::always_until(a, ops[1]);
    case Connective::kExists:
      return Formula::exists(f.bound(), a);
    case Connective::kForall:
      return Formula::negation(
          Formula::exists(f.bound(), Formula::negation(a)));
    default:
      break;
  }
  throw Error(ErrorCode::kInvalidArgument, "unexpected connective");
}

bool is_core(const Formula& f) {
  switch (f.op()) {
    case Connective::kFalse:
    case Connective::kAnd:
    case Connective::kOr:
    case Connective::kEX:
    case Connective::kEF:
    case Connective::kAF:
    case Connective::kEG:
    case Connective::kAG:
    case Connective::kForall:
      return false;
    default:
      break;
  }
  for (const Formula& sub : f.operands()) {
    if (!is_core(sub)) return false;
  }
  return true;
}

std::set<Variable> free_variables(const Formula& f) {
  const auto& free = f.free_variables();
  return std::set<Variable>(free.begin(), free.end());
}

namespace {

bool mentions(const std::vector<Variable>& free, const Variable& var) {
  return std::binary_search(free.begin(), free.end(), var);
}

}  // namespace

Term substitute(const Term& t, const Variable& var, Element element) {
  if (!mentions(t.free_variables(), var)) return t;
  switch (t.kind()) {
    case Term::Kind::kVariable:
      return Term::constant(element);
    case Term::Kind::kConstant:
      return t;
    case Term::Kind::kApply:
      break;
  }
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const Term& a : t.args()) args.push_back(substitute(a, var, element));
  return rebuild_application(t, std::move(args));
}

Formula substitute(const Formula& f, const Variable& var, Element element) {
  if (!mentions(f.free_variables(), var)) return f;
  if (element.sort != var.sort) {
    throw Error(ErrorCode::kSort,
                "substituting an element of the wrong sort for '" + var.name + "'");
  }
  std::vector<Term> terms;
  for (const Term& t : f.terms()) terms.push_back(substitute(t, var, element));
  std::vector<Formula> ops;
  for (const Formula& sub : f.operands()) ops.push_back(substitute(sub, var, element));
  return rebuild_formula(f, std::move(terms), std::move(ops));
}

Term rebuild_application(const Term& t, std::vector<Term> args) {
  auto node = std::make_shared<TermNode>();
  node->kind = Term::Kind::kApply;
  node->sort = t.sort();
  node->function = t.function();
  node->hash = 0x7a9f3b01;
  hash_combine(node->hash, node->function);
  for (const Term& a : args) {
    hash_combine(node->hash, a.hash());
    merge_into(node->free, a.free_variables());
  }
  node->args = std::move(args);
  return TermAccess::wrap(std::move(node));
}

Formula rebuild_formula(const Formula& f, std::vector<Term> terms,
                        std::vector<Formula> operands) {
  FormulaNode node;
  node.op = f.op();
  node.symbol = (f.op() == Connective::kPlayer || f.op() == Connective::kPredicate)
                    ? f.player_id()
                    : 0;
  if (f.op() == Connective::kExists || f.op() == Connective::kForall) {
    node.bound = f.bound();
  }
  node.terms = std::move(terms);
  node.operands = std::move(operands);
  return FormulaAccess::make(std::move(node));
}

Term TermAccess::wrap(std::shared_ptr<const TermNode> node) {
  return Term(std::move(node));
}

Formula FormulaAccess::make(FormulaNode node) {
  return Formula::make(std::move(node));
}

FormulaMetrics metrics(const Formula& f) {
  FormulaMetrics m;
  std::function<void(const Formula&)> walk = [&](const Formula& g) {
    switch (g.op()) {
      case Connective::kAX:
      case Connective::kEU:
      case Connective::kAU:
        ++m.modal_count;
        break;
      case Connective::kExists:
        ++m.quantifier_count;
        break;
      default:
        break;
    }
    for (const Formula& sub : g.operands()) walk(sub);
  };
  walk(expand_abbreviations(f));
  return m;
}

}  // namespace galcheck
