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

// Formula surface syntax: tokenizer, recursive-descent parser, sort
// inference for free variables, and the matching printer.

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "galcheck/error.hpp"
#include "galcheck/logic.hpp"
#include "logic_internal.hpp"

namespace galcheck {
namespace {

// ---------------------------------------------------------------------------
// Tokens

enum class Tok {
  kWord,
  kLParen,
  kRParen,
  kLBracket,
  kRBracket,
  kComma,
  kColon,
  kDot,
  kEqual,
  kAnd,
  kOr,
  kNot,
  kArrow,
  kAt,
  kHash,
  kEnd,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

bool word_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_' || c == '\'';
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    if (word_char(c)) {
      std::size_t j = i;
      while (j < text.size() && word_char(text[j])) ++j;
      out.push_back({Tok::kWord, std::string(text.substr(i, j - i)), i});
      i = j;
      continue;
    }
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      out.push_back({Tok::kArrow, "->", i});
      i += 2;
      continue;
    }
    Tok kind;
    switch (c) {
      case '(': kind = Tok::kLParen; break;
      case ')': kind = Tok::kRParen; break;
      case '[': kind = Tok::kLBracket; break;
      case ']': kind = Tok::kRBracket; break;
      case ',': kind = Tok::kComma; break;
      case ':': kind = Tok::kColon; break;
      case '.': kind = Tok::kDot; break;
      case '=': kind = Tok::kEqual; break;
      case '&': kind = Tok::kAnd; break;
      case '|': kind = Tok::kOr; break;
      case '!': kind = Tok::kNot; break;
      case '@': kind = Tok::kAt; break;
      case '#': kind = Tok::kHash; break;
      default:
        throw ParseError(i, {"formula"}, std::string(1, c));
    }
    out.push_back({kind, std::string(1, c), i});
    ++i;
  }
  out.push_back({Tok::kEnd, "", text.size()});
  return out;
}

// ---------------------------------------------------------------------------
// Untyped syntax tree

struct RawTerm {
  enum class Kind { kName, kApply, kAnnotated, kGround };
  Kind kind = Kind::kName;
  std::size_t pos = 0;
  std::string name;
  std::string sort;
  std::uint32_t index = 0;
  std::vector<RawTerm> args;
};

struct RawFormula {
  enum class Kind {
    kTrue, kFalse, kPlayer, kAtom, kEqual, kNot, kBinary, kModal, kUntil, kQuant,
  };
  Kind kind = Kind::kTrue;
  std::size_t pos = 0;
  Connective op = Connective::kTrue;
  std::string name;
  bool has_args = false;
  std::vector<RawTerm> args;
  std::vector<RawFormula> kids;
  std::string var;
  std::string sort;
  std::size_t sort_pos = 0;
};

std::optional<Connective> modality_keyword(const std::string& w) {
  if (w == "EX") return Connective::kEX;
  if (w == "AX") return Connective::kAX;
  if (w == "EF") return Connective::kEF;
  if (w == "AF") return Connective::kAF;
  if (w == "EG") return Connective::kEG;
  if (w == "AG") return Connective::kAG;
  return std::nullopt;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  RawFormula parse() {
    RawFormula f = parse_implies();
    if (peek().kind != Tok::kEnd) fail({"'&'", "'|'", "'->'", "end of input"});
    return f;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(at_ + ahead, toks_.size() - 1)];
  }
  const Token& next() { return toks_[at_ < toks_.size() - 1 ? at_++ : at_]; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    throw ParseError(peek().pos, std::move(expected), peek().text);
  }

  const Token& expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail({what});
    return next();
  }

  std::string expect_name(const char* what) {
    if (peek().kind != Tok::kWord || is_reserved_word(peek().text)) fail({what});
    return next().text;
  }

  RawFormula parse_implies() {
    RawFormula lhs = parse_or();
    if (peek().kind != Tok::kArrow) return lhs;
    std::size_t pos = next().pos;
    RawFormula rhs = parse_implies();
    return binary(Connective::kImplies, pos, std::move(lhs), std::move(rhs));
  }

  RawFormula parse_or() {
    RawFormula lhs = parse_and();
    while (peek().kind == Tok::kOr) {
      std::size_t pos = next().pos;
      lhs = binary(Connective::kOr, pos, std::move(lhs), parse_and());
    }
    return lhs;
  }

  RawFormula parse_and() {
    RawFormula lhs = parse_unary();
    while (peek().kind == Tok::kAnd) {
      std::size_t pos = next().pos;
      lhs = binary(Connective::kAnd, pos, std::move(lhs), parse_unary());
    }
    return lhs;
  }

  static RawFormula binary(Connective op, std::size_t pos, RawFormula lhs,
                           RawFormula rhs) {
    RawFormula f;
    f.kind = RawFormula::Kind::kBinary;
    f.op = op;
    f.pos = pos;
    f.kids.push_back(std::move(lhs));
    f.kids.push_back(std::move(rhs));
    return f;
  }

  RawFormula parse_unary() {
    const Token& tok = peek();
    RawFormula f;
    f.pos = tok.pos;
    switch (tok.kind) {
      case Tok::kNot:
        next();
        f.kind = RawFormula::Kind::kNot;
        f.kids.push_back(parse_unary());
        return f;
      case Tok::kLParen: {
        next();
        RawFormula inner = parse_implies();
        expect(Tok::kRParen, "')'");
        return inner;
      }
      case Tok::kAt:
        next();
        f.kind = RawFormula::Kind::kPlayer;
        if (peek().kind != Tok::kWord) fail({"player identifier"});
        f.name = next().text;
        return f;
      case Tok::kHash: {
        RawTerm lhs = parse_term();
        return equality(std::move(lhs));
      }
      case Tok::kWord:
        break;
      default:
        fail({"formula"});
    }

    const std::string& w = tok.text;
    if (w == "true" || w == "false") {
      next();
      f.kind = w == "true" ? RawFormula::Kind::kTrue : RawFormula::Kind::kFalse;
      return f;
    }
    if (auto m = modality_keyword(w)) {
      next();
      f.kind = RawFormula::Kind::kModal;
      f.op = *m;
      f.kids.push_back(parse_implies());
      return f;
    }
    if (w == "exists" || w == "forall") {
      next();
      f.kind = RawFormula::Kind::kQuant;
      f.op = w == "exists" ? Connective::kExists : Connective::kForall;
      f.var = expect_name("variable name");
      expect(Tok::kColon, "':'");
      if (peek().kind != Tok::kWord) fail({"sort name"});
      f.sort_pos = peek().pos;
      f.sort = next().text;
      expect(Tok::kDot, "'.'");
      f.kids.push_back(parse_implies());
      return f;
    }
    if ((w == "E" || w == "A") && peek(1).kind == Tok::kLBracket) {
      next();
      next();
      f.kind = RawFormula::Kind::kUntil;
      f.op = w == "E" ? Connective::kEU : Connective::kAU;
      f.kids.push_back(parse_implies());
      if (peek().kind != Tok::kWord || peek().text != "U") {
        fail({"'&'", "'|'", "'->'", "'U'"});
      }
      next();
      f.kids.push_back(parse_implies());
      expect(Tok::kRBracket, "']'");
      return f;
    }
    if (is_reserved_word(w)) fail({"formula"});

    // Predicate atom, or the left-hand term of an equality.
    Tok after = peek(1).kind;
    if (after == Tok::kColon || after == Tok::kEqual) {
      return equality(parse_term());
    }
    if (after == Tok::kLParen) {
      RawTerm t = parse_term();
      if (peek().kind == Tok::kEqual) return equality(std::move(t));
      f.kind = RawFormula::Kind::kAtom;
      f.name = std::move(t.name);
      f.has_args = true;
      f.args = std::move(t.args);
      return f;
    }
    next();
    f.kind = RawFormula::Kind::kAtom;
    f.name = w;
    return f;
  }

  RawFormula equality(RawTerm lhs) {
    RawFormula f;
    f.kind = RawFormula::Kind::kEqual;
    f.pos = lhs.pos;
    expect(Tok::kEqual, "'='");
    f.args.push_back(std::move(lhs));
    f.args.push_back(parse_term());
    return f;
  }

  RawTerm parse_term() {
    RawTerm t;
    t.pos = peek().pos;
    if (peek().kind == Tok::kHash) {
      next();
      t.kind = RawTerm::Kind::kGround;
      if (peek().kind != Tok::kWord) fail({"sort name"});
      t.sort = next().text;
      expect(Tok::kColon, "':'");
      const Token& num = peek();
      std::uint32_t value = 0;
      auto res = std::from_chars(num.text.data(), num.text.data() + num.text.size(), value);
      if (num.kind != Tok::kWord || res.ec != std::errc() ||
          res.ptr != num.text.data() + num.text.size()) {
        fail({"element index"});
      }
      next();
      t.index = value;
      return t;
    }
    t.name = expect_name("term");
    if (peek().kind == Tok::kLParen) {
      next();
      t.kind = RawTerm::Kind::kApply;
      if (peek().kind != Tok::kRParen) {
        t.args.push_back(parse_term());
        while (peek().kind == Tok::kComma) {
          next();
          t.args.push_back(parse_term());
        }
      }
      expect(Tok::kRParen, "')'");
    } else if (peek().kind == Tok::kColon) {
      next();
      t.kind = RawTerm::Kind::kAnnotated;
      if (peek().kind != Tok::kWord) fail({"sort name"});
      t.sort = next().text;
    }
    return t;
  }

  std::vector<Token> toks_;
  std::size_t at_ = 0;
};

// ---------------------------------------------------------------------------
// Elaboration: sort inference, scoping, binder renaming.

[[noreturn]] void sort_error(std::size_t pos, const std::string& msg) {
  throw Error(ErrorCode::kSort, msg + " (at offset " + std::to_string(pos) + ")");
}

[[noreturn]] void unknown(std::size_t pos, const std::string& msg) {
  throw Error(ErrorCode::kUnknownIdentifier,
              msg + " (at offset " + std::to_string(pos) + ")");
}

class Elaborator {
 public:
  explicit Elaborator(const Signature& sig) : sig_(sig) {}

  Formula run(const RawFormula& raw) {
    do {
      changed_ = false;
      std::vector<std::pair<std::string, std::optional<SortId>>> scope;
      infer(raw, scope);
    } while (changed_);
    for (const auto& [name, sort] : free_sorts_) taken_.insert(name);
    for (const FunctionDecl& fn : sig_.functions()) taken_.insert(fn.name);
    return build(raw);
  }

 private:
  using InferScope = std::vector<std::pair<std::string, std::optional<SortId>>>;

  static const std::optional<SortId>* lookup(const InferScope& scope,
                                             const std::string& name) {
    for (auto it = scope.rbegin(); it != scope.rend(); ++it) {
      if (it->first == name) return &it->second;
    }
    return nullptr;
  }

  void record(const std::string& name, SortId sort, std::size_t pos) {
    auto [it, inserted] = free_sorts_.emplace(name, sort);
    if (inserted) {
      changed_ = true;
    } else if (it->second != sort) {
      sort_error(pos, "free variable '" + name + "' is used with sorts " +
                          sig_.sort_name(it->second) + " and " +
                          sig_.sort_name(sort));
    }
  }

  std::optional<SortId> static_sort(const RawTerm& t, const InferScope& scope) const {
    switch (t.kind) {
      case RawTerm::Kind::kGround:
      case RawTerm::Kind::kAnnotated:
        return sig_.find_sort(t.sort);
      case RawTerm::Kind::kApply:
        if (auto f = sig_.find_function(t.name)) return sig_.function(*f).result;
        return std::nullopt;
      case RawTerm::Kind::kName:
        if (const auto* s = lookup(scope, t.name)) return *s;
        if (auto f = sig_.find_function(t.name)) return sig_.function(*f).result;
        if (auto it = free_sorts_.find(t.name); it != free_sorts_.end()) {
          return it->second;
        }
        return std::nullopt;
    }
    return std::nullopt;
  }

  void infer_term(const RawTerm& t, std::optional<SortId> expected,
                  const InferScope& scope) {
    switch (t.kind) {
      case RawTerm::Kind::kGround:
        return;
      case RawTerm::Kind::kAnnotated:
        if (auto s = sig_.find_sort(t.sort)) record(t.name, *s, t.pos);
        return;
      case RawTerm::Kind::kName:
        if (lookup(scope, t.name) || sig_.find_function(t.name)) return;
        if (expected) record(t.name, *expected, t.pos);
        return;
      case RawTerm::Kind::kApply: {
        auto f = sig_.find_function(t.name);
        for (std::size_t i = 0; i < t.args.size(); ++i) {
          std::optional<SortId> want;
          if (f && i < sig_.function(*f).args.size()) want = sig_.function(*f).args[i];
          infer_term(t.args[i], want, scope);
        }
        return;
      }
    }
  }

  void infer(const RawFormula& f, InferScope& scope) {
    switch (f.kind) {
      case RawFormula::Kind::kAtom: {
        auto p = sig_.find_predicate(f.name);
        for (std::size_t i = 0; i < f.args.size(); ++i) {
          std::optional<SortId> want;
          if (p && i < sig_.predicate(*p).args.size()) want = sig_.predicate(*p).args[i];
          infer_term(f.args[i], want, scope);
        }
        return;
      }
      case RawFormula::Kind::kEqual: {
        auto lhs = static_sort(f.args[0], scope);
        auto rhs = static_sort(f.args[1], scope);
        infer_term(f.args[0], rhs, scope);
        infer_term(f.args[1], lhs, scope);
        return;
      }
      case RawFormula::Kind::kQuant:
        scope.emplace_back(f.var, sig_.find_sort(f.sort));
        infer(f.kids[0], scope);
        scope.pop_back();
        return;
      default:
        for (const RawFormula& k : f.kids) infer(k, scope);
        return;
    }
  }

  const Variable* bound_variable(const std::string& name) const {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
      if (it->first == name) return &it->second;
    }
    return nullptr;
  }

  Term build_term(const RawTerm& t) {
    switch (t.kind) {
      case RawTerm::Kind::kGround: {
        auto s = sig_.find_sort(t.sort);
        if (!s) unknown(t.pos, "unknown sort '" + t.sort + "'");
        return Term::constant(Element{*s, t.index});
      }
      case RawTerm::Kind::kAnnotated: {
        auto s = sig_.find_sort(t.sort);
        if (!s) unknown(t.pos, "unknown sort '" + t.sort + "'");
        return Term::variable(Variable{t.name, *s});
      }
      case RawTerm::Kind::kName:
        if (const Variable* v = bound_variable(t.name)) return Term::variable(*v);
        if (sig_.find_function(t.name)) return apply(t, {});
        if (auto it = free_sorts_.find(t.name); it != free_sorts_.end()) {
          return Term::variable(Variable{t.name, it->second});
        }
        sort_error(t.pos, "cannot infer the sort of free variable '" + t.name +
                              "'; annotate it as " + t.name + ":SORT");
      case RawTerm::Kind::kApply: {
        std::vector<Term> args;
        for (const RawTerm& a : t.args) args.push_back(build_term(a));
        return apply(t, std::move(args));
      }
    }
    sort_error(t.pos, "malformed term");
  }

  Term apply(const RawTerm& t, std::vector<Term> args) {
    auto f = sig_.find_function(t.name);
    if (!f) unknown(t.pos, "unknown function '" + t.name + "'");
    try {
      return Term::apply(sig_, *f, std::move(args));
    } catch (const Error& e) {
      sort_error(t.pos, e.what());
    }
  }

  std::string fresh_binder(const std::string& name) const {
    auto in_use = [&](const std::string& candidate) {
      if (taken_.count(candidate)) return true;
      return std::any_of(scope_.begin(), scope_.end(), [&](const auto& entry) {
        return entry.second.name == candidate;
      });
    };
    if (!in_use(name)) return name;
    for (int k = 1;; ++k) {
      std::string candidate = name + "_" + std::to_string(k);
      if (!in_use(candidate)) return candidate;
    }
  }

  Formula build(const RawFormula& f) {
    switch (f.kind) {
      case RawFormula::Kind::kTrue:
        return Formula::top();
      case RawFormula::Kind::kFalse:
        return Formula::bottom();
      case RawFormula::Kind::kPlayer: {
        auto p = sig_.find_player(f.name);
        if (!p) unknown(f.pos, "unknown player '" + f.name + "'");
        return Formula::player(*p);
      }
      case RawFormula::Kind::kAtom: {
        auto p = sig_.find_predicate(f.name);
        if (!p) {
          if (bound_variable(f.name) || sig_.find_function(f.name)) {
            throw ParseError(f.pos + f.name.size(), {"'='"}, "");
          }
          unknown(f.pos, "unknown predicate '" + f.name + "'");
        }
        std::vector<Term> args;
        for (const RawTerm& a : f.args) args.push_back(build_term(a));
        try {
          return Formula::predicate(sig_, *p, std::move(args));
        } catch (const Error& e) {
          sort_error(f.pos, e.what());
        }
      }
      case RawFormula::Kind::kEqual: {
        Term lhs = build_term(f.args[0]);
        Term rhs = build_term(f.args[1]);
        if (lhs.sort() != rhs.sort()) {
          sort_error(f.pos, "equality between sorts " + sig_.sort_name(lhs.sort()) +
                                " and " + sig_.sort_name(rhs.sort()));
        }
        return Formula::equal(std::move(lhs), std::move(rhs));
      }
      case RawFormula::Kind::kNot:
        return Formula::negation(build(f.kids[0]));
      case RawFormula::Kind::kBinary: {
        Formula lhs = build(f.kids[0]);
        Formula rhs = build(f.kids[1]);
        switch (f.op) {
          case Connective::kAnd: return Formula::conjunction(lhs, rhs);
          case Connective::kOr: return Formula::disjunction(lhs, rhs);
          default: return Formula::implication(lhs, rhs);
        }
      }
      case RawFormula::Kind::kModal:
        return Formula::modal(f.op, build(f.kids[0]));
      case RawFormula::Kind::kUntil: {
        Formula lhs = build(f.kids[0]);
        Formula rhs = build(f.kids[1]);
        return f.op == Connective::kEU ? Formula::exists_until(lhs, rhs)
                                       : Formula::always_until(lhs, rhs);
      }
      case RawFormula::Kind::kQuant: {
        auto s = sig_.find_sort(f.sort);
        if (!s) unknown(f.sort_pos, "unknown sort '" + f.sort + "'");
        Variable var{fresh_binder(f.var), *s};
        scope_.emplace_back(f.var, var);
        Formula body = build(f.kids[0]);
        scope_.pop_back();
        return f.op == Connective::kExists ? Formula::exists(var, body)
                                           : Formula::forall(var, body);
      }
    }
    throw Error(ErrorCode::kInvalidArgument, "malformed formula");
  }

  const Signature& sig_;
  std::map<std::string, SortId> free_sorts_;
  std::set<std::string> taken_;
  std::vector<std::pair<std::string, Variable>> scope_;
  bool changed_ = false;
};

// ---------------------------------------------------------------------------
// Printer

class Printer {
 public:
  explicit Printer(const Signature& sig) : sig_(sig) {}

  std::string term(const Term& t) const {
    switch (t.kind()) {
      case Term::Kind::kVariable:
        if (is_bound(t.var())) return t.var().name;
        return t.var().name + ":" + sig_.sort_name(t.var().sort);
      case Term::Kind::kConstant:
        return "#" + sig_.sort_name(t.element().sort) + ":" +
               std::to_string(t.element().index);
      case Term::Kind::kApply:
        break;
    }
    const std::string& name = sig_.function(t.function()).name;
    if (t.args().empty()) {
      bool shadowed = std::any_of(bound_.begin(), bound_.end(),
                                  [&](const Variable& v) { return v.name == name; });
      return shadowed ? name + "()" : name;
    }
    std::string out = name + "(";
    for (std::size_t i = 0; i < t.args().size(); ++i) {
      if (i > 0) out += ", ";
      out += term(t.args()[i]);
    }
    return out + ")";
  }

  std::string formula(const Formula& f) {
    switch (f.op()) {
      case Connective::kTrue:
        return "true";
      case Connective::kFalse:
        return "false";
      case Connective::kPlayer:
        return "@" + sig_.player_name(f.player_id());
      case Connective::kPredicate: {
        const std::string& name = sig_.predicate(f.predicate_id()).name;
        if (f.terms().empty()) return name;
        std::string out = name + "(";
        for (std::size_t i = 0; i < f.terms().size(); ++i) {
          if (i > 0) out += ", ";
          out += term(f.terms()[i]);
        }
        return out + ")";
      }
      case Connective::kEqual:
        return term(f.terms()[0]) + " = " + term(f.terms()[1]);
      case Connective::kNot: {
        const Formula& sub = f.operand(0);
        bool wrap = is_binary_connective(sub.op()) || is_open(sub.op());
        return "!" + (wrap ? "(" + formula(sub) + ")" : formula(sub));
      }
      case Connective::kAnd:
      case Connective::kOr:
      case Connective::kImplies:
        return operand(f.operand(0), f.op(), true) + infix(f.op()) +
               operand(f.operand(1), f.op(), false);
      case Connective::kEU:
      case Connective::kAU:
        return std::string(f.op() == Connective::kEU ? "E[" : "A[") +
               formula(f.operand(0)) + " U " + formula(f.operand(1)) + "]";
      case Connective::kExists:
      case Connective::kForall: {
        std::string head = std::string(f.op() == Connective::kExists ? "exists " : "forall ") +
                           f.bound().name + ":" + sig_.sort_name(f.bound().sort) + " . ";
        bound_.push_back(f.bound());
        std::string body = body_text(f.operand(0));
        bound_.pop_back();
        return head + body;
      }
      default:
        break;
    }
    static const std::map<Connective, const char*> kNames = {
        {Connective::kEX, "EX "}, {Connective::kAX, "AX "}, {Connective::kEF, "EF "},
        {Connective::kAF, "AF "}, {Connective::kEG, "EG "}, {Connective::kAG, "AG "}};
    return kNames.at(f.op()) + body_text(f.operand(0));
  }

 private:
  static bool is_open(Connective c) {
    return is_unary_modality(c) || c == Connective::kExists || c == Connective::kForall;
  }

  static int precedence(Connective c) {
    switch (c) {
      case Connective::kImplies: return 1;
      case Connective::kOr: return 2;
      case Connective::kAnd: return 3;
      default: return 4;
    }
  }

  static const char* infix(Connective c) {
    switch (c) {
      case Connective::kAnd: return " & ";
      case Connective::kOr: return " | ";
      default: return " -> ";
    }
  }

  std::string body_text(const Formula& body) {
    std::string text = formula(body);
    return is_binary_connective(body.op()) ? "(" + text + ")" : text;
  }

  std::string operand(const Formula& child, Connective parent, bool left) {
    bool wrap = is_open(child.op());
    if (is_binary_connective(child.op())) {
      int cp = precedence(child.op());
      int pp = precedence(parent);
      if (cp < pp) {
        wrap = true;
      } else if (cp == pp) {
        wrap = parent == Connective::kImplies ? left : !left;
      }
    }
    std::string text = formula(child);
    return wrap ? "(" + text + ")" : text;
  }

  bool is_bound(const Variable& v) const {
    return std::find(bound_.begin(), bound_.end(), v) != bound_.end();
  }

  const Signature& sig_;
  std::vector<Variable> bound_;
};

}  // namespace

Formula parse_formula(std::string_view text, const Signature& sig) {
  RawFormula raw = Parser(text).parse();
  return Elaborator(sig).run(raw);
}

std::string to_string(const Formula& f, const Signature& sig) {
  return Printer(sig).formula(f);
}

std::string to_string(const Term& t, const Signature& sig) {
  return Printer(sig).term(t);
}

}  // namespace galcheck
