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

#include "galcheck/checker.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <deque>
#include <unordered_set>

#include "galcheck/error.hpp"

namespace galcheck {

StateSet::StateSet(std::size_t size, bool value)
    : size_(size), words_((size + 63) / 64, value ? ~std::uint64_t{0} : 0) {
  if (value && size % 64 != 0) {
    words_.back() = (std::uint64_t{1} << (size % 64)) - 1;
  }
}

std::size_t StateSet::count() const {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::vector<StateIndex> StateSet::indices() const {
  std::vector<StateIndex> out;
  for (StateIndex e = 0; e < size_; ++e) {
    if (test(e)) out.push_back(e);
  }
  return out;
}

const StateSet& LabelStore::marks(const Formula& f) const {
  auto it = labels_.find(f);
  if (it == labels_.end()) {
    throw Error(ErrorCode::kInvalidArgument, "subformula has not been labelled yet");
  }
  return it->second;
}

StateSet& LabelStore::begin(const Formula& f) {
  auto it = labels_.find(f);
  if (it == labels_.end()) it = labels_.emplace(f, StateSet(state_count_)).first;
  return it->second;
}

bool SatSet::contains(StateIndex e) const {
  return std::binary_search(states.begin(), states.end(), e);
}

// ---------------------------------------------------------------------------

void verify_true(const GalStructure& g, const Formula& f, LabelStore& store) {
  StateSet& out = store.begin(f);
  for (StateIndex e = 0; e < g.state_count(); ++e) out.set(e);
}

void verify_player(const GalStructure& g, const Formula& f, LabelStore& store) {
  PlayerId i = f.player_id();
  if (i >= g.signature().players().size()) {
    throw Error(ErrorCode::kUnknownIdentifier, "unknown player id " + std::to_string(i));
  }
  StateSet& out = store.begin(f);
  for (StateIndex e = 0; e < g.state_count(); ++e) {
    if (g.has_player(e, i)) out.set(e);
  }
}

void verify_predicate(const GalStructure& g, const Formula& f, const Valuation& v,
                      LabelStore& store) {
  StateSet& out = store.begin(f);
  std::vector<Element> args(f.terms().size());
  for (StateIndex e = 0; e < g.state_count(); ++e) {
    for (std::size_t k = 0; k < args.size(); ++k) {
      args[k] = eval_term(g, e, f.terms()[k], v);
    }
    bool holds;
    try {
      holds = g.predicate(f.predicate_id(), e, args);
    } catch (const std::exception& err) {
      throw Error(ErrorCode::kInterpretation,
                  std::string(err.what()) + " (evaluating " + to_string(f, g.signature()) +
                      " at state '" + g.state_id(e) + "')");
    }
    if (holds) out.set(e);
  }
}

void verify_equality(const GalStructure& g, const Formula& f, const Valuation& v,
                     LabelStore& store) {
  StateSet& out = store.begin(f);
  for (StateIndex e = 0; e < g.state_count(); ++e) {
    if (eval_term(g, e, f.terms()[0], v) == eval_term(g, e, f.terms()[1], v)) out.set(e);
  }
}

void verify_exists(const GalStructure& g, const Formula& f, LabelStore& store) {
  const Variable& x = f.bound();
  const Formula& body = f.operand(0);
  std::vector<const StateSet*> instances;
  const auto domain_size = static_cast<std::uint32_t>(g.domain(x.sort).size());
  for (std::uint32_t d = 0; d < domain_size; ++d) {
    instances.push_back(&store.marks(substitute(body, x, Element{x.sort, d})));
  }
  StateSet& out = store.begin(f);
  for (const StateSet* t : instances) {
    for (StateIndex e = 0; e < g.state_count(); ++e) {
      if (t->test(e)) out.set(e);
    }
  }
}

void verify_not(const GalStructure& g, const Formula& f, LabelStore& store) {
  StateSet operand = store.marks(f.operand(0));
  StateSet& out = store.begin(f);
  for (StateIndex e = 0; e < g.state_count(); ++e) {
    if (!operand.test(e)) out.set(e);
  }
}

void verify_implies(const GalStructure& g, const Formula& f, LabelStore& store) {
  StateSet lhs = store.marks(f.operand(0));
  StateSet rhs = store.marks(f.operand(1));
  StateSet& out = store.begin(f);
  for (StateIndex e = 0; e < g.state_count(); ++e) {
    if (!lhs.test(e) || rhs.test(e)) out.set(e);
  }
}

void verify_ax(const GalStructure& g, const Formula& f, LabelStore& store) {
  StateSet operand = store.marks(f.operand(0));
  StateSet& out = store.begin(f);
  for (StateIndex e = 0; e < g.state_count(); ++e) {
    auto next = g.successors(e);
    if (std::all_of(next.begin(), next.end(),
                    [&](StateIndex s) { return operand.test(s); })) {
      out.set(e);
    }
  }
}

// Least fixpoint Z = rhs | (lhs & EX Z): backward breadth-first search from
// the rhs states through lhs states.
void verify_eu(const GalStructure& g, const Formula& f, LabelStore& store,
               std::vector<StateSet>* rounds) {
  StateSet lhs = store.marks(f.operand(0));
  StateSet rhs = store.marks(f.operand(1));
  StateSet& out = store.begin(f);
  std::vector<StateIndex> frontier;
  for (StateIndex e = 0; e < g.state_count(); ++e) {
    if (rhs.test(e)) {
      out.set(e);
      frontier.push_back(e);
    }
  }
  if (rounds) rounds->push_back(out);
  while (!frontier.empty()) {
    std::vector<StateIndex> next;
    for (StateIndex s : frontier) {
      for (StateIndex p : g.predecessors(s)) {
        if (!out.test(p) && lhs.test(p)) {
          out.set(p);
          next.push_back(p);
        }
      }
    }
    if (rounds && !next.empty()) rounds->push_back(out);
    frontier = std::move(next);
  }
}

// Least fixpoint Z = rhs | (lhs & has a successor & AX Z). Each state keeps a
// count of successors not yet in Z; it joins once the count reaches zero.
// States on lhs-cycles that never reach rhs are never added.
void verify_au(const GalStructure& g, const Formula& f, LabelStore& store,
               std::vector<StateSet>* rounds) {
  StateSet lhs = store.marks(f.operand(0));
  StateSet rhs = store.marks(f.operand(1));
  StateSet& out = store.begin(f);
  std::vector<std::size_t> pending(g.state_count());
  std::vector<StateIndex> frontier;
  for (StateIndex e = 0; e < g.state_count(); ++e) {
    pending[e] = g.successors(e).size();
    if (rhs.test(e)) {
      out.set(e);
      frontier.push_back(e);
    }
  }
  if (rounds) rounds->push_back(out);
  while (!frontier.empty()) {
    std::vector<StateIndex> next;
    for (StateIndex s : frontier) {
      for (StateIndex p : g.predecessors(s)) {
        if (out.test(p)) continue;
        if (--pending[p] == 0 && lhs.test(p)) {
          out.set(p);
          next.push_back(p);
        }
      }
    }
    if (rounds && !next.empty()) rounds->push_back(out);
    frontier = std::move(next);
  }
}

// ---------------------------------------------------------------------------

namespace {

Formula ground(const Formula& f, const Valuation& v) {
  Formula out = f;
  for (const Variable& x : f.free_variables()) {
    auto value = v.find(x);
    if (!value) {
      throw Error(ErrorCode::kBinding, "free variable '" + x.name + "' is not bound");
    }
    out = substitute(out, x, *value);
  }
  return out;
}

// Every ground subformula needed to label `root`, with quantifiers
// instantiated over their domains.
std::vector<Formula> ground_subformulas(const GalStructure& g, const Formula& root) {
  std::unordered_set<Formula, FormulaHash> seen{root};
  std::vector<Formula> order{root};
  for (std::size_t k = 0; k < order.size(); ++k) {
    Formula f = order[k];
    auto visit = [&](const Formula& sub) {
      if (seen.insert(sub).second) order.push_back(sub);
    };
    if (f.op() == Connective::kExists) {
      const Variable& x = f.bound();
      const auto n = static_cast<std::uint32_t>(g.domain(x.sort).size());
      for (std::uint32_t d = 0; d < n; ++d) {
        visit(substitute(f.operand(0), x, Element{x.sort, d}));
      }
    } else {
      for (const Formula& sub : f.operands()) visit(sub);
    }
  }
  std::stable_sort(order.begin(), order.end(), [](const Formula& a, const Formula& b) {
    return a.depth() < b.depth();
  });
  return order;
}

void label(const GalStructure& g, const Formula& f, LabelStore& store) {
  static const Valuation kEmpty;
  switch (f.op()) {
    case Connective::kTrue: return verify_true(g, f, store);
    case Connective::kPlayer: return verify_player(g, f, store);
    case Connective::kPredicate: return verify_predicate(g, f, kEmpty, store);
    case Connective::kEqual: return verify_equality(g, f, kEmpty, store);
    case Connective::kNot: return verify_not(g, f, store);
    case Connective::kImplies: return verify_implies(g, f, store);
    case Connective::kAX: return verify_ax(g, f, store);
    case Connective::kEU: return verify_eu(g, f, store);
    case Connective::kAU: return verify_au(g, f, store);
    case Connective::kExists: return verify_exists(g, f, store);
    default:
      throw Error(ErrorCode::kInvalidArgument, "formula is not in core form");
  }
}

}  // namespace

CheckReport check_with_stats(const GalStructure& g, const Formula& f, const Valuation& v) {
  auto started = std::chrono::steady_clock::now();
  if (!g.validation_report().empty()) {
    throw ValidationError("invalid structure", g.validation_report());
  }

  Formula root = ground(expand_abbreviations(f), v);
  std::vector<Formula> steps = ground_subformulas(g, root);
  LabelStore store(g.state_count());
  for (const Formula& step : steps) label(g, step, store);

  CheckReport out{SatSet{store.marks(root).indices(), f, v}, {}};
  out.stats.states = g.state_count();
  out.stats.actions = g.actions().size();
  out.stats.subformulas = steps.size();
  out.stats.millis = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - started)
                         .count();
  return out;
}

SatSet check(const GalStructure& g, const Formula& f, const Valuation& v) {
  return check_with_stats(g, f, v).sat;
}

bool holds_at(const GalStructure& g, StateIndex e, const Formula& f, const Valuation& v) {
  if (e >= g.state_count()) {
    throw Error(ErrorCode::kInvalidArgument, "unknown state index " + std::to_string(e));
  }
  return check(g, f, v).contains(e);
}

}  // namespace galcheck
