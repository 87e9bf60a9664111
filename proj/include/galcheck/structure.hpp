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

#ifndef GALCHECK_STRUCTURE_HPP_
#define GALCHECK_STRUCTURE_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "galcheck/logic.hpp"

namespace galcheck {

using StateIndex = std::uint32_t;

// Assignment of domain elements to (free) variables.
class Valuation {
 public:
  // Throws a kSort error if the element's sort differs from the variable's.
  void assign(const Variable& var, Element element);
  std::optional<Element> find(const Variable& var) const;
  const std::map<Variable, Element>& bindings() const { return bindings_; }
  bool empty() const { return bindings_.empty(); }

 private:
  std::map<Variable, Element> bindings_;
};

class GalStructure;

// Supplies the per-state first-order interpretation. Rigid symbols must
// ignore the state argument. Implementations must be deterministic and
// terminate; GalStructure memoizes every call.
class InterpretationProvider {
 public:
  virtual ~InterpretationProvider() = default;

  virtual Element function(const GalStructure& g, FunctionId f, StateIndex e,
                           std::span<const Element> args) const = 0;
  virtual bool predicate(const GalStructure& g, PredicateId p, StateIndex e,
                         std::span<const Element> args) const = 0;

  // Appends totality/consistency problems of the tables, if any.
  virtual void validate(const GalStructure& g,
                        std::vector<std::string>& report) const {
    (void)g;
    (void)report;
  }
};

struct StateDecl {
  std::string id;
  std::vector<std::string> players;
};

// A finite game analysis logic structure: states with player sets, an
// action relation (not necessarily total), sort domains and an
// interpretation. Construction never rejects input; problems are collected
// and reported by validate().
class GalStructure {
 public:
  GalStructure(Signature sig, std::vector<std::vector<std::string>> domains,
               std::vector<StateDecl> states,
               std::vector<std::pair<std::string, std::string>> actions,
               std::vector<std::string> initial,
               std::shared_ptr<const InterpretationProvider> interpretation);

  GalStructure(const GalStructure&) = delete;
  GalStructure& operator=(const GalStructure&) = delete;

  const Signature& signature() const { return sig_; }

  std::size_t state_count() const { return states_.size(); }
  const std::string& state_id(StateIndex e) const { return states_.at(e).id; }
  std::optional<StateIndex> find_state(std::string_view id) const;
  // Throws a kInvalidArgument error for an unknown id.
  StateIndex state_index(std::string_view id) const;

  // Sorted by state index, duplicate-free.
  std::span<const StateIndex> successors(StateIndex e) const {
    return successors_.at(e);
  }
  std::span<const StateIndex> predecessors(StateIndex e) const {
    return predecessors_.at(e);
  }
  const std::vector<std::pair<StateIndex, StateIndex>>& actions() const {
    return actions_;
  }
  const std::vector<StateIndex>& initial() const { return initial_; }
  std::span<const PlayerId> players_at(StateIndex e) const {
    return players_.at(e);
  }
  bool has_player(StateIndex e, PlayerId i) const;

  const std::vector<std::string>& domain(SortId s) const { return domains_.at(s); }
  std::optional<Element> find_element(SortId s, std::string_view label) const;
  const std::string& element_label(Element el) const;

  // Memoized interpretation lookups. Throw kInterpretation errors when the
  // provider fails or returns an element outside the declared domain.
  Element function(FunctionId f, StateIndex e, std::span<const Element> args) const;
  bool predicate(PredicateId p, StateIndex e, std::span<const Element> args) const;

  const InterpretationProvider& interpretation() const { return *interp_; }
  const std::vector<std::string>& construction_issues() const { return issues_; }
  // validate(*this), computed on first use.
  const std::vector<std::string>& validation_report() const;

 private:
  Signature sig_;
  std::vector<std::vector<std::string>> domains_;
  std::vector<std::unordered_map<std::string, std::uint32_t>> element_index_;
  std::vector<StateDecl> states_;
  std::unordered_map<std::string, StateIndex> state_index_;
  std::vector<std::vector<PlayerId>> players_;
  std::vector<std::pair<StateIndex, StateIndex>> actions_;
  std::vector<std::vector<StateIndex>> successors_;
  std::vector<std::vector<StateIndex>> predecessors_;
  std::vector<StateIndex> initial_;
  std::shared_ptr<const InterpretationProvider> interp_;
  std::vector<std::string> issues_;

  struct KeyHash {
    std::size_t operator()(const std::vector<std::uint32_t>& key) const;
  };
  mutable std::once_flag validated_;
  mutable std::vector<std::string> validation_;
  mutable std::shared_mutex memo_mutex_;
  mutable std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, KeyHash> memo_;
};

// Empty iff every structural invariant holds: declared endpoints, nonempty
// domains, known players, and every state with a player has a successor.
std::vector<std::string> validate(const GalStructure& g);

std::vector<std::string> successors(const GalStructure& g, std::string_view state);
bool is_deadlock(const GalStructure& g, StateIndex e);
bool is_deadlock(const GalStructure& g, std::string_view state);

// Throws kBinding for an unassigned variable and kInterpretation (with
// term and state context) when evaluation fails.
Element eval_term(const GalStructure& g, StateIndex e, const Term& t,
                  const Valuation& v);

// A maximal path shape: either it ends in a deadlock state, or its last
// state loops back to states[*loop_start] and repeats forever.
struct Path {
  std::vector<StateIndex> states;
  std::optional<std::size_t> loop_start;

  bool finite() const { return !loop_start.has_value(); }
};

// Every maximal path from `start` whose prefix before the loop is simple.
// Stops after `limit` paths. Exponential; meant for small structures.
std::vector<Path> maximal_paths(const GalStructure& g, StateIndex start,
                                std::size_t limit = 1u << 20);
bool is_maximal_path(const GalStructure& g, const Path& p);

}  // namespace galcheck

#endif  // GALCHECK_STRUCTURE_HPP_
