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

#ifndef GALCHECK_CHECKER_HPP_
#define GALCHECK_CHECKER_HPP_

// Explicit-state labelling algorithm. A check expands abbreviations,
// grounds the formula under the valuation, instantiates every quantifier
// over its sort's domain, and then labels the ground subformulas in order
// of increasing nesting depth. Until operators are least fixpoints computed
// by backward propagation, which is correct on non-total action relations
// (finite maximal paths end in deadlock states).

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "galcheck/logic.hpp"
#include "galcheck/structure.hpp"

namespace galcheck {

class StateSet {
 public:
  StateSet() = default;
  explicit StateSet(std::size_t size, bool value = false);

  std::size_t size() const { return size_; }
  bool test(StateIndex e) const { return (words_[e >> 6] >> (e & 63)) & 1u; }
  void set(StateIndex e) { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  std::size_t count() const;
  std::vector<StateIndex> indices() const;

  friend bool operator==(const StateSet&, const StateSet&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

// labels(e) for every state, keyed by ground subformula. Marks are only
// ever added.
class LabelStore {
 public:
  explicit LabelStore(std::size_t state_count) : state_count_(state_count) {}

  bool processed(const Formula& f) const { return labels_.count(f) != 0; }
  // Throws kInvalidArgument if `f` has not been processed.
  const StateSet& marks(const Formula& f) const;
  bool labelled(const Formula& f, StateIndex e) const { return marks(f).test(e); }

  // Registers `f` as processed (with no marks yet) and returns its marks.
  StateSet& begin(const Formula& f);
  void mark(const Formula& f, StateIndex e) { begin(f).set(e); }

  std::size_t size() const { return labels_.size(); }

 private:
  std::size_t state_count_;
  std::unordered_map<Formula, StateSet, FormulaHash> labels_;
};

struct SatSet {
  std::vector<StateIndex> states;  // ascending
  Formula formula;
  Valuation valuation;

  bool contains(StateIndex e) const;
};

struct CheckStats {
  std::size_t states = 0;
  std::size_t actions = 0;
  std::size_t subformulas = 0;  // ground subformulas labelled
  double millis = 0.0;
};

struct CheckReport {
  SatSet sat;
  CheckStats stats;
};

// {e | G, v |= f at e}. Throws ValidationError for an invalid structure,
// kBinding when a free variable of `f` is unassigned, and propagates
// interpretation failures.
SatSet check(const GalStructure& g, const Formula& f, const Valuation& v = {});
CheckReport check_with_stats(const GalStructure& g, const Formula& f,
                             const Valuation& v = {});
bool holds_at(const GalStructure& g, StateIndex e, const Formula& f,
              const Valuation& v = {});

// Per-connective labelling steps. Each marks the states satisfying `f` and
// expects the operands of `f` to be processed already. Terms are evaluated
// under `v`, which may be empty when `f` is ground.
void verify_true(const GalStructure& g, const Formula& f, LabelStore& store);
void verify_player(const GalStructure& g, const Formula& f, LabelStore& store);
void verify_predicate(const GalStructure& g, const Formula& f, const Valuation& v,
                      LabelStore& store);
void verify_equality(const GalStructure& g, const Formula& f, const Valuation& v,
                     LabelStore& store);
// Reads the labels of body[x <- d] for every d in the bound sort's domain.
void verify_exists(const GalStructure& g, const Formula& f, LabelStore& store);
void verify_not(const GalStructure& g, const Formula& f, LabelStore& store);
void verify_implies(const GalStructure& g, const Formula& f, LabelStore& store);
void verify_ax(const GalStructure& g, const Formula& f, LabelStore& store);
// `rounds`, when given, receives the marked set after each propagation round.
void verify_eu(const GalStructure& g, const Formula& f, LabelStore& store,
               std::vector<StateSet>* rounds = nullptr);
void verify_au(const GalStructure& g, const Formula& f, LabelStore& store,
               std::vector<StateSet>* rounds = nullptr);

}  // namespace galcheck

#endif  // GALCHECK_CHECKER_HPP_
