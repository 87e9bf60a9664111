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

#ifndef GALCHECK_EXTENSIVE_HPP_
#define GALCHECK_EXTENSIVE_HPP_

// Finite extensive games with perfect information, their pure strategies
// and outcomes, the encoding of a game as a GAL structure, and equilibrium
// search through the logic (with a direct brute-force oracle alongside).

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "galcheck/logic.hpp"
#include "galcheck/rational.hpp"
#include "galcheck/structure.hpp"

namespace galcheck {

using PlayerIndex = std::uint32_t;
using NodeIndex = std::uint32_t;

// Nested description of a game tree. A node is a decision node when it has
// moves and a terminal when it has utilities. std::map keeps the moves in
// canonical (byte-lexicographic) order.
struct GameTree {
  std::optional<std::string> player;
  std::map<std::string, GameTree> moves;
  std::map<std::string, Rational> utilities;
};

struct GameNode {
  NodeIndex parent = 0;
  std::string action;  // label of the edge from the parent; empty at the root
  std::uint32_t depth = 0;
  std::vector<NodeIndex> children;
  std::optional<PlayerIndex> mover;
  std::vector<std::optional<Rational>> utilities;  // one slot per player
};

// Nodes are stored breadth first, so node 0 is the empty history and node
// indices order histories by length, then by canonical sibling order.
class ExtensiveGame {
 public:
  ExtensiveGame(std::vector<std::string> players, const GameTree& root);

  const std::vector<std::string>& players() const { return players_; }
  std::optional<PlayerIndex> find_player(std::string_view id) const;

  std::size_t node_count() const { return nodes_.size(); }
  const GameNode& node(NodeIndex n) const { return nodes_.at(n); }
  bool is_terminal(NodeIndex n) const { return nodes_.at(n).children.empty(); }

  const std::vector<NodeIndex>& terminals() const { return terminals_; }
  // Decision nodes of `i` in node order.
  const std::vector<NodeIndex>& decision_nodes(PlayerIndex i) const {
    return decisions_.at(i);
  }
  // Position of a decision node within its mover's decision_nodes().
  std::uint32_t decision_position(NodeIndex n) const { return decision_pos_.at(n); }

  std::vector<std::string> history(NodeIndex n) const;
  // "∅" for the root, "(A,L)" otherwise.
  std::string history_label(NodeIndex n) const;
  std::optional<NodeIndex> find_history(std::span<const std::string> actions) const;
  // True iff `prefix` lies on the path from the root to `n` (or is `n`).
  bool is_prefix(NodeIndex prefix, NodeIndex n) const;

  // Throws kInvalidArgument when the terminal lacks the utility.
  Rational utility(NodeIndex terminal, PlayerIndex i) const;

  const std::vector<std::string>& construction_issues() const { return issues_; }

 private:
  std::vector<std::string> players_;
  std::vector<GameNode> nodes_;
  std::vector<NodeIndex> terminals_;
  std::vector<std::vector<NodeIndex>> decisions_;
  std::vector<std::uint32_t> decision_pos_;
  std::vector<std::string> issues_;
};

// Empty iff: players are distinct identifiers, every nonterminal node has a
// known mover, every terminal has a utility for every player and no mover,
// and the player names do not collide with the GAL encoding's vocabulary.
std::vector<std::string> validate_game(const ExtensiveGame& g);

// A pure strategy: the child position chosen at each of the owner's
// decision nodes, in decision_nodes() order.
struct Strategy {
  PlayerIndex owner = 0;
  std::vector<std::uint32_t> choices;

  friend auto operator<=>(const Strategy&, const Strategy&) = default;
};

// One strategy per player, in player order.
using StrategyProfile = std::vector<Strategy>;

enum class EquilibriumConcept { kNash, kSubgamePerfect };

const char* concept_name(EquilibriumConcept c);

// Cartesian product of the available actions, first decision node most
// significant. A player without decision nodes has one empty strategy.
std::vector<Strategy> strategies(const ExtensiveGame& g, PlayerIndex i);
// Saturates at UINT64_MAX.
std::uint64_t strategy_count(const ExtensiveGame& g, PlayerIndex i);
std::uint64_t profile_count(const ExtensiveGame& g);
// Position of `s` in strategies(g, s.owner).
std::uint64_t strategy_index(const ExtensiveGame& g, const Strategy& s);
// "<A,L>": the chosen actions in decision-node order.
std::string strategy_label(const ExtensiveGame& g, const Strategy& s);

// Terminal reached by following the profile from the root / from `h`.
NodeIndex outcome(const ExtensiveGame& g, const StrategyProfile& s);
NodeIndex outcome_from(const ExtensiveGame& g, NodeIndex h, const StrategyProfile& s);

// Names and ids of the GAL encoding of a game. For each player p the
// encoding declares sort S<p>, rigid utility u<p>: T -> U, the profile
// variable v<p>_star and the deviation variable v<p>.
struct GameVocabulary {
  Signature sig;
  SortId histories = 0;
  SortId terminals = 0;
  SortId utilities = 0;
  std::vector<SortId> strategies;
  FunctionId history = 0;  // non-rigid `h`
  std::vector<FunctionId> utility;
  FunctionId outcome = 0;       // O: S1 x .. x Sn -> T
  FunctionId outcome_from = 0;  // Oh: H x S1 x .. x Sn -> T
  PredicateId geq = 0;          // on U
  PredicateId onpath = 0;       // H x T: h is a prefix of t
  std::vector<Variable> star;
  std::vector<Variable> deviation;
};

// Throws kInvalidArgument if the player names collide with the vocabulary.
GameVocabulary game_vocabulary(const ExtensiveGame& g);

// States are the histories in node order (state i is node i), actions link
// each history to its one-action extensions, players_at(h) = {P(h)}, and the
// single initial state is the empty history. Throws ValidationError if the
// game is invalid.
std::shared_ptr<const GalStructure> to_gal_structure(const ExtensiveGame& g);

// AG (and_i (@i -> forall v_i . geq(u_i(Oh(h, s*)), u_i(Oh(h, s*[i <- v_i])))))
Formula spe_formula(const ExtensiveGame& g);
// EG (onpath(h, O(s*)) & and_i (...same body...))
Formula ne_formula(const ExtensiveGame& g);
Formula equilibrium_formula(const ExtensiveGame& g, EquilibriumConcept c);

// Binds each player's profile variable to the profile's strategy.
Valuation profile_valuation(const ExtensiveGame& g, const StrategyProfile& s);

// Profiles in lexicographic order (first player most significant).
StrategyProfile profile_at(const ExtensiveGame& g, std::uint64_t index);

struct EnumerateOptions {
  unsigned threads = 1;  // 0 = hardware concurrency
};

// Profiles whose equilibrium formula holds at the empty history, in
// lexicographic order.
std::vector<StrategyProfile> enumerate_equilibria(const ExtensiveGame& g,
                                                  EquilibriumConcept c,
                                                  const EnumerateOptions& options = {});

// Same result computed straight from the definitions, without the logic.
bool is_equilibrium(const ExtensiveGame& g, const StrategyProfile& s,
                    EquilibriumConcept c);
std::vector<StrategyProfile> oracle_equilibria(const ExtensiveGame& g,
                                               EquilibriumConcept c);

// Bottom-up optimal choices at every decision node; ties go to the first
// action in canonical order.
StrategyProfile backward_induction(const ExtensiveGame& g);

}  // namespace galcheck

#endif  // GALCHECK_EXTENSIVE_HPP_
