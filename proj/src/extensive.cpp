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

#include "galcheck/extensive.hpp"

#include <algorithm>
#include <deque>
#include <exception>
#include <limits>
#include <set>
#include <thread>
#include <utility>

#include "galcheck/checker.hpp"
#include "galcheck/error.hpp"
#include "logic_internal.hpp"

namespace galcheck {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

}  // namespace

ExtensiveGame::ExtensiveGame(std::vector<std::string> players, const GameTree& root)
    : players_(std::move(players)), decisions_(players_.size()) {
  std::deque<std::pair<const GameTree*, NodeIndex>> queue;
  nodes_.push_back(GameNode{});
  queue.emplace_back(&root, 0);
  std::vector<const GameTree*> trees{&root};
  while (!queue.empty()) {
    auto [tree, index] = queue.front();
    queue.pop_front();
    for (const auto& [action, child] : tree->moves) {
      GameNode n;
      n.parent = index;
      n.action = action;
      n.depth = nodes_[index].depth + 1;
      auto child_index = static_cast<NodeIndex>(nodes_.size());
      nodes_[index].children.push_back(child_index);
      nodes_.push_back(std::move(n));
      trees.push_back(&child);
      queue.emplace_back(&child, child_index);
    }
  }

  decision_pos_.assign(nodes_.size(), 0);
  for (NodeIndex i = 0; i < nodes_.size(); ++i) {
    const GameTree& tree = *trees[i];
    GameNode& n = nodes_[i];
    n.utilities.resize(players_.size());
    std::string where = history_label(i);
    if (tree.player) {
      n.mover = find_player(*tree.player);
      if (!n.mover) issues_.push_back("node " + where + ": unknown player '" + *tree.player + "'");
    }
    if (!n.children.empty()) {
      if (!tree.player) issues_.push_back("node " + where + ": decision node without a player");
      if (!tree.utilities.empty())
        issues_.push_back("node " + where + ": decision node carries utilities");
      if (n.mover) {
        decision_pos_[i] = static_cast<std::uint32_t>(decisions_[*n.mover].size());
        decisions_[*n.mover].push_back(i);
      }
      for (const auto& [action, child] : tree.moves) {
        (void)child;
        if (action.empty()) issues_.push_back("node " + where + ": empty action label");
      }
    } else {
      terminals_.push_back(i);
      if (tree.player) issues_.push_back("node " + where + ": terminal node with a player");
      for (const auto& [player, value] : tree.utilities) {
        auto p = find_player(player);
        if (!p) {
          issues_.push_back("node " + where + ": utility for unknown player '" + player + "'");
          continue;
        }
        n.utilities[*p] = value;
      }
      for (PlayerIndex p = 0; p < players_.size(); ++p) {
        if (!n.utilities[p])
          issues_.push_back("node " + where + ": missing utility for player '" + players_[p] +
                            "'");
      }
    }
  }
}

std::optional<PlayerIndex> ExtensiveGame::find_player(std::string_view id) const {
  for (PlayerIndex i = 0; i < players_.size(); ++i)
    if (players_[i] == id) return i;
  return std::nullopt;
}

std::vector<std::string> ExtensiveGame::history(NodeIndex n) const {
  std::vector<std::string> out;
  while (n != 0) {
    out.push_back(nodes_.at(n).action);
    n = nodes_[n].parent;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::string ExtensiveGame::history_label(NodeIndex n) const {
  if (n == 0) return "\xE2\x88\x85";
  std::string out = "(";
  bool first = true;
  for (const auto& a : history(n)) {
    if (!first) out += ',';
    out += a;
    first = false;
  }
  return out + ")";
}

std::optional<NodeIndex> ExtensiveGame::find_history(
    std::span<const std::string> actions) const {
  NodeIndex at = 0;
  for (const auto& a : actions) {
    bool found = false;
    for (NodeIndex c : nodes_[at].children) {
      if (nodes_[c].action == a) {
        at = c;
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  return at;
}

bool ExtensiveGame::is_prefix(NodeIndex prefix, NodeIndex n) const {
  if (nodes_.at(prefix).depth > nodes_.at(n).depth) return false;
  while (nodes_[n].depth > nodes_[prefix].depth) n = nodes_[n].parent;
  return n == prefix;
}

Rational ExtensiveGame::utility(NodeIndex terminal, PlayerIndex i) const {
  const auto& slot = nodes_.at(terminal).utilities.at(i);
  if (!slot)
    throw Error(ErrorCode::kInvalidArgument,
                "no utility for player '" + players_[i] + "' at " + history_label(terminal));
  return *slot;
}

std::vector<std::string> validate_game(const ExtensiveGame& g) {
  std::vector<std::string> report;
  if (g.players().empty()) report.push_back("game has no players");
  std::set<std::string> seen;
  for (const auto& p : g.players()) {
    if (!is_identifier(p)) report.push_back("player id '" + p + "' is not an identifier");
    if (!seen.insert(p).second) report.push_back("duplicate player id '" + p + "'");
  }
  for (const auto& issue : g.construction_issues()) report.push_back(issue);
  if (report.empty()) {
    try {
      (void)game_vocabulary(g);
    } catch (const Error& e) {
      report.push_back(e.what());
    }
  }
  return report;
}

const char* concept_name(EquilibriumConcept c) {
  return c == EquilibriumConcept::kNash ? "NE" : "SPE";
}

std::uint64_t strategy_count(const ExtensiveGame& g, PlayerIndex i) {
  std::uint64_t n = 1;
  for (NodeIndex d : g.decision_nodes(i)) n = saturating_mul(n, g.node(d).children.size());
  return n;
}

std::uint64_t profile_count(const ExtensiveGame& g) {
  std::uint64_t n = 1;
  for (PlayerIndex i = 0; i < g.players().size(); ++i)
    n = saturating_mul(n, strategy_count(g, i));
  return n;
}

namespace {

Strategy strategy_at(const ExtensiveGame& g, PlayerIndex i, std::uint64_t index) {
  const auto& nodes = g.decision_nodes(i);
  Strategy s{i, std::vector<std::uint32_t>(nodes.size(), 0)};
  for (std::size_t k = nodes.size(); k-- > 0;) {
    auto width = g.node(nodes[k]).children.size();
    s.choices[k] = static_cast<std::uint32_t>(index % width);
    index /= width;
  }
  return s;
}

}  // namespace

std::vector<Strategy> strategies(const ExtensiveGame& g, PlayerIndex i) {
  std::uint64_t n = strategy_count(g, i);
  if (n == kSaturated)
    throw Error(ErrorCode::kLimit, "too many strategies for player '" + g.players().at(i) + "'");
  std::vector<Strategy> out;
  out.reserve(n);
  for (std::uint64_t k = 0; k < n; ++k) out.push_back(strategy_at(g, i, k));
  return out;
}

std::uint64_t strategy_index(const ExtensiveGame& g, const Strategy& s) {
  const auto& nodes = g.decision_nodes(s.owner);
  if (s.choices.size() != nodes.size())
    throw Error(ErrorCode::kInvalidArgument, "strategy does not match the player's decision nodes");
  std::uint64_t index = 0;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    auto width = g.node(nodes[k]).children.size();
    if (s.choices[k] >= width) throw Error(ErrorCode::kInvalidArgument, "strategy choice out of range");
    index = index * width + s.choices[k];
  }
  return index;
}

std::string strategy_label(const ExtensiveGame& g, const Strategy& s) {
  const auto& nodes = g.decision_nodes(s.owner);
  std::string out = "<";
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (k != 0) out += ',';
    out += g.node(g.node(nodes[k]).children.at(s.choices.at(k))).action;
  }
  return out + ">";
}

NodeIndex outcome_from(const ExtensiveGame& g, NodeIndex h, const StrategyProfile& s) {
  while (!g.is_terminal(h)) {
    const GameNode& n = g.node(h);
    if (!n.mover) throw Error(ErrorCode::kInvalidArgument, "decision node without a mover");
    const Strategy& st = s.at(*n.mover);
    h = n.children.at(st.choices.at(g.decision_position(h)));
  }
  return h;
}

NodeIndex outcome(const ExtensiveGame& g, const StrategyProfile& s) {
  return outcome_from(g, 0, s);
}

GameVocabulary game_vocabulary(const ExtensiveGame& g) {
  GameVocabulary v;
  try {
    for (const auto& p : g.players()) v.sig.add_player(p);
    v.histories = v.sig.add_sort("H");
    v.terminals = v.sig.add_sort("T");
    v.utilities = v.sig.add_sort("U");
    for (const auto& p : g.players()) v.strategies.push_back(v.sig.add_sort("S" + p));
    v.history = v.sig.add_function("h", {}, v.histories, false);
    for (const auto& p : g.players())
      v.utility.push_back(v.sig.add_function("u" + p, {v.terminals}, v.utilities, true));
    v.outcome = v.sig.add_function("O", v.strategies, v.terminals, true);
    std::vector<SortId> args{v.histories};
    args.insert(args.end(), v.strategies.begin(), v.strategies.end());
    v.outcome_from = v.sig.add_function("Oh", args, v.terminals, true);
    v.geq = v.sig.add_predicate("geq", {v.utilities, v.utilities}, true);
    v.onpath = v.sig.add_predicate("onpath", {v.histories, v.terminals}, true);
  } catch (const Error& e) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("player names collide with the game vocabulary: ") + e.what());
  }
  for (std::size_t i = 0; i < g.players().size(); ++i) {
    v.star.push_back(Variable{"v" + g.players()[i] + "_star", v.strategies[i]});
    v.deviation.push_back(Variable{"v" + g.players()[i], v.strategies[i]});
  }
  return v;
}

namespace {

class GameInterpretation final : public InterpretationProvider {
 public:
  GameInterpretation(std::shared_ptr<const ExtensiveGame> game, GameVocabulary vocab,
                     std::vector<Rational> values)
      : game_(std::move(game)), vocab_(std::move(vocab)), values_(std::move(values)) {
    terminal_pos_.assign(game_->node_count(), 0);
    for (std::uint32_t k = 0; k < game_->terminals().size(); ++k)
      terminal_pos_[game_->terminals()[k]] = k;
  }

  Element function(const GalStructure&, FunctionId f, StateIndex e,
                   std::span<const Element> args) const override {
    const ExtensiveGame& g = *game_;
    if (f == vocab_.history) return Element{vocab_.histories, e};
    if (f == vocab_.outcome || f == vocab_.outcome_from) {
      NodeIndex from = 0;
      std::size_t first = 0;
      if (f == vocab_.outcome_from) {
        from = args[0].index;
        first = 1;
      }
      StrategyProfile s;
      for (PlayerIndex i = 0; i < g.players().size(); ++i)
        s.push_back(strategy_at(g, i, args[first + i].index));
      return Element{vocab_.terminals, terminal_pos_[outcome_from(g, from, s)]};
    }
    for (PlayerIndex i = 0; i < vocab_.utility.size(); ++i) {
      if (f != vocab_.utility[i]) continue;
      Rational u = g.utility(g.terminals().at(args[0].index), i);
      auto it = std::lower_bound(values_.begin(), values_.end(), u);
      return Element{vocab_.utilities, static_cast<std::uint32_t>(it - values_.begin())};
    }
    throw Error(ErrorCode::kInterpretation, "unknown function symbol");
  }

  bool predicate(const GalStructure&, PredicateId p, StateIndex,
                 std::span<const Element> args) const override {
    if (p == vocab_.geq) return values_.at(args[0].index) >= values_.at(args[1].index);
    if (p == vocab_.onpath)
      return game_->is_prefix(args[0].index, game_->terminals().at(args[1].index));
    throw Error(ErrorCode::kInterpretation, "unknown predicate symbol");
  }

 private:
  std::shared_ptr<const ExtensiveGame> game_;
  GameVocabulary vocab_;
  std::vector<Rational> values_;
  std::vector<std::uint32_t> terminal_pos_;
};

}  // namespace

std::shared_ptr<const GalStructure> to_gal_structure(const ExtensiveGame& g) {
  auto report = validate_game(g);
  if (!report.empty()) throw ValidationError("invalid game", std::move(report));
  auto game = std::make_shared<const ExtensiveGame>(g);
  GameVocabulary vocab = game_vocabulary(g);

  std::vector<std::vector<std::string>> domains(vocab.sig.sorts().size());
  std::vector<StateDecl> states;
  std::vector<std::pair<std::string, std::string>> actions;
  for (NodeIndex n = 0; n < g.node_count(); ++n) {
    std::string label = g.history_label(n);
    domains[vocab.histories].push_back(label);
    StateDecl decl{label, {}};
    if (g.node(n).mover) decl.players.push_back(g.players()[*g.node(n).mover]);
    states.push_back(std::move(decl));
    for (NodeIndex c : g.node(n).children) actions.emplace_back(label, g.history_label(c));
  }
  std::vector<Rational> values;
  for (NodeIndex t : g.terminals()) {
    domains[vocab.terminals].push_back(g.history_label(t));
    for (PlayerIndex i = 0; i < g.players().size(); ++i) values.push_back(g.utility(t, i));
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  for (const auto& u : values) domains[vocab.utilities].push_back(u.to_string());
  for (PlayerIndex i = 0; i < g.players().size(); ++i) {
    for (const auto& s : strategies(g, i))
      domains[vocab.strategies[i]].push_back(strategy_label(g, s));
  }

  Signature sig = vocab.sig;
  auto provider = std::make_shared<GameInterpretation>(game, std::move(vocab), std::move(values));
  return std::make_shared<const GalStructure>(std::move(sig), std::move(domains),
                                              std::move(states), std::move(actions),
                                              std::vector<std::string>{g.history_label(0)},
                                              std::move(provider));
}

namespace {

Term outcome_term(const GameVocabulary& v, const std::vector<Term>& profile) {
  std::vector<Term> args{Term::apply(v.sig, v.history, {})};
  args.insert(args.end(), profile.begin(), profile.end());
  return Term::apply(v.sig, v.outcome_from, std::move(args));
}

// and_i (@i -> forall v_i . geq(u_i(Oh(h, s*)), u_i(Oh(h, s*[i <- v_i]))))
Formula no_profitable_deviation(const GameVocabulary& v) {
  std::vector<Term> star;
  for (const auto& x : v.star) star.push_back(Term::variable(x));
  Term on_profile = outcome_term(v, star);
  std::optional<Formula> out;
  for (std::size_t i = 0; i < v.star.size(); ++i) {
    std::vector<Term> deviated = star;
    deviated[i] = Term::variable(v.deviation[i]);
    Formula compare = Formula::predicate(
        v.sig, v.geq,
        {Term::apply(v.sig, v.utility[i], {on_profile}),
         Term::apply(v.sig, v.utility[i], {outcome_term(v, deviated)})});
    Formula clause = Formula::implication(Formula::player(static_cast<PlayerId>(i)),
                                          Formula::forall(v.deviation[i], compare));
    out = out ? Formula::conjunction(*out, clause) : clause;
  }
  return out ? *out : Formula::top();
}

}  // namespace

Formula spe_formula(const ExtensiveGame& g) {
  GameVocabulary v = game_vocabulary(g);
  return Formula::modal(Connective::kAG, no_profitable_deviation(v));
}

Formula ne_formula(const ExtensiveGame& g) {
  GameVocabulary v = game_vocabulary(g);
  std::vector<Term> star;
  for (const auto& x : v.star) star.push_back(Term::variable(x));
  Formula onpath = Formula::predicate(
      v.sig, v.onpath,
      {Term::apply(v.sig, v.history, {}), Term::apply(v.sig, v.outcome, star)});
  return Formula::modal(Connective::kEG,
                        Formula::conjunction(onpath, no_profitable_deviation(v)));
}

Formula equilibrium_formula(const ExtensiveGame& g, EquilibriumConcept c) {
  return c == EquilibriumConcept::kNash ? ne_formula(g) : spe_formula(g);
}

Valuation profile_valuation(const ExtensiveGame& g, const StrategyProfile& s) {
  GameVocabulary v = game_vocabulary(g);
  if (s.size() != g.players().size())
    throw Error(ErrorCode::kInvalidArgument, "profile size does not match the player count");
  Valuation val;
  for (PlayerIndex i = 0; i < s.size(); ++i)
    val.assign(v.star[i], Element{v.strategies[i], static_cast<std::uint32_t>(strategy_index(g, s[i]))});
  return val;
}

StrategyProfile profile_at(const ExtensiveGame& g, std::uint64_t index) {
  std::size_t n = g.players().size();
  StrategyProfile s(n);
  for (std::size_t i = n; i-- > 0;) {
    std::uint64_t width = strategy_count(g, static_cast<PlayerIndex>(i));
    s[i] = strategy_at(g, static_cast<PlayerIndex>(i), index % width);
    index /= width;
  }
  return s;
}

namespace {

template <typename Accept>
std::vector<StrategyProfile> filter_profiles(const ExtensiveGame& g, unsigned threads,
                                             const Accept& accept) {
  std::uint64_t total = profile_count(g);
  if (total == kSaturated) throw Error(ErrorCode::kLimit, "too many strategy profiles");
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(total, 1)));

  std::vector<std::vector<StrategyProfile>> parts(threads);
  std::vector<std::exception_ptr> errors(threads);
  auto work = [&](unsigned t) {
    try {
      std::uint64_t begin = total * t / threads;
      std::uint64_t end = total * (t + 1) / threads;
      for (std::uint64_t k = begin; k < end; ++k) {
        StrategyProfile s = profile_at(g, k);
        if (accept(s)) parts[t].push_back(std::move(s));
      }
    } catch (...) {
      errors[t] = std::current_exception();
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<StrategyProfile> out;
  for (auto& p : parts)
    for (auto& s : p) out.push_back(std::move(s));
  return out;
}

}  // namespace

std::vector<StrategyProfile> enumerate_equilibria(const ExtensiveGame& g,
                                                  EquilibriumConcept c,
                                                  const EnumerateOptions& options) {
  auto structure = to_gal_structure(g);
  Formula f = equilibrium_formula(g, c);
  return filter_profiles(g, options.threads, [&](const StrategyProfile& s) {
    return holds_at(*structure, 0, f, profile_valuation(g, s));
  });
}

bool is_equilibrium(const ExtensiveGame& g, const StrategyProfile& s, EquilibriumConcept c) {
  NodeIndex reached = outcome(g, s);
  for (PlayerIndex i = 0; i < g.players().size(); ++i) {
    auto alternatives = strategies(g, i);
    for (NodeIndex h : g.decision_nodes(i)) {
      if (c == EquilibriumConcept::kNash && !g.is_prefix(h, reached)) continue;
      Rational current = g.utility(outcome_from(g, h, s), i);
      StrategyProfile deviated = s;
      for (const auto& alt : alternatives) {
        deviated[i] = alt;
        if (g.utility(outcome_from(g, h, deviated), i) > current) return false;
      }
    }
  }
  return true;
}

std::vector<StrategyProfile> oracle_equilibria(const ExtensiveGame& g, EquilibriumConcept c) {
  return filter_profiles(g, 1, [&](const StrategyProfile& s) { return is_equilibrium(g, s, c); });
}

StrategyProfile backward_induction(const ExtensiveGame& g) {
  StrategyProfile s;
  for (PlayerIndex i = 0; i < g.players().size(); ++i)
    s.push_back(Strategy{i, std::vector<std::uint32_t>(g.decision_nodes(i).size(), 0)});
  std::vector<NodeIndex> result(g.node_count());
  for (NodeIndex n = static_cast<NodeIndex>(g.node_count()); n-- > 0;) {
    const GameNode& node = g.node(n);
    if (node.children.empty()) {
      result[n] = n;
      continue;
    }
    PlayerIndex mover = node.mover.value();
    std::uint32_t best = 0;
    for (std::uint32_t k = 1; k < node.children.size(); ++k) {
      if (g.utility(result[node.children[k]], mover) >
          g.utility(result[node.children[best]], mover))
        best = k;
    }
    result[n] = result[node.children[best]];
    s[mover].choices[g.decision_position(n)] = best;
  }
  return s;
}

}  // namespace galcheck
