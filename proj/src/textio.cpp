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

#include "galcheck/textio.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"

#include "galcheck/error.hpp"

namespace galcheck {

namespace {

using nlohmann::json;

constexpr std::size_t kMaxTableSize = std::size_t{1} << 24;
constexpr std::size_t kMaxGameDepth = 1000;

std::string pointer_token(std::string_view key) {
  std::string out;
  for (char c : key) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

std::string child(const std::string& path, std::string_view key) {
  return path + "/" + pointer_token(key);
}

std::string child(const std::string& path, std::size_t index) {
  return path + "/" + std::to_string(index);
}

[[noreturn]] void schema_error(const std::string& path, const std::string& message) {
  throw Error(ErrorCode::kSchema, (path.empty() ? std::string("/") : path) + ": " + message);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, "malformed JSON at byte " + std::to_string(e.byte));
  }
}

std::string dump_json(const json& j) {
  return j.dump(2, ' ', false, json::error_handler_t::replace) + "\n";
}

const json& expect_object(const json& j, const std::string& path) {
  if (!j.is_object()) schema_error(path, "expected an object");
  return j;
}

const json& expect_array(const json& j, const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected an array");
  return j;
}

const std::string& expect_string(const json& j, const std::string& path) {
  if (!j.is_string()) schema_error(path, "expected a string");
  return j.get_ref<const std::string&>();
}

void check_keys(const json& obj, std::initializer_list<std::string_view> allowed,
                const std::string& path) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      schema_error(child(path, key), "unknown field");
  }
}

const json* optional_field(const json& obj, std::string_view key) {
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

const json& required_field(const json& obj, std::string_view key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(child(path, key), "missing field");
  return *it;
}

std::int64_t expect_int(const json& j, const std::string& path) {
  if (j.is_number_unsigned()) {
    if (j.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
      schema_error(path, "integer out of range");
    return static_cast<std::int64_t>(j.get<std::uint64_t>());
  }
  if (!j.is_number_integer()) schema_error(path, "expected an integer");
  return j.get<std::int64_t>();
}

// ---------------------------------------------------------------------------
// Structures

// Shape of a symbol's argument tuples: flat index = mixed radix over the
// argument domains, first argument most significant.
struct TupleShape {
  std::vector<SortId> sorts;
  std::vector<std::size_t> sizes;
  std::size_t cells = 1;

  std::size_t flat(std::span<const Element> args) const {
    std::size_t index = 0;
    for (std::size_t k = 0; k < sizes.size(); ++k) index = index * sizes[k] + args[k].index;
    return index;
  }

  std::vector<Element> unflatten(std::size_t index) const {
    std::vector<Element> out(sizes.size());
    for (std::size_t k = sizes.size(); k-- > 0;) {
      out[k] = Element{sorts[k], static_cast<std::uint32_t>(index % sizes[k])};
      index /= sizes[k];
    }
    return out;
  }
};

TupleShape make_shape(const std::vector<SortId>& sorts,
                      const std::vector<std::vector<std::string>>& domains,
                      const std::string& what) {
  TupleShape s{sorts, {}, 1};
  for (SortId sort : sorts) {
    std::size_t size = domains.at(sort).size();
    s.sizes.push_back(size);
    if (size != 0 && s.cells > kMaxTableSize / size)
      throw Error(ErrorCode::kLimit, "interpretation table of " + what + " is too large");
    s.cells *= size;
  }
  return s;
}

class ExplicitInterpretation final : public InterpretationProvider {
 public:
  std::vector<TupleShape> function_shapes;
  std::vector<TupleShape> predicate_shapes;
  // [symbol][state, or 0 for rigid symbols][flat tuple]
  std::vector<std::vector<std::vector<std::uint32_t>>> function_tables;
  std::vector<std::vector<std::vector<char>>> predicate_tables;
  std::vector<bool> function_rigid;
  std::vector<bool> predicate_rigid;
  std::vector<SortId> function_result;

  Element function(const GalStructure&, FunctionId f, StateIndex e,
                   std::span<const Element> args) const override {
    const auto& table = function_tables.at(f).at(function_rigid[f] ? 0 : e);
    return Element{function_result[f], table.at(function_shapes[f].flat(args))};
  }

  bool predicate(const GalStructure&, PredicateId p, StateIndex e,
                 std::span<const Element> args) const override {
    const auto& table = predicate_tables.at(p).at(predicate_rigid[p] ? 0 : e);
    return table.at(predicate_shapes[p].flat(args)) != 0;
  }
};

class StructureLoader {
 public:
  explicit StructureLoader(const json& root) : root_(root) {}

  std::shared_ptr<const GalStructure> load() {
    expect_object(root_, "");
    check_keys(root_,
               {"sorts", "players", "functions", "predicates", "states", "rigid", "actions",
                "initial"},
               "");
    load_sorts();
    load_players();
    const json* rigid = optional_field(root_, "rigid");
    if (rigid) {
      expect_object(*rigid, "/rigid");
      check_keys(*rigid, {"funcs", "preds"}, "/rigid");
    }
    const json* rigid_preds = rigid ? optional_field(*rigid, "preds") : nullptr;
    if (rigid_preds) expect_object(*rigid_preds, "/rigid/preds");
    load_functions();
    load_predicates(rigid_preds);
    prepare_tables();
    load_states();
    if (rigid) load_rigid_tables(*rigid);
    check_completeness();
    auto [actions, initial] = load_edges();

    auto structure = std::make_shared<const GalStructure>(
        std::move(sig_), std::move(domains_), std::move(states_), std::move(actions),
        std::move(initial), std::move(interp_));
    const auto& report = structure->validation_report();
    if (!report.empty()) throw ValidationError("structure failed validation", report);
    return structure;
  }

 private:
  const json& root_;
  Signature sig_;
  std::vector<std::vector<std::string>> domains_;
  std::vector<std::unordered_map<std::string, std::uint32_t>> element_index_;
  std::vector<StateDecl> states_;
  std::shared_ptr<ExplicitInterpretation> interp_ = std::make_shared<ExplicitInterpretation>();
  // Per symbol: ARGSKEY -> flat index; keys that name two tuples are ambiguous.
  std::vector<std::unordered_map<std::string, std::size_t>> function_keys_;
  std::vector<std::unordered_set<std::string>> ambiguous_keys_;
  // Per function and table slot: which cells were assigned.
  std::vector<std::vector<std::vector<char>>> assigned_;
  std::vector<bool> rigid_seen_;

  SortId resolve_sort(const json& j, const std::string& path) {
    const std::string& name = expect_string(j, path);
    auto s = sig_.find_sort(name);
    if (!s) schema_error(path, "unknown sort '" + name + "'");
    return *s;
  }

  std::uint32_t resolve_element(SortId sort, const json& j, const std::string& path) {
    const std::string& label = expect_string(j, path);
    auto it = element_index_[sort].find(label);
    if (it == element_index_[sort].end())
      schema_error(path, "'" + label + "' is not an element of sort " + sig_.sort_name(sort));
    return it->second;
  }

  void load_sorts() {
    const json* sorts = optional_field(root_, "sorts");
    if (!sorts) return;
    expect_object(*sorts, "/sorts");
    for (const auto& [name, elems] : sorts->items()) {
      std::string path = child("/sorts", name);
      try {
        sig_.add_sort(name);
      } catch (const Error& e) {
        schema_error(path, e.what());
      }
      expect_array(elems, path);
      std::vector<std::string> domain;
      std::unordered_map<std::string, std::uint32_t> index;
      for (std::size_t k = 0; k < elems.size(); ++k) {
        const std::string& label = expect_string(elems[k], child(path, k));
        if (!index.emplace(label, static_cast<std::uint32_t>(k)).second)
          schema_error(child(path, k), "duplicate element '" + label + "'");
        domain.push_back(label);
      }
      if (domain.empty()) schema_error(path, "empty domain");
      domains_.push_back(std::move(domain));
      element_index_.push_back(std::move(index));
    }
  }

  void load_players() {
    const json* players = optional_field(root_, "players");
    if (!players) return;
    expect_array(*players, "/players");
    for (std::size_t k = 0; k < players->size(); ++k) {
      std::string path = child("/players", k);
      try {
        sig_.add_player(expect_string((*players)[k], path));
      } catch (const Error& e) {
        if (e.code() == ErrorCode::kSchema) throw;
        schema_error(path, e.what());
      }
    }
  }

  std::vector<SortId> load_arg_sorts(const json& decl, const std::string& path) {
    std::vector<SortId> args;
    if (const json* a = optional_field(decl, "args")) {
      expect_array(*a, child(path, "args"));
      for (std::size_t k = 0; k < a->size(); ++k)
        args.push_back(resolve_sort((*a)[k], child(child(path, "args"), k)));
    }
    return args;
  }

  void load_functions() {
    const json* functions = optional_field(root_, "functions");
    if (!functions) return;
    expect_object(*functions, "/functions");
    for (const auto& [name, decl] : functions->items()) {
      std::string path = child("/functions", name);
      expect_object(decl, path);
      check_keys(decl, {"args", "result", "rigid"}, path);
      auto args = load_arg_sorts(decl, path);
      SortId result = resolve_sort(required_field(decl, "result", path), child(path, "result"));
      bool rigid = false;
      if (const json* r = optional_field(decl, "rigid")) {
        if (!r->is_boolean()) schema_error(child(path, "rigid"), "expected a boolean");
        rigid = r->get<bool>();
      }
      try {
        sig_.add_function(name, args, result, rigid);
      } catch (const Error& e) {
        schema_error(path, e.what());
      }
    }
  }

  void load_predicates(const json* rigid_preds) {
    const json* predicates = optional_field(root_, "predicates");
    if (predicates) {
      expect_object(*predicates, "/predicates");
      for (const auto& [name, decl] : predicates->items()) {
        std::string path = child("/predicates", name);
        expect_object(decl, path);
        check_keys(decl, {"args"}, path);
        auto args = load_arg_sorts(decl, path);
        bool rigid = rigid_preds && rigid_preds->contains(name);
        try {
          sig_.add_predicate(name, args, rigid);
        } catch (const Error& e) {
          schema_error(path, e.what());
        }
      }
    }
    if (rigid_preds) {
      for (const auto& [name, table] : rigid_preds->items()) {
        (void)table;
        if (!sig_.find_predicate(name))
          schema_error(child("/rigid/preds", name), "undeclared predicate '" + name + "'");
      }
    }
  }

  void prepare_tables() {
    const json* states = optional_field(root_, "states");
    if (!states) schema_error("/states", "missing field");
    expect_array(*states, "/states");
    std::size_t state_count = states->size();
    auto& I = *interp_;
    for (const auto& decl : sig_.functions()) {
      TupleShape shape = make_shape(decl.args, domains_, "function " + decl.name);
      std::size_t slots = decl.rigid ? 1 : state_count;
      I.function_tables.emplace_back(slots, std::vector<std::uint32_t>(shape.cells, 0));
      assigned_.emplace_back(slots, std::vector<char>(shape.cells, 0));
      I.function_rigid.push_back(decl.rigid);
      I.function_result.push_back(decl.result);
      std::unordered_map<std::string, std::size_t> keys;
      std::unordered_set<std::string> ambiguous;
      for (std::size_t cell = 0; cell < shape.cells; ++cell) {
        std::string key;
        auto tuple = shape.unflatten(cell);
        for (std::size_t k = 0; k < tuple.size(); ++k) {
          if (k != 0) key += ',';
          key += domains_[tuple[k].sort][tuple[k].index];
        }
        if (!keys.emplace(key, cell).second) ambiguous.insert(key);
      }
      function_keys_.push_back(std::move(keys));
      ambiguous_keys_.push_back(std::move(ambiguous));
      I.function_shapes.push_back(std::move(shape));
      rigid_seen_.push_back(false);
    }
    for (const auto& decl : sig_.predicates()) {
      TupleShape shape = make_shape(decl.args, domains_, "predicate " + decl.name);
      std::size_t slots = decl.rigid ? 1 : state_count;
      I.predicate_tables.emplace_back(slots, std::vector<char>(shape.cells, 0));
      I.predicate_rigid.push_back(decl.rigid);
      I.predicate_shapes.push_back(std::move(shape));
    }
  }

  void load_function_table(FunctionId f, std::size_t slot, const json& table,
                           const std::string& path) {
    expect_object(table, path);
    const auto& decl = sig_.function(f);
    for (const auto& [key, value] : table.items()) {
      std::string p = child(path, key);
      if (ambiguous_keys_[f].count(key))
        schema_error(p, "argument key names more than one tuple");
      auto it = function_keys_[f].find(key);
      if (it == function_keys_[f].end()) schema_error(p, "no argument tuple matches this key");
      interp_->function_tables[f][slot][it->second] = resolve_element(decl.result, value, p);
      assigned_[f][slot][it->second] = 1;
    }
  }

  void load_predicate_table(PredicateId p, std::size_t slot, const json& table,
                            const std::string& path) {
    expect_array(table, path);
    const auto& decl = sig_.predicate(p);
    const auto& shape = interp_->predicate_shapes[p];
    for (std::size_t k = 0; k < table.size(); ++k) {
      std::string tp = child(path, k);
      expect_array(table[k], tp);
      if (table[k].size() != decl.args.size())
        schema_error(tp, "expected " + std::to_string(decl.args.size()) + " arguments");
      std::vector<Element> args;
      for (std::size_t a = 0; a < decl.args.size(); ++a)
        args.push_back(Element{decl.args[a],
                               resolve_element(decl.args[a], table[k][a], child(tp, a))});
      interp_->predicate_tables[p][slot][shape.flat(args)] = 1;
    }
  }

  void load_states() {
    const json& states = root_["states"];
    for (std::size_t i = 0; i < states.size(); ++i) {
      std::string path = child("/states", i);
      const json& s = expect_object(states[i], path);
      check_keys(s, {"id", "players", "funcs", "preds"}, path);
      StateDecl decl{expect_string(required_field(s, "id", path), child(path, "id")), {}};
      if (const json* players = optional_field(s, "players")) {
        std::string pp = child(path, "players");
        expect_array(*players, pp);
        for (std::size_t k = 0; k < players->size(); ++k) {
          const std::string& id = expect_string((*players)[k], child(pp, k));
          if (!sig_.find_player(id)) schema_error(child(pp, k), "unknown player '" + id + "'");
          decl.players.push_back(id);
        }
      }
      if (const json* funcs = optional_field(s, "funcs")) {
        std::string fp = child(path, "funcs");
        expect_object(*funcs, fp);
        for (const auto& [name, table] : funcs->items()) {
          auto f = sig_.find_function(name);
          if (!f) schema_error(child(fp, name), "undeclared function '" + name + "'");
          if (sig_.function(*f).rigid)
            schema_error(child(fp, name), "rigid function belongs under /rigid/funcs");
          load_function_table(*f, i, table, child(fp, name));
        }
      }
      if (const json* preds = optional_field(s, "preds")) {
        std::string pp = child(path, "preds");
        expect_object(*preds, pp);
        for (const auto& [name, table] : preds->items()) {
          auto p = sig_.find_predicate(name);
          if (!p) schema_error(child(pp, name), "undeclared predicate '" + name + "'");
          if (sig_.predicate(*p).rigid)
            schema_error(child(pp, name), "rigid predicate belongs under /rigid/preds");
          load_predicate_table(*p, i, table, child(pp, name));
        }
      }
      states_.push_back(std::move(decl));
    }
  }

  void load_rigid_tables(const json& rigid) {
    if (const json* funcs = optional_field(rigid, "funcs")) {
      expect_object(*funcs, "/rigid/funcs");
      for (const auto& [name, table] : funcs->items()) {
        std::string path = child("/rigid/funcs", name);
        auto f = sig_.find_function(name);
        if (!f) schema_error(path, "undeclared function '" + name + "'");
        if (!sig_.function(*f).rigid) schema_error(path, "function is not declared rigid");
        load_function_table(*f, 0, table, path);
        rigid_seen_[*f] = true;
      }
    }
    if (const json* preds = optional_field(rigid, "preds")) {
      for (const auto& [name, table] : preds->items()) {
        auto p = *sig_.find_predicate(name);
        load_predicate_table(p, 0, table, child("/rigid/preds", name));
      }
    }
  }

  void check_completeness() {
    for (FunctionId f = 0; f < sig_.functions().size(); ++f) {
      const auto& decl = sig_.function(f);
      for (std::size_t slot = 0; slot < assigned_[f].size(); ++slot) {
        const auto& cells = assigned_[f][slot];
        auto missing = std::find(cells.begin(), cells.end(), 0);
        if (missing == cells.end()) continue;
        auto tuple = interp_->function_shapes[f].unflatten(missing - cells.begin());
        std::string key;
        for (std::size_t k = 0; k < tuple.size(); ++k) {
          if (k != 0) key += ',';
          key += domains_[tuple[k].sort][tuple[k].index];
        }
        std::string path = decl.rigid ? child("/rigid/funcs", decl.name)
                                      : child(child(child("/states", slot), "funcs"), decl.name);
        schema_error(path, "function table is missing key '" + key + "'");
      }
    }
  }

  std::pair<std::vector<std::pair<std::string, std::string>>, std::vector<std::string>>
  load_edges() {
    std::unordered_set<std::string> ids;
    for (const auto& s : states_) ids.insert(s.id);
    std::vector<std::pair<std::string, std::string>> actions;
    if (const json* a = optional_field(root_, "actions")) {
      expect_array(*a, "/actions");
      for (std::size_t k = 0; k < a->size(); ++k) {
        std::string path = child("/actions", k);
        expect_array((*a)[k], path);
        if ((*a)[k].size() != 2) schema_error(path, "expected a [from, to] pair");
        const std::string& from = expect_string((*a)[k][0], child(path, 0));
        const std::string& to = expect_string((*a)[k][1], child(path, 1));
        for (const auto& end : {from, to}) {
          if (!ids.count(end))
            schema_error(path, "action (" + from + ", " + to + ") references undeclared state '" +
                                   end + "'");
        }
        actions.emplace_back(from, to);
      }
    }
    std::vector<std::string> initial;
    const json& init = required_field(root_, "initial", "");
    expect_array(init, "/initial");
    for (std::size_t k = 0; k < init.size(); ++k) {
      const std::string& id = expect_string(init[k], child("/initial", k));
      if (!ids.count(id)) schema_error(child("/initial", k), "undeclared state '" + id + "'");
      initial.push_back(id);
    }
    return {std::move(actions), std::move(initial)};
  }
};

// Calls `visit` with every argument tuple of the shape, in flat order.
template <typename Visit>
void for_each_tuple(const TupleShape& shape, const Visit& visit) {
  for (std::size_t cell = 0; cell < shape.cells; ++cell) visit(shape.unflatten(cell));
}

std::string tuple_key(const GalStructure& g, const std::vector<Element>& tuple) {
  std::string key;
  for (std::size_t k = 0; k < tuple.size(); ++k) {
    if (k != 0) key += ',';
    key += g.element_label(tuple[k]);
  }
  return key;
}

json function_table(const GalStructure& g, FunctionId f, StateIndex e, const TupleShape& shape) {
  json table = json::object();
  for_each_tuple(shape, [&](const std::vector<Element>& tuple) {
    table[tuple_key(g, tuple)] = g.element_label(g.function(f, e, tuple));
  });
  return table;
}

json predicate_table(const GalStructure& g, PredicateId p, StateIndex e, const TupleShape& shape) {
  json table = json::array();
  for_each_tuple(shape, [&](const std::vector<Element>& tuple) {
    if (!g.predicate(p, e, tuple)) return;
    json row = json::array();
    for (const auto& el : tuple) row.push_back(g.element_label(el));
    table.push_back(std::move(row));
  });
  return table;
}

// ---------------------------------------------------------------------------
// Games

Rational parse_rational(const json& j, const std::string& path) {
  if (j.is_array()) {
    if (j.size() != 2) schema_error(path, "expected [numerator, denominator]");
    std::int64_t num = expect_int(j[0], child(path, 0));
    std::int64_t den = expect_int(j[1], child(path, 1));
    if (den == 0) schema_error(child(path, 1), "zero denominator");
    return Rational(num, den);
  }
  return Rational(expect_int(j, path));
}

json rational_json(const Rational& r) {
  if (r.den() == 1) return r.num();
  return json::array({r.num(), r.den()});
}

GameTree parse_node(const json& j, const std::string& path, const std::string& history,
                    const std::vector<std::string>& players, std::size_t depth) {
  if (depth > kMaxGameDepth) schema_error(path, "game tree is too deep");
  expect_object(j, path);
  check_keys(j, {"player", "moves", "utilities"}, path);
  std::string where = " at history " + history;
  GameTree node;
  const json* moves = optional_field(j, "moves");
  const json* utilities = optional_field(j, "utilities");
  if (moves && utilities) schema_error(path, "node has both moves and utilities" + where);
  if (!moves && !utilities) schema_error(path, "node needs moves or utilities" + where);
  if (moves) {
    const json& player = required_field(j, "player", path);
    const std::string& id = expect_string(player, child(path, "player"));
    if (std::find(players.begin(), players.end(), id) == players.end())
      schema_error(child(path, "player"), "unknown player '" + id + "'" + where);
    node.player = id;
    std::string mp = child(path, "moves");
    expect_object(*moves, mp);
    if (moves->empty()) schema_error(mp, "decision node without moves" + where);
    for (const auto& [action, sub] : moves->items()) {
      if (action.empty()) schema_error(mp, "empty action label" + where);
      std::string next = history == "\xE2\x88\x85" ? "(" + action + ")"
                                                    : history.substr(0, history.size() - 1) + "," +
                                                          action + ")";
      node.moves.emplace(action, parse_node(sub, child(mp, action), next, players, depth + 1));
    }
  } else {
    if (optional_field(j, "player")) schema_error(child(path, "player"), "terminal node with a player" + where);
    std::string up = child(path, "utilities");
    expect_object(*utilities, up);
    for (const auto& [id, value] : utilities->items()) {
      if (std::find(players.begin(), players.end(), id) == players.end())
        schema_error(child(up, id), "unknown player '" + id + "'" + where);
      node.utilities.emplace(id, parse_rational(value, child(up, id)));
    }
    for (const auto& id : players) {
      if (!node.utilities.count(id))
        schema_error(up, "missing utility for player '" + id + "'" + where);
    }
  }
  return node;
}

json node_json(const ExtensiveGame& g, NodeIndex n) {
  const GameNode& node = g.node(n);
  json out = json::object();
  if (node.children.empty()) {
    json u = json::object();
    for (PlayerIndex i = 0; i < g.players().size(); ++i)
      u[g.players()[i]] = rational_json(g.utility(n, i));
    out["utilities"] = std::move(u);
  } else {
    out["player"] = g.players().at(node.mover.value());
    json moves = json::object();
    for (NodeIndex c : node.children) moves[g.node(c).action] = node_json(g, c);
    out["moves"] = std::move(moves);
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::shared_ptr<const GalStructure> load_structure(std::string_view text) {
  json root = parse_json(text);
  return StructureLoader(root).load();
}

std::string dump_structure(const GalStructure& g) {
  const Signature& sig = g.signature();
  std::vector<std::vector<std::string>> domains;
  for (SortId s = 0; s < sig.sorts().size(); ++s) domains.push_back(g.domain(s));

  json j = json::object();
  json sorts = json::object();
  for (SortId s = 0; s < sig.sorts().size(); ++s) sorts[sig.sort_name(s)] = g.domain(s);
  j["sorts"] = std::move(sorts);

  std::vector<std::string> players = sig.players();
  std::sort(players.begin(), players.end());
  j["players"] = players;

  std::vector<TupleShape> fshapes, pshapes;
  json functions = json::object();
  for (const auto& decl : sig.functions()) {
    json args = json::array();
    for (SortId s : decl.args) args.push_back(sig.sort_name(s));
    functions[decl.name] = {{"args", args}, {"result", sig.sort_name(decl.result)},
                            {"rigid", decl.rigid}};
    fshapes.push_back(make_shape(decl.args, domains, "function " + decl.name));
  }
  j["functions"] = std::move(functions);
  json predicates = json::object();
  for (const auto& decl : sig.predicates()) {
    json args = json::array();
    for (SortId s : decl.args) args.push_back(sig.sort_name(s));
    predicates[decl.name] = {{"args", args}};
    pshapes.push_back(make_shape(decl.args, domains, "predicate " + decl.name));
  }
  j["predicates"] = std::move(predicates);

  std::vector<StateIndex> order(g.state_count());
  for (StateIndex e = 0; e < order.size(); ++e) order[e] = e;
  std::sort(order.begin(), order.end(),
            [&](StateIndex a, StateIndex b) { return g.state_id(a) < g.state_id(b); });
  json states = json::array();
  for (StateIndex e : order) {
    json st = json::object();
    st["id"] = g.state_id(e);
    std::vector<std::string> ps;
    for (PlayerId p : g.players_at(e)) ps.push_back(sig.player_name(p));
    std::sort(ps.begin(), ps.end());
    st["players"] = ps;
    json funcs = json::object();
    for (FunctionId f = 0; f < sig.functions().size(); ++f)
      if (!sig.function(f).rigid) funcs[sig.function(f).name] = function_table(g, f, e, fshapes[f]);
    st["funcs"] = std::move(funcs);
    json preds = json::object();
    for (PredicateId p = 0; p < sig.predicates().size(); ++p)
      if (!sig.predicate(p).rigid)
        preds[sig.predicate(p).name] = predicate_table(g, p, e, pshapes[p]);
    st["preds"] = std::move(preds);
    states.push_back(std::move(st));
  }
  j["states"] = std::move(states);

  json rigid_funcs = json::object();
  json rigid_preds = json::object();
  for (FunctionId f = 0; f < sig.functions().size(); ++f)
    if (sig.function(f).rigid) rigid_funcs[sig.function(f).name] = function_table(g, f, 0, fshapes[f]);
  for (PredicateId p = 0; p < sig.predicates().size(); ++p)
    if (sig.predicate(p).rigid)
      rigid_preds[sig.predicate(p).name] = predicate_table(g, p, 0, pshapes[p]);
  j["rigid"] = {{"funcs", std::move(rigid_funcs)}, {"preds", std::move(rigid_preds)}};

  std::vector<std::pair<std::string, std::string>> actions;
  for (const auto& [from, to] : g.actions()) actions.emplace_back(g.state_id(from), g.state_id(to));
  std::sort(actions.begin(), actions.end());
  json acts = json::array();
  for (const auto& [from, to] : actions) acts.push_back(json::array({from, to}));
  j["actions"] = std::move(acts);
  std::vector<std::string> initial;
  for (StateIndex e : g.initial()) initial.push_back(g.state_id(e));
  std::sort(initial.begin(), initial.end());
  j["initial"] = initial;
  return dump_json(j);
}

ExtensiveGame load_game(std::string_view text) {
  json root = parse_json(text);
  expect_object(root, "");
  check_keys(root, {"players", "root"}, "");
  const json& players_json = expect_array(required_field(root, "players", ""), "/players");
  std::vector<std::string> players;
  for (std::size_t k = 0; k < players_json.size(); ++k) {
    const std::string& id = expect_string(players_json[k], child("/players", k));
    if (std::find(players.begin(), players.end(), id) != players.end())
      schema_error(child("/players", k), "duplicate player '" + id + "'");
    players.push_back(id);
  }
  if (players.empty()) schema_error("/players", "game has no players");
  GameTree tree = parse_node(required_field(root, "root", ""), "/root", "\xE2\x88\x85", players, 0);
  ExtensiveGame game(players, tree);
  auto report = validate_game(game);
  if (!report.empty()) throw ValidationError("game failed validation", std::move(report));
  return game;
}

std::string dump_game(const ExtensiveGame& g) {
  auto report = validate_game(g);
  if (!report.empty()) throw ValidationError("game failed validation", std::move(report));
  json j = {{"players", g.players()}, {"root", node_json(g, 0)}};
  return dump_json(j);
}

Bimatrix load_bimatrix(std::string_view text) {
  json root = parse_json(text);
  expect_object(root, "");
  check_keys(root, {"m", "n", "u1", "u2", "seed"}, "");
  Bimatrix b;
  std::int64_t m = expect_int(required_field(root, "m", ""), "/m");
  std::int64_t n = expect_int(required_field(root, "n", ""), "/n");
  if (m < 1 || m > std::numeric_limits<std::uint32_t>::max()) schema_error("/m", "expected a positive size");
  if (n < 1 || n > std::numeric_limits<std::uint32_t>::max()) schema_error("/n", "expected a positive size");
  b.m = static_cast<std::uint32_t>(m);
  b.n = static_cast<std::uint32_t>(n);
  for (const char* name : {"u1", "u2"}) {
    std::string path = std::string("/") + name;
    const json& table = expect_array(required_field(root, name, ""), path);
    if (table.size() != b.m) schema_error(path, "expected " + std::to_string(b.m) + " rows");
    auto& out = name[1] == '1' ? b.u1 : b.u2;
    for (std::size_t r = 0; r < b.m; ++r) {
      const json& row = expect_array(table[r], child(path, r));
      if (row.size() != b.n)
        schema_error(child(path, r), "expected " + std::to_string(b.n) + " columns");
      std::vector<std::int64_t> values;
      for (std::size_t c = 0; c < b.n; ++c) values.push_back(expect_int(row[c], child(child(path, r), c)));
      out.push_back(std::move(values));
    }
  }
  if (const json* seed = optional_field(root, "seed")) {
    if (!seed->is_number_unsigned() && !(seed->is_number_integer() && seed->get<std::int64_t>() >= 0))
      schema_error("/seed", "expected a non-negative integer");
    b.seed = seed->get<std::uint64_t>();
  }
  return b;
}

std::string dump_bimatrix(const Bimatrix& b) {
  json j = {{"m", b.m}, {"n", b.n}, {"u1", b.u1}, {"u2", b.u2}};
  if (b.seed) j["seed"] = *b.seed;
  return dump_json(j);
}

std::string check_result_json(const GalStructure& g, const CheckReport& report) {
  std::vector<std::string> sat, initial_sat;
  for (StateIndex e : report.sat.states) sat.push_back(g.state_id(e));
  for (StateIndex e : g.initial())
    if (report.sat.contains(e)) initial_sat.push_back(g.state_id(e));
  std::sort(sat.begin(), sat.end());
  std::sort(initial_sat.begin(), initial_sat.end());
  json j = {{"formula", to_string(report.sat.formula, g.signature())},
            {"sat", sat},
            {"initial_sat", initial_sat},
            {"stats",
             {{"states", report.stats.states},
              {"actions", report.stats.actions},
              {"subformulas", report.stats.subformulas},
              {"millis", report.stats.millis}}}};
  return dump_json(j);
}

std::string equilibria_json(const ExtensiveGame& g, EquilibriumConcept c,
                            const std::vector<StrategyProfile>& profiles, bool oracle_agrees) {
  json list = json::array();
  for (const auto& profile : profiles) {
    json row = json::array();
    for (const auto& s : profile) row.push_back(strategy_label(g, s));
    list.push_back(std::move(row));
  }
  json j = {{"concept", concept_name(c)},
            {"players", g.players()},
            {"profile_count", profile_count(g)},
            {"count", profiles.size()},
            {"profiles", std::move(list)},
            {"oracle_agrees", oracle_agrees}};
  return dump_json(j);
}

std::string write_bench_csv(const std::vector<BenchRecord>& records) {
  std::string out = std::string(kBenchHeader) + "\r\n";
  for (const auto& r : records) {
    char millis[64];
    std::snprintf(millis, sizeof millis, "%.6f", r.millis);
    out += csv_field(r.experiment) + "," + std::to_string(r.m) + "," + std::to_string(r.n) + "," +
           std::to_string(r.payoff_bound) + "," + std::to_string(r.seed) + "," +
           std::to_string(r.equilibria) + "," + millis + "\r\n";
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIo, "error reading '" + path.string() + "'");
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write '" + path.string() + "'");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error(ErrorCode::kIo, "error writing '" + path.string() + "'");
}

}  // namespace galcheck
