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

#include "galcheck/structure.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include "galcheck/error.hpp"

namespace galcheck {

void Valuation::assign(const Variable& var, Element element) {
  if (var.sort != element.sort) {
    throw Error(ErrorCode::kSort,
                "element of the wrong sort assigned to '" + var.name + "'");
  }
  bindings_[var] = element;
}

std::optional<Element> Valuation::find(const Variable& var) const {
  auto it = bindings_.find(var);
  if (it == bindings_.end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------------------

GalStructure::GalStructure(
    Signature sig, std::vector<std::vector<std::string>> domains,
    std::vector<StateDecl> states,
    std::vector<std::pair<std::string, std::string>> actions,
    std::vector<std::string> initial,
    std::shared_ptr<const InterpretationProvider> interpretation)
    : sig_(std::move(sig)),
      domains_(std::move(domains)),
      states_(std::move(states)),
      interp_(std::move(interpretation)) {
  if (!interp_) throw Error(ErrorCode::kInvalidArgument, "missing interpretation");
  if (domains_.size() != sig_.sorts().size()) {
    issues_.push_back("expected " + std::to_string(sig_.sorts().size()) +
                      " sort domains, got " + std::to_string(domains_.size()));
    domains_.resize(sig_.sorts().size());
  }
  element_index_.resize(domains_.size());
  for (std::size_t s = 0; s < domains_.size(); ++s) {
    const std::string& sort = sig_.sort_name(static_cast<SortId>(s));
    if (domains_[s].empty()) issues_.push_back("sort " + sort + ": empty domain");
    for (std::size_t k = 0; k < domains_[s].size(); ++k) {
      if (!element_index_[s].emplace(domains_[s][k], static_cast<std::uint32_t>(k)).second) {
        issues_.push_back("sort " + sort + ": duplicate element '" + domains_[s][k] + "'");
      }
    }
  }

  players_.resize(states_.size());
  for (std::size_t e = 0; e < states_.size(); ++e) {
    if (!state_index_.emplace(states_[e].id, static_cast<StateIndex>(e)).second) {
      issues_.push_back("state '" + states_[e].id + "': declared twice");
    }
    for (const std::string& p : states_[e].players) {
      auto id = sig_.find_player(p);
      if (!id) {
        issues_.push_back("state '" + states_[e].id + "': unknown player '" + p + "'");
        continue;
      }
      players_[e].push_back(*id);
    }
    std::sort(players_[e].begin(), players_[e].end());
    players_[e].erase(std::unique(players_[e].begin(), players_[e].end()), players_[e].end());
  }

  std::set<std::pair<StateIndex, StateIndex>> edges;
  for (const auto& [from, to] : actions) {
    auto a = find_state(from);
    auto b = find_state(to);
    if (!a || !b) {
      issues_.push_back("action ('" + from + "', '" + to + "'): undeclared state '" +
                        (!a ? from : to) + "'");
      continue;
    }
    edges.emplace(*a, *b);
  }
  actions_.assign(edges.begin(), edges.end());
  successors_.resize(states_.size());
  predecessors_.resize(states_.size());
  for (const auto& [a, b] : actions_) {
    successors_[a].push_back(b);
    predecessors_[b].push_back(a);
  }
  for (auto& p : predecessors_) std::sort(p.begin(), p.end());

  for (const std::string& id : initial) {
    auto e = find_state(id);
    if (!e) {
      issues_.push_back("initial state '" + id + "' is not declared");
      continue;
    }
    initial_.push_back(*e);
  }
  std::sort(initial_.begin(), initial_.end());
  initial_.erase(std::unique(initial_.begin(), initial_.end()), initial_.end());
}

std::optional<StateIndex> GalStructure::find_state(std::string_view id) const {
  auto it = state_index_.find(std::string(id));
  if (it == state_index_.end()) return std::nullopt;
  return it->second;
}

StateIndex GalStructure::state_index(std::string_view id) const {
  auto e = find_state(id);
  if (!e) {
    throw Error(ErrorCode::kInvalidArgument, "unknown state '" + std::string(id) + "'");
  }
  return *e;
}

bool GalStructure::has_player(StateIndex e, PlayerId i) const {
  const auto& ps = players_.at(e);
  return std::binary_search(ps.begin(), ps.end(), i);
}

std::optional<Element> GalStructure::find_element(SortId s, std::string_view label) const {
  const auto& index = element_index_.at(s);
  auto it = index.find(std::string(label));
  if (it == index.end()) return std::nullopt;
  return Element{s, it->second};
}

const std::string& GalStructure::element_label(Element el) const {
  const auto& dom = domains_.at(el.sort);
  if (el.index >= dom.size()) {
    throw Error(ErrorCode::kInterpretation,
                "element #" + sig_.sort_name(el.sort) + ":" + std::to_string(el.index) +
                    " is outside the domain");
  }
  return dom[el.index];
}

const std::vector<std::string>& GalStructure::validation_report() const {
  std::call_once(validated_, [this] { validation_ = validate(*this); });
  return validation_;
}

std::size_t GalStructure::KeyHash::operator()(const std::vector<std::uint32_t>& key) const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::uint32_t w : key) {
    h ^= w;
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h);
}

namespace {

constexpr std::uint32_t kRigidState = 0xffffffffu;

std::vector<std::uint32_t> memo_key(std::uint32_t tag, StateIndex e,
                                    std::span<const Element> args) {
  std::vector<std::uint32_t> key;
  key.reserve(2 + 2 * args.size());
  key.push_back(tag);
  key.push_back(e);
  for (const Element& a : args) {
    key.push_back(a.sort);
    key.push_back(a.index);
  }
  return key;
}

}  // namespace

Element GalStructure::function(FunctionId f, StateIndex e,
                               std::span<const Element> args) const {
  const FunctionDecl& decl = sig_.function(f);
  auto key = memo_key(f << 1, decl.rigid ? kRigidState : e, args);
  {
    std::shared_lock lock(memo_mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return Element{decl.result, it->second};
  }
  Element value = interp_->function(*this, f, e, args);
  if (value.sort != decl.result || value.index >= domains_.at(decl.result).size()) {
    throw Error(ErrorCode::kInterpretation,
                "function '" + decl.name + "' returned an element outside sort " +
                    sig_.sort_name(decl.result));
  }
  std::unique_lock lock(memo_mutex_);
  memo_.emplace(std::move(key), value.index);
  return value;
}

bool GalStructure::predicate(PredicateId p, StateIndex e,
                             std::span<const Element> args) const {
  const PredicateDecl& decl = sig_.predicate(p);
  auto key = memo_key((p << 1) | 1u, decl.rigid ? kRigidState : e, args);
  {
    std::shared_lock lock(memo_mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second != 0;
  }
  bool value = interp_->predicate(*this, p, e, args);
  std::unique_lock lock(memo_mutex_);
  memo_.emplace(std::move(key), value ? 1u : 0u);
  return value;
}

// ---------------------------------------------------------------------------

std::vector<std::string> validate(const GalStructure& g) {
  std::vector<std::string> report = g.construction_issues();
  if (g.state_count() == 0) report.push_back("structure has no states");
  for (StateIndex e = 0; e < g.state_count(); ++e) {
    if (!g.players_at(e).empty() && g.successors(e).empty()) {
      report.push_back("state '" + g.state_id(e) +
                       "': has players but no outgoing action");
    }
  }
  g.interpretation().validate(g, report);
  return report;
}

std::vector<std::string> successors(const GalStructure& g, std::string_view state) {
  std::vector<std::string> out;
  for (StateIndex s : g.successors(g.state_index(state))) out.push_back(g.state_id(s));
  return out;
}

bool is_deadlock(const GalStructure& g, StateIndex e) {
  if (e >= g.state_count()) {
    throw Error(ErrorCode::kInvalidArgument, "unknown state index " + std::to_string(e));
  }
  return g.successors(e).empty();
}

bool is_deadlock(const GalStructure& g, std::string_view state) {
  return is_deadlock(g, g.state_index(state));
}

Element eval_term(const GalStructure& g, StateIndex e, const Term& t,
                  const Valuation& v) {
  switch (t.kind()) {
    case Term::Kind::kVariable: {
      auto value = v.find(t.var());
      if (!value) {
        throw Error(ErrorCode::kBinding, "variable '" + t.var().name + "' is not assigned");
      }
      return *value;
    }
    case Term::Kind::kConstant:
      g.element_label(t.element());
      return t.element();
    case Term::Kind::kApply:
      break;
  }
  std::vector<Element> args;
  args.reserve(t.args().size());
  for (const Term& a : t.args()) args.push_back(eval_term(g, e, a, v));
  try {
    return g.function(t.function(), e, args);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::kInterpretation) throw;
    throw Error(ErrorCode::kInterpretation,
                std::string(err.what()) + " (evaluating " + to_string(t, g.signature()) +
                    " at state '" + g.state_id(e) + "')");
  } catch (const std::exception& err) {
    throw Error(ErrorCode::kInterpretation,
                std::string(err.what()) + " (evaluating " + to_string(t, g.signature()) +
                    " at state '" + g.state_id(e) + "')");
  }
}

// ---------------------------------------------------------------------------

namespace {

void extend_paths(const GalStructure& g, std::vector<StateIndex>& prefix,
                  std::vector<std::size_t>& position, std::vector<Path>& out,
                  std::size_t limit) {
  if (out.size() >= limit) return;
  StateIndex last = prefix.back();
  auto next = g.successors(last);
  if (next.empty()) {
    out.push_back(Path{prefix, std::nullopt});
    return;
  }
  for (StateIndex s : next) {
    if (out.size() >= limit) return;
    if (position[s] != SIZE_MAX) {
      out.push_back(Path{prefix, position[s]});
      continue;
    }
    position[s] = prefix.size();
    prefix.push_back(s);
    extend_paths(g, prefix, position, out, limit);
    prefix.pop_back();
    position[s] = SIZE_MAX;
  }
}

}  // namespace

std::vector<Path> maximal_paths(const GalStructure& g, StateIndex start,
                                std::size_t limit) {
  std::vector<Path> out;
  std::vector<StateIndex> prefix{start};
  std::vector<std::size_t> position(g.state_count(), SIZE_MAX);
  position[start] = 0;
  extend_paths(g, prefix, position, out, limit);
  return out;
}

bool is_maximal_path(const GalStructure& g, const Path& p) {
  if (p.states.empty()) return false;
  auto linked = [&](StateIndex a, StateIndex b) {
    auto next = g.successors(a);
    return std::binary_search(next.begin(), next.end(), b);
  };
  for (std::size_t k = 0; k + 1 < p.states.size(); ++k) {
    if (!linked(p.states[k], p.states[k + 1])) return false;
  }
  if (p.finite()) return g.successors(p.states.back()).empty();
  return *p.loop_start < p.states.size() &&
         linked(p.states.back(), p.states[*p.loop_start]);
}

}  // namespace galcheck
