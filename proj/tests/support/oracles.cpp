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

#include "oracles.hpp"

#include <algorithm>
#include <stdexcept>

namespace galcheck::testing {

namespace {

Element eval(const GalStructure& g, StateIndex e, const Term& t, const Env& env) {
  switch (t.kind()) {
    case Term::Kind::kVariable: {
      auto it = env.find(t.var());
      if (it == env.end()) throw std::logic_error("unbound variable " + t.var().name);
      return it->second;
    }
    case Term::Kind::kConstant:
      return t.element();
    case Term::Kind::kApply: {
      std::vector<Element> args;
      for (const auto& a : t.args()) args.push_back(eval(g, e, a, env));
      return g.function(t.function(), e, args);
    }
  }
  throw std::logic_error("bad term");
}

using Bits = std::vector<bool>;

// Least (from all-false) or greatest (from all-true) fixpoint of `step`.
template <typename Step>
Bits iterate(std::size_t n, bool greatest, const Step& step) {
  Bits z(n, greatest);
  for (;;) {
    Bits next(n);
    for (StateIndex e = 0; e < n; ++e) next[e] = step(z, e);
    if (next == z) return z;
    z = std::move(next);
  }
}

bool all_succ(const GalStructure& g, StateIndex e, const Bits& z) {
  for (StateIndex s : g.successors(e))
    if (!z[s]) return false;
  return true;
}

bool some_succ(const GalStructure& g, StateIndex e, const Bits& z) {
  for (StateIndex s : g.successors(e))
    if (z[s]) return true;
  return false;
}

}  // namespace

std::vector<bool> naive_sat(const GalStructure& g, const Formula& f, const Env& env) {
  const std::size_t n = g.state_count();
  Bits out(n);
  auto sub = [&](std::size_t i) { return naive_sat(g, f.operand(i), env); };
  auto dead = [&](StateIndex e) { return g.successors(e).empty(); };
  switch (f.op()) {
    case Connective::kTrue: return Bits(n, true);
    case Connective::kFalse: return Bits(n, false);
    case Connective::kPlayer:
      for (StateIndex e = 0; e < n; ++e) out[e] = g.has_player(e, f.player_id());
      return out;
    case Connective::kPredicate:
      for (StateIndex e = 0; e < n; ++e) {
        std::vector<Element> args;
        for (const auto& t : f.terms()) args.push_back(eval(g, e, t, env));
        out[e] = g.predicate(f.predicate_id(), e, args);
      }
      return out;
    case Connective::kEqual:
      for (StateIndex e = 0; e < n; ++e)
        out[e] = eval(g, e, f.terms()[0], env) == eval(g, e, f.terms()[1], env);
      return out;
    case Connective::kNot: {
      Bits a = sub(0);
      for (StateIndex e = 0; e < n; ++e) out[e] = !a[e];
      return out;
    }
    case Connective::kAnd:
    case Connective::kOr:
    case Connective::kImplies: {
      Bits a = sub(0), b = sub(1);
      for (StateIndex e = 0; e < n; ++e) {
        if (f.op() == Connective::kAnd) out[e] = a[e] && b[e];
        else if (f.op() == Connective::kOr) out[e] = a[e] || b[e];
        else out[e] = !a[e] || b[e];
      }
      return out;
    }
    case Connective::kEX: {
      Bits a = sub(0);
      for (StateIndex e = 0; e < n; ++e) out[e] = some_succ(g, e, a);
      return out;
    }
    case Connective::kAX: {
      Bits a = sub(0);
      for (StateIndex e = 0; e < n; ++e) out[e] = all_succ(g, e, a);
      return out;
    }
    case Connective::kEF: {
      Bits a = sub(0);
      return iterate(n, false, [&](const Bits& z, StateIndex e) { return a[e] || some_succ(g, e, z); });
    }
    case Connective::kAF: {
      Bits a = sub(0);
      return iterate(n, false, [&](const Bits& z, StateIndex e) {
        return a[e] || (!dead(e) && all_succ(g, e, z));
      });
    }
    case Connective::kEG: {
      Bits a = sub(0);
      return iterate(n, true, [&](const Bits& z, StateIndex e) {
        return a[e] && (dead(e) || some_succ(g, e, z));
      });
    }
    case Connective::kAG: {
      Bits a = sub(0);
      return iterate(n, true, [&](const Bits& z, StateIndex e) { return a[e] && all_succ(g, e, z); });
    }
    case Connective::kEU: {
      Bits a = sub(0), b = sub(1);
      return iterate(n, false, [&](const Bits& z, StateIndex e) {
        return b[e] || (a[e] && some_succ(g, e, z));
      });
    }
    case Connective::kAU: {
      Bits a = sub(0), b = sub(1);
      return iterate(n, false, [&](const Bits& z, StateIndex e) {
        return b[e] || (a[e] && !dead(e) && all_succ(g, e, z));
      });
    }
    case Connective::kExists:
    case Connective::kForall: {
      bool exists = f.op() == Connective::kExists;
      Bits acc(n, !exists);
      const Variable& x = f.bound();
      for (std::uint32_t d = 0; d < g.domain(x.sort).size(); ++d) {
        Env inner = env;
        inner[x] = Element{x.sort, d};
        Bits b = naive_sat(g, f.operand(0), inner);
        for (StateIndex e = 0; e < n; ++e) acc[e] = exists ? (acc[e] || b[e]) : (acc[e] && b[e]);
      }
      return acc;
    }
  }
  throw std::logic_error("bad connective");
}

std::vector<StateIndex> naive_states(const GalStructure& g, const Formula& f, const Env& env) {
  Bits b = naive_sat(g, f, env);
  std::vector<StateIndex> out;
  for (StateIndex e = 0; e < b.size(); ++e)
    if (b[e]) out.push_back(e);
  return out;
}

namespace {

void extend(const GalStructure& g, std::vector<StateIndex>& path, std::vector<OraclePath>& out) {
  StateIndex last = path.back();
  auto succ = g.successors(last);
  if (succ.empty()) {
    out.push_back(OraclePath{path, std::nullopt});
    return;
  }
  for (StateIndex s : succ) {
    auto it = std::find(path.begin(), path.end(), s);
    if (it != path.end()) {
      out.push_back(OraclePath{path, static_cast<std::size_t>(it - path.begin())});
      continue;
    }
    path.push_back(s);
    extend(g, path, out);
    path.pop_back();
  }
}

// Some position k has b, with a at every earlier position. Positions past
// the listed prefix repeat earlier states, so the prefix decides.
bool until_on(const OraclePath& p, const std::vector<bool>& a, const std::vector<bool>& b) {
  for (StateIndex s : p.states) {
    if (b[s]) return true;
    if (!a[s]) return false;
  }
  return false;
}

}  // namespace

std::vector<OraclePath> oracle_paths(const GalStructure& g, StateIndex start) {
  std::vector<OraclePath> out;
  std::vector<StateIndex> path{start};
  extend(g, path, out);
  return out;
}

bool path_ax(const GalStructure& g, StateIndex e, const std::vector<bool>& a) {
  for (const auto& p : oracle_paths(g, e)) {
    if (p.states.size() >= 2 && !a[p.states[1]]) return false;
    if (p.states.size() == 1 && p.loop_to && !a[p.states[0]]) return false;
  }
  return true;
}

bool path_eu(const GalStructure& g, StateIndex e, const std::vector<bool>& a,
             const std::vector<bool>& b) {
  for (const auto& p : oracle_paths(g, e))
    if (until_on(p, a, b)) return true;
  return false;
}

bool path_au(const GalStructure& g, StateIndex e, const std::vector<bool>& a,
             const std::vector<bool>& b) {
  for (const auto& p : oracle_paths(g, e))
    if (!until_on(p, a, b)) return false;
  return true;
}

}  // namespace galcheck::testing
