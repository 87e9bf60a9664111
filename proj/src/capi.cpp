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

#include "galcheck/galcheck.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>

#include "galcheck/checker.hpp"
#include "galcheck/error.hpp"
#include "galcheck/extensive.hpp"
#include "galcheck/gamegen.hpp"
#include "galcheck/logic.hpp"
#include "galcheck/textio.hpp"

struct galcheck_structure {
  std::shared_ptr<const galcheck::GalStructure> impl;
};

struct galcheck_game {
  galcheck::ExtensiveGame impl;
};

namespace {

thread_local std::string last_error;

galcheck_status to_status(galcheck::ErrorCode code) {
  using galcheck::ErrorCode;
  switch (code) {
    case ErrorCode::kParse: return GALCHECK_E_PARSE;
    case ErrorCode::kSort: return GALCHECK_E_SORT;
    case ErrorCode::kUnknownIdentifier: return GALCHECK_E_UNKNOWN_IDENTIFIER;
    case ErrorCode::kValidation: return GALCHECK_E_VALIDATION;
    case ErrorCode::kSchema: return GALCHECK_E_SCHEMA;
    case ErrorCode::kBinding: return GALCHECK_E_BINDING;
    case ErrorCode::kInterpretation: return GALCHECK_E_INTERPRETATION;
    case ErrorCode::kInvalidArgument: return GALCHECK_E_INVALID_ARGUMENT;
    case ErrorCode::kLimit: return GALCHECK_E_LIMIT;
    case ErrorCode::kIo: return GALCHECK_E_IO;
  }
  return GALCHECK_E_INTERNAL;
}

template <typename Body>
galcheck_status guarded(Body&& body) {
  try {
    body();
    last_error.clear();
    return GALCHECK_OK;
  } catch (const galcheck::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return GALCHECK_E_LIMIT;
  } catch (const std::exception& e) {
    last_error = e.what();
    return GALCHECK_E_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return GALCHECK_E_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr)
    throw galcheck::Error(galcheck::ErrorCode::kInvalidArgument, std::string(what) + " is null");
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

galcheck::Valuation resolve_bindings(const galcheck::GalStructure& g, const galcheck::Formula& f,
                                     const galcheck_binding* bindings, std::size_t count) {
  using galcheck::Error;
  using galcheck::ErrorCode;
  auto free = galcheck::free_variables(f);
  galcheck::Valuation v;
  for (std::size_t k = 0; k < count; ++k) {
    require(bindings[k].variable, "binding variable");
    require(bindings[k].element, "binding element");
    std::string name = bindings[k].variable;
    const galcheck::Variable* var = nullptr;
    for (const auto& x : free)
      if (x.name == name) var = &x;
    if (var == nullptr)
      throw Error(ErrorCode::kBinding, "'" + name + "' is not a free variable of the formula");
    if (v.find(*var))
      throw Error(ErrorCode::kBinding, "variable '" + name + "' is bound twice");
    auto el = g.find_element(var->sort, bindings[k].element);
    if (!el)
      throw Error(ErrorCode::kBinding, "'" + std::string(bindings[k].element) +
                                           "' is not an element of sort " +
                                           g.signature().sort_name(var->sort));
    v.assign(*var, *el);
  }
  return v;
}

}  // namespace

extern "C" {

const char* galcheck_version(void) { return "1.0.0"; }

const char* galcheck_status_name(galcheck_status status) {
  switch (status) {
    case GALCHECK_OK: return "ok";
    case GALCHECK_E_PARSE: return "parse error";
    case GALCHECK_E_SORT: return "sort error";
    case GALCHECK_E_UNKNOWN_IDENTIFIER: return "unknown identifier";
    case GALCHECK_E_VALIDATION: return "validation error";
    case GALCHECK_E_SCHEMA: return "schema error";
    case GALCHECK_E_BINDING: return "binding error";
    case GALCHECK_E_INTERPRETATION: return "interpretation error";
    case GALCHECK_E_INVALID_ARGUMENT: return "invalid argument";
    case GALCHECK_E_LIMIT: return "limit exceeded";
    case GALCHECK_E_IO: return "i/o error";
    case GALCHECK_E_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* galcheck_last_error(void) { return last_error.c_str(); }

void galcheck_string_free(char* s) { std::free(s); }

galcheck_status galcheck_structure_load(const char* json, size_t length,
                                        galcheck_structure** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new galcheck_structure{galcheck::load_structure(std::string_view(json, length))};
  });
}

galcheck_status galcheck_structure_load_file(const char* path, galcheck_structure** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new galcheck_structure{galcheck::load_structure(galcheck::read_file(path))};
  });
}

galcheck_status galcheck_structure_dump(const galcheck_structure* s, char** out_json) {
  return guarded([&] {
    require(s, "structure");
    require(out_json, "out_json");
    *out_json = copy_out(galcheck::dump_structure(*s->impl));
  });
}

void galcheck_structure_free(galcheck_structure* s) { delete s; }

size_t galcheck_structure_state_count(const galcheck_structure* s) {
  return s ? s->impl->state_count() : 0;
}

size_t galcheck_structure_action_count(const galcheck_structure* s) {
  return s ? s->impl->actions().size() : 0;
}

galcheck_status galcheck_check(const galcheck_structure* s, const char* formula,
                               const galcheck_binding* bindings, size_t binding_count,
                               char** out_json, int* all_initial) {
  return guarded([&] {
    require(s, "structure");
    require(formula, "formula");
    require(out_json, "out_json");
    if (binding_count != 0) require(bindings, "bindings");
    const auto& g = *s->impl;
    galcheck::Formula f = galcheck::parse_formula(formula, g.signature());
    galcheck::Valuation v = resolve_bindings(g, f, bindings, binding_count);
    galcheck::CheckReport report = galcheck::check_with_stats(g, f, v);
    std::string text = galcheck::check_result_json(g, report);
    bool all = true;
    for (auto e : g.initial()) all = all && report.sat.contains(e);
    *out_json = copy_out(text);
    if (all_initial) *all_initial = all ? 1 : 0;
  });
}

galcheck_status galcheck_game_load(const char* json, size_t length, galcheck_game** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new galcheck_game{galcheck::load_game(std::string_view(json, length))};
  });
}

galcheck_status galcheck_game_load_file(const char* path, galcheck_game** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new galcheck_game{galcheck::load_game(galcheck::read_file(path))};
  });
}

void galcheck_game_free(galcheck_game* g) { delete g; }

uint64_t galcheck_game_profile_count(const galcheck_game* g) {
  return g ? galcheck::profile_count(g->impl) : 0;
}

galcheck_status galcheck_game_to_structure(const galcheck_game* g, galcheck_structure** out) {
  return guarded([&] {
    require(g, "game");
    require(out, "out");
    *out = new galcheck_structure{galcheck::to_gal_structure(g->impl)};
  });
}

galcheck_status galcheck_equilibria(const galcheck_game* g, galcheck_concept c, unsigned threads,
                                    char** out_json, int* oracle_agrees) {
  return guarded([&] {
    require(g, "game");
    require(out_json, "out_json");
    if (c != GALCHECK_NE && c != GALCHECK_SPE)
      throw galcheck::Error(galcheck::ErrorCode::kInvalidArgument, "unknown concept");
    auto concept_value = c == GALCHECK_NE ? galcheck::EquilibriumConcept::kNash
                                          : galcheck::EquilibriumConcept::kSubgamePerfect;
    auto logic = galcheck::enumerate_equilibria(g->impl, concept_value, {threads});
    auto oracle = galcheck::oracle_equilibria(g->impl, concept_value);
    bool agree = logic == oracle;
    *out_json = copy_out(galcheck::equilibria_json(g->impl, concept_value, logic, agree));
    if (oracle_agrees) *oracle_agrees = agree ? 1 : 0;
  });
}

galcheck_status galcheck_gen_tictactoe(const char* policy_x, const char* policy_o,
                                       galcheck_structure** out) {
  return guarded([&] {
    require(policy_x, "policy_x");
    require(policy_o, "policy_o");
    require(out, "out");
    auto px = galcheck::parse_policy(policy_x);
    auto po = galcheck::parse_policy(policy_o);
    *out = new galcheck_structure{galcheck::tictactoe_structure(px, po)};
  });
}

galcheck_status galcheck_gen_bimatrix(uint32_t m, uint32_t n, int64_t payoff_bound, uint64_t seed,
                                      char** out_json) {
  return guarded([&] {
    require(out_json, "out_json");
    *out_json = copy_out(galcheck::dump_bimatrix(galcheck::random_bimatrix(m, n, payoff_bound, seed)));
  });
}

galcheck_status galcheck_bench_bimatrix(uint32_t min_size, uint32_t max_size, uint32_t trials,
                                        int64_t payoff_bound, uint64_t seed, char** out_csv) {
  return guarded([&] {
    require(out_csv, "out_csv");
    galcheck::BenchOptions options{min_size, max_size, trials, payoff_bound, seed};
    *out_csv = copy_out(galcheck::write_bench_csv(galcheck::run_bimatrix_bench(options)));
  });
}

}  // extern "C"
