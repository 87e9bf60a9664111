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

#ifndef GALCHECK_TESTS_SUPPORT_GENERATORS_HPP_
#define GALCHECK_TESTS_SUPPORT_GENERATORS_HPP_

// Seeded generators shared by the unit tests and the acceptance suite.

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "galcheck/extensive.hpp"
#include "galcheck/logic.hpp"
#include "galcheck/structure.hpp"

namespace galcheck::testing {

using Rng = std::mt19937_64;

// Plain description of a random structure. Interpretations are derived by
// hashing labels (state ids, element labels), so permuting the lists yields
// an isomorphic structure.
struct ModelSpec {
  Signature sig;
  std::vector<std::vector<std::string>> domains;
  std::vector<StateDecl> states;
  std::vector<std::pair<std::string, std::string>> actions;
  std::vector<std::string> initial;
  std::uint64_t table_seed = 0;
};

struct ModelOptions {
  std::size_t max_states = 20;
  std::size_t max_sorts = 2;
  std::size_t max_elements = 4;
  std::size_t max_out_degree = 3;
};

// Players "1" and "2"; per sort S: non-rigid constant cS, rigid fS: S -> S
// and non-rigid pS: S; non-rigid 0-ary r; rigid q: A x B when two sorts
// exist. Always passes validate().
ModelSpec random_model(Rng& rng, const ModelOptions& options = {});
std::shared_ptr<const GalStructure> build(const ModelSpec& spec);
// Same structure with shuffled states, domain orders and action list.
ModelSpec permuted(const ModelSpec& spec, Rng& rng);

struct FormulaOptions {
  int max_depth = 4;
  bool constants = true;    // allow #S:i ground constants
  bool quantifiers = true;
};

// Formula over the symbols of random_model() whose free variables are
// drawn from `scope` (closed when the scope is empty).
Formula random_formula(Rng& rng, const ModelSpec& spec, const FormulaOptions& options = {},
                       std::vector<Variable> scope = {});

struct GameOptions {
  int max_depth = 3;
  std::uint32_t max_branching = 3;
  std::uint32_t min_players = 2;
  std::uint32_t max_players = 3;
  std::int64_t payoff_bound = 5;  // utilities in [0, bound)
  std::uint64_t max_profiles = 512;
};

// Random finite game whose profile count is within options.max_profiles.
ExtensiveGame random_game(Rng& rng, const GameOptions& options = {});

// The two-player game with H = {∅, (A), (B), (A,L), (A,R)}.
ExtensiveGame example1_game();

}  // namespace galcheck::testing

#endif  // GALCHECK_TESTS_SUPPORT_GENERATORS_HPP_
