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

#ifndef GALCHECK_TEXTIO_HPP_
#define GALCHECK_TEXTIO_HPP_

// Readers and writers for structure, game and bimatrix JSON, check and
// equilibrium results, and the bench CSV. Loaders reject rather than repair;
// their errors carry a JSON-pointer path. Dumps are canonical.

#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "galcheck/checker.hpp"
#include "galcheck/extensive.hpp"
#include "galcheck/gamegen.hpp"
#include "galcheck/structure.hpp"

namespace galcheck {

// Throws kParse on malformed JSON, kSchema on shape problems and
// ValidationError when the structure fails validate().
std::shared_ptr<const GalStructure> load_structure(std::string_view json);
// Sorted keys, states and actions; domains keep their declared order.
// Interpretation tables are tabulated from the provider.
std::string dump_structure(const GalStructure& g);

ExtensiveGame load_game(std::string_view json);
std::string dump_game(const ExtensiveGame& g);

Bimatrix load_bimatrix(std::string_view json);
std::string dump_bimatrix(const Bimatrix& b);

// {"formula", "sat" (sorted ids), "initial_sat", "stats"}.
std::string check_result_json(const GalStructure& g, const CheckReport& report);

// {"concept", "players", "profile_count", "profiles", "oracle_agrees"}.
// Each profile lists one strategy label per player.
std::string equilibria_json(const ExtensiveGame& g, EquilibriumConcept c,
                            const std::vector<StrategyProfile>& profiles, bool oracle_agrees);

inline constexpr const char* kBenchHeader = "experiment,m,n,payoff_bound,seed,equilibria,millis";

std::string write_bench_csv(const std::vector<BenchRecord>& records);

// Throws kIo.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace galcheck

#endif  // GALCHECK_TEXTIO_HPP_
