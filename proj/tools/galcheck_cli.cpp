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

// galcheck command-line tool: check, eq, gen and bench.
// Exit codes: check 0/1 by initial-state satisfaction; 2 on any error;
// eq 3 when the logic layer and the oracle disagree.

#include <cctype>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "galcheck/galcheck.h"

namespace {

constexpr int kExitError = 2;
constexpr int kExitDisagree = 3;
constexpr std::uint64_t kProfileLimit = 1000000;

struct CliError {
  std::string message;
};

void fail_on(galcheck_status status) {
  if (status != GALCHECK_OK)
    throw CliError{std::string(galcheck_status_name(status)) + ": " + galcheck_last_error()};
}

std::string take(char* s) {
  std::string out(s);
  galcheck_string_free(s);
  return out;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{"cannot read '" + path + "'"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw CliError{"cannot write '" + path + "'"};
  out << text;
  if (!out) throw CliError{"error writing '" + path + "'"};
}

unsigned thread_setting() {
  const char* env = std::getenv("GALCHECK_THREADS");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  unsigned long value = std::strtoul(env, &end, 10);
  if (*end != '\0' || env[0] == '-')
    throw CliError{"GALCHECK_THREADS must be a non-negative integer"};
  return static_cast<unsigned>(value);
}

struct Structure {
  galcheck_structure* handle = nullptr;
  ~Structure() { galcheck_structure_free(handle); }
};

struct Game {
  galcheck_game* handle = nullptr;
  ~Game() { galcheck_game_free(handle); }
};

struct CheckArgs {
  std::string model;
  std::string formula;
  std::string formula_file;
  std::vector<std::string> binds;
};

int run_check(const CheckArgs& a) {
  std::string formula = a.formula;
  if (!a.formula_file.empty()) {
    formula = read_text(a.formula_file);
    while (!formula.empty() && std::isspace(static_cast<unsigned char>(formula.back())))
      formula.pop_back();
  }
  std::vector<std::string> names, elements;
  for (const auto& b : a.binds) {
    auto eq = b.find('=');
    if (eq == std::string::npos || eq == 0)
      throw CliError{"--bind expects VAR=ELEM, got '" + b + "'"};
    names.push_back(b.substr(0, eq));
    elements.push_back(b.substr(eq + 1));
  }
  std::vector<galcheck_binding> bindings;
  for (std::size_t k = 0; k < names.size(); ++k)
    bindings.push_back({names[k].c_str(), elements[k].c_str()});

  Structure s;
  fail_on(galcheck_structure_load_file(a.model.c_str(), &s.handle));
  char* json = nullptr;
  int all = 0;
  fail_on(galcheck_check(s.handle, formula.c_str(), bindings.data(), bindings.size(), &json, &all));
  std::cout << take(json);
  return all ? 0 : 1;
}

struct EqArgs {
  std::string game;
  std::string concept_name;
  bool force = false;
};

int run_eq(const EqArgs& a) {
  Game g;
  fail_on(galcheck_game_load_file(a.game.c_str(), &g.handle));
  std::uint64_t profiles = galcheck_game_profile_count(g.handle);
  if (profiles > kProfileLimit && !a.force) {
    std::string count = profiles == UINT64_MAX ? "more than 2^64" : std::to_string(profiles);
    throw CliError{"game has " + count + " strategy profiles (limit " +
                   std::to_string(kProfileLimit) + "); pass --force to enumerate anyway"};
  }
  galcheck_concept c = a.concept_name == "ne" ? GALCHECK_NE : GALCHECK_SPE;
  char* json = nullptr;
  int agree = 0;
  fail_on(galcheck_equilibria(g.handle, c, thread_setting(), &json, &agree));
  std::cout << take(json);
  if (!agree) {
    std::cerr << "error: logic layer and oracle disagree\n";
    return kExitDisagree;
  }
  return 0;
}

struct TicTacToeArgs {
  std::string player_x = "minimax:9";
  std::string player_o = "all";
  std::string output;
};

int run_gen_tictactoe(const TicTacToeArgs& a) {
  auto start = std::chrono::steady_clock::now();
  Structure s;
  fail_on(galcheck_gen_tictactoe(a.player_x.c_str(), a.player_o.c_str(), &s.handle));
  double millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  char* json = nullptr;
  fail_on(galcheck_structure_dump(s.handle, &json));
  write_text(a.output, take(json));
  std::cerr << "generated in " << millis << " ms\n";
  std::cout << "states " << galcheck_structure_state_count(s.handle) << "\nactions "
            << galcheck_structure_action_count(s.handle) << "\n";
  return 0;
}

struct RandomArgs {
  std::uint32_t m = 2;
  std::uint32_t n = 2;
  std::int64_t bound = 10;
  std::uint64_t seed = 1;
  std::string output;
};

int run_gen_random(const RandomArgs& a) {
  char* json = nullptr;
  fail_on(galcheck_gen_bimatrix(a.m, a.n, a.bound, a.seed, &json));
  write_text(a.output, take(json));
  std::cout << "rows " << a.m << "\ncolumns " << a.n << "\n";
  return 0;
}

struct BenchArgs {
  std::string sizes = "2..10";
  std::uint32_t trials = 5;
  std::int64_t bound = 10;
  std::uint64_t seed = 1;
  std::string output = "-";
};

int run_bench(const BenchArgs& a) {
  auto dots = a.sizes.find("..");
  unsigned long lo = 0, hi = 0;
  try {
    if (dots == std::string::npos) throw std::invalid_argument("range");
    std::size_t used = 0;
    std::string left = a.sizes.substr(0, dots), right = a.sizes.substr(dots + 2);
    lo = std::stoul(left, &used);
    if (used != left.size()) throw std::invalid_argument("range");
    hi = std::stoul(right, &used);
    if (used != right.size()) throw std::invalid_argument("range");
  } catch (const std::exception&) {
    throw CliError{"--sizes expects A..B, got '" + a.sizes + "'"};
  }
  if (lo < 1 || lo > hi || hi > 100000) throw CliError{"bad size range '" + a.sizes + "'"};
  char* csv = nullptr;
  fail_on(galcheck_bench_bimatrix(static_cast<std::uint32_t>(lo), static_cast<std::uint32_t>(hi),
                                  a.trials, a.bound, a.seed, &csv));
  write_text(a.output, take(csv));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"galcheck: game analysis logic model checker"};
  app.require_subcommand(1);
  std::function<int()> action;

  CheckArgs check;
  auto* c = app.add_subcommand("check", "Evaluate a formula on a structure");
  c->add_option("--model", check.model, "Structure JSON file")->required()->check(CLI::ExistingFile);
  auto* text = c->add_option("--formula", check.formula, "Formula text");
  auto* file = c->add_option("--formula-file", check.formula_file, "File holding the formula")
                   ->check(CLI::ExistingFile);
  text->excludes(file);
  c->add_option("--bind", check.binds, "Free variable binding VAR=ELEM")->allow_extra_args(false);
  c->callback([&] {
    if (check.formula.empty() && check.formula_file.empty())
      throw CLI::ValidationError("one of --formula or --formula-file is required");
    action = [&] { return run_check(check); };
  });

  EqArgs eq;
  auto* e = app.add_subcommand("eq", "Enumerate equilibria of an extensive game");
  e->add_option("--game", eq.game, "Game JSON file")->required()->check(CLI::ExistingFile);
  e->add_option("--concept", eq.concept_name, "ne or spe")
      ->required()
      ->check(CLI::IsMember({"ne", "spe"}));
  e->add_flag("--force", eq.force, "Enumerate beyond the profile safety bound");
  e->callback([&] { action = [&] { return run_eq(eq); }; });

  auto* gen = app.add_subcommand("gen", "Generate experiment inputs");
  gen->require_subcommand(1);
  TicTacToeArgs ttt;
  auto* gt = gen->add_subcommand("tictactoe", "Tic-Tac-Toe structure");
  gt->add_option("--playerX", ttt.player_x, "all | first | minimax:DEPTH")->capture_default_str();
  gt->add_option("--playerO", ttt.player_o, "all | first | minimax:DEPTH")->capture_default_str();
  gt->add_option("-o", ttt.output, "Output path")->required();
  gt->callback([&] { action = [&] { return run_gen_tictactoe(ttt); }; });
  RandomArgs rnd;
  auto* gr = gen->add_subcommand("random-2p", "Random two-player payoff table");
  gr->add_option("--m", rnd.m, "Row actions")->required()->check(CLI::PositiveNumber);
  gr->add_option("--n", rnd.n, "Column actions")->required()->check(CLI::PositiveNumber);
  gr->add_option("--bound", rnd.bound, "Payoffs drawn from [0, bound)")->required()->check(CLI::PositiveNumber);
  gr->add_option("--seed", rnd.seed, "Generator seed")->required();
  gr->add_option("-o", rnd.output, "Output path")->required();
  gr->callback([&] { action = [&] { return run_gen_random(rnd); }; });

  auto* bench = app.add_subcommand("bench", "Benchmarks");
  bench->require_subcommand(1);
  BenchArgs ba;
  auto* br = bench->add_subcommand("random-2p", "Pure-equilibrium timing on random tables");
  br->add_option("--sizes", ba.sizes, "Square sizes A..B")->capture_default_str();
  br->add_option("--trials", ba.trials, "Trials per size")->capture_default_str()->check(CLI::PositiveNumber);
  br->add_option("--bound", ba.bound, "Payoff bound; 0 gives constant payoffs")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  br->add_option("--seed", ba.seed, "Base seed")->capture_default_str();
  br->add_option("-o", ba.output, "CSV output path ('-' for stdout)")->capture_default_str();
  br->callback([&] { action = [&] { return run_bench(ba); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& h) {
    return app.exit(h);
  } catch (const CLI::CallForAllHelp& h) {
    return app.exit(h);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return kExitError;
  }
  try {
    return action();
  } catch (const CliError& err) {
    std::cerr << "error: " << err.message << "\n";
    return kExitError;
  }
}
