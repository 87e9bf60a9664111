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

// Acceptance suite. Prints one PASS or FAIL line per criterion and exits
// non-zero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "galcheck/extensive.hpp"
#include "galcheck/structure.hpp"
#include "generators.hpp"
#include "json.hpp"
#include "process.hpp"
#include "properties.hpp"

namespace galcheck::testing {
namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

// Budgets and corpus sizes.
constexpr double kExampleBudgetMs = 1000;
constexpr double kGameAuditBudgetMs = 5 * 60 * 1000;
constexpr double kIdentityBudgetMs = 2 * 60 * 1000;
constexpr double kPathBudgetMs = 2 * 60 * 1000;
constexpr double kTicTacToeBudgetMs = 5 * 60 * 1000;
constexpr double kBenchBudgetMs = 5 * 60 * 1000;
constexpr int kGameCorpus = 200;
constexpr int kStructureCorpus = 100;
constexpr std::size_t kPathStateLimit = 8;
constexpr double kBenchRatio = 5.0;
constexpr int kDrawsPerStructure = 20;
constexpr std::uint64_t kGameSeed = 20260101;
constexpr std::uint64_t kStructureSeed = 20260202;

const std::string kCli = GALCHECK_CLI;
const std::string kFixtures = GALCHECK_FIXTURES;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string ms(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.0f ms", v);
  return buf;
}

CommandResult cli(const std::string& args) { return run_command(shell_quote(kCli) + " " + args); }

Outcome worked_example() {
  auto start = Clock::now();
  std::string game = kFixtures + "/example1_game.json";
  auto ne = cli("eq --game " + game + " --concept ne");
  auto spe = cli("eq --game " + game + " --concept spe");
  double elapsed = since(start);
  if (ne.exit_code != 0 || spe.exit_code != 0) return {false, "eq exited with an error"};
  json want_ne = json::array({json::array({"<A>", "<R>"}), json::array({"<B>", "<L>"})});
  json want_spe = json::array({json::array({"<A>", "<R>"})});
  json got_ne = json::parse(ne.out)["profiles"];
  json got_spe = json::parse(spe.out)["profiles"];
  if (got_ne != want_ne) return {false, "NE = " + got_ne.dump()};
  if (got_spe != want_spe) return {false, "SPE = " + got_spe.dump()};
  // Each call is timed separately against the budget.
  double worst = std::max(ne.millis, spe.millis);
  return {worst < kExampleBudgetMs,
          "NE " + got_ne.dump() + ", SPE " + got_spe.dump() + ", slowest call " + ms(worst) +
              " (total " + ms(elapsed) + ")"};
}

std::vector<ExtensiveGame> game_corpus() {
  Rng rng(kGameSeed);
  std::vector<ExtensiveGame> games;
  for (int k = 0; k < kGameCorpus; ++k) games.push_back(random_game(rng));
  return games;
}

Outcome corpus_audit(const std::vector<ExtensiveGame>& games,
                     const std::function<std::string(const ExtensiveGame&)>& audit,
                     double budget_ms) {
  auto start = Clock::now();
  std::uint64_t profiles = 0;
  for (std::size_t k = 0; k < games.size(); ++k) {
    std::string failure = audit(games[k]);
    if (!failure.empty()) return {false, "game " + std::to_string(k) + ": " + failure};
    profiles += profile_count(games[k]);
  }
  double elapsed = since(start);
  return {elapsed < budget_ms, std::to_string(games.size()) + " games, " +
                                   std::to_string(profiles) + " profiles, " + ms(elapsed)};
}

struct StructureCase {
  ModelSpec spec;
  std::shared_ptr<const GalStructure> g;
};

std::vector<StructureCase> structure_corpus() {
  Rng rng(kStructureSeed);
  std::vector<StructureCase> out;
  while (out.size() < static_cast<std::size_t>(kStructureCorpus)) {
    ModelSpec spec = random_model(rng);
    auto g = build(spec);
    if (validate(*g).empty()) out.push_back({std::move(spec), std::move(g)});
  }
  return out;
}

Outcome identity_suite(const std::vector<StructureCase>& corpus) {
  auto start = Clock::now();
  Rng rng(kStructureSeed + 1);
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    const auto& c = corpus[k];
    for (int draw = 0; draw < kDrawsPerStructure; ++draw) {
      for (auto* prop : {&abbreviation_identities, &dualities, &quantifier_extensionality}) {
        std::string failure = prop(*c.g, c.spec, rng);
        if (!failure.empty()) return {false, "structure " + std::to_string(k) + ": " + failure};
      }
    }
  }
  double elapsed = since(start);
  return {elapsed < kIdentityBudgetMs,
          std::to_string(corpus.size()) + " structures x " + std::to_string(kDrawsPerStructure) +
              " formula draws, " + ms(elapsed)};
}

Outcome path_suite(const std::vector<StructureCase>& corpus) {
  auto start = Clock::now();
  Rng rng(kStructureSeed + 2);
  std::size_t used = 0;
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    const auto& c = corpus[k];
    if (c.g->state_count() > kPathStateLimit) continue;
    ++used;
    for (int draw = 0; draw < kDrawsPerStructure; ++draw) {
      std::string failure = path_semantics(*c.g, c.spec, rng);
      if (!failure.empty()) return {false, "structure " + std::to_string(k) + ": " + failure};
    }
  }
  double elapsed = since(start);
  if (used == 0) return {false, "no structure with at most 8 states in the corpus"};
  return {elapsed < kPathBudgetMs, std::to_string(used) + " structures x " +
                                         std::to_string(kDrawsPerStructure) +
                                         " formula draws, " + ms(elapsed)};
}

Outcome tictactoe() {
  auto start = Clock::now();
  std::string minimax = temp_path("accept-minimax.json");
  std::string first = temp_path("accept-first.json");
  if (cli("gen tictactoe --playerX minimax:9 --playerO all -o " + minimax).exit_code != 0 ||
      cli("gen tictactoe --playerX first --playerO all -o " + first).exit_code != 0)
    return {false, "generation failed"};
  int af = cli("check --model " + minimax + " --formula 'AF (winX | Draw)'").exit_code;
  int ag = cli("check --model " + minimax + " --formula 'AG !winO'").exit_code;
  int af_first = cli("check --model " + first + " --formula 'AF (winX | Draw)'").exit_code;
  double elapsed = since(start);
  std::ostringstream detail;
  detail << "minimax AF exit " << af << ", minimax AG !winO exit " << ag
         << ", first-available AF exit " << af_first << ", " << ms(elapsed);
  return {af == 0 && ag == 0 && af_first == 1 && elapsed < kTicTacToeBudgetMs, detail.str()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

Outcome bench() {
  auto start = Clock::now();
  auto random = cli("bench random-2p --sizes 2..10 --trials 5 --bound 10 --seed 1");
  auto constant = cli("bench random-2p --sizes 2..10 --trials 5 --bound 0 --seed 1");
  double elapsed = since(start);
  if (random.exit_code != 0 || constant.exit_code != 0) return {false, "bench exited with an error"};
  std::map<int, double> random_ms;
  std::map<int, double> constant_ms;
  for (const auto& row : csv_rows(random.out)) random_ms[std::stoi(row[1])] += std::stod(row[6]);
  for (const auto& row : csv_rows(constant.out)) {
    int n = std::stoi(row[1]);
    if (row[0] != "constant-2p" || std::stoull(row[5]) != static_cast<std::uint64_t>(n) * n)
      return {false, "constant payoffs at size " + row[1] + " gave " + row[5] + " equilibria"};
    constant_ms[n] += std::stod(row[6]);
  }
  if (random_ms.size() != 9 || constant_ms.size() != 9) return {false, "missing sizes"};
  double worst = 1;
  for (const auto& [n, r] : random_ms) {
    double ratio = constant_ms[n] / r;
    worst = std::max(worst, std::max(ratio, 1 / ratio));
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "worst constant/random time ratio %.2f over sizes 2..10, ",
                worst);
  return {worst <= kBenchRatio && elapsed < kBenchBudgetMs, buf + ms(elapsed)};
}

int run() {
  int failures = 0;
  auto report = [&](int id, const char* name, const Outcome& o) {
    std::printf("%s %d %s: %s\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str());
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
  };
  report(1, "worked example", worked_example());
  auto games = game_corpus();
  report(2, "equilibrium formula audit", corpus_audit(games, theorem_audit, kGameAuditBudgetMs));
  auto structures = structure_corpus();
  report(3, "semantic identities", identity_suite(structures));
  report(4, "path semantics", path_suite(structures));
  report(5, "tic-tac-toe", tictactoe());
  report(6, "bimatrix bench", bench());
  report(7, "structure mapping", corpus_audit(games, structure_mapping_audit, kGameAuditBudgetMs));
  report(8, "SPE sanity", corpus_audit(games, spe_sanity, kGameAuditBudgetMs));
  std::printf("%d of 8 criteria passed\n", 8 - failures);
  return failures == 0 ? 0 : 1;
}

}  // namespace
}  // namespace galcheck::testing

int main() {
  try {
    return galcheck::testing::run();
  } catch (const std::exception& e) {
    std::printf("FAIL acceptance aborted: %s\n", e.what());
    return 1;
  }
}
