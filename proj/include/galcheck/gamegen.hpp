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

#ifndef GALCHECK_GAMEGEN_HPP_
#define GALCHECK_GAMEGEN_HPP_

// Experiment inputs: Tic-Tac-Toe transition systems driven by per-player
// policies, and random two-player payoff tables with pure equilibrium search.

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "galcheck/rational.hpp"
#include "galcheck/structure.hpp"

namespace galcheck {

enum class Mark : std::uint8_t { kEmpty, kX, kO };

Mark opponent(Mark m);

// Cells are numbered 0..8 row by row. Text form is nine characters from
// "XO.", e.g. "X...O....".
class Board {
 public:
  Board() { cells_.fill(Mark::kEmpty); }
  // Throws kInvalidArgument on malformed text or an impossible mark count.
  static Board parse(std::string_view text);

  Mark at(int cell) const { return cells_.at(cell); }
  Mark side_to_move() const;
  std::optional<Mark> winner() const;
  bool is_full() const;
  bool is_terminal() const { return winner() || is_full(); }
  bool is_draw() const { return !winner() && is_full(); }
  std::vector<int> legal_moves() const;
  // Throws kInvalidArgument if the cell is taken or the board is terminal.
  Board play(int cell) const;
  std::string to_string() const;

  friend bool operator==(const Board&, const Board&) = default;

 private:
  std::array<Mark, 9> cells_;
};

// Terminal scores in the evaluation function's units.
struct ScoreScale {
  Rational win{1};
  Rational draw{0};
  Rational loss{-1};
};

// Score of a position for `maximizer`.
using Evaluation = std::function<Rational(const Board&, Mark maximizer)>;

// Scores every non-terminal position as a draw, so with enough depth only
// exact terminal outcomes matter.
Evaluation exact_evaluation(const ScoreScale& scale = {});

struct SpreadAll {};
struct FirstAvailable {};
struct Minimax {
  int depth = 9;
  Evaluation eval = exact_evaluation();
  ScoreScale scale;
};
using Policy = std::variant<SpreadAll, FirstAvailable, Minimax>;

// "all", "first" or "minimax:<depth>" (exact evaluation).
Policy parse_policy(std::string_view text);
std::string policy_name(const Policy& p);

// Depth-limited minimax for `maximizer`. Terminal positions score from
// `scale`; depth 0 returns eval(b, maximizer).
Rational minimax_value(const Board& b, int depth, const Evaluation& eval, Mark maximizer,
                       const ScoreScale& scale = {});

// Moves the policy allows for the side to move. Minimax picks the argmax
// over children, ties to the lowest cell. Throws kInvalidArgument on a
// terminal board or a non-positive minimax depth.
std::vector<int> policy_actions(const Policy& p, const Board& b);

// Boards reachable from the empty board with X moving by `px` and O by `po`.
// State ids are board strings, players "X" and "O", and the 0-ary
// predicates winX, winO and Draw hold per state.
std::shared_ptr<const GalStructure> tictactoe_structure(const Policy& px, const Policy& po);

struct Bimatrix {
  std::uint32_t m = 0;
  std::uint32_t n = 0;
  std::vector<std::vector<std::int64_t>> u1;
  std::vector<std::vector<std::int64_t>> u2;
  std::optional<std::uint64_t> seed;
};

// Uniform integers via rejection sampling on std::mt19937_64 outputs,
// filled row by row with u1 before u2 in every cell.
inline constexpr const char* kBimatrixGenerator = "mt19937_64-rejection-v1";

// Payoffs uniform in [0, payoff_bound). Throws kInvalidArgument on zero sizes
// or bound.
Bimatrix random_bimatrix(std::uint32_t m, std::uint32_t n, std::int64_t payoff_bound,
                         std::uint64_t seed);

// Cells that are mutual best responses, row-major.
std::vector<std::pair<std::uint32_t, std::uint32_t>> pure_ne(const Bimatrix& b);

struct BenchRecord {
  std::string experiment;
  std::uint32_t m = 0;
  std::uint32_t n = 0;
  std::int64_t payoff_bound = 1;
  std::uint64_t seed = 0;
  std::uint64_t equilibria = 0;
  double millis = 0;
};

struct BenchOptions {
  std::uint32_t min_size = 2;
  std::uint32_t max_size = 10;
  std::uint32_t trials = 5;
  std::int64_t bound = 10;  // 0 selects constant payoffs
  std::uint64_t seed = 1;
};

// One record per size and trial, sizes ascending. Row k uses seed + k and
// its millis is the mean wall time of one pure_ne call.
std::vector<BenchRecord> run_bimatrix_bench(const BenchOptions& options);

}  // namespace galcheck

#endif  // GALCHECK_GAMEGEN_HPP_
