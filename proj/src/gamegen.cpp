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

#include "galcheck/gamegen.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <deque>
#include <limits>
#include <random>
#include <unordered_map>

#include "galcheck/error.hpp"

namespace galcheck {

namespace {

constexpr std::array<std::array<int, 3>, 8> kLines{{{0, 1, 2},
                                                    {3, 4, 5},
                                                    {6, 7, 8},
                                                    {0, 3, 6},
                                                    {1, 4, 7},
                                                    {2, 5, 8},
                                                    {0, 4, 8},
                                                    {2, 4, 6}}};

int count_marks(const Board& b, Mark m) {
  int n = 0;
  for (int c = 0; c < 9; ++c) n += b.at(c) == m;
  return n;
}

}  // namespace

Mark opponent(Mark m) {
  if (m == Mark::kX) return Mark::kO;
  if (m == Mark::kO) return Mark::kX;
  return Mark::kEmpty;
}

Board Board::parse(std::string_view text) {
  if (text.size() != 9) throw Error(ErrorCode::kInvalidArgument, "board text must have 9 cells");
  Board b;
  for (int c = 0; c < 9; ++c) {
    switch (text[c]) {
      case 'X': b.cells_[c] = Mark::kX; break;
      case 'O': b.cells_[c] = Mark::kO; break;
      case '.': break;
      default:
        throw Error(ErrorCode::kInvalidArgument,
                    "bad board cell '" + std::string(1, text[c]) + "'");
    }
  }
  int diff = count_marks(b, Mark::kX) - count_marks(b, Mark::kO);
  if (diff != 0 && diff != 1)
    throw Error(ErrorCode::kInvalidArgument, "impossible mark count in board " + std::string(text));
  return b;
}

Mark Board::side_to_move() const {
  return count_marks(*this, Mark::kX) == count_marks(*this, Mark::kO) ? Mark::kX : Mark::kO;
}

std::optional<Mark> Board::winner() const {
  for (const auto& line : kLines) {
    Mark m = cells_[line[0]];
    if (m != Mark::kEmpty && m == cells_[line[1]] && m == cells_[line[2]]) return m;
  }
  return std::nullopt;
}

bool Board::is_full() const {
  return std::none_of(cells_.begin(), cells_.end(), [](Mark m) { return m == Mark::kEmpty; });
}

std::vector<int> Board::legal_moves() const {
  std::vector<int> out;
  if (is_terminal()) return out;
  for (int c = 0; c < 9; ++c)
    if (cells_[c] == Mark::kEmpty) out.push_back(c);
  return out;
}

Board Board::play(int cell) const {
  if (cell < 0 || cell > 8 || cells_[cell] != Mark::kEmpty || is_terminal())
    throw Error(ErrorCode::kInvalidArgument, "illegal move " + std::to_string(cell));
  Board next = *this;
  next.cells_[cell] = side_to_move();
  return next;
}

std::string Board::to_string() const {
  std::string s(9, '.');
  for (int c = 0; c < 9; ++c) {
    if (cells_[c] == Mark::kX) s[c] = 'X';
    if (cells_[c] == Mark::kO) s[c] = 'O';
  }
  return s;
}

Evaluation exact_evaluation(const ScoreScale& scale) {
  return [draw = scale.draw](const Board&, Mark) { return draw; };
}

Policy parse_policy(std::string_view text) {
  if (text == "all") return SpreadAll{};
  if (text == "first") return FirstAvailable{};
  constexpr std::string_view prefix = "minimax:";
  if (text.substr(0, prefix.size()) == prefix) {
    auto digits = text.substr(prefix.size());
    int depth = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), depth);
    if (ec == std::errc() && end == digits.data() + digits.size() && depth >= 1)
      return Minimax{depth, exact_evaluation(), {}};
  }
  throw Error(ErrorCode::kInvalidArgument,
              "bad policy '" + std::string(text) + "' (expected all, first or minimax:<depth>)");
}

std::string policy_name(const Policy& p) {
  if (std::holds_alternative<SpreadAll>(p)) return "all";
  if (std::holds_alternative<FirstAvailable>(p)) return "first";
  return "minimax:" + std::to_string(std::get<Minimax>(p).depth);
}

namespace {

int board_code(const Board& b) {
  int code = 0;
  for (int c = 0; c < 9; ++c) code = code * 3 + static_cast<int>(b.at(c));
  return code;
}

// Depth beyond the number of empty cells never reaches eval, so the memo
// clamps it.
class MinimaxSearch {
 public:
  MinimaxSearch(const Evaluation& eval, Mark maximizer, const ScoreScale& scale)
      : eval_(eval), maximizer_(maximizer), scale_(scale), memo_(19683 * 10) {}

  Rational value(const Board& b, int depth) {
    if (auto w = b.winner()) return *w == maximizer_ ? scale_.win : scale_.loss;
    if (b.is_full()) return scale_.draw;
    if (depth == 0) return eval_(b, maximizer_);
    int empty = count_marks(b, Mark::kEmpty);
    int key = board_code(b) * 10 + std::min(depth, empty);
    if (memo_[key]) return *memo_[key];
    bool maximizing = b.side_to_move() == maximizer_;
    std::optional<Rational> best;
    for (int c : b.legal_moves()) {
      Rational v = value(b.play(c), depth - 1);
      if (!best || (maximizing ? v > *best : v < *best)) best = v;
    }
    memo_[key] = best;
    return *best;
  }

 private:
  const Evaluation& eval_;
  Mark maximizer_;
  const ScoreScale& scale_;
  std::vector<std::optional<Rational>> memo_;
};

}  // namespace

Rational minimax_value(const Board& b, int depth, const Evaluation& eval, Mark maximizer,
                       const ScoreScale& scale) {
  if (depth < 0) throw Error(ErrorCode::kInvalidArgument, "negative minimax depth");
  MinimaxSearch search(eval, maximizer, scale);
  return search.value(b, depth);
}

std::vector<int> policy_actions(const Policy& p, const Board& b) {
  auto moves = b.legal_moves();
  if (moves.empty()) throw Error(ErrorCode::kInvalidArgument, "no moves on a terminal board");
  if (std::holds_alternative<SpreadAll>(p)) return moves;
  if (std::holds_alternative<FirstAvailable>(p)) return {moves.front()};
  const auto& mm = std::get<Minimax>(p);
  if (mm.depth < 1) throw Error(ErrorCode::kInvalidArgument, "minimax depth must be positive");
  Mark me = b.side_to_move();
  MinimaxSearch search(mm.eval, me, mm.scale);
  int best = moves.front();
  std::optional<Rational> best_value;
  for (int c : moves) {
    Rational v = search.value(b.play(c), mm.depth - 1);
    if (!best_value || v > *best_value) {
      best_value = v;
      best = c;
    }
  }
  return {best};
}

namespace {

class TicTacToeInterpretation final : public InterpretationProvider {
 public:
  TicTacToeInterpretation(std::vector<Board> boards, PredicateId win_x, PredicateId win_o,
                          PredicateId draw)
      : boards_(std::move(boards)), win_x_(win_x), win_o_(win_o), draw_(draw) {}

  Element function(const GalStructure&, FunctionId, StateIndex,
                   std::span<const Element>) const override {
    throw Error(ErrorCode::kInterpretation, "Tic-Tac-Toe structures declare no functions");
  }

  bool predicate(const GalStructure&, PredicateId p, StateIndex e,
                 std::span<const Element>) const override {
    const Board& b = boards_.at(e);
    if (p == win_x_) return b.winner() == Mark::kX;
    if (p == win_o_) return b.winner() == Mark::kO;
    if (p == draw_) return b.is_draw();
    throw Error(ErrorCode::kInterpretation, "unknown predicate symbol");
  }

 private:
  std::vector<Board> boards_;
  PredicateId win_x_, win_o_, draw_;
};

}  // namespace

std::shared_ptr<const GalStructure> tictactoe_structure(const Policy& px, const Policy& po) {
  Signature sig;
  sig.add_player("X");
  sig.add_player("O");
  PredicateId win_x = sig.add_predicate("winX", {});
  PredicateId win_o = sig.add_predicate("winO", {});
  PredicateId draw = sig.add_predicate("Draw", {});

  std::vector<Board> boards{Board{}};
  std::unordered_map<std::string, std::size_t> seen{{Board{}.to_string(), 0}};
  std::vector<StateDecl> states;
  std::vector<std::pair<std::string, std::string>> actions;
  for (std::size_t i = 0; i < boards.size(); ++i) {
    Board b = boards[i];
    std::string id = b.to_string();
    StateDecl decl{id, {}};
    if (!b.is_terminal()) {
      Mark mover = b.side_to_move();
      decl.players.push_back(mover == Mark::kX ? "X" : "O");
      for (int c : policy_actions(mover == Mark::kX ? px : po, b)) {
        Board next = b.play(c);
        std::string next_id = next.to_string();
        if (seen.emplace(next_id, boards.size()).second) boards.push_back(next);
        actions.emplace_back(id, next_id);
      }
    }
    states.push_back(std::move(decl));
  }
  auto provider = std::make_shared<TicTacToeInterpretation>(boards, win_x, win_o, draw);
  return std::make_shared<const GalStructure>(std::move(sig), std::vector<std::vector<std::string>>{},
                                              std::move(states), std::move(actions),
                                              std::vector<std::string>{Board{}.to_string()},
                                              std::move(provider));
}

namespace {

std::int64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<std::int64_t>(x % bound);
}

}  // namespace

Bimatrix random_bimatrix(std::uint32_t m, std::uint32_t n, std::int64_t payoff_bound,
                         std::uint64_t seed) {
  if (m == 0 || n == 0) throw Error(ErrorCode::kInvalidArgument, "bimatrix sizes must be positive");
  if (payoff_bound < 1) throw Error(ErrorCode::kInvalidArgument, "payoff bound must be at least 1");
  std::mt19937_64 rng(seed);
  Bimatrix b{m, n, std::vector<std::vector<std::int64_t>>(m, std::vector<std::int64_t>(n)),
             std::vector<std::vector<std::int64_t>>(m, std::vector<std::int64_t>(n)), seed};
  auto bound = static_cast<std::uint64_t>(payoff_bound);
  for (std::uint32_t r = 0; r < m; ++r) {
    for (std::uint32_t c = 0; c < n; ++c) {
      b.u1[r][c] = uniform_below(rng, bound);
      b.u2[r][c] = uniform_below(rng, bound);
    }
  }
  return b;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> pure_ne(const Bimatrix& b) {
  std::vector<std::int64_t> col_best(b.n, std::numeric_limits<std::int64_t>::min());
  std::vector<std::int64_t> row_best(b.m, std::numeric_limits<std::int64_t>::min());
  for (std::uint32_t r = 0; r < b.m; ++r) {
    for (std::uint32_t c = 0; c < b.n; ++c) {
      col_best[c] = std::max(col_best[c], b.u1[r][c]);
      row_best[r] = std::max(row_best[r], b.u2[r][c]);
    }
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t r = 0; r < b.m; ++r)
    for (std::uint32_t c = 0; c < b.n; ++c)
      if (b.u1[r][c] == col_best[c] && b.u2[r][c] == row_best[r]) out.emplace_back(r, c);
  return out;
}

std::vector<BenchRecord> run_bimatrix_bench(const BenchOptions& options) {
  if (options.min_size == 0 || options.min_size > options.max_size)
    throw Error(ErrorCode::kInvalidArgument, "bad size range");
  if (options.trials == 0) throw Error(ErrorCode::kInvalidArgument, "trials must be positive");
  if (options.bound < 0) throw Error(ErrorCode::kInvalidArgument, "negative payoff bound");
  const bool constant = options.bound <= 1;
  const std::int64_t bound = constant ? 1 : options.bound;
  using Clock = std::chrono::steady_clock;
  constexpr auto kMinSample = std::chrono::milliseconds(2);

  std::vector<BenchRecord> out;
  std::uint64_t row = 0;
  for (std::uint32_t size = options.min_size; size <= options.max_size; ++size) {
    for (std::uint32_t t = 0; t < options.trials; ++t, ++row) {
      std::uint64_t seed = options.seed + row;
      Bimatrix b = random_bimatrix(size, size, bound, seed);
      std::size_t found = 0;
      std::uint64_t calls = 0;
      auto start = Clock::now();
      auto now = start;
      do {
        found = pure_ne(b).size();
        ++calls;
        now = Clock::now();
      } while (now - start < kMinSample);
      double millis = std::chrono::duration<double, std::milli>(now - start).count() /
                      static_cast<double>(calls);
      out.push_back(BenchRecord{constant ? "constant-2p" : "random-2p", size, size, bound, seed,
                                found, millis});
    }
  }
  return out;
}

}  // namespace galcheck
