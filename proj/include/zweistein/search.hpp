#pragma once

// Expectimax over dice chance nodes. Values are win probabilities in [0,1]
// for the side that has just moved; a player decision consumes one ply of
// depth, dice averaging consumes none.

#include <chrono>
#include <cstdint>
#include <optional>

#include "zweistein/board.hpp"
#include "zweistein/evaluator.hpp"

namespace zweistein {

inline constexpr int kMaxSearchDepth = 32;

class SearchLimits {
 public:
  static SearchLimits fixed_depth(int depth);
  static SearchLimits deadline(std::chrono::nanoseconds budget);

  std::optional<int> depth() const noexcept { return depth_; }
  std::optional<std::chrono::nanoseconds> budget() const noexcept { return budget_; }

 private:
  SearchLimits() = default;
  std::optional<int> depth_;
  std::optional<std::chrono::nanoseconds> budget_;
};

struct SearchOptions {
  // Bound-based cutoffs at chance nodes. Same moves and values as the plain
  // search, fewer nodes.
  bool prune = false;
};

struct SearchResult {
  Move best;
  double value = 0.0;
  int reached_depth = 0;
  std::uint64_t nodes = 0;
};

double search_value(const Board& board, Color just_moved, int depth, const Evaluator& evaluator,
                    SearchOptions options = {});

// Fixed depth: argmax over legal moves, first move wins ties. Deadline:
// iterative deepening from depth 1, keeping the deepest completed iteration;
// depth 1 always completes. Throws GameOver on a terminal position.
SearchResult best_move(const Board& board, Color mover, DiceRoll dice, const SearchLimits& limits,
                       const Evaluator& evaluator, SearchOptions options = {});

// remaining / max(15 - steps_taken, 3). Throws if remaining <= 0.
std::chrono::nanoseconds time_budget(std::chrono::nanoseconds remaining, int steps_taken);

}  // namespace zweistein
