#pragma once

// Ground truth: exact win probabilities for small full-rules positions and
// an independent recomputation of the DTC distributions.

#include <cstdint>
#include <unordered_map>

#include "zweistein/board.hpp"
#include "zweistein/distance.hpp"
#include "zweistein/table.hpp"

namespace zweistein {

struct OracleValue {
  Color color = Color::Red;  // side the probability belongs to
  double win_prob = 0.0;

  // No draws: the other side wins with the complement.
  OracleValue for_color(Color c) const noexcept {
    return c == color ? *this : OracleValue{c, 1.0 - win_prob};
  }
};

class PositionTooLarge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Memoized expectimax without a horizon. Keep the instance around to reuse
// its cache across queries.
class ExactSolver {
 public:
  explicit ExactSolver(int max_pieces = 6) : max_pieces_(max_pieces) {}

  // Probability that `to_move` wins with optimal play by both sides.
  // Throws PositionTooLarge when more than max_pieces are on the board.
  OracleValue solve(const Board& board, Color to_move);

  // An optimal move for `to_move` after rolling `dice`; first wins ties.
  Move best_move(const Board& board, Color to_move, DiceRoll dice);

  std::size_t cached_positions() const noexcept { return cache_.size(); }

 private:
  double win_prob(const Board& board, Color to_move);
  void check_size(const Board& board) const;

  int max_pieces_;
  std::unordered_map<std::uint64_t, double> cache_;
};

OracleValue exact_win_prob(const Board& board, Color to_move, int max_pieces = 6);

// Recomputes one DTC distribution by plain recursion over raw distance
// arrays (no index encoding). Uses the same ascending-label tie rule as the
// table builder.
DtcPdf simple_pdf_reference(const DistanceArray& arr);

}  // namespace zweistein
