#include "zweistein/oracle.hpp"

#include <map>
#include <string>

namespace zweistein {

namespace {

std::uint64_t position_key(const Board& board, Color to_move) {
  std::uint64_t key = 0;
  for (int c = 0; c < 2; ++c) {
    for (int label = 1; label <= kLabels; ++label) {
      const auto sq = board.raw_square(static_cast<Color>(c), label);
      key = (key << 5) | static_cast<std::uint64_t>(sq < 0 ? 31 : sq);
    }
  }
  return (key << 1) | static_cast<std::uint64_t>(to_move);
}

}  // namespace

void ExactSolver::check_size(const Board& board) const {
  const int pieces = board.pieces_on_board(Color::Red) + board.pieces_on_board(Color::Blue);
  if (pieces > max_pieces_)
    throw PositionTooLarge("position too large for exact solve (" + std::to_string(pieces) + " pieces)");
}

OracleValue ExactSolver::solve(const Board& board, Color to_move) {
  check_size(board);
  return {to_move, win_prob(board, to_move)};
}

double ExactSolver::win_prob(const Board& board, Color to_move) {
  const GameStatus st = status(board);
  if (!st.is_ongoing()) return *st.winner() == to_move ? 1.0 : 0.0;
  const std::uint64_t key = position_key(board, to_move);
  if (const auto it = cache_.find(key); it != cache_.end()) return it->second;

  const Color other = opponent(to_move);
  double sum = 0.0;
  for (int d = 1; d <= 6; ++d) {
    double best = 0.0;
    for (const Move& m : generate_moves(board, to_move, DiceRoll(d)))
      best = std::max(best, 1.0 - win_prob(apply_move_unchecked(board, to_move, m), other));
    sum += best;
  }
  const double v = sum / 6.0;
  cache_.emplace(key, v);
  return v;
}

Move ExactSolver::best_move(const Board& board, Color to_move, DiceRoll dice) {
  check_size(board);
  const MoveList moves = legal_moves(board, to_move, dice);
  Move best = moves[0];
  double best_v = -1.0;
  for (const Move& m : moves) {
    const double v = 1.0 - win_prob(apply_move_unchecked(board, to_move, m), opponent(to_move));
    if (v > best_v) {
      best_v = v;
      best = m;
    }
  }
  return best;
}

OracleValue exact_win_prob(const Board& board, Color to_move, int max_pieces) {
  return ExactSolver(max_pieces).solve(board, to_move);
}

namespace {

// -1 marks a captured piece.
using RawDistances = std::array<int, kLabels>;

class SimpleReference {
 public:
  DtcPdf dist(const RawDistances& arr) {
    for (int d : arr) {
      if (d == 0) {
        DtcPdf home{};
        home[0] = 1.0;
        return home;
      }
    }
    if (const auto it = memo_.find(arr); it != memo_.end()) return it->second;

    DtcPdf acc{};
    for (int dice = 1; dice <= 6; ++dice) {
      const DtcPdf chosen = best_child(arr, dice);
      for (int i = 0; i < kDtcBuckets; ++i) acc[i] += chosen[i];
    }
    DtcPdf out{};
    for (int i = kDtcBuckets - 1; i >= 1; --i) out[i] = acc[i - 1] / 6.0;
    memo_.emplace(arr, out);
    return out;
  }

 private:
  DtcPdf best_child(const RawDistances& arr, int dice) {
    std::array<int, 2> candidates{};
    int n = 0;
    if (arr[dice - 1] > 0) {
      candidates[n++] = dice;
    } else {
      for (int l = dice - 1; l >= 1; --l)
        if (arr[l - 1] > 0) {
          candidates[n++] = l;
          break;
        }
      for (int l = dice + 1; l <= kLabels; ++l)
        if (arr[l - 1] > 0) {
          candidates[n++] = l;
          break;
        }
    }
    // Lower label first when two candidates exist.
    if (n == 2 && candidates[0] > candidates[1]) std::swap(candidates[0], candidates[1]);

    DtcPdf best{};
    double best_mean = 0.0;
    for (int c = 0; c < n; ++c) {
      RawDistances child = arr;
      child[candidates[c] - 1] -= 1;
      const DtcPdf p = dist(child);
      double mean = 0.0;
      for (int i = 0; i < kDtcBuckets; ++i) mean += i * p[i];
      if (c == 0 || mean < best_mean) {
        best = p;
        best_mean = mean;
      }
    }
    return best;
  }

  std::map<RawDistances, DtcPdf> memo_;
};

}  // namespace

DtcPdf simple_pdf_reference(const DistanceArray& arr) {
  if (!arr.encodable()) throw std::invalid_argument("terminal array not encodable");
  if (arr.all_captured()) return DtcPdf{};
  RawDistances raw{};
  for (int label = 1; label <= kLabels; ++label) {
    const PieceDistance d = arr.of(label);
    raw[label - 1] = d.is_captured() ? -1 : d.distance();
  }
  return SimpleReference().dist(raw);
}

}  // namespace zweistein
