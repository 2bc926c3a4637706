#pragma once

// EinStein wurfelt nicht! rules: 5x5 board, six labelled pieces per side,
// dice-selected moves toward the opposing corner, capture on arrival.

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace zweistein {

inline constexpr int kBoardSize = 5;
inline constexpr int kSquares = kBoardSize * kBoardSize;
inline constexpr int kLabels = 6;

enum class Color : std::uint8_t { Red = 0, Blue = 1 };

constexpr Color opponent(Color c) noexcept {
  return c == Color::Red ? Color::Blue : Color::Red;
}

constexpr char color_char(Color c) noexcept { return c == Color::Red ? 'R' : 'B'; }

// Accepts "R"/"B" (any case) and "red"/"blue".
Color parse_color(std::string_view text);

struct Square {
  int row = 0;
  int col = 0;

  constexpr bool valid() const noexcept {
    return row >= 0 && row < kBoardSize && col >= 0 && col < kBoardSize;
  }
  constexpr int index() const noexcept { return row * kBoardSize + col; }
  static constexpr Square from_index(int index) noexcept {
    return {index / kBoardSize, index % kBoardSize};
  }
  friend constexpr bool operator==(Square, Square) = default;
};

// Red heads for the bottom-right corner, Blue for the top-left.
constexpr Square goal_square(Color c) noexcept {
  return c == Color::Red ? Square{4, 4} : Square{0, 0};
}

class DiceRoll {
 public:
  explicit DiceRoll(int value);
  constexpr int value() const noexcept { return value_; }

 private:
  int value_;
};

// Set of piece labels 1..6 stored as a bitmask (bit label-1).
class LabelSet {
 public:
  constexpr LabelSet() = default;
  LabelSet(std::initializer_list<int> labels);
  static constexpr LabelSet from_mask(std::uint8_t mask) noexcept {
    LabelSet s;
    s.mask_ = mask & 0x3f;
    return s;
  }

  constexpr bool contains(int label) const noexcept {
    return label >= 1 && label <= kLabels && (mask_ >> (label - 1)) & 1;
  }
  constexpr bool empty() const noexcept { return mask_ == 0; }
  constexpr std::uint8_t mask() const noexcept { return mask_; }
  int size() const noexcept;
  void insert(int label);

  friend constexpr bool operator==(LabelSet, LabelSet) = default;

 private:
  std::uint8_t mask_ = 0;
};

// Labels a dice roll lets the side move: the exact match when alive, else the
// nearest alive label below and above. Throws on an empty set.
LabelSet movable_labels(LabelSet alive, DiceRoll dice);

struct Move {
  int label = 0;
  Square from;
  Square to;

  friend constexpr bool operator==(const Move&, const Move&) = default;
};

// "label to-row to-col", e.g. "3 2 1".
std::string format_move(const Move& move);

// At most two movable labels with three directions each.
class MoveList {
 public:
  static constexpr int kCapacity = 6;

  void push_back(const Move& m) noexcept { moves_[size_++] = m; }
  int size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  const Move& operator[](int i) const noexcept { return moves_[i]; }
  const Move* begin() const noexcept { return moves_.data(); }
  const Move* end() const noexcept { return moves_.data() + size_; }

 private:
  std::array<Move, kCapacity> moves_{};
  int size_ = 0;
};

struct Piece {
  Color color;
  int label;
  friend constexpr bool operator==(Piece, Piece) = default;
};

class GameStatus {
 public:
  static constexpr GameStatus ongoing() noexcept { return GameStatus{}; }
  static constexpr GameStatus won(Color c) noexcept {
    GameStatus s;
    s.winner_ = c;
    return s;
  }
  constexpr bool is_ongoing() const noexcept { return !winner_.has_value(); }
  constexpr std::optional<Color> winner() const noexcept { return winner_; }
  friend constexpr bool operator==(GameStatus, GameStatus) = default;

 private:
  std::optional<Color> winner_;
};

class Board {
 public:
  // Empty board: every piece captured.
  Board() noexcept;

  // Red 1..6 on (0,0),(0,1),(0,2),(1,0),(1,1),(2,0); Blue mirrored through
  // the centre. `labels[i]` is the label placed on the i-th starting square.
  static Board standard() noexcept;
  static Board standard(const std::array<int, kLabels>& labels);

  std::optional<Square> square_of(Color c, int label) const;
  std::optional<Piece> at(Square sq) const;

  // Throws if the square is occupied or the piece is already on the board.
  void place(Color c, int label, Square sq);
  void remove(Color c, int label);

  int pieces_on_board(Color c) const noexcept;
  LabelSet alive(Color c) const noexcept;

  friend bool operator==(const Board&, const Board&) = default;

  // Raw accessors for hot loops.
  std::int8_t raw_square(Color c, int label) const noexcept {
    return where_[piece_id(c, label)];
  }
  std::int8_t raw_occupant(int square_index) const noexcept {
    return occupant_[square_index];
  }

  static constexpr int piece_id(Color c, int label) noexcept {
    return static_cast<int>(c) * kLabels + (label - 1);
  }

 private:
  friend Board apply_move_unchecked(const Board&, Color, const Move&) noexcept;

  static constexpr std::int8_t kNone = -1;
  std::array<std::int8_t, 2 * kLabels> where_;
  std::array<std::int8_t, kSquares> occupant_;
};

// Legal moves ordered by label, then row step, column step, diagonal.
// Throws GameOver on a terminal position.
MoveList legal_moves(const Board& board, Color mover, DiceRoll dice);

// Same as legal_moves without the terminal check; the mover must have a piece.
MoveList generate_moves(const Board& board, Color mover, DiceRoll dice) noexcept;

// Validates `move` against the rules for some dice value and applies it.
Board apply_move(const Board& board, Color mover, const Move& move);
Board apply_move_unchecked(const Board& board, Color mover, const Move& move) noexcept;

GameStatus status(const Board& board) noexcept;

// Five rows top to bottom separated by '/', five tokens per row:
// "." | "R<1-6>" | "B<1-6>".
Board parse_board(std::string_view text);
std::string format_board(const Board& board);

class GameOver : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class IllegalMove : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at offset " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace zweistein
