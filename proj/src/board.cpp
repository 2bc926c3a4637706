#include "zweistein/board.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <vector>

namespace zweistein {

namespace {

// Row step, column step, diagonal.
constexpr std::array<std::array<int, 2>, 3> kRedSteps{{{1, 0}, {0, 1}, {1, 1}}};
constexpr std::array<std::array<int, 2>, 3> kBlueSteps{{{-1, 0}, {0, -1}, {-1, -1}}};

constexpr const std::array<std::array<int, 2>, 3>& steps_for(Color c) {
  return c == Color::Red ? kRedSteps : kBlueSteps;
}

constexpr std::array<int, kLabels> kStartSquares{0, 1, 2, 5, 6, 10};

std::string square_text(Square sq) {
  return "(" + std::to_string(sq.row) + "," + std::to_string(sq.col) + ")";
}

void check_label(int label) {
  if (label < 1 || label > kLabels)
    throw std::out_of_range("label out of range: " + std::to_string(label));
}

}  // namespace

Color parse_color(std::string_view text) {
  std::string lower;
  for (char ch : text) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  if (lower == "r" || lower == "red") return Color::Red;
  if (lower == "b" || lower == "blue") return Color::Blue;
  throw std::invalid_argument("unknown color: " + std::string(text));
}

DiceRoll::DiceRoll(int value) : value_(value) {
  if (value < 1 || value > 6)
    throw std::out_of_range("dice value out of range: " + std::to_string(value));
}

LabelSet::LabelSet(std::initializer_list<int> labels) {
  for (int l : labels) insert(l);
}

int LabelSet::size() const noexcept { return std::popcount(mask_); }

void LabelSet::insert(int label) {
  check_label(label);
  mask_ |= static_cast<std::uint8_t>(1u << (label - 1));
}

LabelSet movable_labels(LabelSet alive, DiceRoll dice) {
  if (alive.empty()) throw std::invalid_argument("no pieces alive");
  const int d = dice.value();
  if (alive.contains(d)) return LabelSet::from_mask(static_cast<std::uint8_t>(1u << (d - 1)));
  LabelSet out;
  for (int l = d - 1; l >= 1; --l) {
    if (alive.contains(l)) {
      out.insert(l);
      break;
    }
  }
  for (int l = d + 1; l <= kLabels; ++l) {
    if (alive.contains(l)) {
      out.insert(l);
      break;
    }
  }
  return out;
}

std::string format_move(const Move& move) {
  return std::to_string(move.label) + " " + std::to_string(move.to.row) + " " +
         std::to_string(move.to.col);
}

Board::Board() noexcept {
  where_.fill(kNone);
  occupant_.fill(kNone);
}

Board Board::standard() noexcept {
  Board b;
  for (int i = 0; i < kLabels; ++i) {
    const int red_sq = kStartSquares[i];
    const int blue_sq = kSquares - 1 - red_sq;
    b.where_[piece_id(Color::Red, i + 1)] = static_cast<std::int8_t>(red_sq);
    b.where_[piece_id(Color::Blue, i + 1)] = static_cast<std::int8_t>(blue_sq);
    b.occupant_[red_sq] = static_cast<std::int8_t>(piece_id(Color::Red, i + 1));
    b.occupant_[blue_sq] = static_cast<std::int8_t>(piece_id(Color::Blue, i + 1));
  }
  return b;
}

Board Board::standard(const std::array<int, kLabels>& labels) {
  std::array<int, kLabels> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < kLabels; ++i)
    if (sorted[i] != i + 1) throw std::invalid_argument("placement is not a permutation of 1..6");
  Board b;
  for (int i = 0; i < kLabels; ++i) {
    b.place(Color::Red, labels[i], Square::from_index(kStartSquares[i]));
    b.place(Color::Blue, labels[i], Square::from_index(kSquares - 1 - kStartSquares[i]));
  }
  return b;
}

std::optional<Square> Board::square_of(Color c, int label) const {
  check_label(label);
  const auto sq = where_[piece_id(c, label)];
  if (sq == kNone) return std::nullopt;
  return Square::from_index(sq);
}

std::optional<Piece> Board::at(Square sq) const {
  if (!sq.valid()) throw std::out_of_range("square off board: " + square_text(sq));
  const auto id = occupant_[sq.index()];
  if (id == kNone) return std::nullopt;
  return Piece{static_cast<Color>(id / kLabels), id % kLabels + 1};
}

void Board::place(Color c, int label, Square sq) {
  check_label(label);
  if (!sq.valid()) throw std::out_of_range("square off board: " + square_text(sq));
  const int id = piece_id(c, label);
  if (where_[id] != kNone)
    throw std::invalid_argument(std::string("duplicate piece ") + color_char(c) + std::to_string(label));
  if (occupant_[sq.index()] != kNone)
    throw std::invalid_argument("square occupied: " + square_text(sq));
  where_[id] = static_cast<std::int8_t>(sq.index());
  occupant_[sq.index()] = static_cast<std::int8_t>(id);
}

void Board::remove(Color c, int label) {
  check_label(label);
  const int id = piece_id(c, label);
  if (where_[id] == kNone) return;
  occupant_[where_[id]] = kNone;
  where_[id] = kNone;
}

int Board::pieces_on_board(Color c) const noexcept { return alive(c).size(); }

LabelSet Board::alive(Color c) const noexcept {
  std::uint8_t mask = 0;
  const int base = static_cast<int>(c) * kLabels;
  for (int i = 0; i < kLabels; ++i)
    if (where_[base + i] != kNone) mask |= static_cast<std::uint8_t>(1u << i);
  return LabelSet::from_mask(mask);
}

MoveList generate_moves(const Board& board, Color mover, DiceRoll dice) noexcept {
  MoveList out;
  const LabelSet alive = board.alive(mover);
  if (alive.empty()) return out;
  const LabelSet movable = movable_labels(alive, dice);
  const auto& steps = steps_for(mover);
  for (int label = 1; label <= kLabels; ++label) {
    if (!movable.contains(label)) continue;
    const Square from = Square::from_index(board.raw_square(mover, label));
    for (const auto& [dr, dc] : steps) {
      const Square to{from.row + dr, from.col + dc};
      if (to.valid()) out.push_back(Move{label, from, to});
    }
  }
  return out;
}

MoveList legal_moves(const Board& board, Color mover, DiceRoll dice) {
  if (!status(board).is_ongoing()) throw GameOver("game over");
  return generate_moves(board, mover, dice);
}

Board apply_move_unchecked(const Board& board, Color mover, const Move& move) noexcept {
  Board next = board;
  const int id = Board::piece_id(mover, move.label);
  const int from = move.from.index();
  const int to = move.to.index();
  const auto victim = next.occupant_[to];
  if (victim != Board::kNone) next.where_[victim] = Board::kNone;
  next.occupant_[from] = Board::kNone;
  next.occupant_[to] = static_cast<std::int8_t>(id);
  next.where_[id] = static_cast<std::int8_t>(to);
  return next;
}

Board apply_move(const Board& board, Color mover, const Move& move) {
  if (!status(board).is_ongoing()) throw GameOver("game over");
  const std::string where = " moving " + std::string(1, color_char(mover)) +
                            std::to_string(move.label) + " " + square_text(move.from) +
                            " -> " + square_text(move.to);
  if (move.label < 1 || move.label > kLabels) throw IllegalMove("illegal move: bad label" + where);
  if (!move.from.valid() || !move.to.valid())
    throw IllegalMove("illegal move: square off board" + where);
  if (board.raw_square(mover, move.label) != move.from.index())
    throw IllegalMove("illegal move: piece not on source square" + where);
  const int dr = move.to.row - move.from.row;
  const int dc = move.to.col - move.from.col;
  const bool step_ok = std::any_of(steps_for(mover).begin(), steps_for(mover).end(),
                                   [&](const auto& s) { return s[0] == dr && s[1] == dc; });
  if (!step_ok) throw IllegalMove("illegal move: not a forward step" + where);
  return apply_move_unchecked(board, mover, move);
}

GameStatus status(const Board& board) noexcept {
  const auto red_goal = board.raw_occupant(goal_square(Color::Red).index());
  if (red_goal != -1 && red_goal < kLabels) return GameStatus::won(Color::Red);
  const auto blue_goal = board.raw_occupant(goal_square(Color::Blue).index());
  if (blue_goal >= kLabels) return GameStatus::won(Color::Blue);
  if (board.alive(Color::Blue).empty()) return GameStatus::won(Color::Red);
  if (board.alive(Color::Red).empty()) return GameStatus::won(Color::Blue);
  return GameStatus::ongoing();
}

Board parse_board(std::string_view text) {
  Board board;
  int row = 0;
  int col = 0;
  std::size_t i = 0;
  const auto fail = [](const std::string& msg, std::size_t pos) -> void { throw ParseError(msg, pos); };
  while (true) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size()) break;
    const std::size_t start = i;
    if (text[i] == '/') {
      if (col != kBoardSize) fail("row " + std::to_string(row) + " has " + std::to_string(col) + " tokens", start);
      ++row;
      col = 0;
      ++i;
      continue;
    }
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != '/') ++i;
    const std::string_view token = text.substr(start, i - start);
    if (row >= kBoardSize) fail("too many rows", start);
    if (col >= kBoardSize) fail("too many tokens in row " + std::to_string(row), start);
    if (token != ".") {
      if (token.size() != 2 || (token[0] != 'R' && token[0] != 'B'))
        fail("bad token '" + std::string(token) + "'", start);
      if (token[1] < '1' || token[1] > '6')
        fail("label out of range in '" + std::string(token) + "'", start);
      const Color c = token[0] == 'R' ? Color::Red : Color::Blue;
      const int label = token[1] - '0';
      if (board.raw_square(c, label) != -1) fail("duplicate piece " + std::string(token), start);
      board.place(c, label, Square{row, col});
    }
    ++col;
  }
  if (row != kBoardSize - 1 || col != kBoardSize)
    fail("expected 5 rows of 5 tokens", text.size());
  return board;
}

std::string format_board(const Board& board) {
  std::string out;
  for (int r = 0; r < kBoardSize; ++r) {
    if (r > 0) out += " / ";
    for (int c = 0; c < kBoardSize; ++c) {
      if (c > 0) out += ' ';
      const auto id = board.raw_occupant(r * kBoardSize + c);
      if (id == -1) {
        out += '.';
      } else {
        out += id < kLabels ? 'R' : 'B';
        out += static_cast<char>('1' + id % kLabels);
      }
    }
  }
  return out;
}

}  // namespace zweistein
