#include <doctest.h>

#include <random>
#include <set>

#include "zweistein/board.hpp"
#include "zweistein/distance.hpp"
#include "test_util.hpp"

using namespace zweistein;

TEST_CASE("movable labels follow the dice") {
  CHECK(movable_labels({1, 2, 6}, DiceRoll(4)) == LabelSet{2, 6});
  CHECK(movable_labels({1, 2, 3, 4, 5, 6}, DiceRoll(3)) == LabelSet{3});
  CHECK(movable_labels({3}, DiceRoll(6)) == LabelSet{3});
  CHECK(movable_labels({4, 5}, DiceRoll(1)) == LabelSet{4});
  CHECK(movable_labels({1, 2}, DiceRoll(6)) == LabelSet{2});
  CHECK_THROWS_WITH(movable_labels(LabelSet{}, DiceRoll(2)), "no pieces alive");
}

TEST_CASE("movable labels property: exact match or nearest neighbours") {
  for (int mask = 1; mask < 64; ++mask) {
    const LabelSet alive = LabelSet::from_mask(static_cast<std::uint8_t>(mask));
    for (int d = 1; d <= 6; ++d) {
      const LabelSet m = movable_labels(alive, DiceRoll(d));
      CHECK(m.size() >= 1);
      CHECK(m.size() <= 2);
      CHECK((m.mask() & ~alive.mask()) == 0);
      if (alive.contains(d)) CHECK(m == LabelSet{d});
    }
  }
}

TEST_CASE("dice values outside 1..6 are rejected") {
  CHECK_THROWS_AS(DiceRoll(0), std::out_of_range);
  CHECK_THROWS_AS(DiceRoll(7), std::out_of_range);
}

TEST_CASE("legal moves: directions and ordering") {
  Board b;
  b.place(Color::Red, 1, {0, 0});
  b.place(Color::Blue, 1, {2, 2});
  auto moves = legal_moves(b, Color::Red, DiceRoll(1));
  REQUIRE(moves.size() == 3);
  CHECK(moves[0].to == Square{1, 0});
  CHECK(moves[1].to == Square{0, 1});
  CHECK(moves[2].to == Square{1, 1});

  Board edge;
  edge.place(Color::Red, 1, {0, 4});
  edge.place(Color::Blue, 1, {2, 2});
  moves = legal_moves(edge, Color::Red, DiceRoll(1));
  REQUIRE(moves.size() == 1);
  CHECK(moves[0].to == Square{1, 4});

  auto blue = legal_moves(b, Color::Blue, DiceRoll(5));
  REQUIRE(blue.size() == 3);
  CHECK(blue[0].to == Square{1, 2});
  CHECK(blue[1].to == Square{2, 1});
  CHECK(blue[2].to == Square{1, 1});
}

TEST_CASE("legal moves include capturing an own piece") {
  Board b;
  b.place(Color::Red, 6, {1, 1});
  b.place(Color::Red, 2, {1, 2});
  b.place(Color::Blue, 1, {4, 0});
  const auto moves = legal_moves(b, Color::Red, DiceRoll(4));
  bool found = false;
  for (const Move& m : moves) found = found || (m.label == 6 && m.to == Square{1, 2});
  CHECK(found);
  // 2 and 6 are both movable on a 4, label 2 first.
  CHECK(moves[0].label == 2);

  const Board after = apply_move(b, Color::Red, Move{6, {1, 1}, {1, 2}});
  CHECK_FALSE(after.square_of(Color::Red, 2).has_value());
  CHECK(after.square_of(Color::Red, 6) == Square{1, 2});
}

TEST_CASE("apply_move captures and relocates") {
  Board b;
  b.place(Color::Red, 1, {0, 0});
  b.place(Color::Blue, 4, {1, 1});
  b.place(Color::Blue, 2, {3, 3});
  const Board after = apply_move(b, Color::Red, Move{1, {0, 0}, {1, 1}});
  CHECK_FALSE(after.square_of(Color::Blue, 4).has_value());
  CHECK(after.square_of(Color::Red, 1) == Square{1, 1});
  CHECK(after.square_of(Color::Blue, 2) == Square{3, 3});

  const Board quiet = apply_move(b, Color::Red, Move{1, {0, 0}, {0, 1}});
  CHECK(quiet.pieces_on_board(Color::Red) + quiet.pieces_on_board(Color::Blue) == 3);
}

TEST_CASE("apply_move rejects illegal moves with coordinates") {
  Board b = Board::standard();
  CHECK_THROWS_AS(apply_move(b, Color::Red, Move{1, {0, 0}, {2, 2}}), IllegalMove);
  CHECK_THROWS_AS(apply_move(b, Color::Red, Move{1, {1, 1}, {2, 2}}), IllegalMove);
  CHECK_THROWS_AS(apply_move(b, Color::Blue, Move{1, {4, 4}, {5, 5}}), IllegalMove);
  try {
    apply_move(b, Color::Red, Move{1, {0, 0}, {0, 2}});
    FAIL("expected IllegalMove");
  } catch (const IllegalMove& e) {
    CHECK(std::string(e.what()).find("(0,0) -> (0,2)") != std::string::npos);
  }
}

TEST_CASE("status") {
  CHECK(status(Board::standard()).is_ongoing());

  Board corner;
  corner.place(Color::Red, 3, {4, 4});
  corner.place(Color::Blue, 1, {2, 2});
  CHECK(status(corner) == GameStatus::won(Color::Red));

  Board wiped;
  wiped.place(Color::Red, 3, {1, 1});
  CHECK(status(wiped) == GameStatus::won(Color::Red));

  Board blue_home;
  blue_home.place(Color::Red, 3, {1, 1});
  blue_home.place(Color::Blue, 5, {0, 0});
  CHECK(status(blue_home) == GameStatus::won(Color::Blue));

  // A red piece on Blue's goal does not win anything.
  Board red_on_blue_goal;
  red_on_blue_goal.place(Color::Red, 3, {0, 0});
  red_on_blue_goal.place(Color::Blue, 5, {4, 4});
  CHECK(status(red_on_blue_goal).is_ongoing());

  CHECK_THROWS_WITH(legal_moves(corner, Color::Blue, DiceRoll(1)), "game over");
}

TEST_CASE("standard placement") {
  const Board b = Board::standard();
  CHECK(format_board(b) == "R1 R2 R3 . . / R4 R5 . . . / R6 . . . B6 / . . . B5 B4 / . . B3 B2 B1");
  const Board p = Board::standard({3, 1, 2, 6, 5, 4});
  CHECK(p.square_of(Color::Red, 3) == Square{0, 0});
  CHECK(p.square_of(Color::Blue, 3) == Square{4, 4});
  CHECK_THROWS(Board::standard({1, 1, 2, 3, 4, 5}));
}

TEST_CASE("parse and format") {
  const std::string text = "R1 . . . . / . . . . . / . . . . . / . . . . . / . . . . B1";
  const Board b = parse_board(text);
  CHECK(b.square_of(Color::Red, 1) == Square{0, 0});
  CHECK(b.square_of(Color::Blue, 1) == Square{4, 4});
  for (int l = 2; l <= 6; ++l) {
    CHECK_FALSE(b.square_of(Color::Red, l).has_value());
    CHECK_FALSE(b.square_of(Color::Blue, l).has_value());
  }
  CHECK(format_board(b) == text);
  // Whitespace is normalized.
  CHECK(format_board(parse_board("R1  . . . .\n/ . . . . ./. . . . . / . . . . . / . . . . B1")) == text);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_WITH_AS(parse_board("R1 R1 . . . / . . . . . / . . . . . / . . . . . / . . . . ."),
                       doctest::Contains("duplicate piece R1"), ParseError);
  CHECK_THROWS_AS(parse_board("R7 . . . . / . . . . . / . . . . . / . . . . . / . . . . ."), ParseError);
  CHECK_THROWS_AS(parse_board("X1 . . . . / . . . . . / . . . . . / . . . . . / . . . . ."), ParseError);
  CHECK_THROWS_AS(parse_board(". . . . / . . . . . / . . . . . / . . . . . / . . . . ."), ParseError);
  CHECK_THROWS_AS(parse_board(". . . . . / . . . . ."), ParseError);
  CHECK_THROWS_AS(parse_board(". . . . . . / . . . . . / . . . . . / . . . . . / . . . . ."), ParseError);
  try {
    parse_board(". . . . . / . R1 . R1 . / . . . . . / . . . . . / . . . . .");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 19);
  }
}

TEST_CASE("property: parse/format roundtrip on random boards") {
  std::mt19937_64 rng(11);
  for (int n = 0; n < 2000; ++n) {
    const Board b = test::random_board(rng, 1 + static_cast<int>(rng() % 12));
    CHECK(parse_board(format_board(b)) == b);
  }
}

TEST_CASE("property: move generation invariants on random positions") {
  std::mt19937_64 rng(12);
  int checked = 0;
  while (checked < 3000) {
    const Board b = test::random_board(rng, 2 + static_cast<int>(rng() % 11));
    if (!status(b).is_ongoing()) continue;
    const Color mover = rng() % 2 ? Color::Red : Color::Blue;
    const DiceRoll dice(1 + static_cast<int>(rng() % 6));
    const LabelSet movable = movable_labels(b.alive(mover), dice);
    const MoveList moves = legal_moves(b, mover, dice);
    REQUIRE_FALSE(moves.empty());
    const int before = b.pieces_on_board(Color::Red) + b.pieces_on_board(Color::Blue);
    for (const Move& m : moves) {
      CHECK(movable.contains(m.label));
      CHECK(m.to.valid());
      // Strictly closer to the goal in at least one coordinate, never farther.
      const Square g = goal_square(mover);
      const int dr0 = std::abs(g.row - m.from.row), dc0 = std::abs(g.col - m.from.col);
      const int dr1 = std::abs(g.row - m.to.row), dc1 = std::abs(g.col - m.to.col);
      CHECK(dr1 <= dr0);
      CHECK(dc1 <= dc0);
      CHECK(dr1 + dc1 < dr0 + dc0);

      const Board after = apply_move(b, mover, m);
      const int n = after.pieces_on_board(Color::Red) + after.pieces_on_board(Color::Blue);
      CHECK(n <= before);
      CHECK(n >= before - 1);
      std::set<int> squares;
      for (Color c : {Color::Red, Color::Blue})
        for (int l = 1; l <= kLabels; ++l)
          if (auto sq = after.square_of(c, l)) CHECK(squares.insert(sq->index()).second);
    }
    ++checked;
  }
}
