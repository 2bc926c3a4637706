#include <doctest.h>

#include <random>

#include "zweistein/distance.hpp"
#include "test_util.hpp"

using namespace zweistein;

TEST_CASE("Chebyshev distance to goal") {
  CHECK(distance_to_goal(Color::Red, {0, 0}) == 4);
  CHECK(distance_to_goal(Color::Red, {4, 4}) == 0);
  CHECK(distance_to_goal(Color::Red, {1, 3}) == 3);
  CHECK(distance_to_goal(Color::Blue, {2, 3}) == 3);
  CHECK(distance_to_goal(Color::Blue, {0, 0}) == 0);
  CHECK(distance_to_goal(Color::Blue, {4, 1}) == 4);
}

TEST_CASE("collapse") {
  Board b;
  b.place(Color::Red, 1, {0, 0});
  b.place(Color::Red, 3, {1, 1});
  b.place(Color::Blue, 2, {4, 4});
  const DistanceArray red = collapse(b, Color::Red);
  CHECK(red.to_string() == "[4, x, 3, x, x, x]");
  CHECK(collapse(b, Color::Blue).to_string() == "[x, 4, x, x, x, x]");
  CHECK(collapse(Board(), Color::Red).all_captured());
}

TEST_CASE("encode and decode") {
  CHECK(encode(DistanceArray()).value == 0);
  DistanceArray full;
  for (int l = 1; l <= kLabels; ++l) full.set(l, PieceDistance::on_board(4));
  CHECK(encode(full).value == 15624);
  CHECK(encode(DistanceArray().with(1, PieceDistance::on_board(3))).value == 3);
  CHECK(encode(DistanceArray().with(2, PieceDistance::on_board(1))).value == 5);
  CHECK_THROWS_WITH(encode(DistanceArray().with(4, PieceDistance::on_board(0))), "terminal array not encodable");
  CHECK_THROWS(TableIndex(15625));
  CHECK_THROWS(TableIndex(-1));
}

TEST_CASE("decode/encode roundtrip over every index") {
  for (int i = 0; i < kTableRows; ++i) {
    const DistanceArray a = decode(TableIndex(i));
    REQUIRE(a.encodable());
    REQUIRE(encode(a).value == i);
  }
}

TEST_CASE("side_index agrees with collapse + encode") {
  std::mt19937_64 rng(3);
  for (int n = 0; n < 2000; ++n) {
    const Board b = test::random_ongoing_board(rng, 2, 12);
    for (Color c : {Color::Red, Color::Blue}) CHECK(side_index(b, c) == encode(collapse(b, c)).value);
  }
}

TEST_CASE("property: isomorphic boards collapse to the same index") {
  // Moving a piece along its ring of equal Chebyshev distance keeps the array.
  std::mt19937_64 rng(4);
  int pairs = 0;
  while (pairs < 1000) {
    const Board b = test::random_ongoing_board(rng, 2, 10);
    const Color c = rng() % 2 ? Color::Red : Color::Blue;
    const int label = 1 + static_cast<int>(rng() % kLabels);
    const auto sq = b.square_of(c, label);
    if (!sq) continue;
    const int d = distance_to_goal(c, *sq);
    std::vector<Square> ring;
    for (int i = 0; i < kSquares; ++i) {
      const Square s = Square::from_index(i);
      if (distance_to_goal(c, s) == d && !b.at(s) && s != *sq) ring.push_back(s);
    }
    if (ring.empty()) continue;
    Board moved = b;
    moved.remove(c, label);
    moved.place(c, label, ring[rng() % ring.size()]);
    CHECK(encode(collapse(moved, c)) == encode(collapse(b, c)));
    CHECK(collapse(moved, opponent(c)) == collapse(b, opponent(c)));
    ++pairs;
  }
}

TEST_CASE("every non-goal square has a step that lowers the distance by one") {
  for (Color c : {Color::Red, Color::Blue}) {
    for (int i = 0; i < kSquares; ++i) {
      const Square s = Square::from_index(i);
      const int d = distance_to_goal(c, s);
      if (d == 0) continue;
      Board b;
      b.place(c, 1, s);
      b.place(opponent(c), 1, s == Square{2, 2} ? Square{2, 1} : Square{2, 2});
      if (!status(b).is_ongoing()) continue;
      int decreasing = 0;
      for (const Move& m : generate_moves(b, c, DiceRoll(1))) {
        const int nd = distance_to_goal(c, m.to);
        CHECK(nd >= d - 1);
        CHECK(nd <= d);
        if (nd == d - 1) ++decreasing;
      }
      CHECK(decreasing >= 1);
    }
  }
}
