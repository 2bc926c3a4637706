#pragma once

// Collapse of one side of a board into its per-label Chebyshev distances to
// the goal corner, and the base-5 index used by the DTC tables.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "zweistein/board.hpp"

namespace zweistein {

inline constexpr int kTableRows = 15625;  // 5^6
inline constexpr int kMaxDistance = 4;

constexpr int distance_to_goal(Color c, Square sq) noexcept {
  const int dr = c == Color::Red ? 4 - sq.row : sq.row;
  const int dc = c == Color::Red ? 4 - sq.col : sq.col;
  return dr > dc ? dr : dc;
}

class PieceDistance {
 public:
  static constexpr PieceDistance captured() noexcept { return PieceDistance(-1); }
  static PieceDistance on_board(int distance);

  constexpr bool is_captured() const noexcept { return raw_ < 0; }
  // Only meaningful for on-board pieces.
  constexpr int distance() const noexcept { return raw_; }
  // Base-5 digit: 0 for captured, the distance otherwise.
  constexpr int digit() const noexcept { return raw_ < 0 ? 0 : raw_; }

  friend constexpr bool operator==(PieceDistance, PieceDistance) = default;

 private:
  constexpr explicit PieceDistance(int raw) noexcept : raw_(static_cast<std::int8_t>(raw)) {}
  std::int8_t raw_;
};

class DistanceArray {
 public:
  // All captured.
  constexpr DistanceArray() noexcept
      : entries_{PieceDistance::captured(), PieceDistance::captured(), PieceDistance::captured(),
                 PieceDistance::captured(), PieceDistance::captured(), PieceDistance::captured()} {}

  // Labels 1..6.
  PieceDistance of(int label) const;
  void set(int label, PieceDistance d);
  DistanceArray with(int label, PieceDistance d) const {
    DistanceArray out = *this;
    out.set(label, d);
    return out;
  }

  // False when some piece already sits on its goal (distance 0).
  bool encodable() const noexcept;
  LabelSet alive() const noexcept;
  bool all_captured() const noexcept { return alive().empty(); }

  // e.g. "[4, x, 3, x, x, x]".
  std::string to_string() const;

  friend constexpr bool operator==(const DistanceArray&, const DistanceArray&) = default;

 private:
  std::array<PieceDistance, kLabels> entries_;
};

struct TableIndex {
  std::uint16_t value = 0;

  constexpr TableIndex() = default;
  explicit TableIndex(int v);
  friend constexpr bool operator==(TableIndex, TableIndex) = default;
};

DistanceArray collapse(const Board& board, Color c) noexcept;

// Throws std::invalid_argument("terminal array not encodable") on distance 0.
TableIndex encode(const DistanceArray& arr);
DistanceArray decode(TableIndex idx) noexcept;

// collapse + encode for a side with no piece on its goal square.
std::uint16_t side_index(const Board& board, Color c) noexcept;

}  // namespace zweistein
