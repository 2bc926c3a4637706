#include "zweistein/distance.hpp"

namespace zweistein {

namespace {

constexpr std::array<int, kLabels> kPow5{1, 5, 25, 125, 625, 3125};

constexpr std::array<std::uint8_t, kSquares> make_distance_row(Color c) {
  std::array<std::uint8_t, kSquares> out{};
  for (int i = 0; i < kSquares; ++i)
    out[i] = static_cast<std::uint8_t>(distance_to_goal(c, Square::from_index(i)));
  return out;
}

constexpr std::array<std::array<std::uint8_t, kSquares>, 2> kDistance{
    make_distance_row(Color::Red), make_distance_row(Color::Blue)};

void check_label(int label) {
  if (label < 1 || label > kLabels)
    throw std::out_of_range("label out of range: " + std::to_string(label));
}

}  // namespace

PieceDistance PieceDistance::on_board(int distance) {
  if (distance < 0 || distance > kMaxDistance)
    throw std::out_of_range("distance out of range: " + std::to_string(distance));
  return PieceDistance(distance);
}

PieceDistance DistanceArray::of(int label) const {
  check_label(label);
  return entries_[label - 1];
}

void DistanceArray::set(int label, PieceDistance d) {
  check_label(label);
  entries_[label - 1] = d;
}

bool DistanceArray::encodable() const noexcept {
  for (const auto& e : entries_)
    if (!e.is_captured() && e.distance() == 0) return false;
  return true;
}

LabelSet DistanceArray::alive() const noexcept {
  std::uint8_t mask = 0;
  for (int i = 0; i < kLabels; ++i)
    if (!entries_[i].is_captured()) mask |= static_cast<std::uint8_t>(1u << i);
  return LabelSet::from_mask(mask);
}

std::string DistanceArray::to_string() const {
  std::string out = "[";
  for (int i = 0; i < kLabels; ++i) {
    if (i > 0) out += ", ";
    out += entries_[i].is_captured() ? "x" : std::to_string(entries_[i].distance());
  }
  return out + "]";
}

TableIndex::TableIndex(int v) : value(static_cast<std::uint16_t>(v)) {
  if (v < 0 || v >= kTableRows) throw std::out_of_range("table index out of range: " + std::to_string(v));
}

DistanceArray collapse(const Board& board, Color c) noexcept {
  DistanceArray out;
  for (int label = 1; label <= kLabels; ++label) {
    const auto sq = board.raw_square(c, label);
    if (sq >= 0) out.set(label, PieceDistance::on_board(kDistance[static_cast<int>(c)][sq]));
  }
  return out;
}

TableIndex encode(const DistanceArray& arr) {
  if (!arr.encodable()) throw std::invalid_argument("terminal array not encodable");
  int idx = 0;
  for (int label = 1; label <= kLabels; ++label) idx += arr.of(label).digit() * kPow5[label - 1];
  return TableIndex(idx);
}

DistanceArray decode(TableIndex idx) noexcept {
  DistanceArray out;
  int v = idx.value;
  for (int label = 1; label <= kLabels; ++label) {
    const int digit = v % 5;
    v /= 5;
    if (digit != 0) out.set(label, PieceDistance::on_board(digit));
  }
  return out;
}

std::uint16_t side_index(const Board& board, Color c) noexcept {
  const auto& dist = kDistance[static_cast<int>(c)];
  int idx = 0;
  for (int i = 0; i < kLabels; ++i) {
    const auto sq = board.raw_square(c, i + 1);
    if (sq >= 0) idx += dist[sq] * kPow5[i];
  }
  return static_cast<std::uint16_t>(idx);
}

}  // namespace zweistein
