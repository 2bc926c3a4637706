#include "zweistein/evaluator.hpp"

#include <algorithm>

#include <string>

namespace zweistein {

EvaluatorKind parse_evaluator_kind(std::string_view name) {
  if (name == "zweistein") return EvaluatorKind::Zweistein;
  if (name == "schwarz") return EvaluatorKind::Schwarz;
  throw std::invalid_argument("unknown evaluator: " + std::string(name));
}

std::string_view evaluator_name(EvaluatorKind kind) noexcept {
  return kind == EvaluatorKind::Zweistein ? "zweistein" : "schwarz";
}

double zweistein_eval(TableIndex ours, TableIndex theirs, const Tables& tables) {
  if (ours.value == 0) {
    if (theirs.value == 0) throw std::invalid_argument("both sides eliminated");
    return 0.0;
  }
  if (theirs.value == 0) return 1.0;
  const auto cdf = tables.cdf.row(ours);
  const auto pdf = tables.pdf.row(theirs);
  double sum = 0.0;
  for (int i = 1; i < kDtcBuckets; ++i) sum += cdf[i - 1] * pdf[i];
  // Rounding can push a certain win a hair above one.
  return std::min(sum, 1.0);
}

Evaluation zweistein_eval(const DistanceArray& ours, const DistanceArray& theirs, const Tables& tables) {
  return {zweistein_eval(encode(ours), encode(theirs), tables)};
}

Evaluation schwarz_eval(const DistanceArray& ours, const DistanceArray& theirs, const Tables& tables) {
  const TableIndex o = encode(ours);
  const TableIndex t = encode(theirs);
  if (o.value == 0) {
    if (t.value == 0) throw std::invalid_argument("both sides eliminated");
    return {-kSchwarzBound};
  }
  if (t.value == 0) return {kSchwarzBound};
  return {expected_dtc(tables.pdf.row(t)) - expected_dtc(tables.pdf.row(o))};
}

Evaluation evaluate_board(const Board& board, Color just_moved, EvaluatorKind kind, const Tables& tables) {
  if (!status(board).is_ongoing()) throw GameOver("evaluate called on terminal state");
  const DistanceArray ours = collapse(board, just_moved);
  const DistanceArray theirs = collapse(board, opponent(just_moved));
  return kind == EvaluatorKind::Zweistein ? zweistein_eval(ours, theirs, tables)
                                          : schwarz_eval(ours, theirs, tables);
}

double ZweisteinEvaluator::score(const Board& board, Color just_moved) const {
  TableIndex ours;
  TableIndex theirs;
  ours.value = side_index(board, just_moved);
  theirs.value = side_index(board, opponent(just_moved));
  return zweistein_eval(ours, theirs, *tables_);
}

SchwarzEvaluator::SchwarzEvaluator(const Tables& tables) : expected_(kTableRows) {
  for (int i = 0; i < kTableRows; ++i) expected_[i] = expected_dtc(tables.pdf.row(i));
}

double SchwarzEvaluator::score(const Board& board, Color just_moved) const {
  const auto o = side_index(board, just_moved);
  const auto t = side_index(board, opponent(just_moved));
  if (o == 0) {
    if (t == 0) throw std::invalid_argument("both sides eliminated");
    return -kSchwarzBound;
  }
  if (t == 0) return kSchwarzBound;
  return expected_[t] - expected_[o];
}

double SchwarzEvaluator::unit_score(const Board& board, Color just_moved) const {
  return (score(board, just_moved) + kSchwarzBound) / (2.0 * kSchwarzBound);
}

std::unique_ptr<Evaluator> make_evaluator(EvaluatorKind kind, const Tables& tables) {
  if (kind == EvaluatorKind::Zweistein) return std::make_unique<ZweisteinEvaluator>(tables);
  return std::make_unique<SchwarzEvaluator>(tables);
}

}  // namespace zweistein
