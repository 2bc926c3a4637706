#pragma once

// Position evaluation from the perspective of the side that has just moved.

#include <memory>
#include <string_view>

#include "zweistein/board.hpp"
#include "zweistein/distance.hpp"
#include "zweistein/table.hpp"

namespace zweistein {

enum class EvaluatorKind { Zweistein, Schwarz };

EvaluatorKind parse_evaluator_kind(std::string_view name);
std::string_view evaluator_name(EvaluatorKind kind) noexcept;

struct Evaluation {
  double score = 0.0;
};

// P(X < Y) where X is the just-moved side's DTC and Y the opponent's: ties
// lose because the opponent moves first.
Evaluation zweistein_eval(const DistanceArray& ours, const DistanceArray& theirs, const Tables& tables);

// Index form used by search and the latency bench. Index 0 is an eliminated
// side: 0 when ours is 0, 1 when only theirs is 0.
double zweistein_eval(TableIndex ours, TableIndex theirs, const Tables& tables);

// E[their DTC] - E[our DTC]. An eliminated side scores as -kSchwarzBound /
// +kSchwarzBound, outside the reachable range (-18, 18).
inline constexpr double kSchwarzBound = 19.0;
Evaluation schwarz_eval(const DistanceArray& ours, const DistanceArray& theirs, const Tables& tables);

// Throws GameOver on a terminal position.
Evaluation evaluate_board(const Board& board, Color just_moved, EvaluatorKind kind, const Tables& tables);

// Horizon evaluator used by search. unit_score must lie in [0,1]; search
// treats 1 - unit_score as the opponent's value.
class Evaluator {
 public:
  virtual ~Evaluator() = default;
  virtual std::string_view name() const noexcept = 0;
  virtual double score(const Board& board, Color just_moved) const = 0;
  virtual double unit_score(const Board& board, Color just_moved) const = 0;
};

class ZweisteinEvaluator final : public Evaluator {
 public:
  explicit ZweisteinEvaluator(const Tables& tables) : tables_(&tables) {}
  std::string_view name() const noexcept override { return "zweistein"; }
  double score(const Board& board, Color just_moved) const override;
  double unit_score(const Board& board, Color just_moved) const override { return score(board, just_moved); }

 private:
  const Tables* tables_;
};

// unit_score maps the difference linearly onto [0,1], which keeps averages
// over dice and the 1 - v negation exact.
class SchwarzEvaluator final : public Evaluator {
 public:
  explicit SchwarzEvaluator(const Tables& tables);
  std::string_view name() const noexcept override { return "schwarz"; }
  double score(const Board& board, Color just_moved) const override;
  double unit_score(const Board& board, Color just_moved) const override;

 private:
  std::vector<double> expected_;  // expected DTC per table index
};

std::unique_ptr<Evaluator> make_evaluator(EvaluatorKind kind, const Tables& tables);

}  // namespace zweistein
