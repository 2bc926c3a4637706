#include "zweistein/search.hpp"

#include <algorithm>
#include <string>

namespace zweistein {

using Clock = std::chrono::steady_clock;

SearchLimits SearchLimits::fixed_depth(int depth) {
  if (depth < 1 || depth > kMaxSearchDepth)
    throw std::out_of_range("search depth must be in 1.." + std::to_string(kMaxSearchDepth));
  SearchLimits l;
  l.depth_ = depth;
  return l;
}

SearchLimits SearchLimits::deadline(std::chrono::nanoseconds budget) {
  if (budget.count() < 0) throw std::invalid_argument("negative time budget");
  SearchLimits l;
  l.budget_ = budget;
  return l;
}

std::chrono::nanoseconds time_budget(std::chrono::nanoseconds remaining, int steps_taken) {
  if (remaining.count() <= 0) throw std::invalid_argument("remaining time must be positive");
  if (steps_taken < 0) throw std::invalid_argument("steps_taken must be non-negative");
  return remaining / std::max(15 - steps_taken, 3);
}

namespace {

// Slack on chance-node cutoffs so that rounding in the window arithmetic can
// never turn a bound into a value that looks exact.
constexpr double kCutSlack = 1e-9;
constexpr double kInf = 1e300;
constexpr std::uint64_t kPollMask = 1023;

struct Aborted {};

class Searcher {
 public:
  Searcher(const Evaluator& evaluator, SearchOptions options) : eval_(evaluator), prune_(options.prune) {}

  void set_deadline(std::optional<Clock::time_point> deadline) { deadline_ = deadline; }
  std::uint64_t nodes() const noexcept { return nodes_; }

  // Value for `just_moved`. With pruning, a result inside (alpha, beta) is
  // exact; outside it is a bound on the correct side.
  double value(const Board& board, Color just_moved, int depth, double alpha, double beta) {
    ++nodes_;
    if (deadline_ && (nodes_ & kPollMask) == 0 && Clock::now() >= *deadline_) throw Aborted{};
    const GameStatus st = status(board);
    if (!st.is_ongoing()) return *st.winner() == just_moved ? 1.0 : 0.0;
    if (depth == 0) return eval_.unit_score(board, just_moved);
    const Color mover = opponent(just_moved);
    return prune_ ? chance_pruned(board, mover, depth, alpha, beta) : chance_plain(board, mover, depth);
  }

  // Best reply value for `mover` after rolling `dice`.
  double reply(const Board& board, Color mover, DiceRoll dice, int depth, double alpha, double beta) {
    const MoveList moves = generate_moves(board, mover, dice);
    double best = -kInf;
    for (const Move& m : moves) {
      const double v = value(apply_move_unchecked(board, mover, m), mover, depth - 1,
                             std::max(alpha, best), beta);
      if (v > best) {
        best = v;
        if (best >= beta) break;
      }
    }
    return best;
  }

 private:
  double chance_plain(const Board& board, Color mover, int depth) {
    double sum = 0.0;
    for (int d = 1; d <= 6; ++d) sum += 1.0 - reply(board, mover, DiceRoll(d), depth, -kInf, kInf);
    return sum / 6.0;
  }

  double chance_pruned(const Board& board, Color mover, int depth, double alpha, double beta) {
    double sum = 0.0;
    for (int k = 0; k < 6; ++k) {
      const int rest = 5 - k;
      // Window on this roll's contribution 1 - best_reply.
      const double lo = 6.0 * (alpha - kCutSlack) - sum - rest;
      const double hi = 6.0 * (beta + kCutSlack) - sum;
      const double reply_alpha = 1.0 - hi;
      const double reply_beta = 1.0 - lo;
      const double r = reply(board, mover, DiceRoll(k + 1), depth, reply_alpha, reply_beta);
      if (r >= reply_beta) return (sum + (1.0 - r) + rest) / 6.0;
      if (r <= reply_alpha) return (sum + (1.0 - r)) / 6.0;
      sum += 1.0 - r;
    }
    return sum / 6.0;
  }

  const Evaluator& eval_;
  bool prune_;
  std::uint64_t nodes_ = 0;
  std::optional<Clock::time_point> deadline_;
};

struct RootChoice {
  Move best;
  double value;
};

RootChoice search_root(Searcher& s, const Board& board, Color mover, const MoveList& moves, int depth,
                       std::optional<Clock::time_point> deadline) {
  RootChoice choice{moves[0], -kInf};
  for (int i = 0; i < moves.size(); ++i) {
    if (deadline && i > 0 && Clock::now() >= *deadline) throw Aborted{};
    const double v = s.value(apply_move_unchecked(board, mover, moves[i]), mover, depth - 1, choice.value, kInf);
    if (v > choice.value) choice = {moves[i], v};
  }
  return choice;
}

}  // namespace

double search_value(const Board& board, Color just_moved, int depth, const Evaluator& evaluator,
                    SearchOptions options) {
  if (depth < 0) throw std::invalid_argument("negative search depth");
  Searcher s(evaluator, options);
  return s.value(board, just_moved, depth, -kInf, kInf);
}

SearchResult best_move(const Board& board, Color mover, DiceRoll dice, const SearchLimits& limits,
                       const Evaluator& evaluator, SearchOptions options) {
  const MoveList moves = legal_moves(board, mover, dice);
  Searcher s(evaluator, options);

  if (limits.depth()) {
    const int depth = *limits.depth();
    const RootChoice c = search_root(s, board, mover, moves, depth, std::nullopt);
    return {c.best, c.value, depth, s.nodes()};
  }

  const auto deadline = Clock::now() + *limits.budget();
  RootChoice done = search_root(s, board, mover, moves, 1, std::nullopt);
  int reached = 1;
  if (moves.size() > 1) {
    s.set_deadline(deadline);
    for (int depth = 2; depth <= kMaxSearchDepth; ++depth) {
      // A forced win needs no deeper look.
      if (done.value >= 1.0 || Clock::now() >= deadline) break;
      try {
        done = search_root(s, board, mover, moves, depth, deadline);
        reached = depth;
      } catch (const Aborted&) {
        break;
      }
    }
  }
  return {done.best, done.value, reached, s.nodes()};
}

}  // namespace zweistein
