#include "zweistein/verify.hpp"

#include <cmath>
#include <cstdio>
#include <unordered_map>

#include "zweistein/evaluator.hpp"
#include "zweistein/match.hpp"
#include "zweistein/oracle.hpp"

namespace zweistein {

namespace {

std::string fmt(const char* f, double v) {
  char buf[96];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

CheckResult check_normalization(const Tables& t) {
  double worst = 0.0;
  int bad_rows = 0;
  for (int idx = 1; idx < kTableRows; ++idx) {
    const auto row = t.pdf.row(idx);
    double sum = 0.0;
    bool ok = row[0] == 0.0;
    for (double p : row) {
      sum += p;
      ok = ok && p >= 0.0 && p <= 1.0;
    }
    worst = std::max(worst, std::abs(sum - 1.0));
    if (!ok || std::abs(sum - 1.0) > 1e-9 || std::abs(t.cdf.row(idx)[kDtcBuckets - 1] - 1.0) > 1e-9) ++bad_rows;
  }
  return {"pdf rows normalized, p[0] = 0", bad_rows == 0,
          std::to_string(bad_rows) + " bad rows, max |sum-1| " + fmt("%.3e", worst)};
}

CheckResult check_single_piece(const Tables& t) {
  int bad = 0;
  for (int label = 1; label <= kLabels; ++label)
    for (int d = 1; d <= kMaxDistance; ++d) {
      const auto row = t.pdf.row(encode(DistanceArray().with(label, PieceDistance::on_board(d))));
      if (row[d] != 1.0) ++bad;
    }
  return {"single-piece rows are point masses", bad == 0, std::to_string(bad) + " of 24 mismatched"};
}

CheckResult check_reference(const Tables& t, SplitMix64& rng) {
  double worst = 0.0;
  for (int n = 0; n < 100; ++n) {
    const int idx = 1 + static_cast<int>(rng.below(kTableRows - 1));
    const DtcPdf ref = simple_pdf_reference(decode(TableIndex(idx)));
    const auto row = t.pdf.row(idx);
    for (int i = 0; i < kDtcBuckets; ++i) worst = std::max(worst, std::abs(ref[i] - row[i]));
  }
  return {"independent reference matches 100 rows", worst <= 1e-12, "max diff " + fmt("%.3e", worst)};
}

CheckResult check_double_sum(const Tables& t, SplitMix64& rng) {
  double worst = 0.0;
  for (int n = 0; n < 100000; ++n) {
    const TableIndex a(1 + static_cast<int>(rng.below(kTableRows - 1)));
    const TableIndex b(1 + static_cast<int>(rng.below(kTableRows - 1)));
    const auto pa = t.pdf.row(a);
    const auto pb = t.pdf.row(b);
    double direct = 0.0;
    for (int i = 0; i < kDtcBuckets; ++i)
      for (int j = 0; j < i; ++j) direct += pa[j] * pb[i];
    worst = std::max(worst, std::abs(direct - zweistein_eval(a, b, t)));
  }
  return {"cdf*pdf sum equals direct P(X<Y)", worst <= 1e-12, "max diff " + fmt("%.3e", worst)};
}

// P(Red wins) computed with Red maximizing and Blue minimizing, as a
// second route to the solver's side-to-move values.
class RedPerspective {
 public:
  double red_wins(const Board& b, Color to_move) {
    const GameStatus st = status(b);
    if (!st.is_ongoing()) return *st.winner() == Color::Red ? 1.0 : 0.0;
    std::uint64_t key = static_cast<std::uint64_t>(to_move);
    for (int c = 0; c < 2; ++c)
      for (int l = 1; l <= kLabels; ++l) key = key * 26 + static_cast<std::uint64_t>(b.raw_square(static_cast<Color>(c), l) + 1);
    if (const auto it = memo_.find(key); it != memo_.end()) return it->second;
    double sum = 0.0;
    for (int d = 1; d <= 6; ++d) {
      double best = to_move == Color::Red ? 0.0 : 1.0;
      for (const Move& m : generate_moves(b, to_move, DiceRoll(d))) {
        const double v = red_wins(apply_move_unchecked(b, to_move, m), opponent(to_move));
        best = to_move == Color::Red ? std::max(best, v) : std::min(best, v);
      }
      sum += best;
    }
    return memo_[key] = sum / 6.0;
  }

 private:
  std::unordered_map<std::uint64_t, double> memo_;
};

CheckResult check_exact_complement() {
  const Board b = parse_board(". . . . . / . R1 . B2 . / . . . . . / . R2 . B1 . / . . . . .");
  ExactSolver solver;
  RedPerspective red;
  double worst = 0.0;
  for (Color c : {Color::Red, Color::Blue}) {
    const double mover = solver.solve(b, c).win_prob;
    const double red_win = red.red_wins(b, c);
    const double blue_win = c == Color::Blue ? mover : 1.0 - mover;
    worst = std::max(worst, std::abs(red_win + blue_win - 1.0));
  }
  return {"exact red + blue win probabilities sum to 1", worst <= 1e-12, "max deviation " + fmt("%.3e", worst)};
}

}  // namespace

std::vector<CheckResult> run_verification(const Tables& tables, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<CheckResult> out;
  out.push_back(check_normalization(tables));
  out.push_back(check_single_piece(tables));
  out.push_back(check_reference(tables, rng));
  out.push_back(check_double_sum(tables, rng));
  out.push_back(check_exact_complement());
  return out;
}

}  // namespace zweistein
