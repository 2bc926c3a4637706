#include <doctest.h>

#include <set>

#include "zweistein/match.hpp"

using namespace zweistein;
using namespace std::chrono_literals;

namespace {

const Tables& tables() {
  static const Tables t = build_tables();
  return t;
}

AgentConfig depth_agent(int depth, EvaluatorKind kind = EvaluatorKind::Zweistein) {
  AgentConfig a;
  a.evaluator = kind;
  a.depth = depth;
  return a;
}

}  // namespace

TEST_CASE("SplitMix64 reference outputs") {
  // Published first outputs for seed 0 and for seed 1234567.
  SplitMix64 zero(0);
  CHECK(zero.next() == 0xe220a8397b1dcdafULL);
  CHECK(zero.next() == 0x6e789e6aa1b965f4ULL);
  SplitMix64 r(1234567);
  CHECK(r.next() == 6457827717110365317ULL);
  CHECK(r.next() == 3203168211198807973ULL);
}

TEST_CASE("dice are uniform enough and per-game streams differ") {
  SplitMix64 rng(5);
  std::array<int, 6> counts{};
  for (int i = 0; i < 60000; ++i) ++counts[rng.roll().value() - 1];
  for (int c : counts) CHECK(std::abs(c - 10000) < 500);

  SplitMix64 g0 = game_rng(42, 0);
  SplitMix64 g1 = game_rng(42, 1);
  CHECK(g0.next() != g1.next());
}

TEST_CASE("colour and first-mover schedule") {
  std::set<std::pair<Color, Color>> seen;
  for (int g = 0; g < 4; ++g) seen.insert({agent_a_color(g), first_mover(g)});
  CHECK(seen.size() == 4);
  CHECK(agent_a_color(0) == Color::Red);
  CHECK(first_mover(0) == Color::Red);
  CHECK(first_mover(2) == Color::Blue);
}

TEST_CASE("random symmetric placement") {
  SplitMix64 rng(9);
  const Board b = initial_board(Placement::SeededRandomSymmetric, rng);
  CHECK(b.pieces_on_board(Color::Red) == 6);
  CHECK(b.pieces_on_board(Color::Blue) == 6);
  for (int l = 1; l <= kLabels; ++l) {
    const Square r = *b.square_of(Color::Red, l);
    const Square bl = *b.square_of(Color::Blue, l);
    CHECK(bl == Square{4 - r.row, 4 - r.col});
  }
}

TEST_CASE("config validation") {
  MatchConfig c;
  c.agent_a = depth_agent(1);
  c.agent_b = depth_agent(1);
  CHECK_NOTHROW(validate(c));

  MatchConfig zero = c;
  zero.games = 0;
  CHECK_THROWS_AS(validate(zero), ConfigError);

  MatchConfig both = c;
  both.agent_a.total_time = 1s;
  CHECK_THROWS_AS(validate(both), ConfigError);

  MatchConfig neither = c;
  neither.agent_b.depth.reset();
  CHECK_THROWS_AS(validate(neither), ConfigError);

  MatchConfig deep = c;
  deep.agent_a.depth = 0;
  CHECK_THROWS_AS(run_match(deep, tables()), ConfigError);
}

TEST_CASE("matches are reproducible and wins add up") {
  MatchConfig c;
  c.games = 200;
  c.seed = 7;
  c.agent_a = depth_agent(2);
  c.agent_b = depth_agent(1, EvaluatorKind::Schwarz);
  const MatchReport r1 = run_match(c, tables());
  const MatchReport r2 = run_match(c, tables());
  CHECK(r1.wins_a + r1.wins_b == 200);
  CHECK(format_report(r1, false, false) == format_report(r2, false, false));
  CHECK(format_report(r1, true, false) == format_report(r2, true, false));
  CHECK(r1.ci95_low <= r1.win_rate_a);
  CHECK(r1.win_rate_a <= r1.ci95_high);
  CHECK(r1.mean_game_length > 0.0);

  c.placement = Placement::SeededRandomSymmetric;
  const MatchReport r3 = run_match(c, tables());
  const MatchReport r4 = run_match(c, tables());
  CHECK(format_report(r3, true, false) == format_report(r4, true, false));

  c.games = 1;
  CHECK(format_report(run_match(c, tables()), true, false) == format_report(run_match(c, tables()), true, false));
}

TEST_CASE("report formats") {
  MatchConfig c;
  c.games = 4;
  c.agent_a = depth_agent(1);
  c.agent_b = depth_agent(1);
  const MatchReport r = run_match(c, tables());
  const std::string kv = format_report(r, true, false);
  CHECK(kv.find("games=4\n") != std::string::npos);
  CHECK(kv.find("mean_move_ms") == std::string::npos);
  CHECK(format_report(r, true, true).find("mean_move_ms=") != std::string::npos);
  CHECK(format_report(r, false, false).find("win rate A") != std::string::npos);
}

TEST_CASE("wilson interval") {
  const auto [lo, hi] = wilson_interval(50, 100, 1.959963984540054);
  CHECK(lo == doctest::Approx(0.403831).epsilon(1e-5));
  CHECK(hi == doctest::Approx(0.596169).epsilon(1e-5));
  const auto [zlo, zhi] = wilson_interval(0, 10, 1.96);
  CHECK(zlo == doctest::Approx(0.0));
  CHECK(zhi > 0.0);
  CHECK_THROWS(wilson_interval(0, 0, 1.96));
}

TEST_CASE("time-controlled agents follow the budget formula") {
  MatchConfig c;
  c.games = 4;
  c.seed = 3;
  c.record_moves = true;
  c.agent_a.total_time = 200ms;
  c.agent_b = depth_agent(1);
  const MatchReport r = run_match(c, tables());
  int timed = 0;
  for (const MoveRecord& m : r.moves) {
    if (m.agent != 0) continue;
    ++timed;
    CHECK(m.reached_depth >= 1);
    if (m.remaining.count() > 0) CHECK(m.budget == time_budget(m.remaining, m.steps_taken));
    else CHECK(m.budget.count() == 0);
  }
  CHECK(timed > 0);
}

TEST_CASE("bench") {
  CHECK_THROWS_WITH(bench_eval(0, tables()), "calls must be positive");
  const BenchResult a = bench_eval(100000, tables(), 11);
  const BenchResult b = bench_eval(100000, tables(), 11);
  CHECK(a.calls == 100000);
  CHECK(a.checksum == b.checksum);
  CHECK(a.checksum > 0.0);
  CHECK(a.ns_per_call > 0.0);
}
