#pragma once

// Self-play matches with seeded dice and the evaluation latency bench.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zweistein/board.hpp"
#include "zweistein/evaluator.hpp"
#include "zweistein/search.hpp"
#include "zweistein/table.hpp"

namespace zweistein {

// SplitMix64 (Steele, Lea, Flood 2014): state += 0x9e3779b97f4a7c15, then
// the murmur3-style finalizer on the new state.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n) by rejection.
  std::uint64_t below(std::uint64_t n) noexcept {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do x = next();
    while (x >= limit);
    return x % n;
  }

  DiceRoll roll() noexcept { return DiceRoll(static_cast<int>(below(6)) + 1); }

 private:
  std::uint64_t state_;
};

// Dice stream for one game of a match.
inline SplitMix64 game_rng(std::uint64_t seed, std::uint64_t game) noexcept { return SplitMix64(seed ^ game); }

struct AgentConfig {
  EvaluatorKind evaluator = EvaluatorKind::Zweistein;
  // Exactly one of these governs.
  std::optional<int> depth;
  std::optional<std::chrono::nanoseconds> total_time;
  bool prune = false;
};

enum class Placement { Standard, SeededRandomSymmetric };

struct MatchConfig {
  int games = 1;
  AgentConfig agent_a;
  AgentConfig agent_b;
  std::uint64_t seed = 0;
  Placement placement = Placement::Standard;
  bool record_moves = false;
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void validate(const MatchConfig& config);

// Game g: agent A plays Red when g is even; Red moves first when (g / 2) is
// even. Every block of four games covers each colour/first-mover pairing.
Color agent_a_color(int game) noexcept;
Color first_mover(int game) noexcept;

Board initial_board(Placement placement, SplitMix64& rng);

struct MoveRecord {
  int game = 0;
  int agent = 0;  // 0 = A, 1 = B
  int steps_taken = 0;
  std::chrono::nanoseconds remaining{0};
  std::chrono::nanoseconds budget{0};
  std::chrono::nanoseconds used{0};
  int reached_depth = 0;
};

struct MatchReport {
  int games = 0;
  int wins_a = 0;
  int wins_b = 0;
  int red_wins = 0;
  int first_mover_wins = 0;
  double win_rate_a = 0.0;
  double ci95_low = 0.0;
  double ci95_high = 0.0;
  double mean_game_length = 0.0;  // plies
  std::uint64_t total_moves = 0;
  double mean_move_seconds = 0.0;
  std::uint64_t seed = 0;
  std::vector<MoveRecord> moves;  // filled when record_moves is set
};

MatchReport run_match(const MatchConfig& config, const Tables& tables);

// Wilson score interval for a binomial proportion.
std::pair<double, double> wilson_interval(std::uint64_t successes, std::uint64_t trials, double z);

// Timing lines are optional so that reports for the same seed compare equal.
std::string format_report(const MatchReport& report, bool key_value, bool show_timing);

struct BenchResult {
  std::uint64_t calls = 0;
  double total_seconds = 0.0;
  double ns_per_call = 0.0;
  double checksum = 0.0;
};

// Times `calls` Zweistein lookups over a seeded cycle of random index pairs.
BenchResult bench_eval(std::uint64_t calls, const Tables& tables, std::uint64_t seed = 1);

}  // namespace zweistein
