#include "zweistein/match.hpp"

#include <cmath>
#include <cstdio>
#include <memory>
#include <numeric>

namespace zweistein {

using Clock = std::chrono::steady_clock;

namespace {

void validate_agent(const AgentConfig& a, const char* name) {
  const std::string who = std::string("agent ") + name + ": ";
  if (a.depth.has_value() == a.total_time.has_value())
    throw ConfigError(who + "set exactly one of depth or total time");
  if (a.depth && (*a.depth < 1 || *a.depth > kMaxSearchDepth))
    throw ConfigError(who + "depth must be in 1.." + std::to_string(kMaxSearchDepth));
  if (a.total_time && a.total_time->count() <= 0) throw ConfigError(who + "total time must be positive");
}

}  // namespace

void validate(const MatchConfig& config) {
  if (config.games < 1) throw ConfigError("games must be at least 1");
  validate_agent(config.agent_a, "A");
  validate_agent(config.agent_b, "B");
}

Color agent_a_color(int game) noexcept { return game % 2 == 0 ? Color::Red : Color::Blue; }

Color first_mover(int game) noexcept { return (game / 2) % 2 == 0 ? Color::Red : Color::Blue; }

Board initial_board(Placement placement, SplitMix64& rng) {
  if (placement == Placement::Standard) return Board::standard();
  std::array<int, kLabels> labels{};
  std::iota(labels.begin(), labels.end(), 1);
  for (int i = kLabels - 1; i > 0; --i)
    std::swap(labels[i], labels[rng.below(static_cast<std::uint64_t>(i) + 1)]);
  return Board::standard(labels);
}

MatchReport run_match(const MatchConfig& config, const Tables& tables) {
  validate(config);
  const std::array<const AgentConfig*, 2> agents{&config.agent_a, &config.agent_b};
  const std::array<std::unique_ptr<Evaluator>, 2> evaluators{make_evaluator(config.agent_a.evaluator, tables),
                                                             make_evaluator(config.agent_b.evaluator, tables)};
  MatchReport report;
  report.games = config.games;
  report.seed = config.seed;
  std::uint64_t plies = 0;
  std::chrono::nanoseconds thinking{0};

  for (int g = 0; g < config.games; ++g) {
    SplitMix64 rng = game_rng(config.seed, static_cast<std::uint64_t>(g));
    Board board = initial_board(config.placement, rng);
    const Color a_color = agent_a_color(g);
    Color to_move = first_mover(g);
    std::array<int, 2> steps{0, 0};
    std::array<std::chrono::nanoseconds, 2> remaining{};
    for (int i = 0; i < 2; ++i)
      if (agents[i]->total_time) remaining[i] = *agents[i]->total_time;

    while (status(board).is_ongoing()) {
      const DiceRoll dice = rng.roll();
      const int agent = to_move == a_color ? 0 : 1;
      const AgentConfig& cfg = *agents[agent];
      std::chrono::nanoseconds budget{0};
      const SearchLimits limits = [&] {
        if (cfg.depth) return SearchLimits::fixed_depth(*cfg.depth);
        if (remaining[agent].count() > 0) budget = time_budget(remaining[agent], steps[agent]);
        return SearchLimits::deadline(budget);
      }();
      const auto start = Clock::now();
      const SearchResult r = best_move(board, to_move, dice, limits, *evaluators[agent], {cfg.prune});
      const auto used = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
      if (config.record_moves)
        report.moves.push_back({g, agent, steps[agent], remaining[agent], budget, used, r.reached_depth});
      if (cfg.total_time) remaining[agent] -= used;
      thinking += used;
      ++steps[agent];
      ++plies;
      board = apply_move_unchecked(board, to_move, r.best);
      to_move = opponent(to_move);
    }

    const Color winner = *status(board).winner();
    if (winner == a_color) ++report.wins_a;
    else ++report.wins_b;
    if (winner == Color::Red) ++report.red_wins;
    if (winner == first_mover(g)) ++report.first_mover_wins;
  }

  report.win_rate_a = static_cast<double>(report.wins_a) / config.games;
  std::tie(report.ci95_low, report.ci95_high) = wilson_interval(report.wins_a, config.games, 1.959963984540054);
  report.total_moves = plies;
  report.mean_game_length = static_cast<double>(plies) / config.games;
  report.mean_move_seconds = std::chrono::duration<double>(thinking).count() / static_cast<double>(plies);
  return report;
}

std::pair<double, double> wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
  if (trials == 0) throw std::invalid_argument("no trials");
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double centre = (p + z2 / (2 * n)) / (1 + z2 / n);
  const double half = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / (1 + z2 / n);
  return {centre - half, centre + half};
}

std::string format_report(const MatchReport& r, bool key_value, bool show_timing) {
  char buf[512];
  std::string out;
  const auto line = [&](const char* key, const char* label, const std::string& value) {
    if (key_value) std::snprintf(buf, sizeof buf, "%s=%s\n", key, value.c_str());
    else std::snprintf(buf, sizeof buf, "%-22s %s\n", label, value.c_str());
    out += buf;
  };
  const auto num = [](const char* fmt, double v) {
    char b[64];
    std::snprintf(b, sizeof b, fmt, v);
    return std::string(b);
  };
  line("games", "games", std::to_string(r.games));
  line("seed", "seed", std::to_string(r.seed));
  line("wins_a", "wins A", std::to_string(r.wins_a));
  line("wins_b", "wins B", std::to_string(r.wins_b));
  line("win_rate_a", "win rate A", num("%.6f", r.win_rate_a));
  line("ci95_low", "95% CI low", num("%.6f", r.ci95_low));
  line("ci95_high", "95% CI high", num("%.6f", r.ci95_high));
  line("red_wins", "red wins", std::to_string(r.red_wins));
  line("first_mover_wins", "first mover wins", std::to_string(r.first_mover_wins));
  line("mean_game_length", "mean game length", num("%.4f", r.mean_game_length));
  if (show_timing) line("mean_move_ms", "mean ms per move", num("%.4f", r.mean_move_seconds * 1e3));
  return out;
}

BenchResult bench_eval(std::uint64_t calls, const Tables& tables, std::uint64_t seed) {
  if (calls == 0) throw std::invalid_argument("calls must be positive");
  constexpr std::size_t kCycle = 4096;
  SplitMix64 rng(seed);
  std::vector<std::pair<TableIndex, TableIndex>> pairs(kCycle);
  for (auto& [a, b] : pairs) {
    a = TableIndex(static_cast<int>(1 + rng.below(kTableRows - 1)));
    b = TableIndex(static_cast<int>(1 + rng.below(kTableRows - 1)));
  }

  double checksum = 0.0;
  const auto start = Clock::now();
  for (std::uint64_t i = 0; i < calls; ++i) {
    const auto& [a, b] = pairs[i & (kCycle - 1)];
    checksum += zweistein_eval(a, b, tables);
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return {calls, seconds, seconds * 1e9 / static_cast<double>(calls), checksum};
}

}  // namespace zweistein
