#include "zweistein/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "zweistein/board.hpp"
#include "zweistein/evaluator.hpp"
#include "zweistein/match.hpp"
#include "zweistein/search.hpp"
#include "zweistein/table.hpp"
#include "zweistein/verify.hpp"

namespace zweistein {

namespace {

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

Tables obtain_tables(const std::string& path) { return path.empty() ? build_tables() : load_tables(path); }

struct AgentFlags {
  std::string evaluator = "zweistein";
  int depth = 0;
  double time_s = 0.0;
  bool prune = false;

  void add_to(CLI::App* app, const std::string& prefix) {
    app->add_option("--" + prefix + "-evaluator", evaluator, "zweistein | schwarz")->capture_default_str();
    app->add_option("--" + prefix + "-depth", depth, "fixed search depth");
    app->add_option("--" + prefix + "-time", time_s, "total thinking time per game, seconds");
    app->add_flag("--" + prefix + "-prune", prune, "enable chance-node cutoffs");
  }

  AgentConfig config() const {
    AgentConfig c;
    c.evaluator = parse_evaluator_kind(evaluator);
    if (depth > 0) c.depth = depth;
    if (time_s > 0.0)
      c.total_time = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::duration<double>(time_s));
    if (!c.depth && !c.total_time) c.depth = 1;
    c.prune = prune;
    return c;
  }
};

int play(Color human, int depth, std::uint64_t seed, EvaluatorKind kind, std::istream& in, std::ostream& out) {
  const Tables tables = build_tables();
  const auto engine = make_evaluator(kind, tables);
  SplitMix64 rng(seed);
  Board board = Board::standard();
  Color to_move = Color::Red;
  out << "You play " << (human == Color::Red ? "Red (R, heading to 4 4)" : "Blue (B, heading to 0 0)")
      << ". Enter moves as: label to-row to-col\n";
  while (status(board).is_ongoing()) {
    const DiceRoll dice = rng.roll();
    out << "\n" << format_board(board) << "\n" << color_char(to_move) << " rolls " << dice.value() << "\n";
    const MoveList moves = legal_moves(board, to_move, dice);
    Move chosen;
    if (to_move == human) {
      while (true) {
        out << "legal:";
        for (const Move& m : moves) out << " [" << format_move(m) << "]";
        out << "\n> " << std::flush;
        std::string line;
        if (!std::getline(in, line)) {
          out << "\ninput closed\n";
          return 1;
        }
        std::istringstream ls(line);
        Move m;
        if (ls >> m.label >> m.to.row >> m.to.col) {
          const auto it = std::find_if(moves.begin(), moves.end(), [&](const Move& cand) {
            return cand.label == m.label && cand.to == m.to;
          });
          if (it != moves.end()) {
            chosen = *it;
            break;
          }
        }
        out << "illegal move '" << line << "', try again\n";
      }
    } else {
      const SearchResult r = best_move(board, to_move, dice, SearchLimits::fixed_depth(depth), *engine);
      chosen = r.best;
      out << "engine plays " << format_move(chosen) << " (value " << fixed6(r.value) << ")\n";
    }
    board = apply_move(board, to_move, chosen);
    to_move = opponent(to_move);
  }
  out << "\n" << format_board(board) << "\n"
      << (*status(board).winner() == Color::Red ? "Red" : "Blue") << " wins\n";
  return 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"EinStein wurfelt nicht! engine with the Zweistein evaluation tables"};
  app.require_subcommand(1);

  std::string tables_path;
  auto* build = app.add_subcommand("build", "build the pdf/cdf tables and write them to a file");
  std::string out_path;
  build->add_option("--out", out_path, "output path")->required();

  auto* eval = app.add_subcommand("eval", "evaluate a position for the side that just moved");
  std::string board_text;
  std::string just_moved;
  std::string evaluator = "zweistein";
  eval->add_option("--board", board_text, "board text")->required();
  eval->add_option("--just-moved", just_moved, "R | B")->required();
  eval->add_option("--evaluator", evaluator, "zweistein | schwarz")->capture_default_str();
  eval->add_option("--tables", tables_path, "table file (default: build in memory)");

  auto* best = app.add_subcommand("best-move", "search for the best move");
  std::string mover;
  int dice = 0;
  int depth = 0;
  double time_ms = 0.0;
  bool prune = false;
  best->add_option("--board", board_text, "board text")->required();
  best->add_option("--mover", mover, "R | B")->required();
  best->add_option("--dice", dice, "dice roll 1-6")->required()->check(CLI::Range(1, 6));
  auto* depth_opt = best->add_option("--depth", depth, "fixed depth in plies");
  auto* time_opt = best->add_option("--time-ms", time_ms, "time budget in milliseconds");
  depth_opt->excludes(time_opt);
  best->add_option("--evaluator", evaluator, "zweistein | schwarz")->capture_default_str();
  best->add_flag("--prune", prune, "enable chance-node cutoffs");
  best->add_option("--tables", tables_path, "table file (default: build in memory)");

  auto* selfplay = app.add_subcommand("selfplay", "play a seeded match between agents A and B");
  int games = 100;
  std::uint64_t seed = 0;
  std::string placement = "standard";
  std::string format = "text";
  bool timing = false;
  bool log_moves = false;
  AgentFlags a_flags;
  AgentFlags b_flags;
  selfplay->add_option("--games", games, "number of games")->capture_default_str();
  selfplay->add_option("--seed", seed, "base seed")->capture_default_str();
  selfplay->add_option("--placement", placement, "standard | random")->capture_default_str();
  selfplay->add_option("--format", format, "text | kv")->capture_default_str();
  selfplay->add_flag("--timing", timing, "include timing in the report");
  selfplay->add_flag("--log-moves", log_moves, "print per-move clock records");
  selfplay->add_option("--tables", tables_path, "table file (default: build in memory)");
  a_flags.add_to(selfplay, "a");
  b_flags.add_to(selfplay, "b");

  auto* bench = app.add_subcommand("bench", "time Zweistein evaluation calls");
  std::uint64_t calls = 100000000;
  bench->add_option("--calls", calls, "number of calls")->capture_default_str();
  bench->add_option("--seed", seed, "seed for the index cycle");
  bench->add_option("--tables", tables_path, "table file (default: build in memory)");

  auto* verify = app.add_subcommand("verify", "run the table and oracle cross-checks");
  verify->add_option("--tables", tables_path, "table file (default: build in memory)");

  auto* play_cmd = app.add_subcommand("play", "play against the engine in the terminal");
  std::string human = "R";
  play_cmd->add_option("--human", human, "R | B")->required();
  play_cmd->add_option("--depth", depth, "engine search depth")->required()->check(CLI::Range(1, kMaxSearchDepth));
  play_cmd->add_option("--seed", seed, "dice seed");
  play_cmd->add_option("--evaluator", evaluator, "zweistein | schwarz")->capture_default_str();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*build) {
      const auto start = std::chrono::steady_clock::now();
      const Tables t = build_tables();
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      save_tables(out_path, t);
      out << "built " << kTableRows << " rows in " << fixed6(secs) << " s, wrote " << out_path << "\n";
    } else if (*eval) {
      const Board b = parse_board(board_text);
      const Tables t = obtain_tables(tables_path);
      out << fixed6(evaluate_board(b, parse_color(just_moved), parse_evaluator_kind(evaluator), t).score) << "\n";
    } else if (*best) {
      const Board b = parse_board(board_text);
      const Tables t = obtain_tables(tables_path);
      const auto engine = make_evaluator(parse_evaluator_kind(evaluator), t);
      const SearchLimits limits =
          time_opt->count() > 0
              ? SearchLimits::deadline(std::chrono::duration_cast<std::chrono::nanoseconds>(
                    std::chrono::duration<double, std::milli>(time_ms)))
              : SearchLimits::fixed_depth(depth > 0 ? depth : 1);
      const SearchResult r = best_move(b, parse_color(mover), DiceRoll(dice), limits, *engine, {prune});
      out << "move " << format_move(r.best) << "\n"
          << "from " << r.best.from.row << " " << r.best.from.col << "\n"
          << "value " << fixed6(r.value) << "\n"
          << "depth " << r.reached_depth << "\n"
          << "nodes " << r.nodes << "\n";
    } else if (*selfplay) {
      MatchConfig cfg;
      cfg.games = games;
      cfg.seed = seed;
      cfg.agent_a = a_flags.config();
      cfg.agent_b = b_flags.config();
      if (placement == "standard") cfg.placement = Placement::Standard;
      else if (placement == "random") cfg.placement = Placement::SeededRandomSymmetric;
      else throw ConfigError("unknown placement: " + placement);
      if (format != "text" && format != "kv") throw ConfigError("unknown format: " + format);
      cfg.record_moves = log_moves;
      validate(cfg);
      const Tables t = obtain_tables(tables_path);
      const MatchReport r = run_match(cfg, t);
      out << format_report(r, format == "kv", timing);
      if (log_moves) {
        for (const MoveRecord& m : r.moves) {
          out << "move game=" << m.game << " agent=" << (m.agent == 0 ? 'A' : 'B') << " steps=" << m.steps_taken
              << " remaining_ns=" << m.remaining.count() << " budget_ns=" << m.budget.count()
              << " used_ns=" << m.used.count() << " depth=" << m.reached_depth << "\n";
        }
      }
    } else if (*bench) {
      const Tables t = obtain_tables(tables_path);
      const BenchResult r = bench_eval(calls, t, seed == 0 ? 1 : seed);
      char buf[256];
      std::snprintf(buf, sizeof buf, "calls %llu\ntotal %.3f s\nper call %.2f ns\nchecksum %.9e\n",
                    static_cast<unsigned long long>(r.calls), r.total_seconds, r.ns_per_call, r.checksum);
      out << buf;
    } else if (*verify) {
      const Tables t = obtain_tables(tables_path);
      bool all = true;
      for (const CheckResult& c : run_verification(t)) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.detail << ")\n";
        all = all && c.passed;
      }
      return all ? 0 : 1;
    } else if (*play_cmd) {
      return play(parse_color(human), depth, seed, parse_evaluator_kind(evaluator), in, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace zweistein
