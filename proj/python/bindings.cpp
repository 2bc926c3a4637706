#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <optional>
#include <string>

#include "zweistein/board.hpp"
#include "zweistein/evaluator.hpp"
#include "zweistein/match.hpp"
#include "zweistein/oracle.hpp"
#include "zweistein/search.hpp"
#include "zweistein/table.hpp"

namespace py = pybind11;
using namespace zweistein;

namespace {

std::vector<double> row_of(std::span<const double, kDtcBuckets> row) { return {row.begin(), row.end()}; }

TableIndex checked_index(int idx) { return TableIndex(idx); }

std::pair<int, int> to_pair(Square s) { return {s.row, s.col}; }

std::chrono::nanoseconds seconds_to_ns(double s) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::duration<double>(s));
}

AgentConfig agent(const std::string& evaluator, std::optional<int> depth, std::optional<double> time_s, bool prune) {
  AgentConfig a;
  a.evaluator = parse_evaluator_kind(evaluator);
  if (time_s) a.total_time = seconds_to_ns(*time_s);
  else a.depth = depth.value_or(1);
  if (depth && time_s) throw ConfigError("give a depth or a time, not both");
  a.prune = prune;
  return a;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "EinStein wurfelt nicht! engine with the Zweistein evaluation tables";

  py::register_exception<GameOver>(m, "GameOver", PyExc_ValueError);
  py::register_exception<IllegalMove>(m, "IllegalMove", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<TableIoError>(m, "TableIoError", PyExc_IOError);

  py::class_<Tables>(m, "Tables")
      .def("pdf", [](const Tables& t, int idx) { return row_of(t.pdf.row(checked_index(idx))); }, py::arg("index"))
      .def("cdf", [](const Tables& t, int idx) { return row_of(t.cdf.row(checked_index(idx))); }, py::arg("index"))
      .def("expected_dtc", [](const Tables& t, int idx) { return expected_dtc(t.pdf.row(checked_index(idx))); },
           py::arg("index"))
      .def("save", [](const Tables& t, const std::filesystem::path& p) { save_tables(p, t); }, py::arg("path"))
      .def("__eq__", [](const Tables& a, const Tables& b) { return a == b; })
      .def_property_readonly_static("rows", [](py::object) { return kTableRows; });

  m.def("build_tables", &build_tables, "Build the pdf and cdf tables in memory.");
  m.def("load_tables", [](const std::filesystem::path& p) { return load_tables(p); }, py::arg("path"));

  py::class_<Move>(m, "Move")
      .def(py::init([](int label, std::pair<int, int> from, std::pair<int, int> to) {
             return Move{label, {from.first, from.second}, {to.first, to.second}};
           }),
           py::arg("label"), py::arg("source"), py::arg("target"))
      .def_property_readonly("label", [](const Move& mv) { return mv.label; })
      .def_property_readonly("source", [](const Move& mv) { return to_pair(mv.from); })
      .def_property_readonly("target", [](const Move& mv) { return to_pair(mv.to); })
      .def("__eq__", [](const Move& a, const Move& b) { return a == b; })
      .def("__repr__", [](const Move& mv) { return "Move(" + format_move(mv) + ")"; });

  m.def("standard_board", [] { return format_board(Board::standard()); });
  m.def("format_board", [](const std::string& text) { return format_board(parse_board(text)); }, py::arg("board"));
  m.def(
      "legal_moves",
      [](const std::string& board, const std::string& mover, int dice) {
        const MoveList moves = legal_moves(parse_board(board), parse_color(mover), DiceRoll(dice));
        return std::vector<Move>(moves.begin(), moves.end());
      },
      py::arg("board"), py::arg("mover"), py::arg("dice"));
  m.def(
      "apply_move",
      [](const std::string& board, const std::string& mover, const Move& mv) {
        return format_board(apply_move(parse_board(board), parse_color(mover), mv));
      },
      py::arg("board"), py::arg("mover"), py::arg("move"));
  m.def(
      "winner",
      [](const std::string& board) -> std::optional<std::string> {
        const auto w = status(parse_board(board)).winner();
        if (!w) return std::nullopt;
        return std::string(1, color_char(*w));
      },
      py::arg("board"));

  m.def(
      "evaluate",
      [](const std::string& board, const std::string& just_moved, const Tables& tables, const std::string& evaluator) {
        return evaluate_board(parse_board(board), parse_color(just_moved), parse_evaluator_kind(evaluator), tables)
            .score;
      },
      py::arg("board"), py::arg("just_moved"), py::arg("tables"), py::arg("evaluator") = "zweistein");

  py::class_<SearchResult>(m, "SearchResult")
      .def_property_readonly("move", [](const SearchResult& r) { return r.best; })
      .def_readonly("value", &SearchResult::value)
      .def_readonly("depth", &SearchResult::reached_depth)
      .def_readonly("nodes", &SearchResult::nodes);

  m.def(
      "best_move",
      [](const std::string& board, const std::string& mover, int dice, const Tables& tables, std::optional<int> depth,
         std::optional<double> time_ms, const std::string& evaluator, bool prune) {
        if (depth && time_ms) throw std::invalid_argument("give a depth or a time, not both");
        const SearchLimits limits = time_ms ? SearchLimits::deadline(seconds_to_ns(*time_ms / 1e3))
                                            : SearchLimits::fixed_depth(depth.value_or(1));
        const auto engine = make_evaluator(parse_evaluator_kind(evaluator), tables);
        py::gil_scoped_release release;
        return best_move(parse_board(board), parse_color(mover), DiceRoll(dice), limits, *engine, {prune});
      },
      py::arg("board"), py::arg("mover"), py::arg("dice"), py::arg("tables"), py::arg("depth") = py::none(),
      py::arg("time_ms") = py::none(), py::arg("evaluator") = "zweistein", py::arg("prune") = false);

  m.def(
      "exact_win_prob",
      [](const std::string& board, const std::string& to_move) {
        return exact_win_prob(parse_board(board), parse_color(to_move)).win_prob;
      },
      py::arg("board"), py::arg("to_move"), "Win probability for the side to move under optimal play.");

  py::class_<MatchReport>(m, "MatchReport")
      .def_readonly("games", &MatchReport::games)
      .def_readonly("wins_a", &MatchReport::wins_a)
      .def_readonly("wins_b", &MatchReport::wins_b)
      .def_readonly("red_wins", &MatchReport::red_wins)
      .def_readonly("first_mover_wins", &MatchReport::first_mover_wins)
      .def_readonly("win_rate_a", &MatchReport::win_rate_a)
      .def_readonly("ci95_low", &MatchReport::ci95_low)
      .def_readonly("ci95_high", &MatchReport::ci95_high)
      .def_readonly("mean_game_length", &MatchReport::mean_game_length)
      .def_readonly("seed", &MatchReport::seed)
      .def("format", [](const MatchReport& r, bool key_value) { return format_report(r, key_value, false); },
           py::arg("key_value") = false);

  m.def(
      "selfplay",
      [](const Tables& tables, int games, std::uint64_t seed, std::optional<int> a_depth, std::optional<int> b_depth,
         std::optional<double> a_time, std::optional<double> b_time, const std::string& a_evaluator,
         const std::string& b_evaluator, bool prune, const std::string& placement) {
        MatchConfig cfg;
        cfg.games = games;
        cfg.seed = seed;
        cfg.agent_a = agent(a_evaluator, a_depth, a_time, prune);
        cfg.agent_b = agent(b_evaluator, b_depth, b_time, prune);
        if (placement == "standard") cfg.placement = Placement::Standard;
        else if (placement == "random") cfg.placement = Placement::SeededRandomSymmetric;
        else throw ConfigError("unknown placement: " + placement);
        py::gil_scoped_release release;
        return run_match(cfg, tables);
      },
      py::arg("tables"), py::arg("games"), py::arg("seed") = 0, py::arg("a_depth") = py::none(),
      py::arg("b_depth") = py::none(), py::arg("a_time") = py::none(), py::arg("b_time") = py::none(),
      py::arg("a_evaluator") = "zweistein", py::arg("b_evaluator") = "zweistein", py::arg("prune") = false,
      py::arg("placement") = "standard");

  py::class_<BenchResult>(m, "BenchResult")
      .def_readonly("calls", &BenchResult::calls)
      .def_readonly("total_seconds", &BenchResult::total_seconds)
      .def_readonly("ns_per_call", &BenchResult::ns_per_call)
      .def_readonly("checksum", &BenchResult::checksum);

  m.def(
      "bench",
      [](const Tables& tables, std::uint64_t calls, std::uint64_t seed) {
        py::gil_scoped_release release;
        return bench_eval(calls, tables, seed);
      },
      py::arg("tables"), py::arg("calls"), py::arg("seed") = 1);
}
