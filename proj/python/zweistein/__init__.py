"""EinStein wurfelt nicht! engine with the Zweistein evaluation tables."""

from ._core import (
    BenchResult,
    GameOver,
    IllegalMove,
    MatchReport,
    Move,
    ParseError,
    SearchResult,
    TableIoError,
    Tables,
    apply_move,
    bench,
    best_move,
    build_tables,
    evaluate,
    exact_win_prob,
    format_board,
    legal_moves,
    load_tables,
    selfplay,
    standard_board,
    winner,
)

__all__ = [
    "BenchResult",
    "GameOver",
    "IllegalMove",
    "MatchReport",
    "Move",
    "ParseError",
    "SearchResult",
    "TableIoError",
    "Tables",
    "apply_move",
    "bench",
    "best_move",
    "build_tables",
    "evaluate",
    "exact_win_prob",
    "format_board",
    "legal_moves",
    "load_tables",
    "selfplay",
    "standard_board",
    "winner",
]
