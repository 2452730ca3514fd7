"""Bin-partition heuristics and strategy synthesis for feedback word games."""

from .binning import BinDistribution, all_singletons, partition
from .feedback import (
    GRAY,
    GREEN,
    YELLOW,
    Pattern,
    PatternTable,
    decode_pattern,
    encode_pattern,
    parse_pattern,
    pattern_table,
    score,
)
from .heuristics import (
    HEURISTIC_IDS,
    HeuristicSpec,
    choose_guess,
    rank_guesses,
    score_distribution,
)
from .history import UsedLedger, daily_strategy, load_ledger, remaining_solutions
from .lexicon import Lexicon, LexiconError, load_lexicon
from .optimal import OptimalResult, SearchConfig, lower_bound, optimal_tree
from .strategy import (
    MODES,
    Constraints,
    EvalReport,
    StrategyTree,
    build_tree,
    evaluate,
    legal_guesses,
    load_tree,
    serialize_tree,
)

__all__ = [
    "BinDistribution",
    "Constraints",
    "EvalReport",
    "GRAY",
    "GREEN",
    "HEURISTIC_IDS",
    "HeuristicSpec",
    "Lexicon",
    "LexiconError",
    "MODES",
    "OptimalResult",
    "Pattern",
    "PatternTable",
    "SearchConfig",
    "StrategyTree",
    "UsedLedger",
    "YELLOW",
    "all_singletons",
    "build_tree",
    "choose_guess",
    "daily_strategy",
    "decode_pattern",
    "encode_pattern",
    "evaluate",
    "legal_guesses",
    "load_ledger",
    "load_lexicon",
    "load_tree",
    "lower_bound",
    "optimal_tree",
    "parse_pattern",
    "partition",
    "pattern_table",
    "rank_guesses",
    "remaining_solutions",
    "score",
    "score_distribution",
    "serialize_tree",
]
