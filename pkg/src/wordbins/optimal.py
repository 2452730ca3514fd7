"""Exhaustive minimum-average search over the game tree.

Minimizes total guesses summed over all solutions, breaking ties by smaller
maximum depth and then the alphabetically earliest guess. Practical at toy
scale and for hard/superhard mode; full-dictionary regular-mode runs are
supported but take a very long time.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .feedback import pattern_table
from .heuristics import _universe
from .lexicon import Lexicon, as_lexicon
from .strategy import (
    EvalReport,
    Mode,
    MODES,
    StrategyError,
    StrategyTree,
    TreeNode,
    evaluate,
)


class OptimalError(ValueError):
    """Bad configuration or no strategy within the depth bound."""


@dataclass(frozen=True)
class SearchConfig:
    mode: Mode = "regular"
    max_depth: int = 0  # 0 = unbounded
    cap: int = 0  # cap on guesses tried per node; 0 = exhaustive
    memo: bool = True

    def __post_init__(self) -> None:
        if self.mode not in MODES:
            raise OptimalError(f"unknown mode {self.mode!r}")
        if self.max_depth < 0 or self.cap < 0:
            raise OptimalError("max_depth and cap must be >= 0")


@dataclass(frozen=True)
class OptimalResult:
    tree: StrategyTree
    report: EvalReport
    exact: bool


_INF = float("inf")


class _Search:
    def __init__(self, solutions: Lexicon, guesses: Lexicon, config: SearchConfig):
        self.config = config
        self.table = pattern_table(_universe(guesses.words, solutions.words))
        self.words = self.table.words
        self.sol = np.array([self.table.index[w] for w in solutions], dtype=np.int64)
        self.gue = np.array([self.table.index[w] for w in guesses], dtype=np.int64)
        self.all_green = self.table.all_green
        self.length = solutions.word_length
        self.memo: dict = {}

    # -- mode-legal guesses ------------------------------------------------

    def _hard_mask(self, greens: tuple[int, ...], min_counts: tuple[int, ...]) -> np.ndarray:
        letters = self.table.letters
        counts = self.table.letter_counts
        mask = np.ones(len(self.words), dtype=bool)
        for pos, letter in enumerate(greens):
            if letter >= 0:
                mask &= letters[:, pos] == letter
        for letter, need in enumerate(min_counts):
            if need:
                mask &= counts[:, letter] >= need
        return mask

    def _legal(self, state) -> np.ndarray:
        if self.config.mode == "regular":
            return self.gue
        if self.config.mode == "superhard":
            consistent = state
            return self.gue[consistent[self.gue]]
        greens, min_counts = state
        return self.gue[self._hard_mask(greens, min_counts)[self.gue]]

    def _child_state(self, state, guess_idx: int, code: int):
        if self.config.mode == "regular":
            return None
        if self.config.mode == "superhard":
            return state & (self.table.codes[guess_idx] == code)
        greens, min_counts = state
        letters = self.table.letters[guess_idx]
        digits = []
        c = code
        for _ in range(self.length):
            digits.append(c % 3)
            c //= 3
        digits.reverse()
        new_greens = list(greens)
        new_counts = list(min_counts)
        required = [0] * 26
        for pos, digit in enumerate(digits):
            if digit == 2:
                new_greens[pos] = int(letters[pos])
            if digit >= 1:
                required[letters[pos]] += 1
        for letter in range(26):
            if required[letter] > new_counts[letter]:
                new_counts[letter] = required[letter]
        return tuple(new_greens), tuple(new_counts)

    def _memo_key(self, cand: np.ndarray, state, depth_left: int | None):
        cand_key = cand.tobytes()
        if self.config.mode == "regular":
            state_key = None
        elif self.config.mode == "superhard":
            state_key = state.tobytes()
        else:
            state_key = state
        return (cand_key, state_key, depth_left)

    # -- guess ordering ----------------------------------------------------

    def _ordered_guesses(self, cand: np.ndarray, legal: np.ndarray) -> np.ndarray:
        """Promising-first ordering (sum of squared bin sizes); result is
        order-independent because ties are broken by explicit keys, but a
        good ordering makes pruning effective."""
        nc = self.table.n_codes
        codes = self.table.codes[np.ix_(legal, cand)].astype(np.int64)
        offsets = np.arange(len(legal), dtype=np.int64)[:, None] * nc
        sizes = np.bincount((codes + offsets).ravel(), minlength=len(legal) * nc)
        sizes = sizes.reshape(len(legal), nc)
        sum_sq = (sizes ** 2).sum(axis=1)
        order = np.lexsort((np.arange(len(legal)), sum_sq))
        ordered = legal[order]
        if self.config.cap:
            ordered = ordered[: self.config.cap]
        return ordered

    # -- search ------------------------------------------------------------

    def search(self, cand: np.ndarray, state, depth_left: int | None):
        """Best (total, max_depth, tree) for a candidate set, or None if no
        strategy fits in depth_left."""
        if depth_left is not None and depth_left <= 0:
            return None
        if len(cand) == 1:
            return (1, 1, TreeNode(guess=self.words[int(cand[0])]))
        key = None
        if self.config.memo:
            key = self._memo_key(cand, state, depth_left)
            hit = self.memo.get(key)
            if hit is not None:
                return hit

        legal = self._legal(state)
        if len(legal) == 0:
            raise StrategyError("mode-legal guess set is empty")
        best = None
        cand_set_size = len(cand)
        for guess_idx in self._ordered_guesses(cand, legal):
            guess_idx = int(guess_idx)
            codes = self.table.codes[guess_idx, cand]
            groups = {}
            for code in np.unique(codes):
                code = int(code)
                if code == self.all_green:
                    continue
                groups[code] = cand[codes == code]
            if len(groups) == 1 and next(iter(groups.values())).size == cand_set_size:
                continue  # no information gained; avoids infinite recursion
            total = cand_set_size
            max_depth = 1
            # cheap admissible bound: a bin of m words costs at least 2m - 1
            bound_rest = sum(2 * len(g) - 1 for g in groups.values())
            feasible = True
            children: dict[int, TreeNode] = {}
            for code, group in sorted(groups.items(), key=lambda kv: len(kv[1])):
                bound_rest -= 2 * len(group) - 1
                if best is not None and total + (2 * len(group) - 1) + bound_rest > best[0]:
                    feasible = False
                    break
                sub = self.search(
                    group,
                    self._child_state(state, guess_idx, code),
                    None if depth_left is None else depth_left - 1,
                )
                if sub is None:
                    feasible = False
                    break
                total += sub[0]
                max_depth = max(max_depth, 1 + sub[1])
                children[code] = sub[2]
                if best is not None and total + bound_rest > best[0]:
                    feasible = False
                    break
            if not feasible:
                continue
            if depth_left is not None and max_depth > depth_left:
                continue
            candidate = (total, max_depth, TreeNode(guess=self.words[guess_idx], children=children))
            if best is None or self._better(candidate, best):
                best = candidate
        if self.config.memo and key is not None and best is not None:
            self.memo[key] = best
        return best

    @staticmethod
    def _better(a, b) -> bool:
        return (a[0], a[1], a[2].guess) < (b[0], b[1], b[2].guess)


def lower_bound(
    candidates: Lexicon | Iterable[str],
    guesses: Lexicon | Iterable[str] | None = None,
) -> int:
    """Admissible lower bound on total guesses needed for a candidate set.

    One word can be solved on the first guess; at most B more (where B is
    the best achievable number of non-winning response bins) on the second;
    the rest need at least three guesses each.
    """
    sol = as_lexicon(candidates)
    gue = sol if guesses is None else as_lexicon(guesses)
    n = len(sol)
    if n == 1:
        return 1
    table = pattern_table(_universe(gue.words, sol.words))
    cand = np.array([table.index[w] for w in sol], dtype=np.int64)
    legal = np.array([table.index[w] for w in gue], dtype=np.int64)
    nc = table.n_codes
    codes = table.codes[np.ix_(legal, cand)].astype(np.int64)
    offsets = np.arange(len(legal), dtype=np.int64)[:, None] * nc
    sizes = np.bincount((codes + offsets).ravel(), minlength=len(legal) * nc)
    sizes = sizes.reshape(len(legal), nc)
    non_green = (sizes > 0).sum(axis=1) - (sizes[:, table.all_green] > 0)
    best_bins = int(non_green.max())
    solved_second = min(n - 1, best_bins)
    return 1 + 2 * solved_second + 3 * max(0, n - 1 - solved_second)


def optimal_tree(
    solutions: Lexicon | Iterable[str],
    guesses: Lexicon | Iterable[str] | None = None,
    config: SearchConfig = SearchConfig(),
) -> OptimalResult:
    """Exhaustively search for the minimum-total-guesses strategy tree."""
    sol = as_lexicon(solutions)
    gue = sol if guesses is None else as_lexicon(guesses)
    if not len(sol) or not len(gue):
        raise OptimalError("solutions and guesses must be nonempty")
    search = _Search(sol, gue, config)
    if config.mode == "regular":
        state = None
    elif config.mode == "superhard":
        state = np.ones(len(search.words), dtype=bool)
    else:
        state = (tuple([-1] * sol.word_length), tuple([0] * 26))
    depth_left = config.max_depth if config.max_depth else None
    best = search.search(search.sol, state, depth_left)
    if best is None:
        raise OptimalError(
            f"no strategy solves every word within {config.max_depth} guesses"
        )
    tree = StrategyTree(best[2])
    report = evaluate(tree, sol)
    return OptimalResult(tree=tree, report=report, exact=config.cap == 0)
