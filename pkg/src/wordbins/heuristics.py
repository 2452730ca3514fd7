"""Bin-distribution heuristics and greedy guess selection.

All heuristics are minimized: a lower score marks a better guess. Selection
over a guess list follows a fixed chain — primary score, then preference for
guesses that could still be the secret, then the optional tie-break
heuristic, then earliest list position — with one shortcut: a guess whose
distribution has all bins of size 1 ends the scan and wins outright,
still-possible guesses being scanned first.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .binning import BinDistribution
from .feedback import Pattern, PatternTable, pattern_table, score

HEURISTIC_IDS = (
    "negnumbins",
    "negentropy",
    "expbinsize",
    "linfinity",
    "negnumsingletons",
    "maxsimilarity",
    "maxbinsize",
    "maxonediffs",
)

# Exponent of the bin-size norm each size-based heuristic corresponds to.
NORM_EXPONENT = {
    "negnumbins": 0,
    "negentropy": 1,
    "expbinsize": 2,
    "linfinity": math.inf,
    "maxbinsize": math.inf,
    "negnumsingletons": -math.inf,
    "maxsimilarity": None,
    "maxonediffs": None,
}


class HeuristicError(ValueError):
    """Unknown heuristic id or empty selection input."""


@dataclass(frozen=True)
class HeuristicSpec:
    """Primary heuristic plus an optional tie-break heuristic."""

    primary: str
    tiebreak: str | None = None

    def __post_init__(self) -> None:
        if self.primary not in HEURISTIC_IDS:
            raise HeuristicError(f"unknown heuristic {self.primary!r}")
        if self.tiebreak is not None and self.tiebreak not in HEURISTIC_IDS:
            raise HeuristicError(f"unknown tie-break heuristic {self.tiebreak!r}")

    @property
    def name(self) -> str:
        return self.primary if self.tiebreak is None else f"{self.primary}-{self.tiebreak}"


# ---------------------------------------------------------------------------
# Scalar scorers over a BinDistribution
# ---------------------------------------------------------------------------

def score_negnumbins(dist: BinDistribution) -> int:
    return -dist.num_bins


def score_negentropy(dist: BinDistribution) -> float:
    """Sum of (n/N) ln(n/N); zero for a single bin, more negative is better.

    Summed in ascending bin-size order so equal size multisets produce
    bit-identical scores.
    """
    sizes = np.sort(np.array(dist.sizes, dtype=np.int64))
    n = dist.total
    return float((sizes * np.log(sizes)).sum() / n - math.log(n))


def score_expbinsize(dist: BinDistribution) -> Fraction:
    """Expected size of the bin holding the secret: sum(n_i^2)/N, exact."""
    return Fraction(sum(n * n for n in dist.sizes), dist.total)


def score_linfinity(dist: BinDistribution) -> tuple[tuple[int, int], ...]:
    """(size, count) pairs sorted by size descending.

    Compared lexicographically: a smaller size at each level wins, then
    fewer bins of that size. Tuple comparison implements this directly.
    """
    counts: dict[int, int] = {}
    for n in dist.sizes:
        counts[n] = counts.get(n, 0) + 1
    return tuple((n, counts[n]) for n in sorted(counts, reverse=True))


def score_negnumsingletons(dist: BinDistribution) -> int:
    return -sum(1 for n in dist.sizes if n == 1)


def score_maxbinsize(dist: BinDistribution) -> int:
    return dist.max_size


def bin_similarity(members: Sequence[str]) -> float:
    """Letter-position concentration of one bin: sum of c*ln(c) over the
    (letter, position) cells filled by the bin's words.

    Zero when no cell repeats (all words pairwise disjoint per position);
    grows both with repeated letters and with bin size.
    """
    counts: dict[tuple[int, str], int] = {}
    for word in members:
        for pos, ch in enumerate(word):
            key = (pos, ch)
            counts[key] = counts.get(key, 0) + 1
    cells = np.sort(np.array(list(counts.values()), dtype=np.int64))
    return float((cells * np.log(cells)).sum())


def score_maxsimilarity(dist: BinDistribution) -> float:
    return max(bin_similarity(members) for members in dist.bins.values())


def one_diff_pairs(words: Sequence[str]) -> list[tuple[str, str]]:
    """Unordered word pairs differing in exactly one position."""
    groups: dict[tuple[int, str], list[str]] = {}
    for w in words:
        for p in range(len(w)):
            groups.setdefault((p, w[:p] + w[p + 1:]), []).append(w)
    pairs = []
    for members in groups.values():
        for i in range(len(members)):
            for j in range(i + 1, len(members)):
                pairs.append((members[i], members[j]))
    return pairs


def score_maxonediffs(dist: BinDistribution) -> int:
    return max(len(one_diff_pairs(members)) for members in dist.bins.values())


SCORERS = {
    "negnumbins": score_negnumbins,
    "negentropy": score_negentropy,
    "expbinsize": score_expbinsize,
    "linfinity": score_linfinity,
    "negnumsingletons": score_negnumsingletons,
    "maxsimilarity": score_maxsimilarity,
    "maxbinsize": score_maxbinsize,
    "maxonediffs": score_maxonediffs,
}


def score_distribution(heuristic: str, dist: BinDistribution):
    try:
        scorer = SCORERS[heuristic]
    except KeyError:
        raise HeuristicError(f"unknown heuristic {heuristic!r}") from None
    return scorer(dist)


# ---------------------------------------------------------------------------
# Vectorized engine used for whole-lexicon runs
# ---------------------------------------------------------------------------

class HeuristicEngine:
    """Per-node guess selection over a PatternTable, vectorized across guesses.

    Scores whole guess lists at once from a (guesses x codes) bin-size
    matrix; selection reproduces the sequential scan semantics exactly.
    """

    def __init__(self, table: PatternTable):
        self.table = table
        n = len(table.words)
        k = np.arange(5 * n + 1, dtype=np.float64)
        with np.errstate(divide="ignore", invalid="ignore"):
            self.nlogn = np.where(k > 0, k * np.log(np.maximum(k, 1)), 0.0)
        self.cells = (
            np.arange(table.word_length, dtype=np.int32) * 26
            + table.letters.astype(np.int32)
        )
        self._pairs: tuple[np.ndarray, np.ndarray] | None = None

    @property
    def pairs(self) -> tuple[np.ndarray, np.ndarray]:
        if self._pairs is None:
            idx = self.table.index
            pa, pb = [], []
            for a, b in one_diff_pairs(self.table.words):
                pa.append(idx[a])
                pb.append(idx[b])
            self._pairs = (np.array(pa, dtype=np.int64), np.array(pb, dtype=np.int64))
        return self._pairs

    def bin_size_matrix(self, legal: np.ndarray, cand: np.ndarray) -> np.ndarray:
        """(len(legal), n_codes) matrix of bin sizes."""
        nc = self.table.n_codes
        codes = self.table.codes[np.ix_(legal, cand)].astype(np.int64)
        offsets = np.arange(len(legal), dtype=np.int64)[:, None] * nc
        flat = np.bincount((codes + offsets).ravel(), minlength=len(legal) * nc)
        return flat.reshape(len(legal), nc)

    def _primary_scores(self, heuristic: str, legal: np.ndarray,
                        cand: np.ndarray, sizes: np.ndarray) -> np.ndarray:
        nc = self.table.n_codes
        if heuristic == "negnumbins":
            return -(sizes > 0).sum(axis=1)
        if heuristic == "negentropy":
            return self.nlogn[np.sort(sizes, axis=1)].sum(axis=1)
        if heuristic == "expbinsize":
            return (sizes.astype(np.int64) ** 2).sum(axis=1)
        if heuristic == "maxbinsize":
            return sizes.max(axis=1)
        if heuristic == "negnumsingletons":
            return -(sizes == 1).sum(axis=1)
        if heuristic == "maxonediffs":
            member = np.zeros(len(self.table.words), dtype=bool)
            member[cand] = True
            pa, pb = self.pairs
            keep = member[pa] & member[pb]
            if not keep.any():
                return np.zeros(len(legal), dtype=np.int64)
            ca = self.table.codes[np.ix_(legal, pa[keep])].astype(np.int64)
            cb = self.table.codes[np.ix_(legal, pb[keep])].astype(np.int64)
            offsets = np.arange(len(legal), dtype=np.int64)[:, None] * nc
            flat = np.where(ca == cb, ca + offsets, len(legal) * nc)
            counts = np.bincount(flat.ravel(), minlength=len(legal) * nc + 1)
            return counts[:-1].reshape(len(legal), nc).max(axis=1)
        if heuristic == "maxsimilarity":
            ncells = 26 * self.table.word_length
            cand_cells = self.cells[cand]
            out = np.empty(len(legal))
            for row, g in enumerate(legal):
                codes = self.table.codes[g, cand].astype(np.int64)
                cc = np.bincount(
                    (codes[:, None] * ncells + cand_cells).ravel(),
                    minlength=nc * ncells,
                )
                out[row] = self.nlogn[cc].reshape(nc, ncells).sum(axis=1).max()
            return out
        raise HeuristicError(f"unknown heuristic {heuristic!r}")

    def _linfinity_ties(self, sizes: np.ndarray, rows: np.ndarray) -> np.ndarray:
        desc = -np.sort(-sizes[rows], axis=1)
        width = int((desc > 0).sum(axis=1).max())
        desc = desc[:, :width]
        order = np.lexsort(desc.T[::-1])
        best = desc[order[0]]
        return rows[np.flatnonzero((desc == best).all(axis=1))]

    def choose(
        self,
        cand: np.ndarray,
        legal: np.ndarray,
        preferred: np.ndarray,
        spec: HeuristicSpec,
    ) -> int:
        """Pick one guess (a table index) from ``legal`` for candidates ``cand``.

        ``preferred`` is a bool mask over the table universe marking guesses
        that could still be the secret; they are conceptually scanned first,
        so the first preferred all-singleton guess wins outright, then the
        first all-singleton guess overall, then the argmin chain.
        """
        sizes = self.bin_size_matrix(legal, cand)
        all_singleton = sizes.max(axis=1) == 1
        legal_preferred = preferred[legal]
        stoppers = all_singleton & legal_preferred
        if stoppers.any():
            return int(legal[int(np.argmax(stoppers))])
        if all_singleton.any():
            return int(legal[int(np.argmax(all_singleton))])

        if spec.primary == "linfinity":
            ties = self._linfinity_ties(sizes, np.arange(len(legal)))
        else:
            primary = self._primary_scores(spec.primary, legal, cand, sizes)
            ties = np.flatnonzero(primary == primary.min())
        better = ties[legal_preferred[ties]]
        if better.size:
            ties = better
        if spec.tiebreak is not None and ties.size > 1:
            if spec.tiebreak == "linfinity":
                ties = self._linfinity_ties(sizes, ties)
            else:
                secondary = self._primary_scores(
                    spec.tiebreak, legal[ties], cand, sizes[ties]
                )
                ties = ties[secondary == secondary.min()]
        return int(legal[ties[0]])


@lru_cache(maxsize=8)
def engine_for(table: PatternTable) -> HeuristicEngine:
    return HeuristicEngine(table)


def _universe(*word_groups: Iterable[str]) -> tuple[str, ...]:
    seen: dict[str, None] = {}
    for group in word_groups:
        for w in group:
            seen.setdefault(w)
    return tuple(seen)


def choose_guess(
    candidates: Sequence[str],
    allowed_guesses: Sequence[str],
    spec: HeuristicSpec,
    constraints: "Sequence[tuple[str, Pattern]] | None" = None,
    *,
    table: PatternTable | None = None,
) -> str:
    """Select the next guess from ``allowed_guesses`` against ``candidates``.

    ``constraints`` is the game history as (guess, Pattern) pairs; it only
    feeds the still-possible preference (candidate membership plus history
    consistency), not legality — callers pass an already mode-filtered
    guess list.
    """
    if not candidates:
        raise HeuristicError("empty candidate set")
    if not allowed_guesses:
        raise HeuristicError("empty guess list")
    history = list(constraints) if constraints else []
    if table is None:
        table = pattern_table(
            _universe(allowed_guesses, candidates, (g for g, _ in history))
        )
    engine = engine_for(table)
    cand = np.array([table.index[w] for w in candidates], dtype=np.int64)
    legal = np.array([table.index[w] for w in allowed_guesses], dtype=np.int64)
    preferred = np.zeros(len(table.words), dtype=bool)
    preferred[cand] = True
    for hist_guess, pattern in history:
        preferred &= table.codes[table.index[hist_guess]] == pattern.code
    return table.words[engine.choose(cand, legal, preferred, spec)]


def _linfinity_tuples(sizes: np.ndarray) -> list[tuple[tuple[int, int], ...]]:
    """Per-row (size, count) descending pair tuples from a bin-size matrix."""
    out = []
    for row in sizes:
        counts: dict[int, int] = {}
        for n in row[row > 0]:
            counts[int(n)] = counts.get(int(n), 0) + 1
        out.append(tuple((n, counts[n]) for n in sorted(counts, reverse=True)))
    return out


def rank_guesses(
    candidates: Sequence[str],
    allowed_guesses: Sequence[str],
    spec: HeuristicSpec,
    constraints: "Sequence[tuple[str, Pattern]] | None" = None,
    top_k: int | None = None,
    *,
    table: PatternTable | None = None,
) -> list[dict]:
    """Full ranking of guesses by the selection key, with score detail.

    Unlike ``choose_guess`` there is no all-singleton scan shortcut: every
    guess is scored so the ranking is complete and stable.
    """
    if not candidates:
        raise HeuristicError("empty candidate set")
    if not allowed_guesses:
        raise HeuristicError("empty guess list")
    history = list(constraints) if constraints else []
    if table is None:
        table = pattern_table(
            _universe(allowed_guesses, candidates, (g for g, _ in history))
        )
    engine = engine_for(table)
    cand = np.array([table.index[w] for w in candidates], dtype=np.int64)
    legal = np.array([table.index[w] for w in allowed_guesses], dtype=np.int64)
    preferred = np.zeros(len(table.words), dtype=bool)
    preferred[cand] = True
    for hist_guess, pattern in history:
        preferred &= table.codes[table.index[hist_guess]] == pattern.code
    legal_consistent = preferred[legal]

    sizes = engine.bin_size_matrix(legal, cand)
    total = len(candidates)
    num_bins = (sizes > 0).sum(axis=1)
    max_bin = sizes.max(axis=1)
    sum_sq = (sizes.astype(np.int64) ** 2).sum(axis=1)
    raw_nlogn = engine.nlogn[np.sort(sizes, axis=1)].sum(axis=1)
    entropy = math.log(total) - raw_nlogn / total
    expected = sum_sq / total

    def values(heuristic: str) -> Sequence:
        if heuristic == "negnumbins":
            return (-num_bins).tolist()
        if heuristic == "negentropy":
            return (raw_nlogn / total - math.log(total)).tolist()
        if heuristic == "expbinsize":
            return expected.tolist()
        if heuristic == "maxbinsize":
            return max_bin.tolist()
        if heuristic == "negnumsingletons":
            return (-(sizes == 1).sum(axis=1)).tolist()
        if heuristic == "linfinity":
            return _linfinity_tuples(sizes)
        return engine._primary_scores(heuristic, legal, cand, sizes).tolist()

    primary = values(spec.primary)
    secondary = values(spec.tiebreak) if spec.tiebreak else None

    rows = []
    for pos, word in enumerate(allowed_guesses):
        rows.append(
            {
                "word": word,
                "score": primary[pos],
                "bins": int(num_bins[pos]),
                "max_bin_size": int(max_bin[pos]),
                "expected_bin_size": float(expected[pos]),
                "entropy": float(entropy[pos]),
                "consistent": bool(legal_consistent[pos]),
                "_key": (
                    primary[pos],
                    not legal_consistent[pos],
                    secondary[pos] if secondary is not None else 0,
                    pos,
                ),
            }
        )
    rows.sort(key=lambda r: r["_key"])
    for row in rows:
        del row["_key"]
    if top_k is not None:
        rows = rows[:top_k]
    return rows
