"""Greedy strategy trees: construction, evaluation, and serialization.

A tree is a deterministic playbook: one guess per node, one child per
possible non-winning pattern. Construction is greedy — each node's guess
comes from the heuristic selection chain over the mode-legal guess list —
except that a node with at most two candidates left just guesses the
earliest remaining candidate.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Literal, Sequence

import numpy as np

from .feedback import (
    Pattern,
    PatternTable,
    all_green_code,
    parse_pattern,
    pattern_table,
    score,
)
from .heuristics import HeuristicSpec, engine_for, _universe
from .lexicon import Lexicon, as_lexicon

Mode = Literal["regular", "hard", "superhard"]
MODES: tuple[Mode, ...] = ("regular", "hard", "superhard")


class StrategyError(ValueError):
    """Invalid mode, malformed tree document, or unsolvable input."""


@dataclass(frozen=True)
class Constraints:
    """Accumulated game history: ordered (guess, pattern) steps."""

    steps: tuple[tuple[str, Pattern], ...] = ()

    def extend(self, guess: str, pattern: Pattern) -> "Constraints":
        return Constraints(self.steps + ((guess, pattern),))

    def consistent(self, word: str) -> bool:
        """Could ``word`` still be the secret?"""
        return all(score(g, word).code == p.code for g, p in self.steps)

    def hard_legal(self, word: str) -> bool:
        """Hard-mode legality: greens stay in place, every green/yellow-marked
        letter occurrence is included (multiplicity-aware). Gray letters stay
        allowed."""
        for guess, pattern in self.steps:
            required: dict[str, int] = {}
            for i, color in enumerate(pattern.colors):
                if color == 2 and word[i] != guess[i]:
                    return False
                if color >= 1:
                    required[guess[i]] = required.get(guess[i], 0) + 1
            for letter, count in required.items():
                if word.count(letter) < count:
                    return False
        return True


def legal_guesses(
    guesses: Sequence[str], mode: Mode, constraints: Constraints | None = None
) -> tuple[str, ...]:
    """Mode-legal subset of a guess list, order preserved."""
    if mode not in MODES:
        raise StrategyError(f"unknown mode {mode!r}")
    if constraints is None or not constraints.steps:
        return tuple(guesses)
    if mode == "regular":
        return tuple(guesses)
    if mode == "hard":
        return tuple(w for w in guesses if constraints.hard_legal(w))
    return tuple(w for w in guesses if constraints.consistent(w))


@dataclass
class TreeNode:
    guess: str
    children: dict[int, "TreeNode"] = field(default_factory=dict)


@dataclass
class StrategyTree:
    root: TreeNode

    def max_depth(self) -> int:
        def depth(node: TreeNode) -> int:
            if not node.children:
                return 1
            return 1 + max(depth(c) for c in node.children.values())

        return depth(self.root)

    def node_count(self) -> int:
        def count(node: TreeNode) -> int:
            return 1 + sum(count(c) for c in node.children.values())

        return count(self.root)


@dataclass(frozen=True)
class EvalReport:
    """Guess-count statistics of a tree over a solution list."""

    average: Fraction
    max_guesses: int
    histogram: dict[int, int]

    @property
    def total_solutions(self) -> int:
        return sum(self.histogram.values())

    @property
    def total_guesses(self) -> int:
        return sum(k * v for k, v in self.histogram.items())

    def percent_within(self, limit: int = 6) -> float:
        solved = sum(v for k, v in self.histogram.items() if k <= limit)
        return 100.0 * solved / self.total_solutions

    @property
    def percent_in_six(self) -> float:
        return self.percent_within(6)


class _Builder:
    """Shared state for one build: pattern table, index maps, mode masks."""

    def __init__(self, solutions: Lexicon, guesses: Lexicon, spec: HeuristicSpec, mode: Mode):
        if mode not in MODES:
            raise StrategyError(f"unknown mode {mode!r}")
        if solutions.word_length != guesses.word_length:
            raise StrategyError("solutions and guesses must share a word length")
        self.spec = spec
        self.mode = mode
        self.table = pattern_table(_universe(guesses.words, solutions.words))
        self.engine = engine_for(self.table)
        self.sol = np.array([self.table.index[w] for w in solutions], dtype=np.int64)
        self.gue = np.array([self.table.index[w] for w in guesses], dtype=np.int64)
        self.all_green = self.table.all_green
        self.length = solutions.word_length

    def hard_mask(self, greens: tuple[int, ...], min_counts: np.ndarray) -> np.ndarray:
        letters = self.table.letters
        counts = self.table.letter_counts
        mask = np.ones(len(self.table.words), dtype=bool)
        for pos, letter in enumerate(greens):
            if letter >= 0:
                mask &= letters[:, pos] == letter
        for letter in np.flatnonzero(min_counts):
            mask &= counts[:, letter] >= min_counts[letter]
        return mask

    def build(self) -> TreeNode:
        # mask of guesses still consistent with the path so far; the still-
        # possible preference additionally requires candidate membership
        consistent = np.ones(len(self.table.words), dtype=bool)
        greens = tuple([-1] * self.length)
        min_counts = np.zeros(26, dtype=np.int16)
        return self._node(self.sol, consistent, greens, min_counts)

    def _node(
        self,
        cand: np.ndarray,
        consistent: np.ndarray,
        greens: tuple[int, ...],
        min_counts: np.ndarray,
    ) -> TreeNode:
        if len(cand) <= 2:
            guess_idx = int(cand[0])
        else:
            if self.mode == "regular":
                legal = self.gue
            elif self.mode == "hard":
                legal = self.gue[self.hard_mask(greens, min_counts)[self.gue]]
            else:
                legal = self.gue[consistent[self.gue]]
            if len(legal) == 0:
                raise StrategyError("mode-legal guess set is empty")
            preferred = np.zeros(len(self.table.words), dtype=bool)
            preferred[cand] = True
            guess_idx = self.engine.choose(cand, legal, preferred, self.spec)

        guess_row = self.table.codes[guess_idx]
        codes = guess_row[cand]
        node = TreeNode(guess=self.table.words[guess_idx])
        for code in np.unique(codes):
            code = int(code)
            if code == self.all_green:
                continue
            sub_cand = cand[codes == code]
            sub_consistent = consistent & (guess_row == code)
            if self.mode == "hard":
                sub_greens, sub_counts = self._hard_update(
                    guess_idx, code, greens, min_counts
                )
            else:
                sub_greens, sub_counts = greens, min_counts
            node.children[code] = self._node(
                sub_cand, sub_consistent, sub_greens, sub_counts
            )
        return node

    def _hard_update(
        self,
        guess_idx: int,
        code: int,
        greens: tuple[int, ...],
        min_counts: np.ndarray,
    ) -> tuple[tuple[int, ...], np.ndarray]:
        letters = self.table.letters[guess_idx]
        digits = []
        c = code
        for _ in range(self.length):
            digits.append(c % 3)
            c //= 3
        digits.reverse()
        new_greens = list(greens)
        required = np.zeros(26, dtype=np.int16)
        for pos, digit in enumerate(digits):
            if digit == 2:
                new_greens[pos] = int(letters[pos])
            if digit >= 1:
                required[letters[pos]] += 1
        return tuple(new_greens), np.maximum(min_counts, required)


def build_tree(
    solutions: Lexicon | Iterable[str],
    guesses: Lexicon | Iterable[str] | None = None,
    spec: HeuristicSpec = HeuristicSpec("negnumbins", "expbinsize"),
    mode: Mode = "regular",
) -> StrategyTree:
    """Build the greedy strategy tree for a solution list.

    The guess list defaults to the solution list. Deterministic: the same
    inputs always produce the identical tree.
    """
    sol = as_lexicon(solutions)
    gue = sol if guesses is None else as_lexicon(guesses)
    if not len(sol) or not len(gue):
        raise StrategyError("solutions and guesses must be nonempty")
    builder = _Builder(sol, gue, spec, mode)
    return StrategyTree(builder.build())


def evaluate(tree: StrategyTree, solutions: Lexicon | Iterable[str]) -> EvalReport:
    """Count guesses along each solution's path through the tree."""
    sol = as_lexicon(solutions)
    histogram: dict[int, int] = {}
    for word in sol:
        node = tree.root
        depth = 1
        while node.guess != word:
            code = score(node.guess, word).code
            child = node.children.get(code)
            if child is None:
                raise StrategyError(f"tree has no path for solution {word!r}")
            node = child
            depth += 1
        histogram[depth] = histogram.get(depth, 0) + 1
    total = sum(k * v for k, v in histogram.items())
    return EvalReport(
        average=Fraction(total, len(sol)),
        max_guesses=max(histogram),
        histogram=dict(sorted(histogram.items())),
    )


# ---------------------------------------------------------------------------
# Canonical tree documents
# ---------------------------------------------------------------------------

def _node_to_dict(node: TreeNode, length: int) -> dict:
    children = {}
    for code in sorted(node.children):
        children[Pattern.from_code(code, length).text] = _node_to_dict(
            node.children[code], length
        )
    return {"guess": node.guess, "children": children}


def serialize_tree(tree: StrategyTree) -> str:
    """Canonical JSON: children keyed by pattern text, ascending by code."""
    doc = _node_to_dict(tree.root, len(tree.root.guess))
    return json.dumps(doc, separators=(",", ":")) + "\n"


def _node_from_dict(doc, length: int | None) -> TreeNode:
    if not isinstance(doc, dict) or set(doc) != {"guess", "children"}:
        raise StrategyError("malformed tree document: expected guess/children object")
    guess = doc["guess"]
    if not isinstance(guess, str) or not guess:
        raise StrategyError("malformed tree document: bad guess")
    if length is None:
        length = len(guess)
    elif len(guess) != length:
        raise StrategyError(f"malformed tree document: guess {guess!r} has wrong length")
    children_doc = doc["children"]
    if not isinstance(children_doc, dict):
        raise StrategyError("malformed tree document: children must be an object")
    node = TreeNode(guess=guess)
    for key, child in children_doc.items():
        try:
            pattern = parse_pattern(key)
        except Exception as exc:
            raise StrategyError(f"malformed tree document: bad pattern key {key!r}") from exc
        if len(pattern) != length:
            raise StrategyError(f"malformed tree document: bad pattern key {key!r}")
        if pattern.is_all_green:
            raise StrategyError("malformed tree document: all-green child not allowed")
        node.children[pattern.code] = _node_from_dict(child, length)
    return node


def load_tree(document: str) -> StrategyTree:
    try:
        doc = json.loads(document)
    except json.JSONDecodeError as exc:
        raise StrategyError(f"malformed tree document: {exc}") from None
    return StrategyTree(_node_from_dict(doc, None))
