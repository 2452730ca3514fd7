"""Partition a candidate set by the pattern each candidate would produce."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .feedback import PatternTable, all_green_code, score


class BinningError(ValueError):
    """Empty candidate set or mismatched word lengths."""


@dataclass(frozen=True)
class BinDistribution:
    """Bins of candidates for one guess, keyed by pattern code.

    Within-bin order equals candidate order; iteration over ``bins`` is in
    ascending pattern-code order for reproducible output.
    """

    guess: str
    bins: dict[int, tuple[str, ...]]
    total: int

    @property
    def sizes(self) -> tuple[int, ...]:
        """Bin sizes in ascending pattern-code order."""
        return tuple(len(members) for members in self.bins.values())

    @property
    def num_bins(self) -> int:
        return len(self.bins)

    @property
    def max_size(self) -> int:
        return max(self.sizes)

    def largest(self) -> tuple[int, tuple[str, ...]]:
        """(code, members) of the largest bin; ties go to the smallest code."""
        best_code = max(self.bins, key=lambda c: (len(self.bins[c]), -c))
        return best_code, self.bins[best_code]


def partition(
    guess: str,
    candidates: Sequence[str],
    table: PatternTable | None = None,
) -> BinDistribution:
    """Group candidates by the pattern they would give for this guess."""
    if not candidates:
        raise BinningError("cannot partition an empty candidate set")
    if any(len(w) != len(guess) for w in candidates):
        raise BinningError("candidate length does not match guess length")
    grouped: dict[int, list[str]] = {}
    if table is not None and guess in table.index:
        gi = table.index[guess]
        for word in candidates:
            code = int(table.codes[gi, table.index[word]])
            grouped.setdefault(code, []).append(word)
    else:
        for word in candidates:
            grouped.setdefault(score(guess, word).code, []).append(word)
    bins = {code: tuple(grouped[code]) for code in sorted(grouped)}
    dist = BinDistribution(guess=guess, bins=bins, total=len(candidates))
    if guess in set(candidates):
        assert dist.bins.get(all_green_code(len(guess))) == (guess,)
    return dist


def all_singletons(dist: BinDistribution) -> bool:
    """True when every bin holds exactly one candidate."""
    return dist.max_size == 1
