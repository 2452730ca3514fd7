"""Used-solutions ledger and daily strategy regeneration.

The game never reuses a past answer, so the candidate pool shrinks day by
day. The ledger file format is one "YYYY-MM-DD word" per line, dates
strictly increasing. The package ships no ledger data: past answers are
external facts supplied by the user.
"""

from __future__ import annotations

import datetime as dt
from dataclasses import dataclass
from pathlib import Path

from .heuristics import HeuristicSpec
from .lexicon import Lexicon
from .strategy import EvalReport, Mode, StrategyTree, build_tree, evaluate


class LedgerError(ValueError):
    """Malformed ledger file or ledger/lexicon mismatch."""


@dataclass(frozen=True)
class UsedLedger:
    """Dated record of past answers, oldest first."""

    entries: tuple[tuple[dt.date, str], ...]

    def __post_init__(self) -> None:
        last: dt.date | None = None
        seen: set[str] = set()
        for day, word in self.entries:
            if last is not None and day <= last:
                raise LedgerError(f"ledger dates must strictly increase at {day} {word}")
            if word in seen:
                raise LedgerError(f"ledger repeats word {word!r}")
            seen.add(word)
            last = day

    def __len__(self) -> int:
        return len(self.entries)

    def words_through(self, as_of: dt.date | None = None) -> tuple[str, ...]:
        if as_of is None:
            return tuple(word for _, word in self.entries)
        return tuple(word for day, word in self.entries if day <= as_of)


def load_ledger(path: str | Path) -> UsedLedger:
    entries: list[tuple[dt.date, str]] = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 2:
                raise LedgerError(f"{path}:{lineno}: expected 'YYYY-MM-DD word'")
            try:
                day = dt.date.fromisoformat(parts[0])
            except ValueError:
                raise LedgerError(f"{path}:{lineno}: bad date {parts[0]!r}") from None
            entries.append((day, parts[1]))
    return UsedLedger(tuple(entries))


def remaining_solutions(
    full: Lexicon, ledger: UsedLedger, as_of: dt.date | None = None
) -> Lexicon:
    """Solutions not yet used as of a date, original order preserved."""
    for _, word in ledger.entries:
        if word not in full:
            raise LedgerError(f"ledger word {word!r} is not in lexicon {full.label!r}")
    return full.subtract(ledger.words_through(as_of))


def daily_strategy(
    full: Lexicon,
    ledger: UsedLedger,
    as_of: dt.date | None = None,
    spec: HeuristicSpec = HeuristicSpec("negnumbins", "expbinsize"),
    mode: Mode = "regular",
    exclude_guesses: bool = False,
) -> tuple[StrategyTree, EvalReport]:
    """Strategy for the remaining solutions.

    Guesses default to the full lexicon (used words can still be played);
    ``exclude_guesses`` removes used words from the guess list too.
    """
    remaining = remaining_solutions(full, ledger, as_of)
    if not len(remaining):
        raise LedgerError("no solutions remain after applying the ledger")
    guesses = remaining if exclude_guesses else full
    tree = build_tree(remaining, guesses, spec, mode)
    report = evaluate(tree, remaining)
    return tree, report
