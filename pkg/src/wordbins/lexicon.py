"""Word-list loading, validation, and ordered set arithmetic.

The order of a word list is semantically meaningful: heuristic ties fall back
to list position, so lists must round-trip through files byte for byte.
Files are UTF-8, one lowercase word per line, LF terminators, final newline.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable, Iterator


class LexiconError(ValueError):
    """Malformed word list or unknown word."""


def validate_word(word: str, length: int | None = None) -> str:
    """Check one word: lowercase a-z only, optionally of a fixed length."""
    if not word or not word.isascii() or not word.isalpha() or not word.islower():
        raise LexiconError(f"invalid word {word!r}: must be lowercase a-z letters")
    if length is not None and len(word) != length:
        raise LexiconError(f"invalid word {word!r}: expected length {length}, got {len(word)}")
    return word


@dataclass(frozen=True)
class Lexicon:
    """An ordered list of distinct same-length words.

    Immutable once constructed, so instances are safe to share across
    threads and to use as cache keys (via ``words``).
    """

    words: tuple[str, ...]
    label: str = ""

    def __post_init__(self) -> None:
        if not self.words:
            return
        length = len(self.words[0])
        seen = set()
        for w in self.words:
            validate_word(w, length)
            if w in seen:
                raise LexiconError(f"duplicate word {w!r}")
            seen.add(w)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {w: i for i, w in enumerate(self.words)}

    @property
    def word_length(self) -> int:
        if not self.words:
            raise LexiconError("empty lexicon has no word length")
        return len(self.words[0])

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self) -> Iterator[str]:
        return iter(self.words)

    def __contains__(self, word: object) -> bool:
        return word in self._index

    def index(self, word: str) -> int:
        """List position of a word; position doubles as tie-break rank."""
        try:
            return self._index[word]
        except KeyError:
            raise LexiconError(f"word {word!r} not in lexicon {self.label!r}") from None

    def subtract(self, removed: Iterable[str]) -> "Lexicon":
        """Remove words, keeping the original order; absent words are ignored."""
        gone = set(removed)
        kept = tuple(w for w in self.words if w not in gone)
        return Lexicon(kept, label=self.label)

    def save(self, path: str | Path) -> None:
        Path(path).write_text("\n".join(self.words) + "\n", encoding="utf-8")


def load_lexicon(path: str | Path, label: str | None = None) -> Lexicon:
    """Load a word list from a file, one word per line, preserving order.

    Rejections name the offending line so bad list files are easy to fix.
    """
    path = Path(path)
    if label is None:
        label = path.stem
    words: list[str] = []
    length: int | None = None
    seen: set[str] = set()
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            word = raw.strip()
            if not word:
                continue
            try:
                validate_word(word, length)
            except LexiconError as exc:
                raise LexiconError(f"{path}:{lineno}: {exc}") from None
            if word in seen:
                raise LexiconError(f"{path}:{lineno}: duplicate word {word!r}")
            seen.add(word)
            if length is None:
                length = len(word)
            words.append(word)
    if not words:
        raise LexiconError(f"{path}: no words found")
    return Lexicon(tuple(words), label=label)


def as_lexicon(words: "Lexicon | Iterable[str]", label: str = "") -> Lexicon:
    """Coerce a plain word sequence to a Lexicon; pass Lexicons through."""
    if isinstance(words, Lexicon):
        return words
    return Lexicon(tuple(words), label=label)
