"""Color feedback for (guess, secret) pairs.

Marking follows the published game rules for duplicate letters: greens are
assigned first and consume their secret letter, then yellows are assigned
scanning guess positions left to right, each consuming one remaining
occurrence in the secret. A pattern is encoded as a base-3 integer with the
first position as the most significant digit (gray=0, yellow=1, green=2).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

GRAY, YELLOW, GREEN = 0, 1, 2
COLOR_CHARS = "BYG"  # indexed by color value
_CHAR_TO_COLOR = {c: v for v, c in enumerate(COLOR_CHARS)}


class FeedbackError(ValueError):
    """Mismatched lengths, bad pattern text, or out-of-range code."""


@dataclass(frozen=True)
class Pattern:
    """One color response: a tuple of per-position colors."""

    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.colors or any(c not in (GRAY, YELLOW, GREEN) for c in self.colors):
            raise FeedbackError(f"invalid colors {self.colors!r}")

    @property
    def code(self) -> int:
        value = 0
        for c in self.colors:
            value = value * 3 + c
        return value

    @property
    def text(self) -> str:
        return "".join(COLOR_CHARS[c] for c in self.colors)

    @property
    def is_all_green(self) -> bool:
        return all(c == GREEN for c in self.colors)

    def __len__(self) -> int:
        return len(self.colors)

    def __str__(self) -> str:
        return self.text

    @classmethod
    def from_code(cls, code: int, length: int) -> "Pattern":
        return decode_pattern(code, length)

    @classmethod
    def from_text(cls, text: str) -> "Pattern":
        return parse_pattern(text)


def score(guess: str, secret: str) -> Pattern:
    """Color response for a guess against a secret word."""
    if len(guess) != len(secret):
        raise FeedbackError(f"length mismatch: {guess!r} vs {secret!r}")
    n = len(guess)
    colors = [GRAY] * n
    remaining: dict[str, int] = {}
    for i in range(n):
        if guess[i] == secret[i]:
            colors[i] = GREEN
        else:
            remaining[secret[i]] = remaining.get(secret[i], 0) + 1
    for i in range(n):
        if colors[i] == GRAY and remaining.get(guess[i], 0) > 0:
            colors[i] = YELLOW
            remaining[guess[i]] -= 1
    return Pattern(tuple(colors))


def encode_pattern(pattern: Pattern) -> int:
    return pattern.code


def decode_pattern(code: int, length: int) -> Pattern:
    if not 0 <= code < 3 ** length:
        raise FeedbackError(f"pattern code {code} out of range [0, {3 ** length})")
    digits = []
    for _ in range(length):
        digits.append(code % 3)
        code //= 3
    return Pattern(tuple(reversed(digits)))


def parse_pattern(text: str) -> Pattern:
    """Parse a "GYB" string, e.g. "BYGBB"."""
    try:
        return Pattern(tuple(_CHAR_TO_COLOR[c] for c in text))
    except KeyError as exc:
        raise FeedbackError(f"bad pattern character {exc.args[0]!r} in {text!r}") from None


def all_green_code(length: int) -> int:
    return 3 ** length - 1


def pattern_text_from_code(code: int, length: int) -> str:
    return decode_pattern(code, length).text


class PatternTable:
    """Dense (guess index, secret index) -> pattern-code table over one word set.

    Built once per word universe and shared by everything that scores many
    pairs; construction is vectorized per guess row. Immutable after build.
    """

    def __init__(self, words: tuple[str, ...]):
        self.words = words
        self.index = {w: i for i, w in enumerate(words)}
        n = len(words)
        length = len(words[0])
        self.word_length = length
        self.n_codes = 3 ** length
        self.all_green = self.n_codes - 1
        letters = np.frombuffer("".join(words).encode("ascii"), dtype=np.uint8)
        self.letters = (letters.reshape(n, length) - ord("a")).astype(np.int8)
        self.letter_counts = np.zeros((n, 26), dtype=np.int8)
        for p in range(length):
            np.add.at(self.letter_counts, (np.arange(n), self.letters[:, p]), 1)
        dtype = np.uint8 if self.n_codes <= 256 else np.uint16
        self.codes = np.empty((n, n), dtype=dtype)
        pow3 = 3 ** np.arange(length - 1, -1, -1)
        counts = self.letter_counts.astype(np.int16)
        for i in range(n):
            g = self.letters[i]
            greens = self.letters == g  # vs every secret, per position
            remaining = counts.copy()
            for p in range(length):
                remaining[:, g[p]] -= greens[:, p]
            colors = greens.astype(np.int16) * GREEN
            for p in range(length):
                can = (~greens[:, p]) & (remaining[:, g[p]] > 0)
                colors[can, p] = YELLOW
                remaining[can, g[p]] -= 1
            self.codes[i] = colors @ pow3

    def code(self, guess: str, secret: str) -> int:
        return int(self.codes[self.index[guess], self.index[secret]])


@lru_cache(maxsize=8)
def pattern_table(words: tuple[str, ...]) -> PatternTable:
    """Shared table cache; keyed on the exact word tuple."""
    return PatternTable(words)
