import random
from pathlib import Path

import pytest

from wordbins import Lexicon, load_lexicon

DATA_DIR = Path(__file__).resolve().parent.parent / "data"
SOLUTIONS_2315 = DATA_DIR / "solutions-2315.txt"
SOLUTIONS_3158 = DATA_DIR / "solutions-3158.txt"

TOY_ALPHABET = "abcdef"
TOY_LENGTH = 3


@pytest.fixture(scope="session")
def solutions_2315() -> Lexicon:
    return load_lexicon(SOLUTIONS_2315)


@pytest.fixture
def toy_lexicon() -> Lexicon:
    # hand-picked so families share letters and duplicate letters appear
    return Lexicon(
        ("aba", "abc", "acb", "bab", "bca", "cab", "cba", "cca", "dad", "fed"),
        label="toy10",
    )


def random_toy_words(rng: random.Random, count: int, length: int = TOY_LENGTH,
                     alphabet: str = TOY_ALPHABET) -> tuple[str, ...]:
    pool = set()
    while len(pool) < count:
        pool.add("".join(rng.choice(alphabet) for _ in range(length)))
    return tuple(sorted(pool))


def require_3158() -> Lexicon:
    if not SOLUTIONS_3158.exists():
        pytest.skip(
            "canonical 3158-word solution list not available; supply "
            f"{SOLUTIONS_3158} (old words first) to run this criterion"
        )
    return load_lexicon(SOLUTIONS_3158)
