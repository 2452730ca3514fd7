import random
from collections import defaultdict

import pytest
from hypothesis import given, strategies as st

from wordbins import all_singletons, parse_pattern, partition, pattern_table, score
from wordbins.binning import BinningError

from tests.conftest import random_toy_words

toy_words = st.lists(
    st.text(alphabet="abcd", min_size=3, max_size=3), min_size=1, max_size=20,
    unique=True,
)


def brute_force_bins(guess, candidates):
    grouped = defaultdict(list)
    for word in candidates:
        grouped[score(guess, word).code].append(word)
    return {code: tuple(members) for code, members in grouped.items()}


def test_partition_matches_pairwise_scoring_oracle():
    candidates = ("aba", "abc", "bca", "cab", "bab", "ccc")
    dist = partition("abc", candidates)
    assert dist.bins == brute_force_bins("abc", candidates)
    assert dist.total == 6


def test_partition_single_word_is_all_green_bin():
    dist = partition("crane", ["crane"])
    assert dist.bins == {parse_pattern("GGGGG").code: ("crane",)}
    assert all_singletons(dist)


def test_partition_rejects_empty_candidates():
    with pytest.raises(BinningError):
        partition("crane", [])


def test_partition_rejects_length_mismatch():
    with pytest.raises(BinningError):
        partition("crane", ["abc"])


@given(toy_words)
def test_sizes_sum_to_total(words):
    dist = partition(words[0], words)
    assert sum(dist.sizes) == dist.total == len(words)
    assert dist.num_bins <= min(len(words), 3 ** 3)


@given(toy_words, st.randoms(use_true_random=False))
def test_partition_independent_of_candidate_order(words, rng):
    dist = partition(words[0], words)
    shuffled = list(words)
    rng.shuffle(shuffled)
    dist2 = partition(words[0], shuffled)
    # same bins as sets, each bin in its own candidate order
    assert set(dist.bins) == set(dist2.bins)
    for code, members in dist.bins.items():
        assert set(members) == set(dist2.bins[code])
        assert list(dist2.bins[code]) == [w for w in shuffled if w in set(members)]


def test_partition_with_table_matches_plain(solutions_2315):
    table = pattern_table(solutions_2315.words)
    rng = random.Random(7)
    sample = tuple(sorted(rng.sample(solutions_2315.words, 60)))
    for guess in sample[:5]:
        with_table = partition(guess, sample, table=table)
        plain = partition(guess, sample)
        assert with_table.bins == plain.bins


def test_all_singletons_cases():
    words = random_toy_words(random.Random(3), 6)
    dist = partition(words[0], words)
    assert all_singletons(dist) == (dist.max_size == 1)
    single = partition("abc", ["abc"])
    assert all_singletons(single)
    lump = partition("aaa", ["bbb", "bbc"])  # both give the same response
    assert not all_singletons(lump)


def test_raise_largest_bin_on_full_lexicon(solutions_2315):
    # "raise" and "arise" share a letter set, so they share the all-gray bin
    dist = partition("raise", solutions_2315.words, table=pattern_table(solutions_2315.words))
    code, members = dist.largest()
    assert code == parse_pattern("BBBBB").code
    assert len(members) == 168
