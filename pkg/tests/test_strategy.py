import json
import random

import pytest

from wordbins import (
    Constraints,
    HeuristicSpec,
    Lexicon,
    build_tree,
    evaluate,
    legal_guesses,
    load_tree,
    parse_pattern,
    score,
    serialize_tree,
)
from wordbins.strategy import StrategyError

from tests.conftest import random_toy_words


def replay_path_length(tree, secret):
    """Independent replay: walk the tree scoring each guess against the
    secret until the guess hits it."""
    node = tree.root
    guesses = 1
    while node.guess != secret:
        pattern = score(node.guess, secret)
        assert not pattern.is_all_green
        node = node.children[pattern.code]
        guesses += 1
    return guesses


def collect_paths(tree):
    """(history, node) pairs for every node."""
    out = []

    def walk(node, history):
        out.append((history, node))
        for code, child in node.children.items():
            pattern = parse_pattern(
                "".join("BYG"[d] for d in _digits(code, len(node.guess)))
            )
            walk(child, history + ((node.guess, pattern),))

    def _digits(code, length):
        digits = []
        for _ in range(length):
            digits.append(code % 3)
            code //= 3
        return digits[::-1]

    walk(tree.root, ())
    return out


# ---------------------------------------------------------------------------
# constraints and legality
# ---------------------------------------------------------------------------

def test_hard_mode_green_pins_position():
    constraints = Constraints((("crane", parse_pattern("GBBBB")),))
    guesses = ["crane", "catch", "moose", "cable"]
    # only words starting with 'c' stay legal
    legal = legal_guesses(guesses, "hard", constraints)
    assert legal == ("crane", "catch", "cable")


def test_hard_mode_yellow_requires_letter_anywhere():
    constraints = Constraints((("crane", parse_pattern("BYBBB")),))
    guesses = ["radar", "moose", "carve"]
    assert legal_guesses(guesses, "hard", constraints) == ("radar", "carve")


def test_hard_mode_gray_letters_stay_allowed():
    constraints = Constraints((("crane", parse_pattern("GBBBB")),))
    # "catch" reuses the gray letter 'a'; still legal
    assert "catch" in legal_guesses(["catch"], "hard", constraints)


def test_hard_mode_is_multiplicity_aware():
    # "geese" against "elate": green e at the end plus one yellow e, so a
    # legal guess needs e fixed at index 4 and two e's overall
    pattern = score("geese", "elate")
    assert pattern.text == "BYBBG"
    constraints = Constraints((("geese", pattern),))
    legal = legal_guesses(["easel", "eagle", "moose"], "hard", constraints)
    assert legal == ("eagle",)


def test_empty_history_returns_all_guesses():
    for mode in ("regular", "hard", "superhard"):
        assert legal_guesses(["abc", "def"], mode, Constraints()) == ("abc", "def")
        assert legal_guesses(["abc", "def"], mode, None) == ("abc", "def")


def test_unknown_mode_rejected():
    with pytest.raises(StrategyError):
        legal_guesses(["abc"], "impossible", Constraints())


def test_mode_subset_chain_on_random_histories():
    rng = random.Random(21)
    for _ in range(30):
        words = random_toy_words(rng, 20)
        secret = rng.choice(words)
        steps = []
        for _ in range(rng.randint(1, 3)):
            guess = rng.choice(words)
            steps.append((guess, score(guess, secret)))
        constraints = Constraints(tuple(steps))
        regular = set(legal_guesses(words, "regular", constraints))
        hard = set(legal_guesses(words, "hard", constraints))
        superhard = set(legal_guesses(words, "superhard", constraints))
        assert superhard <= hard <= regular
        assert secret in superhard  # the true secret always stays legal


# ---------------------------------------------------------------------------
# building and evaluating trees
# ---------------------------------------------------------------------------

def test_single_word_tree():
    tree = build_tree(["abc"], spec=HeuristicSpec("negnumbins"))
    assert tree.root.guess == "abc"
    assert tree.root.children == {}
    report = evaluate(tree, ["abc"])
    assert report.average == 1
    assert report.max_guesses == 1
    assert report.percent_in_six == 100.0


def test_two_word_tree_guesses_earliest_candidate():
    tree = build_tree(["bcb", "abc"], spec=HeuristicSpec("negnumbins"))
    assert tree.root.guess == "bcb"  # list order, not alphabetical


@pytest.mark.parametrize("mode", ["regular", "hard", "superhard"])
def test_tree_solves_every_solution(toy_lexicon, mode):
    tree = build_tree(toy_lexicon, spec=HeuristicSpec("negnumbins", "expbinsize"), mode=mode)
    report = evaluate(tree, toy_lexicon)
    assert report.total_solutions == len(toy_lexicon)
    for word in toy_lexicon:
        assert replay_path_length(tree, word) >= 1


def test_evaluate_matches_independent_replay(toy_lexicon):
    tree = build_tree(toy_lexicon, spec=HeuristicSpec("negentropy"))
    report = evaluate(tree, toy_lexicon)
    lengths = [replay_path_length(tree, w) for w in toy_lexicon]
    assert float(report.average) == pytest.approx(sum(lengths) / len(lengths))
    assert report.max_guesses == max(lengths)
    assert sum(report.histogram.values()) == len(toy_lexicon)
    assert report.total_guesses == sum(lengths)


def test_evaluate_rejects_unsolvable_word(toy_lexicon):
    tree = build_tree(toy_lexicon.words[:4], spec=HeuristicSpec("negnumbins"))
    with pytest.raises(StrategyError, match="fed"):
        evaluate(tree, list(toy_lexicon.words[:4]) + ["fed"])


@pytest.mark.parametrize("mode", ["hard", "superhard"])
def test_mode_compliance_at_every_node(toy_lexicon, mode):
    tree = build_tree(toy_lexicon, spec=HeuristicSpec("negnumbins"), mode=mode)
    for history, node in collect_paths(tree):
        constraints = Constraints(history)
        legal = legal_guesses(toy_lexicon.words, mode, constraints)
        # nodes at <= 2 remaining candidates guess a candidate directly,
        # which is always mode-legal; others must come from the legal list
        assert node.guess in legal


def test_candidate_shrinkage(toy_lexicon):
    tree = build_tree(toy_lexicon, spec=HeuristicSpec("expbinsize"))

    def walk(node, candidates):
        in_set = node.guess in candidates
        child_total = 0
        for code, child in node.children.items():
            sub = [
                w for w in candidates
                if w != node.guess and score(node.guess, w).code == code
            ]
            assert sub, "child bin must be nonempty"
            child_total += len(sub)
            walk(child, sub)
        assert child_total == len(candidates) - (1 if in_set else 0)

    walk(tree.root, list(toy_lexicon.words))


def test_build_is_deterministic(toy_lexicon):
    spec = HeuristicSpec("negnumbins", "maxonediffs")
    a = serialize_tree(build_tree(toy_lexicon, spec=spec, mode="superhard"))
    b = serialize_tree(build_tree(toy_lexicon, spec=spec, mode="superhard"))
    assert a == b


def test_build_accepts_separate_guess_lexicon(toy_lexicon):
    guesses = Lexicon(tuple(sorted(set(toy_lexicon.words) | {"eee", "fff"})))
    tree = build_tree(toy_lexicon, guesses, HeuristicSpec("negnumbins"))
    report = evaluate(tree, toy_lexicon)
    assert report.total_solutions == len(toy_lexicon)


def test_build_rejects_empty():
    with pytest.raises(StrategyError):
        build_tree([], ["abc"], HeuristicSpec("negnumbins"))


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def test_serialize_single_node():
    tree = build_tree(["crane"], spec=HeuristicSpec("negnumbins"))
    assert serialize_tree(tree) == '{"guess":"crane","children":{}}\n'


def test_round_trip_is_byte_identical(toy_lexicon):
    tree = build_tree(toy_lexicon, spec=HeuristicSpec("negnumbins", "negentropy"))
    doc = serialize_tree(tree)
    again = serialize_tree(load_tree(doc))
    assert doc == again


def test_children_keys_sorted_by_pattern_code(toy_lexicon):
    tree = build_tree(toy_lexicon, spec=HeuristicSpec("negnumbins"))
    doc = json.loads(serialize_tree(tree))

    def check(node_doc):
        codes = [parse_pattern(k).code for k in node_doc["children"]]
        assert codes == sorted(codes)
        for child in node_doc["children"].values():
            check(child)

    check(doc)


def test_load_rejects_unknown_pattern_key():
    with pytest.raises(StrategyError, match="GGGGA"):
        load_tree('{"guess":"crane","children":{"GGGGA":{"guess":"zonal","children":{}}}}')


def test_load_rejects_all_green_child():
    with pytest.raises(StrategyError, match="all-green"):
        load_tree('{"guess":"crane","children":{"GGGGG":{"guess":"zonal","children":{}}}}')


@pytest.mark.parametrize("doc", [
    "not json",
    '{"guess":"crane"}',
    '{"guess":"crane","children":{"BBBBB":{"guess":"xy","children":{}}}}',
    '{"guess":"","children":{}}',
    '[1,2]',
])
def test_load_rejects_malformed_documents(doc):
    with pytest.raises(StrategyError):
        load_tree(doc)
