import datetime as dt

import pytest
from click.testing import CliRunner
from fastapi.testclient import TestClient

from wordbins import Lexicon, UsedLedger, partition, score
from wordbins.cli import main as cli_main
from wordbins.service import create_app

TOY_WORDS = ("aba", "abc", "acb", "bab", "bca", "cab", "cba", "cca", "dad", "fed")


@pytest.fixture
def lexicon():
    return Lexicon(TOY_WORDS, label="toy10")


@pytest.fixture
def client(lexicon):
    return TestClient(create_app(lexicon))


def test_health(client):
    response = client.get("/api/health")
    assert response.status_code == 200
    assert response.json() == {"status": "ok"}


def test_meta_reflects_loaded_lexicons(client):
    meta = client.get("/api/meta").json()
    assert meta["solutions"] == {"label": "toy10", "size": len(TOY_WORDS)}
    assert meta["guesses"]["size"] == len(TOY_WORDS)
    assert meta["word_length"] == 3
    assert "negnumbins" in meta["heuristics"]
    assert meta["modes"] == ["regular", "hard", "superhard"]


def test_suggest_with_solved_history(client):
    response = client.post("/api/suggest", json={
        "history": [{"guess": "abc", "pattern": "GGG"}],
        "heuristic": "negnumbins",
    })
    assert response.status_code == 200
    body = response.json()
    assert body["remaining"] == 1
    assert body["suggestions"][0]["word"] == "abc"
    assert body["candidates_sample"] == ["abc"]


def test_suggest_defaults_rank_all_guesses(client):
    body = client.post("/api/suggest", json={"top_k": 4}).json()
    assert body["remaining"] == len(TOY_WORDS)
    assert len(body["suggestions"]) == 4
    first = body["suggestions"][0]
    assert set(first) == {
        "word", "score", "bins", "max_bin_size", "expected_bin_size",
        "entropy", "consistent",
    }


def test_suggest_contradictory_history_is_422(client):
    response = client.post("/api/suggest", json={
        "history": [
            {"guess": "abc", "pattern": "GGB"},
            {"guess": "abc", "pattern": "BGB"},
        ],
    })
    assert response.status_code == 422


def test_suggest_bad_pattern_is_400(client):
    response = client.post("/api/suggest", json={
        "history": [{"guess": "abc", "pattern": "GXQ"}],
    })
    assert response.status_code == 400


def test_suggest_unknown_guess_is_400(client):
    response = client.post("/api/suggest", json={
        "history": [{"guess": "zzz", "pattern": "GGG"}],
    })
    assert response.status_code == 400


def test_suggest_unknown_heuristic_is_400(client):
    response = client.post("/api/suggest", json={"heuristic": "magic"})
    assert response.status_code == 400


def test_malformed_body_is_400(client):
    response = client.post("/api/suggest", json={"top_k": "many"})
    assert response.status_code == 400
    response = client.post("/api/suggest", json={"history": "oops"})
    assert response.status_code == 400


def test_partition_summary_matches_direct_computation(client, lexicon):
    response = client.post("/api/partition", json={"guess": "abc", "history": []})
    assert response.status_code == 200
    body = response.json()
    dist = partition("abc", lexicon.words)
    assert body["bins"] == dist.num_bins
    code, members = dist.largest()
    assert body["largest"]["size"] == len(members)
    histogram = {}
    for size in dist.sizes:
        histogram[str(size)] = histogram.get(str(size), 0) + 1
    assert body["size_histogram"] == histogram


def test_partition_unknown_guess_is_400(client):
    assert client.post("/api/partition", json={"guess": "zzz"}).status_code == 400


def test_partition_contradiction_is_422(client):
    response = client.post("/api/partition", json={
        "guess": "abc",
        "history": [
            {"guess": "abc", "pattern": "GGB"},
            {"guess": "abc", "pattern": "BGB"},
        ],
    })
    assert response.status_code == 422


def test_ledger_shrinks_candidate_pool(lexicon):
    ledger = UsedLedger(((dt.date(2024, 1, 1), "abc"), (dt.date(2024, 1, 2), "cab")))
    client = TestClient(create_app(lexicon, ledger=ledger))
    meta = client.get("/api/meta").json()
    assert meta["solutions"]["size"] == len(TOY_WORDS) - 2
    body = client.post("/api/suggest", json={"top_k": 20}).json()
    assert body["remaining"] == len(TOY_WORDS) - 2
    # used words may still be guessed, but are no longer possible answers
    flags = {r["word"]: r["consistent"] for r in body["suggestions"]}
    assert flags["abc"] is False


def test_cli_and_http_rankings_agree(lexicon, client, tmp_path):
    words_file = tmp_path / "toy.txt"
    words_file.write_text("\n".join(TOY_WORDS) + "\n")
    history_steps = [{"guess": "abc", "pattern": "GGB"}]
    http_rows = client.post("/api/suggest", json={
        "history": history_steps, "heuristic": "negnumbins",
        "tiebreak": "expbinsize", "top_k": 50,
    }).json()["suggestions"]
    runner = CliRunner()
    result = runner.invoke(cli_main, [
        "suggest", "--solutions", str(words_file), "--history", "abc=GGB",
        "--heuristic", "negnumbins", "--tiebreak", "expbinsize", "--top", "50",
    ])
    assert result.exit_code == 0, result.output
    cli_words = [
        line.split()[0]
        for line in result.output.splitlines()
        if line and line.split()[0] in set(TOY_WORDS)
    ]
    assert cli_words == [r["word"] for r in http_rows]


def test_full_lexicon_default_suggestion_is_trace(solutions_2315):
    client = TestClient(create_app(solutions_2315))
    body = client.post("/api/suggest", json={"top_k": 3}).json()
    assert body["remaining"] == 2315
    assert body["suggestions"][0]["word"] == "trace"
    body = client.post("/api/suggest", json={
        "heuristic": "negnumbins", "tiebreak": None, "top_k": 1,
    }).json()
    assert body["suggestions"][0]["word"] == "trace"


def test_full_lexicon_partition_summary(solutions_2315):
    client = TestClient(create_app(solutions_2315))
    body = client.post("/api/partition", json={"guess": "raise"}).json()
    assert body["largest"] == {"pattern": "BBBBB", "size": 168}
    assert body["bins"] == 132


def test_static_ui_mounted_when_present(lexicon, tmp_path):
    (tmp_path / "index.html").write_text("<html><body>assistant</body></html>")
    client = TestClient(create_app(lexicon, ui_dir=tmp_path))
    response = client.get("/")
    assert response.status_code == 200
    assert "assistant" in response.text
    # API routes still take precedence
    assert client.get("/api/health").json() == {"status": "ok"}


def test_no_ui_dir_is_fine(lexicon):
    client = TestClient(create_app(lexicon, ui_dir="/nonexistent"))
    assert client.get("/api/health").status_code == 200
