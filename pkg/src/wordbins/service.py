"""Local HTTP service backing the browser assistant.

Single-tenant and stateless between requests: every response is a pure
function of the loaded lexicons, the optional used-words ledger, and the
request body. Malformed requests get 400; a history that leaves zero
candidate solutions gets 422 so the client can prompt for a correction.
"""

from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI, HTTPException, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, Field

from .feedback import FeedbackError, parse_pattern
from .heuristics import HEURISTIC_IDS, HeuristicSpec, rank_guesses
from .history import UsedLedger
from .lexicon import Lexicon
from .binning import partition
from .strategy import MODES, Constraints, legal_guesses


class HistoryStep(BaseModel):
    guess: str
    pattern: str


class SuggestRequest(BaseModel):
    history: list[HistoryStep] = Field(default_factory=list)
    heuristic: str = "negnumbins"
    tiebreak: str | None = "expbinsize"
    mode: str = "regular"
    top_k: int = Field(default=10, ge=1)


class PartitionRequest(BaseModel):
    guess: str
    history: list[HistoryStep] = Field(default_factory=list)


def create_app(
    solutions: Lexicon,
    guesses: Lexicon | None = None,
    ledger: UsedLedger | None = None,
    ui_dir: str | Path | None = None,
) -> FastAPI:
    guesses = guesses if guesses is not None else solutions
    candidates_base = solutions
    if ledger is not None:
        used = set(ledger.words_through())
        candidates_base = solutions.subtract(used)

    app = FastAPI(title="wordbins assistant service")
    app.add_middleware(
        CORSMiddleware,
        allow_origin_regex=r"http://(localhost|127\.0\.0\.1)(:\d+)?",
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(RequestValidationError)
    async def validation_handler(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"detail": exc.errors()})

    def parse_history(steps: list[HistoryStep]) -> Constraints:
        parsed = []
        for step in steps:
            word = step.guess.strip().lower()
            if word not in guesses:
                raise HTTPException(400, f"history guess {word!r} is not in the guess lexicon")
            try:
                parsed.append((word, parse_pattern(step.pattern.strip().upper())))
            except FeedbackError as exc:
                raise HTTPException(400, str(exc)) from None
        return Constraints(tuple(parsed))

    @app.get("/api/health")
    def health() -> dict:
        return {"status": "ok"}

    @app.get("/api/meta")
    def meta() -> dict:
        return {
            "solutions": {"label": candidates_base.label, "size": len(candidates_base)},
            "guesses": {"label": guesses.label, "size": len(guesses)},
            "word_length": solutions.word_length,
            "heuristics": list(HEURISTIC_IDS),
            "modes": list(MODES),
        }

    @app.post("/api/suggest")
    def suggest(request: SuggestRequest) -> dict:
        if request.heuristic not in HEURISTIC_IDS:
            raise HTTPException(400, f"unknown heuristic {request.heuristic!r}")
        if request.tiebreak is not None and request.tiebreak not in HEURISTIC_IDS:
            raise HTTPException(400, f"unknown tie-break {request.tiebreak!r}")
        if request.mode not in MODES:
            raise HTTPException(400, f"unknown mode {request.mode!r}")
        constraints = parse_history(request.history)
        candidates = [w for w in candidates_base if constraints.consistent(w)]
        if not candidates:
            raise HTTPException(422, "history is inconsistent: zero candidates remain")
        allowed = legal_guesses(guesses.words, request.mode, constraints)
        if not allowed:
            raise HTTPException(422, f"no {request.mode}-legal guesses remain")
        spec = HeuristicSpec(request.heuristic, request.tiebreak)
        rows = rank_guesses(
            candidates, allowed, spec, constraints.steps, top_k=request.top_k
        )
        for row in rows:
            if isinstance(row["score"], tuple):
                row["score"] = [list(pair) for pair in row["score"]]
        return {
            "remaining": len(candidates),
            "suggestions": rows,
            "candidates_sample": candidates[:20],
        }

    @app.post("/api/partition")
    def partition_endpoint(request: PartitionRequest) -> dict:
        word = request.guess.strip().lower()
        if word not in guesses:
            raise HTTPException(400, f"guess {word!r} is not in the guess lexicon")
        constraints = parse_history(request.history)
        candidates = [w for w in candidates_base if constraints.consistent(w)]
        if not candidates:
            raise HTTPException(422, "history is inconsistent: zero candidates remain")
        dist = partition(word, candidates)
        histogram: dict[int, int] = {}
        for size in dist.sizes:
            histogram[size] = histogram.get(size, 0) + 1
        largest_code, largest_members = dist.largest()
        from .feedback import pattern_text_from_code

        return {
            "bins": dist.num_bins,
            "size_histogram": {str(k): v for k, v in sorted(histogram.items())},
            "largest": {
                "pattern": pattern_text_from_code(largest_code, solutions.word_length),
                "size": len(largest_members),
            },
        }

    if ui_dir is not None and (Path(ui_dir) / "index.html").exists():
        app.mount("/", StaticFiles(directory=str(ui_dir), html=True), name="ui")

    return app
