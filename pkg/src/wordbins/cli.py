"""Command-line driver: build, evaluate, suggest, sweep, optimal, daily, serve."""

from __future__ import annotations

import csv
import datetime as dt
from pathlib import Path

import click

from .feedback import FeedbackError, parse_pattern
from .heuristics import HEURISTIC_IDS, HeuristicSpec, rank_guesses
from .history import LedgerError, daily_strategy, load_ledger, remaining_solutions
from .lexicon import Lexicon, LexiconError, load_lexicon
from .optimal import OptimalError, SearchConfig, optimal_tree
from .strategy import (
    MODES,
    Constraints,
    EvalReport,
    StrategyError,
    build_tree,
    evaluate,
    legal_guesses,
    load_tree,
    serialize_tree,
)

CSV_COLUMNS = ["method", "start", "avg", "max", "pct6"]


def _fail(message: str) -> None:
    raise click.ClickException(message)


def _load(path: str) -> Lexicon:
    try:
        return load_lexicon(path)
    except (OSError, LexiconError) as exc:
        _fail(str(exc))


def _parse_history(text: str) -> Constraints:
    """Parse "word=PATTERN,word=PATTERN" into Constraints."""
    steps = []
    if text:
        for chunk in text.split(","):
            chunk = chunk.strip()
            if not chunk:
                continue
            if "=" not in chunk:
                _fail(f"bad history entry {chunk!r}: expected word=PATTERN")
            word, _, pattern_text = chunk.partition("=")
            try:
                steps.append((word.strip(), parse_pattern(pattern_text.strip().upper())))
            except FeedbackError as exc:
                _fail(str(exc))
    return Constraints(tuple(steps))


def _report_row(method: str, start: str, report: EvalReport) -> dict:
    return {
        "method": method,
        "start": start,
        "avg": f"{float(report.average):.4f}",
        "max": report.max_guesses,
        "pct6": f"{report.percent_in_six:.2f}",
    }


def _print_report_table(rows: list[dict]) -> None:
    widths = {c: max(len(c), *(len(str(r[c])) for r in rows)) for c in CSV_COLUMNS}
    header = "  ".join(c.ljust(widths[c]) for c in CSV_COLUMNS)
    click.echo(header)
    click.echo("  ".join("-" * widths[c] for c in CSV_COLUMNS))
    for r in rows:
        click.echo("  ".join(str(r[c]).ljust(widths[c]) for c in CSV_COLUMNS))


def _write_csv(rows: list[dict], path: str) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.DictWriter(fh, fieldnames=CSV_COLUMNS)
        writer.writeheader()
        writer.writerows(rows)


heuristic_option = click.option(
    "--heuristic", "-H", default="negnumbins", type=click.Choice(HEURISTIC_IDS),
    show_default=True, help="Primary heuristic.",
)
tiebreak_option = click.option(
    "--tiebreak", "-t", default=None, type=click.Choice(HEURISTIC_IDS),
    help="Tie-break heuristic.",
)
mode_option = click.option(
    "--mode", "-m", default="regular", type=click.Choice(MODES), show_default=True,
)


@click.group()
def main() -> None:
    """Strategy synthesis and live-play assistance for feedback word games."""


@main.command()
@click.option("--solutions", required=True, type=click.Path(exists=True))
@click.option("--guesses", type=click.Path(exists=True))
@heuristic_option
@tiebreak_option
@mode_option
@click.option("--out", type=click.Path(), help="Write the tree document here.")
@click.option("--csv", "csv_path", type=click.Path(), help="Append the report row as CSV.")
def build(solutions, guesses, heuristic, tiebreak, mode, out, csv_path) -> None:
    """Build a greedy strategy tree and report its statistics."""
    sol = _load(solutions)
    gue = _load(guesses) if guesses else sol
    spec = HeuristicSpec(heuristic, tiebreak)
    try:
        tree = build_tree(sol, gue, spec, mode)
        report = evaluate(tree, sol)
    except StrategyError as exc:
        _fail(str(exc))
    if out:
        Path(out).write_text(serialize_tree(tree), encoding="utf-8")
        click.echo(f"tree written to {out}")
    row = _report_row(spec.name, tree.root.guess, report)
    _print_report_table([row])
    if csv_path:
        _write_csv([row], csv_path)


@main.command("eval")
@click.option("--tree", "tree_path", required=True, type=click.Path(exists=True))
@click.option("--solutions", required=True, type=click.Path(exists=True))
@click.option("--csv", "csv_path", type=click.Path())
def eval_cmd(tree_path, solutions, csv_path) -> None:
    """Evaluate a stored tree document against a solution list."""
    sol = _load(solutions)
    try:
        tree = load_tree(Path(tree_path).read_text(encoding="utf-8"))
        report = evaluate(tree, sol)
    except StrategyError as exc:
        _fail(str(exc))
    row = _report_row(Path(tree_path).stem, tree.root.guess, report)
    _print_report_table([row])
    click.echo(f"histogram: {report.histogram}")
    if csv_path:
        _write_csv([row], csv_path)


@main.command()
@click.option("--solutions", required=True, type=click.Path(exists=True))
@click.option("--guesses", type=click.Path(exists=True))
@click.option("--history", default="", help='Comma list like "raise=BYBBG,close=GBBYB".')
@heuristic_option
@tiebreak_option
@mode_option
@click.option("--top", "top_k", default=10, show_default=True, type=click.IntRange(min=1))
def suggest(solutions, guesses, history, heuristic, tiebreak, mode, top_k) -> None:
    """Rank next guesses given the game so far."""
    sol = _load(solutions)
    gue = _load(guesses) if guesses else sol
    constraints = _parse_history(history)
    for word, _ in constraints.steps:
        if word not in gue:
            _fail(f"history guess {word!r} is not in the guess lexicon")
    candidates = [w for w in sol if constraints.consistent(w)]
    if not candidates:
        _fail("history is inconsistent: no candidate solutions remain")
    allowed = legal_guesses(gue.words, mode, constraints)
    if not allowed:
        _fail(f"no {mode}-legal guesses remain")
    spec = HeuristicSpec(heuristic, tiebreak)
    rows = rank_guesses(candidates, allowed, spec, constraints.steps, top_k=top_k)
    click.echo(f"remaining candidates: {len(candidates)}")
    click.echo(f"{'word':<8}{'score':>14}{'bins':>6}{'maxbin':>8}{'expbin':>9}{'entropy':>9}  consistent")
    for r in rows:
        score_text = str(r["score"])
        if isinstance(r["score"], float):
            score_text = f"{r['score']:.4f}"
        click.echo(
            f"{r['word']:<8}{score_text:>14}{r['bins']:>6}{r['max_bin_size']:>8}"
            f"{r['expected_bin_size']:>9.3f}{r['entropy']:>9.4f}  {'yes' if r['consistent'] else 'no'}"
        )


@main.command()
@click.option("--solutions", required=True, type=click.Path(exists=True))
@click.option("--guesses", type=click.Path(exists=True))
@mode_option
@click.option(
    "--spec", "specs", multiple=True,
    help="primary or primary:tiebreak; repeatable. Default: all eight heuristics.",
)
@click.option("--csv", "csv_path", type=click.Path())
def sweep(solutions, guesses, mode, specs, csv_path) -> None:
    """Compare heuristics side by side on one solution list."""
    sol = _load(solutions)
    gue = _load(guesses) if guesses else sol
    if specs:
        parsed = []
        for text in specs:
            primary, _, tiebreak = text.partition(":")
            try:
                parsed.append(HeuristicSpec(primary, tiebreak or None))
            except Exception as exc:
                _fail(str(exc))
    else:
        parsed = [HeuristicSpec(h) for h in HEURISTIC_IDS]
    rows = []
    for spec in parsed:
        tree = build_tree(sol, gue, spec, mode)
        report = evaluate(tree, sol)
        rows.append(_report_row(spec.name, tree.root.guess, report))
        click.echo(f"done: {spec.name}", err=True)
    _print_report_table(rows)
    if csv_path:
        _write_csv(rows, csv_path)
        click.echo(f"csv written to {csv_path}")


@main.command()
@click.option("--solutions", required=True, type=click.Path(exists=True))
@click.option("--guesses", type=click.Path(exists=True))
@mode_option
@click.option("--cap", default=0, show_default=True, type=click.IntRange(min=0),
              help="Guesses tried per node; 0 = exhaustive.")
@click.option("--max-depth", default=0, show_default=True, type=click.IntRange(min=0),
              help="Depth bound; 0 = unbounded.")
@click.option("--no-memo", is_flag=True, help="Disable memoization (for testing).")
@click.option("--out", type=click.Path())
def optimal(solutions, guesses, mode, cap, max_depth, no_memo, out) -> None:
    """Exhaustive minimum-average search (feasible at small scale)."""
    sol = _load(solutions)
    gue = _load(guesses) if guesses else sol
    config = SearchConfig(mode=mode, max_depth=max_depth, cap=cap, memo=not no_memo)
    try:
        result = optimal_tree(sol, gue, config)
    except (OptimalError, StrategyError) as exc:
        _fail(str(exc))
    if out:
        Path(out).write_text(serialize_tree(result.tree), encoding="utf-8")
        click.echo(f"tree written to {out}")
    row = _report_row(f"optimal-{mode}", result.tree.root.guess, result.report)
    _print_report_table([row])
    click.echo(f"exact: {'yes' if result.exact else 'no'}")


@main.command()
@click.option("--solutions", required=True, type=click.Path(exists=True))
@click.option("--ledger", "ledger_path", required=True, type=click.Path(exists=True))
@click.option("--date", "as_of", required=True, help="Regenerate as of this day (YYYY-MM-DD).")
@heuristic_option
@tiebreak_option
@mode_option
@click.option("--exclude-guesses", is_flag=True, help="Drop used words from the guess list too.")
@click.option("--out-dir", default="daily", show_default=True, type=click.Path())
def daily(solutions, ledger_path, as_of, heuristic, tiebreak, mode, exclude_guesses, out_dir) -> None:
    """Regenerate the strategy excluding solutions already used."""
    sol = _load(solutions)
    try:
        ledger = load_ledger(ledger_path)
        day = dt.date.fromisoformat(as_of)
    except (LedgerError, ValueError) as exc:
        _fail(str(exc))
    spec = HeuristicSpec(heuristic, tiebreak)
    try:
        tree, report = daily_strategy(sol, ledger, day, spec, mode, exclude_guesses)
        remaining = remaining_solutions(sol, ledger, day)
    except (LedgerError, StrategyError) as exc:
        _fail(str(exc))
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    tree_path = out / f"{day.isoformat()}-tree.json"
    report_path = out / f"{day.isoformat()}-report.csv"
    tree_path.write_text(serialize_tree(tree), encoding="utf-8")
    row = _report_row(spec.name, tree.root.guess, report)
    _write_csv([row], str(report_path))
    click.echo(f"remaining solutions: {len(remaining)}")
    _print_report_table([row])
    click.echo(f"wrote {tree_path} and {report_path}")


@main.command()
@click.option("--port", default=8000, show_default=True, type=int)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--solutions", required=True, type=click.Path(exists=True))
@click.option("--guesses", type=click.Path(exists=True))
@click.option("--ledger", "ledger_path", type=click.Path(exists=True))
@click.option("--ui", "ui_dir", type=click.Path(), default="frontend",
              show_default=True, help="Static assistant UI directory to serve at /.")
def serve(port, host, solutions, guesses, ledger_path, ui_dir) -> None:
    """Run the local suggestion service used by the browser assistant."""
    import uvicorn

    from .service import create_app

    sol = _load(solutions)
    gue = _load(guesses) if guesses else sol
    ledger = None
    if ledger_path:
        try:
            ledger = load_ledger(ledger_path)
        except LedgerError as exc:
            _fail(str(exc))
    app = create_app(sol, gue, ledger, ui_dir=ui_dir)
    if (Path(ui_dir) / "index.html").exists():
        click.echo(f"assistant UI: http://{host}:{port}/")
    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
