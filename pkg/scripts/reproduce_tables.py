#!/usr/bin/env python3
"""Rebuild the headline comparison tables from the packaged word list.

Runs every single heuristic, the best regular-mode combinations, and the
superhard-mode combination on data/solutions-2315.txt (plus the 3158-word
list when present) and prints aligned tables with CSV copies in results/.

    $ python scripts/reproduce_tables.py [--quick]

--quick skips maxsimilarity, the one slow build (~15s instead of ~30s).
"""

import argparse
import csv
import sys
import time
from pathlib import Path

REPO_ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(REPO_ROOT / "src"))

from wordbins import HeuristicSpec, build_tree, evaluate, load_lexicon  # noqa: E402
from wordbins.heuristics import HEURISTIC_IDS  # noqa: E402

RESULTS_DIR = REPO_ROOT / "results"
COLUMNS = ["method", "start", "avg", "max", "pct6"]


def run_rows(lexicon, rows, mode="regular"):
    out = []
    for spec in rows:
        started = time.time()
        tree = build_tree(lexicon, spec=spec, mode=mode)
        report = evaluate(tree, lexicon)
        out.append(
            {
                "method": spec.name,
                "start": tree.root.guess,
                "avg": f"{float(report.average):.4f}",
                "max": report.max_guesses,
                "pct6": f"{report.percent_in_six:.2f}",
            }
        )
        print(
            f"  {spec.name:<28} {tree.root.guess}  avg {out[-1]['avg']}  "
            f"max {report.max_guesses}  pct6 {out[-1]['pct6']}  "
            f"[{time.time() - started:.1f}s]",
            flush=True,
        )
    return out


def emit(name, rows):
    RESULTS_DIR.mkdir(exist_ok=True)
    path = RESULTS_DIR / f"{name}.csv"
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.DictWriter(fh, fieldnames=COLUMNS)
        writer.writeheader()
        writer.writerows(rows)
    print(f"  -> {path}")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="skip maxsimilarity")
    args = parser.parse_args()

    singles = [HeuristicSpec(h) for h in HEURISTIC_IDS]
    if args.quick:
        singles = [s for s in singles if s.primary != "maxsimilarity"]
    combos = [
        HeuristicSpec("negnumbins", "expbinsize"),
        HeuristicSpec("negnumbins", "negentropy"),
        HeuristicSpec("negnumbins", "maxonediffs"),
    ]
    superhard = [
        HeuristicSpec("negnumbins", "maxonediffs"),
        HeuristicSpec("negnumbins", "expbinsize"),
    ]

    for label in ("solutions-2315", "solutions-3158"):
        path = REPO_ROOT / "data" / f"{label}.txt"
        if not path.exists():
            print(f"{label}: not present, skipping")
            continue
        lexicon = load_lexicon(path)
        print(f"{label} ({len(lexicon)} words): single heuristics")
        emit(f"{label}-singles", run_rows(lexicon, singles))
        print(f"{label}: combinations")
        emit(f"{label}-combos", run_rows(lexicon, combos))
        print(f"{label}: superhard combinations")
        emit(f"{label}-superhard", run_rows(lexicon, superhard, mode="superhard"))


if __name__ == "__main__":
    main()
