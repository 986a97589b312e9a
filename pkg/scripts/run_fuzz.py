"""Run the concordance fuzzer over a grid of specs and dump summaries as JSON lines.

    python scripts/run_fuzz.py --out fuzz.jsonl --trials 200
"""

import argparse
import json
import sys
import time

from syzlef.concordance import FuzzSpec, fuzz

GRID = [
    FuzzSpec("monomial", (3, 3), (1, 6)),
    FuzzSpec("monomial", (4, 4), (1, 5)),
    FuzzSpec("monomial", (5, 6), (1, 5)),
    FuzzSpec("dense", (3, 3), (1, 4)),
    FuzzSpec("dense", (4, 4), (3, 3)),
    FuzzSpec("dense", (4, 6), (2, 3)),
]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--trials", type=int, default=100)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--out", default="-", help="output path, '-' for stdout")
    args = parser.parse_args()
    out = sys.stdout if args.out == "-" else open(args.out, "w", encoding="utf-8")
    clean = True
    for i, base in enumerate(GRID):
        spec = FuzzSpec(base.kind, base.n_range, base.degree_range, args.trials, seed=args.seed + i)
        start = time.perf_counter()
        summary = fuzz(spec)
        row = summary.to_dict()
        row["seconds"] = round(time.perf_counter() - start, 2)
        out.write(json.dumps(row) + "\n")
        clean &= summary.ok
        print(
            f"{spec.kind:8} n={spec.n_range} d={spec.degree_range}: tested {summary.tested}, "
            f"violations {len(summary.violations)}, gap<=1 {summary.gap_le_1}, {row['seconds']}s",
            file=sys.stderr,
        )
    if out is not sys.stdout:
        out.close()
    sys.exit(0 if clean else 3)


if __name__ == "__main__":
    main()
