"""Replay the worked examples and the fuzz corpora; print one line per claim.

    python scripts/paper_examples.py [--seed 0]
"""

import argparse
import sys
import time

from syzlef.golden import run_claims


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    start = time.perf_counter()
    claims = run_claims(seed=args.seed)
    for c in claims:
        print(c.line())
    passed = sum(c.passed for c in claims)
    print(f"{passed}/{len(claims)} claims passed in {time.perf_counter() - start:.1f}s")
    sys.exit(0 if passed == len(claims) else 1)


if __name__ == "__main__":
    main()
