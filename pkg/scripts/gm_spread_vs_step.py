"""Semistable monomial ideals: how often the splitting spread exceeds 1 while
every consecutive step stays <= 1.

    python scripts/gm_spread_vs_step.py --trials 500
"""

import argparse
import random
from collections import Counter

from syzlef.artinian import IdealGenerators
from syzlef.concordance import random_monomial_ideal
from syzlef.pencil import splitting_type
from syzlef.stability import monomial_semistable


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--trials", type=int, default=300)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--max-degree", type=int, default=6)
    args = parser.parse_args()
    rng = random.Random(args.seed)
    spreads, steps = Counter(), Counter()
    examples = []
    semistable = 0
    for _ in range(args.trials):
        ideal = random_monomial_ideal(rng, rng.randint(3, 6), (1, args.max_degree))
        if monomial_semistable(ideal).status != "semistable":
            continue
        semistable += 1
        t = splitting_type(ideal, seed=rng.getrandbits(32))
        spreads[t.gap] += 1
        steps[t.max_step] += 1
        if t.gap >= 2 and len(examples) < 5:
            examples.append((str(ideal), t.twists))
    print(f"semistable: {semistable}/{args.trials}")
    print("spread a_1 - a_(n-1):", dict(sorted(spreads.items())))
    print("largest consecutive step:", dict(sorted(steps.items())))
    for ideal, twists in examples:
        print(f"  {ideal}: {twists}")
    print("family (X^a, Y^a, Z^a, XYZ):")
    for a in range(2, 8):
        ideal = IdealGenerators.of(f"X^{a}", f"Y^{a}", f"Z^{a}", "X*Y*Z")
        t = splitting_type(ideal)
        status = monomial_semistable(ideal).status
        print(f"  a={a}: {status:15} twists {t.twists}  spread {t.gap}  step {t.max_step}")


if __name__ == "__main__":
    main()
