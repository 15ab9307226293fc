"""Empirical check that every subset of A admits a serial symmetric exchange.

Only pairs of elements are covered by a constructive argument; larger subsets
are searched exhaustively here.  Prints, per rank and subset size, how many
subsets were tried, how many had a solution, and the smallest solution count.

    python3 scripts/subset_exchange.py --ranks 4 5 --count 30 --sizes 3 4
"""

import argparse
import random
from itertools import combinations

from matroidx.exchange import iter_serial_exchanges
from matroidx.harness import random_gf2_pair


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--ranks", type=int, nargs="+", default=[4, 5])
    ap.add_argument("--sizes", type=int, nargs="+", default=[3])
    ap.add_argument("--count", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-steps", type=int, default=2_000_000)
    args = ap.parse_args()

    print(f"{'rank':>4} {'size':>4} {'subsets':>8} {'solved':>7} {'min sols':>9}")
    for r in args.ranks:
        rng = random.Random(f"{args.seed}:subset:{r}")
        pairs = [random_gf2_pair(r, rng) for _ in range(args.count)]
        for size in args.sizes:
            if size > r:
                continue
            tried = solved = 0
            fewest = None
            for p in pairs:
                for sub in combinations(sorted(p.a_base), size):
                    n = sum(1 for _ in iter_serial_exchanges(p, sub, args.max_steps))
                    tried += 1
                    solved += n > 0
                    fewest = n if fewest is None else min(fewest, n)
                    if n == 0:
                        labels = p.matroid.label_list(sub)
                        print(f"  no exchange: rank {r} subset {labels}\n{p.matroid.describe()}")
            print(f"{r:>4} {size:>4} {tried:>8} {solved:>7} {fewest if fewest is not None else '-':>9}")


if __name__ == "__main__":
    main()
