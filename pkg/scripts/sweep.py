"""Run the full property suite over the default corpus for several seeds.

    python3 scripts/sweep.py --seeds 1 2 3 --gf2-count 100
"""

import argparse
import time
from collections import Counter

from matroidx import harness as h


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seeds", type=int, nargs="+", default=[42])
    ap.add_argument("--gf2-count", type=int, default=50)
    ap.add_argument("--max-vertices", type=int, default=6)
    ap.add_argument("--checks", default="all")
    args = ap.parse_args()

    for seed in args.seeds:
        spec = h.CorpusSpec(seed=seed, gf2_count=args.gf2_count, max_vertices=args.max_vertices)
        t0 = time.perf_counter()
        findings = h.run_property_suite(spec, args.checks)
        elapsed = time.perf_counter() - t0

        routes = Counter()
        for f in findings:
            if f.status != "pass":
                continue
            if f.check == "pair-exchange-constructive":
                routes.update(f.detail["routes"])
            elif f.check == "full-exchange" and "route" in f.detail:
                routes[f.detail["route"]] += 1

        print(f"seed {seed}: {len(findings)} findings in {elapsed:.1f}s")
        for name, row in h.summarize(findings).items():
            print(f"  {name:28s} {row}")
        print(f"  routes: {dict(sorted(routes.items()))}")
        for f in findings:
            if f.status != "pass":
                print(f"  {f.status}: {f.check} on {f.matroid['name']}: {f.detail}")


if __name__ == "__main__":
    main()
