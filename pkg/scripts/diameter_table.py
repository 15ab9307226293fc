"""Base-cobase graph sizes and diameters for the curated graphs and small uniform matroids."""

import argparse

from matroidx import UniformMatroid
from matroidx.basecobase import build_graph, component_diameters, diameter
from matroidx.harness import CURATED_GRAPHS, curated_graph


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-k", type=int, default=5)
    args = ap.parse_args()

    rows = [(f"U({k},{2 * k})", UniformMatroid(k, 2 * k)) for k in range(1, args.max_k + 1)]
    rows += [(name, curated_graph(name)) for name in CURATED_GRAPHS]
    print(f"{'matroid':22s} {'rank':>4} {'vertices':>8} {'edges':>7} {'diameter':>8}")
    for name, m in rows:
        g = build_graph(m)
        d = diameter(g)
        shown = d if d is not None else f"disc {component_diameters(g)}"
        flag = "" if d == m.full_rank else "  <-- differs from rank"
        print(f"{name:22s} {m.full_rank:>4} {len(g.vertices):>8} {len(g.adjacency):>7} {shown!s:>8}{flag}")


if __name__ == "__main__":
    main()
