"""Reference computations that avoid the library's own algorithms."""

from itertools import combinations, permutations


def is_forest(vertex_count, edges):
    """Cycle test by repeated leaf stripping; a loop or a parallel pair is a cycle."""
    edges = list(edges)
    if any(u == v for u, v in edges):
        return False
    while edges:
        degree = [0] * vertex_count
        for u, v in edges:
            degree[u] += 1
            degree[v] += 1
        kept = [(u, v) for u, v in edges if degree[u] > 1 and degree[v] > 1]
        if len(kept) == len(edges):
            return False
        edges = kept
    return True


def gf2_rank_rows(vectors):
    """Rank over GF(2) of 0/1 lists by row reduction on plain lists."""
    rows = [list(v) for v in vectors]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][c]:
                rows[r] = [(x + y) % 2 for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def independent_sets(indep, ground):
    return [frozenset(s) for k in range(len(ground) + 1) for s in combinations(sorted(ground), k)
            if indep(frozenset(s))]


def unique_circuit(indep, s):
    """The unique circuit inside s, found by scanning all subsets."""
    found = [frozenset(c) for k in range(1, len(s) + 1) for c in combinations(sorted(s), k)
             if not indep(frozenset(c)) and all(indep(frozenset(c) - {y}) for y in c)]
    assert len(found) == 1, found
    return found[0]


def all_serial_exchanges(is_base, a_base, b_base, a_subset):
    """Every (a_order, b_order) by permutation enumeration."""
    a_base, b_base = frozenset(a_base), frozenset(b_base)
    k = len(a_subset)
    out = set()
    for a_ord in permutations(sorted(a_subset)):
        for b_sub in combinations(sorted(b_base), k):
            for b_ord in permutations(b_sub):
                a_side, b_side = set(a_base), set(b_base)
                ok = True
                for a, b in zip(a_ord, b_ord):
                    a_side = a_side - {a} | {b}
                    b_side = b_side - {b} | {a}
                    if not (is_base(frozenset(a_side)) and is_base(frozenset(b_side))):
                        ok = False
                        break
                if ok:
                    out.add((a_ord, b_ord))
    return out


def bfs_distances(vertices, adjacent):
    """All-pairs distances by Floyd-Warshall on an explicit vertex list."""
    n = len(vertices)
    inf = float("inf")
    d = [[0 if i == j else (1 if adjacent(vertices[i], vertices[j]) else inf) for j in range(n)]
         for i in range(n)]
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return d
