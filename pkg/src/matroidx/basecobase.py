"""Base-cobase graphs of block matroids and cyclic base orders."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .errors import PreconditionError, StepBudgetExceeded
from .exchange import BasePair, ExchangeSequence, verify_sequence
from .matroid import Matroid


@dataclass(frozen=True)
class BaseCobaseGraph:
    block: Matroid
    vertices: tuple  # of frozenset, sorted by sorted-member tuple
    adjacency: tuple  # of (i, j) with i < j

    @property
    def rank(self) -> int:
        return self.block.full_rank

    def neighbours(self) -> list[list[int]]:
        nb: list[list[int]] = [[] for _ in self.vertices]
        for i, j in self.adjacency:
            nb[i].append(j)
            nb[j].append(i)
        return nb

    def index(self) -> dict:
        return {v: i for i, v in enumerate(self.vertices)}


@dataclass(frozen=True)
class CyclicOrder:
    sequence: tuple

    def windows(self, n: int) -> list[frozenset]:
        seq = self.sequence
        return [frozenset(seq[(i + j) % len(seq)] for j in range(n)) for i in range(len(seq))]


def block_witness(m: Matroid):
    """A base whose complement is also a base, or None."""
    n = m.full_rank
    if 2 * n != m.ground_size:
        return None
    for v in _base_cobase_sets(m, first_only=True):
        return v
    return None


def _base_cobase_sets(m: Matroid, first_only=False):
    # each element goes into S or its complement T; both sides must stay independent
    n = m.full_rank
    size = m.ground_size
    out = []

    def rec(i, s, t):
        if i == size:
            out.append(frozenset(s))
            return first_only
        if len(s) < n and m.is_independent(s | {i}):
            if rec(i + 1, s | {i}, t):
                return True
        if len(t) < n and m.is_independent(t | {i}):
            if rec(i + 1, s, t | {i}):
                return True
        return False

    if 2 * n == size:
        rec(0, frozenset(), frozenset())
    return out


def build_graph(m: Matroid) -> BaseCobaseGraph:
    n = m.full_rank
    if 2 * n != m.ground_size:
        raise PreconditionError(
            f"not a block matroid: rank {n} but ground set has {m.ground_size} elements",
            witness={"rank": n, "ground_size": m.ground_size})
    verts = _base_cobase_sets(m)
    if not verts:
        raise PreconditionError("not a block matroid: no base has a base complement",
                                witness={"rank": n, "ground_size": m.ground_size})
    verts.sort(key=lambda v: tuple(sorted(v)))
    index = {v: i for i, v in enumerate(verts)}
    ground = m.ground
    edges = []
    for i, v in enumerate(verts):
        for x in v:
            for y in ground - v:
                j = index.get(v - {x} | {y})
                if j is not None and i < j:
                    edges.append((i, j))
    edges.sort()
    return BaseCobaseGraph(m, tuple(verts), tuple(edges))


def _bfs(nb, src) -> list[int]:
    dist = [-1] * len(nb)
    dist[src] = 0
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for w in nb[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def is_connected(g: BaseCobaseGraph) -> bool:
    if not g.vertices:
        raise PreconditionError("empty graph")
    return min(_bfs(g.neighbours(), 0)) >= 0


def diameter(g: BaseCobaseGraph) -> int | None:
    """Largest eccentricity, or None when the graph is disconnected."""
    if not g.vertices:
        raise PreconditionError("empty graph")
    nb = g.neighbours()
    best = 0
    for src in range(len(nb)):
        dist = _bfs(nb, src)
        if min(dist) < 0:
            return None
        best = max(best, max(dist))
    return best


def components(g: BaseCobaseGraph) -> list[list[int]]:
    nb = g.neighbours()
    seen = [False] * len(nb)
    comps = []
    for s in range(len(nb)):
        if seen[s]:
            continue
        dist = _bfs(nb, s)
        comp = [i for i, d in enumerate(dist) if d >= 0]
        for i in comp:
            seen[i] = True
        comps.append(comp)
    return comps


def component_diameters(g: BaseCobaseGraph) -> list[int]:
    nb = g.neighbours()
    out = []
    for comp in components(g):
        out.append(max(max(d for d in _bfs(nb, s) if d >= 0) for s in comp))
    return out


def export_adjacency(g: BaseCobaseGraph) -> str:
    """One vertex per line (labels of its members), then an edge list by index."""
    m = g.block
    lines = [f"# vertices {len(g.vertices)}"]
    lines += [" ".join(m.label_list(v)) for v in g.vertices]
    lines.append(f"# edges {len(g.adjacency)}")
    lines += [f"{i} {j}" for i, j in g.adjacency]
    return "\n".join(lines) + "\n"


# -- cyclic base orders ------------------------------------------------------

def is_cyclic_order(p: BasePair, order: CyclicOrder) -> bool:
    n = p.rank
    seq = order.sequence
    if sorted(seq) != sorted(p.a_base | p.b_base) or len(seq) != 2 * n:
        return False
    if set(seq[:n]) != p.a_base:
        return False
    return all(p.matroid.is_base(w) for w in order.windows(n))


def find_cyclic_order(p: BasePair, max_steps: int | None = None) -> CyclicOrder | None:
    """Lexicographically first cyclic base order starting with the elements of A.

    Windows are checked as soon as their last position is filled; windows
    that wrap around are checked once the sequence is complete.
    """
    n = p.rank
    m = p.matroid
    total = 2 * n
    memo: dict[frozenset, bool] = {}
    seq: list[int] = []
    steps = 0

    def base(s):
        hit = memo.get(s)
        if hit is None:
            hit = memo[s] = m.is_base(s)
        return hit

    def rec(a_left, b_left):
        nonlocal steps
        pos = len(seq)
        if pos == total:
            return all(base(frozenset(seq[(i + j) % total] for j in range(n)))
                       for i in range(n + 1, total))
        pool = a_left if pos < n else b_left
        for x in sorted(pool):
            steps += 1
            if max_steps is not None and steps > max_steps:
                raise StepBudgetExceeded(f"cyclic order search exceeded {max_steps} steps")
            seq.append(x)
            if pos >= n and not base(frozenset(seq[pos - n + 1:pos + 1])):
                seq.pop()
                continue
            if rec(a_left - {x}, b_left) if pos < n else rec(a_left, b_left - {x}):
                return True
            seq.pop()
        return False

    if n == 0:
        return CyclicOrder(())
    if rec(p.a_base, p.b_base):
        return CyclicOrder(tuple(seq))
    return None


def serial_to_cyclic(p: BasePair, seq: ExchangeSequence) -> CyclicOrder:
    """Concatenate a full serial symmetric exchange into a cyclic base order."""
    if len(seq) != p.rank:
        raise PreconditionError(f"need a full exchange of length {p.rank}, got {len(seq)}")
    if not verify_sequence(p, seq):
        raise PreconditionError("sequence is not a serial symmetric exchange")
    order = CyclicOrder(tuple(seq.a_order) + tuple(seq.b_order))
    if not is_cyclic_order(p, order):
        raise PreconditionError("concatenated order has a non-base window")
    return order


def cyclic_to_serial(p: BasePair, order: CyclicOrder) -> ExchangeSequence:
    """Inverse direction: split a cyclic order into its A and B halves."""
    n = p.rank
    return ExchangeSequence.build(p, order.sequence[:n], order.sequence[n:])


def bases_with_base_complement(m: Matroid) -> Sequence[frozenset]:
    return sorted(_base_cobase_sets(m), key=lambda v: tuple(sorted(v)))
