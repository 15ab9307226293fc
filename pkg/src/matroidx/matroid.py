"""Matroid representations behind a single independence oracle.

Elements are dense integer ids ``0 .. ground_size - 1``.  Every matroid also
carries a tuple of external labels (``"1", "2", ...`` by default) which is
what file loaders and the CLI speak.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InvalidElementError, NotSpannedError, PreconditionError

ElementSet = frozenset


class Matroid:
    """Abstract independence oracle.

    Subclasses implement ``_independent`` on already-validated frozensets and
    ``_restricted`` returning a matroid of the same kind on a sorted id tuple.
    """

    kind = "abstract"

    def __init__(self, ground_size: int, labels: Sequence[str] | None = None):
        if ground_size < 0:
            raise ValueError("ground_size must be non-negative")
        if labels is None:
            labels = [str(i + 1) for i in range(ground_size)]
        labels = tuple(str(x) for x in labels)
        if len(labels) != ground_size:
            raise ValueError(f"expected {ground_size} labels, got {len(labels)}")
        if len(set(labels)) != len(labels):
            raise ValueError("element labels must be distinct")
        self.ground_size = ground_size
        self.labels = labels
        self._label_index = {lab: i for i, lab in enumerate(labels)}
        # filled in by restrict(): position i of this matroid is parent id parent_ids[i]
        self.parent_ids: tuple[int, ...] | None = None
        self._cache: dict[frozenset, bool] = {}

    # -- element bookkeeping -------------------------------------------------

    @property
    def ground(self) -> frozenset:
        return frozenset(range(self.ground_size))

    def check(self, s: Iterable[int]) -> frozenset:
        s = frozenset(s)
        for x in s:
            if not isinstance(x, int) or not 0 <= x < self.ground_size:
                raise InvalidElementError(x, f"ground set is 0..{self.ground_size - 1}")
        return s

    def element(self, label) -> int:
        try:
            return self._label_index[str(label)]
        except KeyError:
            raise InvalidElementError(label, "unknown label") from None

    def ids(self, labels: Iterable) -> frozenset:
        return frozenset(self.element(lab) for lab in labels)

    def label_list(self, s: Iterable[int]) -> list[str]:
        return [self.labels[x] for x in sorted(s)]

    # -- oracle --------------------------------------------------------------

    def is_independent(self, s: Iterable[int]) -> bool:
        s = self.check(s)
        hit = self._cache.get(s)
        if hit is None:
            hit = self._independent(s)
            self._cache[s] = hit
        return hit

    def _independent(self, s: frozenset) -> bool:
        raise NotImplementedError

    def rank_of(self, s: Iterable[int]) -> int:
        s = self.check(s)
        basis: set[int] = set()
        for x in sorted(s):
            if self.is_independent(basis | {x}):
                basis.add(x)
        return len(basis)

    @cached_property
    def full_rank(self) -> int:
        return self.rank_of(self.ground)

    def is_base(self, s: Iterable[int]) -> bool:
        s = self.check(s)
        return len(s) == self.full_rank and self.is_independent(s)

    def support(self, i: frozenset, x: int) -> frozenset:
        """C(i, x) for validated arguments; subclasses may override with a fast path."""
        return generic_support(self, i, x)

    # -- structure -----------------------------------------------------------

    def _restricted(self, members: tuple[int, ...]) -> "Matroid":
        raise NotImplementedError

    def describe(self) -> dict:
        return {"kind": self.kind, "ground_size": self.ground_size}

    def __repr__(self):
        params = ", ".join(f"{k}={v}" for k, v in self.describe().items() if k != "kind")
        return f"{type(self).__name__}({params})"


def generic_support(m: Matroid, i: frozenset, x: int) -> frozenset:
    # y is in the support iff dropping it breaks the unique circuit of i + x
    ix = i | {x}
    return frozenset(y for y in i if m.is_independent(ix - {y}))


class UniformMatroid(Matroid):
    kind = "uniform"

    def __init__(self, k: int, n: int, labels=None):
        if not 0 <= k <= n:
            raise ValueError(f"uniform matroid needs 0 <= k <= n, got k={k}, n={n}")
        super().__init__(n, labels)
        self.k = k

    def _independent(self, s):
        return len(s) <= self.k

    def rank_of(self, s):
        return min(len(self.check(s)), self.k)

    def support(self, i, x):
        # i + x is a (k+1)-set, itself the unique circuit
        return i

    def _restricted(self, members):
        return UniformMatroid(min(self.k, len(members)), len(members),
                              [self.labels[j] for j in members])

    def describe(self):
        return {"kind": self.kind, "k": self.k, "n": self.ground_size}


class _DSU:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x, y) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        self.parent[rx] = ry
        return True


class GraphicMatroid(Matroid):
    """Cycle matroid of a multigraph; loops and parallel edges allowed."""

    kind = "graphic"

    def __init__(self, vertex_count: int, edges: Sequence[tuple[int, int]], labels=None):
        edges = tuple((int(u), int(v)) for u, v in edges)
        for u, v in edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge ({u}, {v}) has a vertex outside 0..{vertex_count - 1}")
        super().__init__(len(edges), labels)
        self.vertex_count = vertex_count
        self.edges = edges

    def _independent(self, s):
        dsu = _DSU(self.vertex_count)
        return all(dsu.union(*self.edges[e]) for e in s)

    def rank_of(self, s):
        dsu = _DSU(self.vertex_count)
        return sum(dsu.union(*self.edges[e]) for e in self.check(s))

    def support(self, i, x):
        u, v = self.edges[x]
        if u == v:
            return frozenset()
        adj: dict[int, list[tuple[int, int]]] = {}
        for e in i:
            p, q = self.edges[e]
            adj.setdefault(p, []).append((q, e))
            adj.setdefault(q, []).append((p, e))
        back = {u: None}
        queue = deque([u])
        while queue:
            w = queue.popleft()
            if w == v:
                break
            for nxt, e in adj.get(w, ()):
                if nxt not in back:
                    back[nxt] = (w, e)
                    queue.append(nxt)
        if v not in back:
            raise NotSpannedError(f"edge {self.labels[x]} joins two components of the forest")
        path = set()
        w = v
        while back[w] is not None:
            w, e = back[w]
            path.add(e)
        return frozenset(path)

    def _restricted(self, members):
        return GraphicMatroid(self.vertex_count, [self.edges[j] for j in members],
                              [self.labels[j] for j in members])

    def describe(self):
        return {"kind": self.kind, "vertices": self.vertex_count,
                "edges": [list(e) for e in self.edges]}


class LinearGF2Matroid(Matroid):
    """Column matroid of a bit matrix; each column is packed into one int (bit r = row r)."""

    kind = "linear-gf2"

    def __init__(self, rows: int, columns: Sequence[int], labels=None):
        columns = tuple(int(c) for c in columns)
        for c in columns:
            if c < 0 or c >> rows:
                raise ValueError(f"column {c:b} does not fit in {rows} rows")
        super().__init__(len(columns), labels)
        self.rows = rows
        self.columns = columns

    @classmethod
    def from_rows(cls, matrix: Sequence[Sequence[int]], labels=None) -> "LinearGF2Matroid":
        nrows = len(matrix)
        ncols = len(matrix[0]) if nrows else 0
        cols = [0] * ncols
        for r, row in enumerate(matrix):
            if len(row) != ncols:
                raise ValueError("ragged matrix")
            for c, bit in enumerate(row):
                if bit not in (0, 1):
                    raise ValueError(f"entry {bit!r} is not a bit")
                if bit:
                    cols[c] |= 1 << r
        return cls(nrows, cols, labels)

    def row_matrix(self) -> list[list[int]]:
        return [[(c >> r) & 1 for c in self.columns] for r in range(self.rows)]

    def _basis_size(self, s):
        basis: dict[int, int] = {}  # leading bit -> vector
        for e in s:
            v = self.columns[e]
            while v:
                top = v.bit_length() - 1
                if top not in basis:
                    basis[top] = v
                    break
                v ^= basis[top]
        return len(basis)

    def _independent(self, s):
        return self._basis_size(s) == len(s)

    def rank_of(self, s):
        return self._basis_size(self.check(s))

    def support(self, i, x):
        # reduce x against i, tracking which members of i were used
        basis: dict[int, tuple[int, int]] = {}
        for e in sorted(i):
            v, mask = self.columns[e], 1 << e
            while v:
                top = v.bit_length() - 1
                if top not in basis:
                    basis[top] = (v, mask)
                    break
                bv, bm = basis[top]
                v, mask = v ^ bv, mask ^ bm
        v, mask = self.columns[x], 0
        while v:
            top = v.bit_length() - 1
            if top not in basis:
                raise NotSpannedError(f"column {self.labels[x]} is outside the span")
            bv, bm = basis[top]
            v, mask = v ^ bv, mask ^ bm
        return frozenset(e for e in i if (mask >> e) & 1)

    def _restricted(self, members):
        return LinearGF2Matroid(self.rows, [self.columns[j] for j in members],
                                [self.labels[j] for j in members])

    def describe(self):
        return {"kind": self.kind, "rows": self.row_matrix()}


def rational_rank(vectors: Sequence[Sequence[Fraction]]) -> int:
    """Rank of a list of equal-length vectors by exact Gaussian elimination."""
    work = [list(v) for v in vectors]
    if not work:
        return 0
    rank = 0
    width = len(work[0])
    for col in range(width):
        pivot = next((r for r in range(rank, len(work)) if work[r][col] != 0), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        p = work[rank]
        for r in range(rank + 1, len(work)):
            f = work[r][col]
            if f:
                f /= p[col]
                work[r] = [a - f * b for a, b in zip(work[r], p)]
        rank += 1
        if rank == len(work):
            break
    return rank


class LinearRationalMatroid(Matroid):
    kind = "linear-rational"

    def __init__(self, matrix: Sequence[Sequence], labels=None):
        rows = [[Fraction(x) for x in row] for row in matrix]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix")
        super().__init__(ncols, labels)
        self.matrix = tuple(tuple(r) for r in rows)
        self.column_vectors = tuple(tuple(r[c] for r in rows) for c in range(ncols))

    def _independent(self, s):
        return rational_rank([self.column_vectors[e] for e in s]) == len(s)

    def rank_of(self, s):
        return rational_rank([self.column_vectors[e] for e in self.check(s)])

    def _restricted(self, members):
        return LinearRationalMatroid([[row[j] for j in members] for row in self.matrix],
                                     [self.labels[j] for j in members])

    def describe(self):
        return {"kind": self.kind, "rows": [[str(x) for x in r] for r in self.matrix]}


# -- functional surface ------------------------------------------------------

def is_independent(m: Matroid, s: Iterable[int]) -> bool:
    return m.is_independent(s)


def rank_of(m: Matroid, s: Iterable[int]) -> int:
    return m.rank_of(s)


def is_base(m: Matroid, s: Iterable[int]) -> bool:
    return m.is_base(s)


def fundamental_circuit(m: Matroid, i: Iterable[int], x: int) -> frozenset:
    """Support C(i, x): the unique minimal subset of independent ``i`` spanning ``x``.

    Raises PreconditionError if ``i`` is dependent or contains ``x`` and
    NotSpannedError if ``i + x`` is independent.
    """
    i = m.check(i)
    m.check([x])
    if x in i:
        raise PreconditionError(f"element {m.labels[x]} already lies in the independent set")
    if not m.is_independent(i):
        raise PreconditionError("support requested from a dependent set",
                                witness=m.label_list(i))
    if m.is_independent(i | {x}):
        raise NotSpannedError(f"element {m.labels[x]} is not spanned by the set")
    return m.support(i, x)


def fundamental_circuit_plus(m: Matroid, i: Iterable[int], x: int) -> frozenset:
    """C+(i, x) = C(i, x) + x, the unique circuit of ``i + x``."""
    return fundamental_circuit(m, i, x) | {x}


def is_circuit(m: Matroid, s: Iterable[int]) -> bool:
    s = m.check(s)
    if not s or m.is_independent(s):
        return False
    return all(m.is_independent(s - {y}) for y in s)


def restrict(m: Matroid, s: Iterable[int]) -> Matroid:
    """Restriction to ``s``; ids are relabeled densely in increasing order.

    The result's ``parent_ids`` maps each new id back to its id in ``m``.
    """
    members = tuple(sorted(m.check(s)))
    r = m._restricted(members)
    r.parent_ids = members
    return r


def circuits_containing(m: Matroid, universe: Iterable[int], y: int) -> list[frozenset]:
    """All circuits inside ``universe`` that contain ``y``, by exhaustive subset search."""
    rest = sorted(m.check(universe) - {y})
    found = []
    for size in range(len(rest) + 1):
        for extra in combinations(rest, size):
            c = frozenset(extra) | {y}
            if is_circuit(m, c):
                found.append(c)
    return found
