from itertools import combinations

import pytest
import sympy
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conftest import eid, ids
from matroidx import (
    GraphicMatroid,
    LinearGF2Matroid,
    LinearRationalMatroid,
    UniformMatroid,
    fundamental_circuit,
    is_base,
    is_independent,
    rank_of,
    restrict,
)
from matroidx.errors import InvalidElementError, NotSpannedError, PreconditionError
from matroidx.matroid import fundamental_circuit_plus, generic_support, is_circuit
from oracles import gf2_rank_rows, is_forest, unique_circuit
from strategies import matroid_and_subsets, matroids


class TestExamples:
    def test_is_independent(self, u24, k4, i3i3):
        assert is_independent(u24, ids(u24, 1, 2))
        assert is_independent(k4, ids(k4, "e4", "e5", "e6"))
        assert not is_independent(i3i3, ids(i3i3, 1, 4))

    def test_rank_of(self, u24, k4, i3i3):
        assert rank_of(u24, ids(u24, 1, 2, 3)) == 2
        assert rank_of(k4, k4.ground) == 3
        assert rank_of(i3i3, ids(i3i3, 1, 2, 4)) == 2
        assert rank_of(k4, frozenset()) == 0

    def test_is_base(self, u24, k4, rank4):
        assert is_base(u24, ids(u24, 1, 3))
        assert not is_base(k4, ids(k4, "e1", "e2", "e4"))
        assert is_base(rank4, ids(rank4, 5, 6, 7, 8))

    def test_fundamental_circuit(self, u24, k4, i3i3):
        assert fundamental_circuit(i3i3, ids(i3i3, 4, 5, 6), eid(i3i3, 1)) == ids(i3i3, 4)
        assert fundamental_circuit(u24, ids(u24, 3, 4), eid(u24, 1)) == ids(u24, 3, 4)
        assert fundamental_circuit(k4, ids(k4, "e4", "e5", "e6"), eid(k4, "e1")) == ids(k4, "e5", "e6")
        assert fundamental_circuit_plus(u24, ids(u24, 3, 4), 0) == ids(u24, 1, 3, 4)

    def test_fundamental_circuit_errors(self, u24, i3i3):
        with pytest.raises(PreconditionError):
            fundamental_circuit(u24, ids(u24, 1, 2, 3), eid(u24, 4))
        with pytest.raises(NotSpannedError):
            fundamental_circuit(i3i3, ids(i3i3, 1, 2), eid(i3i3, 6))
        with pytest.raises(PreconditionError):
            fundamental_circuit(u24, ids(u24, 1, 2), eid(u24, 1))

    def test_invalid_ids_name_the_element(self, u24):
        with pytest.raises(InvalidElementError, match="7"):
            is_independent(u24, {0, 7})
        with pytest.raises(InvalidElementError, match="-1"):
            rank_of(u24, {-1})
        with pytest.raises(InvalidElementError):
            u24.element("nope")

    def test_restrict(self, u24, k4):
        r = restrict(u24, ids(u24, 1, 2, 3))
        assert r.ground_size == 3 and r.full_rank == 2
        assert all(is_base(r, set(s)) for s in combinations(range(3), 2))
        g = restrict(k4, ids(k4, "e1", "e2", "e3", "e4"))
        assert g.full_rank == 3
        assert not is_independent(g, ids(g, "e1", "e2", "e4"))
        assert g.parent_ids == (0, 1, 2, 3)
        empty = restrict(k4, set())
        assert empty.ground_size == 0 and empty.full_rank == 0

    def test_loops_and_parallel_edges(self):
        m = GraphicMatroid(2, [(0, 0), (0, 1), (0, 1)])
        assert not is_independent(m, {0})
        assert not is_independent(m, {1, 2})
        assert fundamental_circuit(m, {1}, 0) == frozenset()
        assert fundamental_circuit(m, {1}, 2) == {1}

    def test_rational(self):
        m = LinearRationalMatroid([[1, 0, 1, "1/2"], [0, 1, 1, "-3/2"]])
        assert m.full_rank == 2
        assert not is_independent(m, {0, 1, 2})
        assert fundamental_circuit(m, {0, 1}, 3) == {0, 1}
        assert fundamental_circuit(m, {0, 1}, 2) == {0, 1}


def reference_independent(m, s):
    if isinstance(m, UniformMatroid):
        return len(s) <= m.k
    if isinstance(m, GraphicMatroid):
        return is_forest(m.vertex_count, [m.edges[e] for e in s])
    if isinstance(m, LinearGF2Matroid):
        vecs = [[(m.columns[e] >> r) & 1 for r in range(m.rows)] for e in s]
        return gf2_rank_rows(vecs) == len(s)
    cols = [list(m.column_vectors[e]) for e in s]
    return not cols or sympy.Matrix(cols).rank() == len(s)


@settings(max_examples=150, deadline=None)
@given(matroid_and_subsets(count=1))
def test_oracle_matches_reference(data):
    m, s = data
    assert m.is_independent(s) == reference_independent(m, s)


@settings(max_examples=150, deadline=None)
@given(matroid_and_subsets(count=1))
def test_hereditary(data):
    m, s = data
    assume(m.is_independent(s))
    for y in s:
        assert m.is_independent(s - {y})


@settings(max_examples=150, deadline=None)
@given(matroid_and_subsets(count=2))
def test_exchange_axiom(data):
    m, s, t = data
    s, t = greedy_independent(m, s), greedy_independent(m, t)
    if len(s) > len(t):
        s, t = t, s
    assume(len(t) > len(s))
    assert any(m.is_independent(s | {x}) for x in t - s)


def greedy_independent(m, s):
    out = frozenset()
    for x in (s if isinstance(s, list) else sorted(s)):
        if m.is_independent(out | {x}):
            out |= {x}
    return out


@settings(max_examples=150, deadline=None)
@given(matroid_and_subsets(count=2))
def test_rank_monotone_submodular(data):
    m, s, t = data
    r = m.rank_of
    assert r(s & t) <= r(s) <= r(s | t)
    assert r(s | t) + r(s & t) <= r(s) + r(t)
    assert r(s) <= len(s)


@settings(max_examples=150, deadline=None)
@given(matroid_and_subsets(count=1), st.data())
def test_fundamental_circuit_is_unique_circuit(data, draw):
    m, s = data
    s = greedy_independent(m, s)
    spanned = sorted(x for x in m.ground - s if not m.is_independent(s | {x}))
    if not spanned:
        # extend to a base so everything outside is spanned
        s = greedy_independent(m, sorted(s) + sorted(m.ground - s))
        spanned = sorted(m.ground - s)
    assume(spanned)
    x = draw.draw(st.sampled_from(spanned))
    support = fundamental_circuit(m, s, x)
    assert is_circuit(m, support | {x})
    assert support | {x} == unique_circuit(m.is_independent, s | {x})
    # representation fast path agrees with the generic oracle route
    assert m.support(s, x) == generic_support(m, s, x)


@settings(max_examples=150, deadline=None)
@given(matroid_and_subsets(count=2))
def test_restrict_commutes(data):
    m, s, t = data
    r = restrict(m, s)
    local = frozenset(i for i, p in enumerate(r.parent_ids) if p in t)
    assert r.is_independent(local) == m.is_independent(t & s)
    assert r.labels == tuple(m.labels[p] for p in r.parent_ids)


@settings(max_examples=100, deadline=None)
@given(matroids(), st.data())
def test_circuit_elimination(m, draw):
    # circuits from fundamental circuits of a random base
    base = set()
    for x in range(m.ground_size):
        if m.is_independent(base | {x}):
            base.add(x)
    base = frozenset(base)
    circuits = [fundamental_circuit_plus(m, base, x) for x in sorted(m.ground - base)]
    pairs = [(c1, c2) for c1 in circuits for c2 in circuits if c1 != c2 and c1 & c2 and c1 - c2]
    assume(pairs)
    c1, c2 = draw.draw(st.sampled_from(pairs))
    x = draw.draw(st.sampled_from(sorted(c1 & c2)))
    y = draw.draw(st.sampled_from(sorted(c1 - c2)))
    universe = sorted((c1 | c2) - {x})
    found = [frozenset(c) for k in range(1, len(universe) + 1) for c in combinations(universe, k)
             if y in c and is_circuit(m, c)]
    assert found


def test_full_rank_memoized(k4):
    assert k4.full_rank == 3
    assert "full_rank" in k4.__dict__
