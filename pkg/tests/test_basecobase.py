from itertools import combinations

import pytest
from hypothesis import HealthCheck, assume, given, settings

from matroidx import (
    BasePair,
    GraphicMatroid,
    LinearGF2Matroid,
    UniformMatroid,
    build_graph,
    diameter,
    find_cyclic_order,
    full_serial_exchange,
    is_connected,
    serial_to_cyclic,
)
from matroidx import basecobase as bc
from matroidx.errors import PreconditionError, StepBudgetExceeded
from matroidx.exchange import ExchangeSequence
from matroidx.harness import disjoint_base_pairs
from oracles import bfs_distances
from strategies import gf2_matroids, graphic_matroids, uniform_matroids


def oracle_graph(m):
    """Vertices by subset scan; adjacency as symmetric difference of size two."""
    n = m.full_rank
    ground = frozenset(range(m.ground_size))
    verts = [frozenset(s) for s in combinations(sorted(ground), n)
             if m.is_base(frozenset(s)) and m.is_base(ground - frozenset(s))]
    dist = bfs_distances(verts, lambda u, v: len(u ^ v) == 2)
    return verts, dist


def oracle_diameter(dist):
    worst = max(max(row) for row in dist)
    return None if worst == float("inf") else int(worst)


def i3i3():
    return LinearGF2Matroid(3, [1, 2, 4, 1, 2, 4])


class TestGraph:
    def test_u24(self):
        g = build_graph(UniformMatroid(2, 4))
        assert len(g.vertices) == 6
        assert len(g.adjacency) == 12
        assert all(len(nb) == 4 for nb in g.neighbours())
        assert diameter(g) == 2 and is_connected(g)

    def test_i3i3(self):
        g = build_graph(i3i3())
        assert len(g.vertices) == 8
        assert diameter(g) == 3

    def test_u12(self):
        g = build_graph(UniformMatroid(1, 2))
        assert len(g.vertices) == 2 and g.adjacency == ((0, 1),)
        assert diameter(g) == 1

    def test_k4(self, k4):
        g = build_graph(k4)
        verts, dist = oracle_graph(k4)
        assert set(g.vertices) == set(verts)
        assert len(g.vertices) == 12 and len(g.adjacency) == 30
        assert diameter(g) == oracle_diameter(dist) == 3

    def test_vertices_closed_under_complement(self, k4):
        g = build_graph(k4)
        ground = k4.ground
        assert all(ground - v in set(g.vertices) for v in g.vertices)

    @pytest.mark.parametrize("m", [UniformMatroid(2, 5), UniformMatroid(3, 5),
                                   GraphicMatroid(3, [(0, 1), (1, 2), (0, 2), (1, 1)])])
    def test_non_block_raises(self, m):
        with pytest.raises(PreconditionError) as err:
            build_graph(m)
        assert err.value.witness["ground_size"] == m.ground_size

    def test_block_witness(self):
        assert bc.block_witness(UniformMatroid(2, 4)) == frozenset({0, 1})
        # four parallel edges: rank 1 with 4 elements fails the size test
        assert bc.block_witness(GraphicMatroid(2, [(0, 1)] * 4)) is None
        # rank 2, size 4, but one element is a loop
        assert bc.block_witness(GraphicMatroid(3, [(0, 1), (1, 2), (0, 2), (0, 0)])) is None

    def test_export_format(self):
        g = build_graph(UniformMatroid(1, 2))
        assert bc.export_adjacency(g) == "# vertices 2\n1\n2\n# edges 1\n0 1\n"

    def test_components_of_disconnected_graph(self):
        verts = (frozenset({0}), frozenset({1}), frozenset({2}))
        g = bc.BaseCobaseGraph(UniformMatroid(1, 2), verts, ((0, 1),))
        assert not is_connected(g)
        assert diameter(g) is None
        assert bc.components(g) == [[0, 1], [2]]
        assert bc.component_diameters(g) == [1, 0]


class TestCyclic:
    def test_i3i3(self):
        m = i3i3()
        p = BasePair(m, frozenset({0, 1, 2}), frozenset({3, 4, 5}))
        order = find_cyclic_order(p)
        assert order.sequence == (0, 1, 2, 3, 4, 5)
        assert bc.is_cyclic_order(p, order)
        assert not bc.is_cyclic_order(p, bc.CyclicOrder((0, 1, 2, 4, 3, 5)))

    def test_windows(self):
        assert bc.CyclicOrder((0, 1, 2, 3)).windows(2) == [
            frozenset({0, 1}), frozenset({1, 2}), frozenset({2, 3}), frozenset({3, 0})]

    def test_k4_and_serial_round_trip(self, k4_pair):
        order = find_cyclic_order(k4_pair)
        assert bc.is_cyclic_order(k4_pair, order)
        seq = full_serial_exchange(k4_pair)
        c = serial_to_cyclic(k4_pair, seq)
        assert c.sequence == seq.a_order + seq.b_order
        assert bc.cyclic_to_serial(k4_pair, c) == seq

    def test_serial_to_cyclic_rejects(self, k4_pair):
        with pytest.raises(PreconditionError):
            serial_to_cyclic(k4_pair, ExchangeSequence((0,), (5,)))

    def test_budget(self, rank4_pair):
        with pytest.raises(StepBudgetExceeded):
            find_cyclic_order(rank4_pair, max_steps=2)

    def test_empty(self):
        p = BasePair(UniformMatroid(0, 0), frozenset(), frozenset())
        assert find_cyclic_order(p).sequence == ()


SETTINGS = settings(max_examples=60, deadline=None,
                    suppress_health_check=[HealthCheck.filter_too_much, HealthCheck.too_slow])


def block_matroids():
    return (uniform_matroids(max_n=8) | graphic_matroids(max_v=5, max_e=8)
            | gf2_matroids(max_rows=4, max_cols=8))


@SETTINGS
@given(block_matroids())
def test_graph_matches_oracle_and_diameter_equals_rank(m):
    assume(bc.block_witness(m) is not None and m.full_rank >= 1)
    g = build_graph(m)
    verts, dist = oracle_graph(m)
    assert set(g.vertices) == set(verts)
    assert diameter(g) == oracle_diameter(dist) == m.full_rank


@SETTINGS
@given(block_matroids())
def test_cyclic_order_exists_for_small_rank(m):
    assume(bc.block_witness(m) is not None and 1 <= m.full_rank <= 4)
    for p in disjoint_base_pairs(m, 2):
        order = find_cyclic_order(p)
        assert order is not None and bc.is_cyclic_order(p, order)
        assert serial_to_cyclic(p, full_serial_exchange(p)) is not None
