import pytest
from hypothesis import given, settings

from conftest import FIXTURES
from matroidx import format_matroid, load_matroid, parse_matroid
from matroidx.errors import ParseError
from strategies import matroids


def test_load_fixtures():
    k4 = load_matroid(FIXTURES / "k4.matroid")
    assert k4.kind == "graphic" and k4.labels == tuple(f"e{i}" for i in range(1, 7))
    assert k4.full_rank == 3
    u = load_matroid(FIXTURES / "u24.matroid")
    assert (u.k, u.ground_size) == (2, 4)
    g = load_matroid(FIXTURES / "rank4.matroid")
    assert g.is_base(g.ids("5678"))
    q = load_matroid(FIXTURES / "rational.matroid")
    assert q.kind == "linear-rational" and q.full_rank == 2


def test_packed_gf2_rows():
    m = parse_matroid("kind: linear-gf2\ncols: a b c\n101\n011\n")
    assert not m.is_independent({0, 1, 2})
    assert m.is_independent({0, 1})


@pytest.mark.parametrize("text, line, msg", [
    ("", None, "empty"),
    ("kind: matrix\n", 1, "unknown kind"),
    ("# c\nk: 2\n", 2, "first line"),
    ("kind: uniform\nk: 2\nn: x\n", 3, "integer"),
    ("kind: uniform\nk: 5\nn: 4\n", 3, "k <= n"),
    ("kind: uniform\nk: 2\n", None, "missing field 'n'"),
    ("kind: graphic\nedge: a 1 2\n", 2, "vertices"),
    ("kind: graphic\nvertices: 2\nedge: a 1 2\nedge: b 1 3\n", 4, "more than 2"),
    ("kind: graphic\nvertices: 2\nedge: a 1\n", 3, "label and two vertices"),
    ("kind: graphic\nvertices: 3\nedge: a 1 2\nedge: a 2 3\n", 4, "duplicate edge"),
    ("kind: linear-gf2\ncols: a b\n1 0\n1 2\n", 4, "0 and 1"),
    ("kind: linear-gf2\ncols: a b\n1 0 1\n", 3, "expected 2"),
    ("kind: linear-rational\ncols: a b\n1 1/0\n", 3, "bad rational"),
    ("kind: linear-rational\nrows: 2\n", 2, "cols"),
])
def test_parse_errors_carry_line_numbers(text, line, msg):
    with pytest.raises(ParseError, match=msg) as info:
        parse_matroid(text, source="t.matroid")
    assert info.value.line == line
    if line is not None:
        assert f"t.matroid:{line}:" in str(info.value)


@settings(max_examples=100, deadline=None)
@given(matroids())
def test_round_trip(m):
    again = parse_matroid(format_matroid(m))
    assert again.kind == m.kind
    assert again.labels == m.labels
    for s in range(1 << min(m.ground_size, 7)):
        members = {i for i in range(m.ground_size) if s >> i & 1}
        assert again.is_independent(members) == m.is_independent(members)
