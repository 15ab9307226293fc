"""Line-oriented matroid text format.

::

    # comment
    kind: graphic
    vertices: 4
    edge: e1 1 2
    edge: e2 2 3

``uniform`` takes ``k:`` and ``n:``; ``linear-gf2`` and ``linear-rational``
take ``cols: <labels>`` followed by one matrix row per line (bits, or
``p/q`` rationals).  Element order is file order.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from .errors import ParseError
from .matroid import (
    GraphicMatroid,
    LinearGF2Matroid,
    LinearRationalMatroid,
    Matroid,
    UniformMatroid,
)

KINDS = ("uniform", "graphic", "linear-gf2", "linear-rational")


def _int(tok, line, source):
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", line, source) from None


def parse_matroid(text: str, source: str | None = None) -> Matroid:
    lines = []
    for no, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append((no, body))
    if not lines:
        raise ParseError("empty matroid file", None, source)

    no, first = lines[0]
    key, _, val = first.partition(":")
    if key.strip() != "kind" or not _:
        raise ParseError("first line must be 'kind: <kind>'", no, source)
    kind = val.strip()
    if kind not in KINDS:
        raise ParseError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}", no, source)
    rest = lines[1:]

    if kind == "uniform":
        fields = {}
        for no, body in rest:
            key, sep, val = body.partition(":")
            key = key.strip()
            if not sep or key not in ("k", "n"):
                raise ParseError(f"expected 'k: <int>' or 'n: <int>', got {body!r}", no, source)
            if key in fields:
                raise ParseError(f"duplicate field {key!r}", no, source)
            fields[key] = (_int(val.strip(), no, source), no)
        for key in ("k", "n"):
            if key not in fields:
                raise ParseError(f"missing field {key!r}", None, source)
        (k, _), (n, nline) = fields["k"], fields["n"]
        if not 0 <= k <= n:
            raise ParseError(f"need 0 <= k <= n, got k={k}, n={n}", nline, source)
        return UniformMatroid(k, n)

    if kind == "graphic":
        vcount = None
        vmap: dict[str, int] = {}
        edges, labels = [], []
        for no, body in rest:
            key, sep, val = body.partition(":")
            key = key.strip()
            if key == "vertices" and sep:
                if vcount is not None:
                    raise ParseError("duplicate 'vertices' line", no, source)
                vcount = _int(val.strip(), no, source)
                continue
            if key != "edge" or not sep:
                raise ParseError(f"expected 'edge: <label> <u> <v>', got {body!r}", no, source)
            if vcount is None:
                raise ParseError("'vertices:' must precede the edges", no, source)
            toks = val.split()
            if len(toks) != 3:
                raise ParseError("edge line needs exactly a label and two vertices", no, source)
            lab, u, v = toks
            if lab in labels:
                raise ParseError(f"duplicate edge label {lab!r}", no, source)
            for w in (u, v):
                if w not in vmap:
                    if len(vmap) == vcount:
                        raise ParseError(f"more than {vcount} distinct vertices", no, source)
                    vmap[w] = len(vmap)
            edges.append((vmap[u], vmap[v]))
            labels.append(lab)
        if vcount is None:
            raise ParseError("missing 'vertices:' line", None, source)
        return GraphicMatroid(vcount, edges, labels)

    # linear kinds
    if not rest:
        raise ParseError("missing 'cols:' line", None, source)
    no, body = rest[0]
    key, sep, val = body.partition(":")
    if key.strip() != "cols" or not sep:
        raise ParseError("expected 'cols: <labels>'", no, source)
    labels = val.split()
    if len(set(labels)) != len(labels):
        raise ParseError("duplicate column label", no, source)
    rows = []
    for no, body in rest[1:]:
        toks = body.split()
        if kind == "linear-gf2" and len(toks) == 1 and len(toks[0]) == len(labels) > 1:
            toks = list(toks[0])
        if len(toks) != len(labels):
            raise ParseError(f"row has {len(toks)} entries, expected {len(labels)}", no, source)
        if kind == "linear-gf2":
            if any(t not in ("0", "1") for t in toks):
                raise ParseError("gf2 rows may only contain 0 and 1", no, source)
            rows.append([int(t) for t in toks])
        else:
            try:
                rows.append([Fraction(t) for t in toks])
            except (ValueError, ZeroDivisionError):
                raise ParseError(f"bad rational in row {body!r}", no, source) from None
    if kind == "linear-gf2":
        if not rows:
            return LinearGF2Matroid(0, [0] * len(labels), labels)
        return LinearGF2Matroid.from_rows(rows, labels)
    if not rows:
        return LinearRationalMatroid([[0] * len(labels)], labels)
    return LinearRationalMatroid(rows, labels)


def load_matroid(path) -> Matroid:
    path = Path(path)
    return parse_matroid(path.read_text(encoding="utf-8"), source=str(path))


def format_matroid(m: Matroid) -> str:
    """Inverse of parse_matroid (up to vertex renaming and comments)."""
    out = [f"kind: {m.kind}"]
    if isinstance(m, UniformMatroid):
        out += [f"k: {m.k}", f"n: {m.ground_size}"]
    elif isinstance(m, GraphicMatroid):
        out.append(f"vertices: {m.vertex_count}")
        out += [f"edge: {lab} {u} {v}" for lab, (u, v) in zip(m.labels, m.edges)]
    elif isinstance(m, LinearGF2Matroid):
        out.append("cols: " + " ".join(m.labels))
        out += [" ".join(str(b) for b in row) for row in m.row_matrix()]
    elif isinstance(m, LinearRationalMatroid):
        out.append("cols: " + " ".join(m.labels))
        out += [" ".join(str(x) for x in row) for row in m.matrix]
    else:
        raise TypeError(f"cannot serialize {type(m).__name__}")
    return "\n".join(out) + "\n"
