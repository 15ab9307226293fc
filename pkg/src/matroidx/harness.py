"""Desk-scale corpora and the property-suite driver.

Every check runs on one BasePair and yields one Finding.  Status ``pass``
means the property held on every admissible input, ``violation`` means a
property guaranteed (or conjectured) to hold failed, and ``error`` means the
check could not run (not a block matroid, step budget exhausted, ...).

Randomness comes from ``random.Random`` (MT19937) seeded with the corpus
seed, or with ``"<seed>:<instance>:<check>"`` for per-check sampling, so runs
reproduce exactly.
"""

from __future__ import annotations

import json
import logging
import random
from dataclasses import asdict, dataclass, field, replace
from itertools import combinations
from pathlib import Path
from typing import Callable, Iterator

from .basecobase import (
    block_witness,
    build_graph,
    component_diameters,
    diameter,
    find_cyclic_order,
    is_cyclic_order,
    serial_to_cyclic,
)
from .errors import (
    ConfigError,
    InternalConsistencyError,
    MatroidError,
    PreconditionError,
    ReplayError,
    StepBudgetExceeded,
)
from .exchange import (
    BasePair,
    ExchangeSequence,
    admissible_lemma3_tuples,
    admissible_lemma4_tuples,
    brute_force_serial_exchange,
    brute_force_set_exchange,
    conn_set,
    find_symmetric_partner,
    find_two_disjoint_exchanges,
    full_serial_exchange,
    is_symmetric_exchange,
    is_symmetric_exchange_by_bases,
    iter_serial_exchanges,
    lemma3_property,
    lemma4_property,
    pair_serial_exchange,
    serial_support_sides,
    verify_sequence,
)
from .io import format_matroid, load_matroid, parse_matroid
from .matroid import (
    GraphicMatroid,
    LinearGF2Matroid,
    Matroid,
    UniformMatroid,
    fundamental_circuit_plus,
    is_circuit,
)

log = logging.getLogger(__name__)

RNG_NAME = "mt19937 (python random.Random)"
FAMILIES = ("default", "uniform", "graphic", "linear-gf2", "fixtures")
MAX_GROUND = 12
MAX_RANK = 6
SUBSET_CAP = 4
LEMMA_EXHAUSTIVE_GROUND = 8
LEMMA_SAMPLE = 10_000
ELIMINATION_SAMPLE = 40

# vertex count, edge list; every entry is a block graph (two edge-disjoint spanning trees)
CURATED_GRAPHS: dict[str, tuple[int, list[tuple[int, int]]]] = {
    "digon": (2, [(0, 1), (0, 1)]),
    "fat-triangle": (3, [(0, 1), (1, 2), (0, 2), (0, 1)]),
    "double-path": (3, [(0, 1), (0, 1), (1, 2), (1, 2)]),
    "k4": (4, [(0, 1), (1, 2), (2, 3), (0, 2), (1, 3), (0, 3)]),
    "double-star": (4, [(0, 1), (0, 1), (0, 2), (0, 2), (0, 3), (0, 3)]),
    "w4": (5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4), (4, 1)]),
    "k5-minus-matching": (5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 4), (3, 4)]),
    "w5": (6, [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5),
               (1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]),
    "prism-plus-chord": (6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3),
                             (0, 3), (1, 4), (2, 5), (0, 4)]),
}


@dataclass(frozen=True)
class CorpusSpec:
    family: str = "default"
    max_rank: int = 5
    seed: int = 42
    max_n: int = 5
    graphs: tuple = ()
    random_graphs: int = 8
    max_vertices: int = 6
    gf2_ranks: tuple = (3, 4, 5)
    gf2_count: int = 50
    fixtures: tuple = ()
    pairs_per_matroid: int = 4
    max_steps: int = 200_000
    allow_large: bool = False

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ConfigError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if self.max_rank > MAX_RANK and not self.allow_large:
            raise ConfigError(f"max_rank {self.max_rank} exceeds the desk-scale cap {MAX_RANK}"
                              " (pass allow_large to override)")
        if self.max_rank < 0 or self.pairs_per_matroid < 1:
            raise ConfigError("max_rank must be >= 0 and pairs_per_matroid >= 1")
        for g in self.graphs:
            if g not in CURATED_GRAPHS:
                raise ConfigError(f"unknown graph {g!r}; known: {', '.join(CURATED_GRAPHS)}")
        if self.max_vertices < 2:
            raise ConfigError("max_vertices must be at least 2")

    def to_json(self) -> dict:
        d = asdict(self)
        for k in ("graphs", "gf2_ranks", "fixtures"):
            d[k] = list(d[k])
        return d


@dataclass
class Instance:
    name: str
    matroid: Matroid
    pair: BasePair | None = None
    error: str | None = None


@dataclass
class Finding:
    matroid: dict
    check: str
    status: str
    witness: dict
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"matroid": self.matroid, "check": self.check, "status": self.status,
                "witness": self.witness, "detail": self.detail}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, obj: dict) -> "Finding":
        return cls(obj["matroid"], obj["check"], obj["status"], obj["witness"],
                   obj.get("detail", {}))


# -- corpus generation -------------------------------------------------------

def disjoint_base_pairs(m: Matroid, limit: int) -> list[BasePair]:
    """Up to ``limit`` pairs of disjoint bases, A in lexicographic order.

    For a block matroid B is the complement of A; otherwise the first
    disjoint base of the complement is taken.
    """
    n = m.full_rank
    ground = sorted(m.ground)
    out = []
    for a in combinations(ground, n):
        a = frozenset(a)
        if not m.is_base(a):
            continue
        rest = [x for x in ground if x not in a]
        for b in combinations(rest, n):
            if m.is_base(b):
                out.append(BasePair(m, a, frozenset(b)))
                break
        if len(out) >= limit:
            break
    return out


def random_gf2_pair(rank: int, rng: random.Random) -> BasePair:
    """[I | M] with M a uniformly random invertible bit matrix (rejection sampled)."""
    ident = [1 << i for i in range(rank)]
    while True:
        cols = [rng.getrandbits(rank) for _ in range(rank)]
        m = LinearGF2Matroid(rank, ident + cols)
        b = frozenset(range(rank, 2 * rank))
        if m.is_base(b):
            return BasePair(m, frozenset(range(rank)), b)


def random_block_multigraph(vertices: int, rng: random.Random, tries: int = 200
                            ) -> GraphicMatroid | None:
    for _ in range(tries):
        edges = []
        for _ in range(2 * (vertices - 1)):
            u, v = rng.sample(range(vertices), 2)
            edges.append((min(u, v), max(u, v)))
        m = GraphicMatroid(vertices, edges, [f"e{i + 1}" for i in range(len(edges))])
        if m.full_rank == vertices - 1 and block_witness(m) is not None:
            return m
    return None


def curated_graph(name: str) -> GraphicMatroid:
    v, edges = CURATED_GRAPHS[name]
    return GraphicMatroid(v, edges, [f"e{i + 1}" for i in range(len(edges))])


def iter_instances(spec: CorpusSpec) -> Iterator[Instance]:
    fam = spec.family

    if fam in ("default", "uniform"):
        for k in range(1, min(spec.max_n, spec.max_rank) + 1):
            m = UniformMatroid(k, 2 * k)
            yield Instance(f"U({k},{2 * k})", m,
                           BasePair(m, frozenset(range(k)), frozenset(range(k, 2 * k))))

    if fam in ("default", "graphic"):
        names = spec.graphs or tuple(CURATED_GRAPHS)
        for name in names:
            m = curated_graph(name)
            if m.full_rank > spec.max_rank or CURATED_GRAPHS[name][0] > spec.max_vertices:
                continue
            for i, p in enumerate(disjoint_base_pairs(m, spec.pairs_per_matroid)):
                yield Instance(f"graphic:{name}#{i}", m, p)
        graph_rng = random.Random(f"{spec.seed}:graphic")
        for j in range(spec.random_graphs if not spec.graphs else 0):
            v = graph_rng.randint(3, spec.max_vertices)
            m = random_block_multigraph(v, graph_rng)
            if m is None or m.full_rank > spec.max_rank:
                continue
            for i, p in enumerate(disjoint_base_pairs(m, spec.pairs_per_matroid)):
                yield Instance(f"graphic:random{j}#{i}", m, p)

    if fam in ("default", "linear-gf2"):
        for r in spec.gf2_ranks:
            if r > spec.max_rank:
                continue
            gf2_rng = random.Random(f"{spec.seed}:gf2:{r}")
            for i in range(spec.gf2_count):
                p = random_gf2_pair(r, gf2_rng)
                yield Instance(f"gf2:r{r}#{i}", p.matroid, p)

    if fam == "fixtures":
        for path in spec.fixtures:
            m = load_matroid(path)
            name = f"fixture:{Path(path).name}"
            if m.ground_size > MAX_GROUND and not spec.allow_large:
                yield Instance(name, m, error=f"ground set of {m.ground_size} exceeds cap {MAX_GROUND}")
                continue
            pairs = disjoint_base_pairs(m, spec.pairs_per_matroid)
            if not pairs:
                yield Instance(name, m, error="matroid has no two disjoint bases")
            for i, p in enumerate(pairs):
                yield Instance(f"{name}#{i}", m, p)


def enumerate_block_pairs(spec: CorpusSpec) -> Iterator[BasePair]:
    for inst in iter_instances(spec):
        if inst.pair is not None:
            yield inst.pair


# -- checks ------------------------------------------------------------------

class Violation(Exception):
    """Raised inside a check to report a failed property with its inputs."""

    def __init__(self, msg, inputs=None):
        self.inputs = inputs or {}
        super().__init__(msg)


@dataclass
class Ctx:
    spec: CorpusSpec
    name: str
    check: str
    cache: dict

    @property
    def rng(self) -> random.Random:
        return random.Random(f"{self.spec.seed}:{self.name}:{self.check}")


def _lab(m, xs):
    return [m.labels[x] for x in xs]


def _need_block(p: BasePair):
    if not p.is_block:
        raise PreconditionError(
            f"not a block matroid: A and B cover {2 * p.rank} of {p.matroid.ground_size} elements",
            witness={"rank": p.rank, "ground_size": p.matroid.ground_size})


def _sample(items, cap, rng):
    items = list(items)
    if len(items) <= cap:
        return items, True
    return rng.sample(items, cap), False


def check_exchange_criterion(p, ctx):
    m = p.matroid
    count = 0
    for a in sorted(p.a_base):
        for b in sorted(p.b_base):
            count += 1
            if is_symmetric_exchange(p, a, b) != is_symmetric_exchange_by_bases(p, a, b):
                raise Violation("circuit and base criteria disagree",
                                {"a": m.labels[a], "b": m.labels[b]})
    return {"pairs": count}


def check_partner_existence(p, ctx):
    m = p.matroid
    flipped = BasePair(m, p.b_base, p.a_base)
    for q, side in ((p, "A"), (flipped, "B")):
        for x in sorted(q.a_base):
            try:
                find_symmetric_partner(q, x)
            except InternalConsistencyError:
                raise Violation("element without symmetric partner",
                                {"element": m.labels[x], "side": side}) from None
    return {"elements": 2 * p.rank}


def check_two_disjoint(p, ctx):
    if p.rank <= 1:
        return {"skipped": "rank <= 1"}
    try:
        (a, b), (a2, b2) = find_two_disjoint_exchanges(p)
    except InternalConsistencyError as exc:
        raise Violation(str(exc)) from None
    return {"exchanges": [_lab(p.matroid, (a, b)), _lab(p.matroid, (a2, b2))]}


def check_conn_nonsingleton(p, ctx):
    m = p.matroid
    sizes: dict[str, int] = {}
    for a1 in sorted(p.a_base):
        for a2 in sorted(p.a_base - {a1}):
            c = conn_set(p, a1, a2)
            sizes[str(len(c.members))] = sizes.get(str(len(c.members)), 0) + 1
            if len(c.members) == 1:
                raise Violation("connector set is a singleton",
                                {"source": m.labels[a1], "target": m.labels[a2],
                                 "members": m.label_list(c.members)})
    return {"size_histogram": dict(sorted(sizes.items(), key=lambda kv: int(kv[0])))}


def _find_circuit_containing(m, universe, y):
    rest = sorted(universe - {y})
    for size in range(len(rest) + 1):
        for extra in combinations(rest, size):
            c = frozenset(extra) | {y}
            if is_circuit(m, c):
                return c
    return None


def check_circuit_elimination(p, ctx):
    m = p.matroid
    circuits = sorted({fundamental_circuit_plus(m, p.a_base, b) for b in p.b_base}
                      | {fundamental_circuit_plus(m, p.b_base, a) for a in p.a_base},
                      key=lambda c: tuple(sorted(c)))
    for c in circuits:
        if not is_circuit(m, c):
            raise Violation("fundamental circuit is not a circuit", {"set": m.label_list(c)})
    tuples = [(i, j, x, y) for i, c1 in enumerate(circuits) for j, c2 in enumerate(circuits)
              if i != j for x in sorted(c1 & c2) for y in sorted(c1 - c2)]
    chosen, exhaustive = _sample(tuples, ELIMINATION_SAMPLE, ctx.rng)
    for i, j, x, y in chosen:
        c1, c2 = circuits[i], circuits[j]
        if _find_circuit_containing(m, (c1 | c2) - {x}, y) is None:
            raise Violation("no circuit avoids x and contains y",
                            {"c1": m.label_list(c1), "c2": m.label_list(c2),
                             "x": m.labels[x], "y": m.labels[y]})
    return {"circuits": len(circuits), "tuples": len(chosen), "exhaustive": exhaustive}


def _pair_sequences(p, ctx):
    key = ("pairs", id(p))
    if key not in ctx.cache:
        out = []
        for a1, a2 in combinations(sorted(p.a_base), 2):
            out.append(((a1, a2), pair_serial_exchange(p, a1, a2)))
        ctx.cache[key] = out
    return ctx.cache[key]


def check_pair_exchange(p, ctx):
    m = p.matroid
    routes: dict[str, int] = {}
    seqs = []
    try:
        results = _pair_sequences(p, ctx)
    except InternalConsistencyError as exc:
        raise Violation(f"constructive pair exchange failed: {exc}") from None
    for (a1, a2), seq in results:
        inputs = {"a1": m.labels[a1], "a2": m.labels[a2], "sequence": seq.to_json(m)}
        if not verify_sequence(p, seq):
            raise Violation("constructive sequence fails verification", inputs)
        solutions = {s.key for s in iter_serial_exchanges(p, {a1, a2}, ctx.spec.max_steps)}
        if seq.key not in solutions:
            raise Violation("constructive sequence missing from the exhaustive solution set",
                            inputs)
        routes[seq.route] = routes.get(seq.route, 0) + 1
        seqs.append({"a_order": _lab(m, seq.a_order), "b_order": _lab(m, seq.b_order),
                     "solutions": len(solutions)})
    return {"routes": dict(sorted(routes.items())), "sequences": seqs}


def _full_sequence(p, ctx):
    key = ("full", id(p))
    if key not in ctx.cache:
        ctx.cache[key] = full_serial_exchange(p, fallback="brute", max_steps=ctx.spec.max_steps)
    return ctx.cache[key]


def check_full_exchange(p, ctx):
    if p.rank > 4:
        return {"skipped": "constructive full exchange covers rank <= 4"}
    m = p.matroid
    try:
        seq = _full_sequence(p, ctx)
    except InternalConsistencyError as exc:
        raise Violation(f"full exchange failed: {exc}") from None
    inputs = {"sequence": seq.to_json(m)}
    if seq.route == "brute":
        raise Violation("constructive full exchange needed the exhaustive fallback", inputs)
    if len(seq) != p.rank or not verify_sequence(p, seq):
        raise Violation("full exchange fails verification", inputs)
    return {"route": seq.route, "a_order": _lab(m, seq.a_order), "b_order": _lab(m, seq.b_order)}


def check_serial_to_cyclic(p, ctx):
    if p.rank > 4:
        return {"skipped": "constructive full exchange covers rank <= 4"}
    _need_block(p)
    m = p.matroid
    seq = _full_sequence(p, ctx)
    try:
        order = serial_to_cyclic(p, seq)
    except PreconditionError as exc:
        raise Violation(str(exc), {"sequence": seq.to_json(m)}) from None
    return {"order": _lab(m, order.sequence)}


def check_serial_support(p, ctx):
    m = p.matroid
    seqs = [s for _, s in _pair_sequences(p, ctx)]
    if p.rank <= 4:
        seqs.append(_full_sequence(p, ctx))
    checked = 0
    for seq in seqs:
        for k in range(1, len(seq) + 1):
            left, right = serial_support_sides(p, seq, k)
            checked += 1
            if not left <= right or not right <= left:
                raise Violation("serial support identity fails",
                                {"sequence": seq.to_json(m), "k": k,
                                 "left": m.label_list(left), "right": m.label_list(right),
                                 "left_in_right": left <= right, "right_in_left": right <= left})
    return {"identities": checked}


def _lemma_tuples(p, ctx, gen):
    items = list(gen(p))
    if p.matroid.ground_size <= LEMMA_EXHAUSTIVE_GROUND:
        return items, True
    return _sample(items, LEMMA_SAMPLE, ctx.rng)


def check_lemma3(p, ctx):
    m = p.matroid
    tuples, exhaustive = _lemma_tuples(p, ctx, admissible_lemma3_tuples)
    for a1, a2, b1, b2 in tuples:
        if not lemma3_property(p, a1, a2, b1, b2):
            raise Violation("support membership changed across the swap",
                            dict(zip(("a1", "a2", "b1", "b2"), _lab(m, (a1, a2, b1, b2)))))
    return {"tuples": len(tuples), "exhaustive": exhaustive}


def check_lemma4(p, ctx):
    m = p.matroid
    tuples, exhaustive = _lemma_tuples(p, ctx, admissible_lemma4_tuples)
    for a, b, bp in tuples:
        if not lemma4_property(p, a, b, bp):
            raise Violation("inherited support property fails",
                            dict(zip(("a", "b", "b_prime"), _lab(m, (a, b, bp)))))
    return {"tuples": len(tuples), "exhaustive": exhaustive}


def _subsets(p):
    for size in range(1, min(p.rank, SUBSET_CAP) + 1):
        yield from combinations(sorted(p.a_base), size)


def check_set_exchange(p, ctx):
    m = p.matroid
    count = 0
    for sub in _subsets(p):
        count += 1
        if brute_force_set_exchange(p, sub) is None:
            raise Violation("no complementary exchange set", {"subset": _lab(m, sub)})
    return {"subsets": count}


def check_subset_serial(p, ctx):
    m = p.matroid
    count = 0
    for sub in _subsets(p):
        count += 1
        if brute_force_serial_exchange(p, sub, ctx.spec.max_steps) is None:
            raise Violation("subset has no serial symmetric exchange", {"subset": _lab(m, sub)})
    return {"subsets": count}


def _graph(p, ctx):
    key = ("graph", id(p.matroid))
    if key not in ctx.cache:
        ctx.cache[key] = build_graph(p.matroid)
    return ctx.cache[key]


def check_diameter(p, ctx):
    _need_block(p)
    g = _graph(p, ctx)
    d = diameter(g)
    info = {"vertices": len(g.vertices), "edges": len(g.adjacency), "rank": p.rank,
            "diameter": d}
    if d is None:
        info["component_diameters"] = component_diameters(g)
        raise Violation("base-cobase graph is disconnected", info)
    if d != p.rank:
        raise Violation("diameter differs from the rank", info)
    return info


def check_cyclic_order(p, ctx):
    _need_block(p)
    m = p.matroid
    order = find_cyclic_order(p, ctx.spec.max_steps)
    if order is None:
        raise Violation("no cyclic base order exists")
    if not is_cyclic_order(p, order):
        raise Violation("cyclic order fails re-verification", {"order": _lab(m, order.sequence)})
    return {"order": _lab(m, order.sequence)}


CHECKS: dict[str, Callable] = {
    "exchange-criterion": check_exchange_criterion,
    "partner-existence": check_partner_existence,
    "two-disjoint": check_two_disjoint,
    "conn-nonsingleton": check_conn_nonsingleton,
    "circuit-elimination": check_circuit_elimination,
    "pair-exchange-constructive": check_pair_exchange,
    "full-exchange": check_full_exchange,
    "serial-to-cyclic": check_serial_to_cyclic,
    "serial-support": check_serial_support,
    "lemma3": check_lemma3,
    "lemma4": check_lemma4,
    "set-exchange": check_set_exchange,
    "subset-serial": check_subset_serial,
    "diameter": check_diameter,
    "cyclic-order": check_cyclic_order,
}


def resolve_checks(names) -> list[str]:
    if isinstance(names, str):
        names = [n.strip() for n in names.split(",") if n.strip()]
    names = list(names)
    if not names or names == ["all"]:
        return list(CHECKS)
    for n in names:
        if n not in CHECKS:
            raise ConfigError(f"unknown check {n!r}; known: {', '.join(CHECKS)}")
    return names


# -- driver ------------------------------------------------------------------

def _witness(inst: Instance, check: str, spec: CorpusSpec, inputs=None) -> dict:
    w = {"instance": inst.name, "check": check, "seed": spec.seed,
         "max_steps": spec.max_steps, "matroid": format_matroid(inst.matroid)}
    if inst.pair is not None:
        w["A"], w["B"] = inst.pair.labels()
    if inputs:
        w["inputs"] = inputs
    return w


def run_check(inst: Instance, check: str, spec: CorpusSpec, cache: dict | None = None) -> Finding:
    desc = {"name": inst.name, **inst.matroid.describe()}
    if inst.pair is None:
        return Finding(desc, check, "error", _witness(inst, check, spec),
                       {"error": inst.error or "no base pair"})
    ctx = Ctx(spec, inst.name, check, cache if cache is not None else {})
    try:
        detail = CHECKS[check](inst.pair, ctx)
        return Finding(desc, check, "pass", _witness(inst, check, spec), detail)
    except Violation as v:
        log.warning("violation: %s on %s: %s", check, inst.name, v)
        return Finding(desc, check, "violation", _witness(inst, check, spec, v.inputs),
                       {"message": str(v)})
    except (PreconditionError, StepBudgetExceeded, MatroidError) as exc:
        detail = {"error": f"{type(exc).__name__}: {exc}"}
        if getattr(exc, "witness", None) is not None:
            detail["witness"] = exc.witness
        return Finding(desc, check, "error", _witness(inst, check, spec), detail)


def run_property_suite(spec: CorpusSpec, checks) -> list[Finding]:
    names = resolve_checks(checks)
    findings = []
    for inst in iter_instances(spec):
        cache: dict = {}
        for check in names:
            findings.append(run_check(inst, check, spec, cache))
    return findings


def replay(finding: Finding, loader: Callable[[str], Matroid] = parse_matroid) -> Finding:
    """Re-run one finding's check on its witness; the status must come out the same."""
    w = finding.witness
    missing = [k for k in ("instance", "check", "seed", "matroid") if k not in w]
    if missing:
        raise ReplayError(f"witness lacks {', '.join(missing)}")
    if w["check"] not in CHECKS:
        raise ReplayError(f"unknown check {w['check']!r} in witness")
    try:
        m = loader(w["matroid"])
    except MatroidError as exc:
        raise ReplayError(f"witness matroid does not parse: {exc}") from None
    pair = None
    if "A" in w and "B" in w:
        try:
            pair = BasePair.from_labels(m, w["A"], w["B"])
        except MatroidError as exc:
            raise ReplayError(f"witness bases do not fit the matroid: {exc}") from None
    spec = CorpusSpec(seed=w["seed"], max_steps=w.get("max_steps", CorpusSpec.max_steps),
                      allow_large=True)
    inst = Instance(w["instance"], m, pair, finding.detail.get("error") if pair is None else None)
    again = run_check(inst, w["check"], spec)
    if again.status != finding.status:
        raise ReplayError(f"replay status {again.status!r} differs from recorded "
                          f"{finding.status!r}")
    return again


def summarize(findings) -> dict:
    out: dict[str, dict[str, int]] = {}
    for f in findings:
        row = out.setdefault(f.check, {"pass": 0, "violation": 0, "error": 0})
        row[f.status] += 1
    return out


def write_jsonl(findings, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for f in findings:
            fh.write(f.dumps() + "\n")


def read_jsonl(path) -> list[Finding]:
    with open(path, encoding="utf-8") as fh:
        return [Finding.from_json(json.loads(line)) for line in fh if line.strip()]


def with_overrides(spec: CorpusSpec, **kw) -> CorpusSpec:
    return replace(spec, **{k: v for k, v in kw.items() if v is not None})
