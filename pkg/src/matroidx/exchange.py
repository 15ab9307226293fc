"""Symmetric exchanges between two disjoint bases.

The constructive routines here never trust themselves: every sequence they
return has been re-checked through the oracle, and a failed re-check is an
InternalConsistencyError (the constructions are guaranteed to work on any
genuine matroid, so failure means the oracle is broken).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Sequence

from .errors import (
    InternalConsistencyError,
    InvalidElementError,
    PreconditionError,
    StepBudgetExceeded,
    StructuralError,
)
from .matroid import Matroid, fundamental_circuit, restrict

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class BasePair:
    """Two disjoint bases ``A`` and ``B`` of one matroid."""

    matroid: Matroid
    a_base: frozenset
    b_base: frozenset

    def __post_init__(self):
        m = self.matroid
        a = m.check(self.a_base)
        b = m.check(self.b_base)
        object.__setattr__(self, "a_base", a)
        object.__setattr__(self, "b_base", b)
        if a & b:
            raise PreconditionError("bases overlap", witness=m.label_list(a & b))
        for name, s in (("A", a), ("B", b)):
            if not m.is_base(s):
                raise PreconditionError(f"{name} is not a base", witness=m.label_list(s))

    @classmethod
    def from_labels(cls, m: Matroid, a_labels, b_labels) -> "BasePair":
        return cls(m, m.ids(a_labels), m.ids(b_labels))

    @property
    def rank(self) -> int:
        return len(self.a_base)

    @property
    def is_block(self) -> bool:
        return len(self.a_base) + len(self.b_base) == self.matroid.ground_size

    def support_in_a(self, x: int) -> frozenset:
        return fundamental_circuit(self.matroid, self.a_base, x)

    def support_in_b(self, x: int) -> frozenset:
        return fundamental_circuit(self.matroid, self.b_base, x)

    def swapped(self, a: int, b: int) -> "BasePair":
        """The pair (A - a + b, B - b + a); raises PreconditionError if not bases."""
        return BasePair(self.matroid, self.a_base - {a} | {b}, self.b_base - {b} | {a})

    def restricted(self) -> "BasePair":
        """Same pair on the restriction to A | B (ids relabeled, order kept)."""
        r = restrict(self.matroid, self.a_base | self.b_base)
        back = {p: i for i, p in enumerate(r.parent_ids)}
        return BasePair(r, frozenset(back[x] for x in self.a_base),
                        frozenset(back[x] for x in self.b_base))

    def labels(self) -> tuple[list[str], list[str]]:
        return self.matroid.label_list(self.a_base), self.matroid.label_list(self.b_base)

    def _need_a(self, x):
        if x not in self.a_base:
            raise InvalidElementError(x, "not in base A")

    def _need_b(self, x):
        if x not in self.b_base:
            raise InvalidElementError(x, "not in base B")


def step_sets(a_base, b_base, a_order, b_order) -> list[frozenset]:
    """Intermediate sets [A_1, B_1, A_2, B_2, ...] after each prefix swap."""
    out = []
    a_side, b_side = set(a_base), set(b_base)
    for a, b in zip(a_order, b_order):
        a_side.discard(a)
        a_side.add(b)
        b_side.discard(b)
        b_side.add(a)
        out += [frozenset(a_side), frozenset(b_side)]
    return out


@dataclass(frozen=True)
class ExchangeSequence:
    """Paired orderings of X in A and Y in B with the intermediate sets as certificate.

    ``certificate[2*i]`` is A after the first i+1 swaps, ``certificate[2*i+1]``
    the matching B side.  ``route`` records which construction produced it.
    """

    a_order: tuple
    b_order: tuple
    certificate: tuple = ()
    route: str = field(default="", compare=False)

    @classmethod
    def build(cls, p: BasePair, a_order, b_order, route="") -> "ExchangeSequence":
        a_order, b_order = tuple(a_order), tuple(b_order)
        cert = step_sets(p.a_base, p.b_base, a_order, b_order)
        return cls(a_order, b_order, tuple(cert), route)

    def __len__(self):
        return len(self.a_order)

    @property
    def pairs(self) -> list[tuple[int, int]]:
        return list(zip(self.a_order, self.b_order))

    @property
    def key(self) -> tuple:
        return (self.a_order, self.b_order)

    def to_json(self, m: Matroid) -> dict:
        return {
            "a_order": [m.labels[x] for x in self.a_order],
            "b_order": [m.labels[x] for x in self.b_order],
            "certificate": [m.label_list(s) for s in self.certificate],
        }

    @classmethod
    def from_json(cls, m: Matroid, obj: dict) -> "ExchangeSequence":
        a_order = tuple(m.element(x) for x in obj["a_order"])
        b_order = tuple(m.element(x) for x in obj["b_order"])
        cert = tuple(m.ids(s) for s in obj.get("certificate", ()))
        return cls(a_order, b_order, cert)


@dataclass(frozen=True)
class ConnSet:
    source: int
    target: int
    members: frozenset


# -- predicates --------------------------------------------------------------

def is_symmetric_exchange(p: BasePair, a: int, b: int) -> bool:
    """a in C(A, b) and b in C(B, a)."""
    p._need_a(a)
    p._need_b(b)
    return a in p.support_in_a(b) and b in p.support_in_b(a)


def is_symmetric_exchange_by_bases(p: BasePair, a: int, b: int) -> bool:
    """Same predicate evaluated as 'A - a + b and B - b + a are both bases'."""
    p._need_a(a)
    p._need_b(b)
    m = p.matroid
    return m.is_base(p.a_base - {a} | {b}) and m.is_base(p.b_base - {b} | {a})


def symmetric_exchanges(p: BasePair) -> list[tuple[int, int]]:
    """Every symmetric exchange (a, b), in lexicographic order."""
    return [(a, b) for a in sorted(p.a_base) for b in sorted(p.b_base)
            if is_symmetric_exchange(p, a, b)]


def find_symmetric_partner(p: BasePair, a: int) -> int:
    p._need_a(a)
    for b in sorted(p.b_base):
        if is_symmetric_exchange(p, a, b):
            return b
    raise InternalConsistencyError(
        f"element {p.matroid.labels[a]} has no symmetric partner in B")


def find_two_disjoint_exchanges(p: BasePair) -> tuple[tuple[int, int], tuple[int, int]]:
    """Lexicographically first pair of symmetric exchanges with distinct a's and b's."""
    if p.rank <= 1:
        raise PreconditionError(f"need rank > 1, got {p.rank}")
    ex = symmetric_exchanges(p)
    for i, (a, b) in enumerate(ex):
        for a2, b2 in ex[i + 1:]:
            if a2 != a and b2 != b:
                return (a, b), (a2, b2)
    raise InternalConsistencyError("no two disjoint symmetric exchanges exist")


def conn_set(p: BasePair, a_src: int, a_tgt: int) -> ConnSet:
    """Elements b of B with b in C(B, a_src) and a_tgt in C(A, b)."""
    p._need_a(a_src)
    p._need_a(a_tgt)
    if a_src == a_tgt:
        raise InvalidElementError(a_src, "source and target must differ")
    members = frozenset(b for b in p.support_in_b(a_src) if a_tgt in p.support_in_a(b))
    return ConnSet(a_src, a_tgt, members)


# -- verification ------------------------------------------------------------

def _check_structure(p: BasePair, seq: ExchangeSequence):
    if len(seq.a_order) != len(seq.b_order):
        raise StructuralError("a_order and b_order differ in length")
    if len(set(seq.a_order)) != len(seq.a_order):
        raise StructuralError("repeated element in a_order")
    if len(set(seq.b_order)) != len(seq.b_order):
        raise StructuralError("repeated element in b_order")
    for a in seq.a_order:
        if a not in p.a_base:
            raise StructuralError(f"a_order element {a!r} is not in A")
    for b in seq.b_order:
        if b not in p.b_base:
            raise StructuralError(f"b_order element {b!r} is not in B")


def verify_sequence(p: BasePair, seq: ExchangeSequence, side: str = "both") -> bool:
    """Re-derive every intermediate set and test base-ness through the oracle.

    ``side`` selects the one-sided variants: ``"A"`` checks only the sets
    (A - prefix) + prefix', ``"B"`` only the B-side sets.
    """
    if side not in ("both", "A", "B"):
        raise ValueError(f"side must be 'both', 'A' or 'B', got {side!r}")
    _check_structure(p, seq)
    m = p.matroid
    sets = step_sets(p.a_base, p.b_base, seq.a_order, seq.b_order)
    for i, s in enumerate(sets):
        on_a = i % 2 == 0
        if side == "A" and not on_a or side == "B" and on_a:
            continue
        if not m.is_base(s):
            return False
    return True


def _verified(p: BasePair, seq: ExchangeSequence, what: str) -> ExchangeSequence:
    if not verify_sequence(p, seq):
        raise InternalConsistencyError(
            f"{what} produced an invalid sequence "
            f"{[p.matroid.labels[x] for x in seq.a_order]} / "
            f"{[p.matroid.labels[x] for x in seq.b_order]}")
    return seq


# -- constructive exchanges --------------------------------------------------

def pair_serial_exchange(p: BasePair, a1: int, a2: int) -> ExchangeSequence:
    """Serial symmetric exchange of {a1, a2} against some pair of B.

    First swap a1 with its smallest partner b1.  If a2 then has a partner
    among the original B elements we are done.  Otherwise a2 pairs only with
    a1, and two connector elements b2, b3 of B are picked; depending on
    whether b1 and b2 are exchangeable after the first swap the answer is
    (a1, b2), (a2, b3) or (a2, b2), (a1, b3).
    """
    p._need_a(a1)
    p._need_a(a2)
    if a1 == a2:
        raise InvalidElementError(a1, "the two A elements must differ")
    lab = p.matroid.labels

    b1 = find_symmetric_partner(p, a1)
    q = p.swapped(a1, b1)  # (A', B')

    for b in sorted(q.b_base - {a1}):
        if is_symmetric_exchange(q, a2, b):
            return _verified(p, ExchangeSequence.build(p, (a1, a2), (b1, b), "pair:direct"),
                             "pair exchange")

    if not is_symmetric_exchange(q, a2, a1):
        raise InternalConsistencyError(
            f"{lab[a2]} has no symmetric partner after swapping {lab[a1]} with {lab[b1]}")

    to_a2 = conn_set(q, b1, a2).members - {a1}
    to_b1 = conn_set(q, a2, b1).members - {a1}
    if not to_a2 or not to_b1:
        raise InternalConsistencyError(
            f"connector set around {lab[a1]} is a singleton; the oracle is not a matroid")
    b2, b3 = min(to_a2), min(to_b1)
    if b2 == b3:
        raise InternalConsistencyError(f"connector elements coincide at {lab[b2]}")

    if b1 in q.support_in_a(b2):
        seq = ExchangeSequence.build(p, (a1, a2), (b2, b3), "pair:case1")
    else:
        seq = ExchangeSequence.build(p, (a2, a1), (b2, b3), "pair:case2")
    return _verified(p, seq, "pair exchange")


def _closing_sequences(p: BasePair, head: ExchangeSequence):
    """Extend a length-2 serial exchange to a full rank-4 sequence.

    For every symmetric exchange (a', b') of (A, B) among the four leftover
    elements, the order head, (a'', b''), (a', b') is a full exchange.
    """
    rest_a = sorted(p.a_base - set(head.a_order))
    rest_b = sorted(p.b_base - set(head.b_order))
    for a_last in rest_a:
        for b_last in rest_b:
            if is_symmetric_exchange(p, a_last, b_last):
                (a_mid,) = set(rest_a) - {a_last}
                (b_mid,) = set(rest_b) - {b_last}
                yield head.a_order + (a_mid, a_last), head.b_order + (b_mid, b_last)


def full_serial_exchange_rank3(p: BasePair) -> ExchangeSequence:
    """Full exchange for rank 3: two disjoint symmetric exchanges first and last, leftover in the middle."""
    if p.rank != 3:
        raise PreconditionError(f"need rank 3, got {p.rank}")
    ex = symmetric_exchanges(p)
    best = None
    for a1, b1 in ex:
        for a3, b3 in ex:
            if a3 == a1 or b3 == b1:
                continue
            (a2,) = p.a_base - {a1, a3}
            (b2,) = p.b_base - {b1, b3}
            cand = ((a1, a2, a3), (b1, b2, b3))
            if best is None or cand < best:
                best = cand
    if best is None:
        raise InternalConsistencyError("no two disjoint symmetric exchanges exist")
    return _verified(p, ExchangeSequence.build(p, *best, "rank3"), "rank-3 exchange")


def full_serial_exchange_rank4(p: BasePair) -> ExchangeSequence:
    """Full exchange for rank 4 built from two-element exchanges.

    Exchange the two smallest elements of A serially.  If a symmetric
    exchange of (A, B) remains among the untouched elements, finish with it.
    Otherwise exchange the other two A elements serially (their partners
    must include one already-used B element) and finish from there.
    """
    if p.rank != 4:
        raise PreconditionError(f"need rank 4, got {p.rank}")
    a_sorted = sorted(p.a_base)
    head = pair_serial_exchange(p, a_sorted[0], a_sorted[1])
    cands = sorted(_closing_sequences(p, head))
    route = "rank4:first-pair"
    if not cands:
        used_b = set(head.b_order)
        head = pair_serial_exchange(p, a_sorted[2], a_sorted[3])
        if not used_b & set(head.b_order):
            raise InternalConsistencyError(
                "second pair exchange avoided both B elements of the first")
        cands = sorted(_closing_sequences(p, head))
        route = "rank4:second-pair"
    if not cands:
        raise InternalConsistencyError("no symmetric exchange among the leftover elements")
    return _verified(p, ExchangeSequence.build(p, *cands[0], route), "rank-4 exchange")


def full_serial_exchange(p: BasePair, fallback: str | None = None,
                         max_steps: int | None = None) -> ExchangeSequence:
    """Constructive full exchange for rank <= 4.

    With ``fallback="brute"`` an InternalConsistencyError is logged and the
    exhaustive search takes over; the result then carries route ``"brute"``.
    """
    if fallback not in (None, "brute"):
        raise ValueError(f"unknown fallback {fallback!r}")
    n = p.rank
    try:
        if n == 0:
            return ExchangeSequence((), (), (), "trivial")
        if n == 1:
            (a,), (b,) = p.a_base, p.b_base
            return _verified(p, ExchangeSequence.build(p, (a,), (b,), "rank1"), "rank-1 exchange")
        if n == 2:
            a1, a2 = sorted(p.a_base)
            return pair_serial_exchange(p, a1, a2)
        if n == 3:
            return full_serial_exchange_rank3(p)
        if n == 4:
            return full_serial_exchange_rank4(p)
    except InternalConsistencyError as exc:
        if fallback != "brute":
            raise
        log.warning("constructive exchange failed (%s); falling back to exhaustive search", exc)
        seq = brute_force_serial_exchange(p, p.a_base, max_steps=max_steps)
        if seq is None:
            raise
        return ExchangeSequence(seq.a_order, seq.b_order, seq.certificate, "brute")
    raise PreconditionError(f"constructive full exchange needs rank <= 4, got {n}")


# -- exhaustive search -------------------------------------------------------

def iter_serial_exchanges(p: BasePair, a_subset, max_steps: int | None = None
                          ) -> Iterator[ExchangeSequence]:
    """All serial symmetric exchanges of ``a_subset``, lexicographic in the pair list.

    Each node of the search costs one step; exceeding ``max_steps`` raises
    StepBudgetExceeded.
    """
    a_subset = frozenset(a_subset)
    for a in a_subset:
        p._need_a(a)
    m = p.matroid
    k = len(a_subset)
    b_all = sorted(p.b_base)
    steps = 0

    def rec(a_side, b_side, left, used_b, a_ord, b_ord):
        nonlocal steps
        if len(a_ord) == k:
            yield ExchangeSequence.build(p, a_ord, b_ord, "brute")
            return
        for a in sorted(left):
            for b in b_all:
                if b in used_b:
                    continue
                steps += 1
                if max_steps is not None and steps > max_steps:
                    raise StepBudgetExceeded(f"serial exchange search exceeded {max_steps} steps")
                na = a_side - {a} | {b}
                nb = b_side - {b} | {a}
                if m.is_base(na) and m.is_base(nb):
                    yield from rec(na, nb, left - {a}, used_b | {b}, a_ord + (a,), b_ord + (b,))

    yield from rec(p.a_base, p.b_base, a_subset, frozenset(), (), ())


def brute_force_serial_exchange(p: BasePair, a_subset, max_steps: int | None = None
                                ) -> ExchangeSequence | None:
    return next(iter_serial_exchanges(p, a_subset, max_steps), None)


def brute_force_set_exchange(p: BasePair, a_subset) -> frozenset | None:
    """Smallest B1 (lexicographic) with (A - A1) + B1 and (B - B1) + A1 both bases."""
    a_subset = frozenset(a_subset)
    for a in a_subset:
        p._need_a(a)
    m = p.matroid
    for b_sub in combinations(sorted(p.b_base), len(a_subset)):
        b_sub = frozenset(b_sub)
        if m.is_base(p.a_base - a_subset | b_sub) and m.is_base(p.b_base - b_sub | a_subset):
            return b_sub
    return None


# -- executable lemmas -------------------------------------------------------

def serial_support_sides(p: BasePair, seq: ExchangeSequence, k: int
                         ) -> tuple[frozenset, frozenset]:
    """Both sides of the serial-support identity for prefix length k.

    Left: union of C(B, a_i) for i <= k.  Right: union of the supports of a_i
    in the partially exchanged base (B - {b_1..b_{i-1}}) + {a_1..a_{i-1}},
    intersected with B.
    """
    if not 1 <= k <= len(seq):
        raise PreconditionError(f"k must lie in 1..{len(seq)}, got {k}")
    if not verify_sequence(p, seq, side="B"):
        raise PreconditionError("sequence is not a serial exchange relative to B")
    m = p.matroid
    left: set = set()
    right: set = set()
    current = p.b_base
    for i in range(k):
        a, b = seq.a_order[i], seq.b_order[i]
        left |= fundamental_circuit(m, p.b_base, a)
        right |= fundamental_circuit(m, current, a) & p.b_base
        current = current - {b} | {a}
    return frozenset(left), frozenset(right)


def serial_support_identity_check(p: BasePair, seq: ExchangeSequence, k: int) -> bool:
    left, right = serial_support_sides(p, seq, k)
    return left == right


def lemma3_property(p: BasePair, a1: int, a2: int, b1: int, b2: int) -> bool:
    """Support of a2 keeps or lacks b2 across the swap B -> B - b1 + a1.

    Hypothesis: a's distinct in A, b's distinct in B, B - b1 + a1 a base, and
    b2 not in C(B, a1) or b1 not in C(B, a2).  Violations raise.
    """
    for a in (a1, a2):
        p._need_a(a)
    for b in (b1, b2):
        p._need_b(b)
    if a1 == a2 or b1 == b2:
        raise PreconditionError("elements must be distinct")
    m = p.matroid
    b_new = p.b_base - {b1} | {a1}
    if not m.is_base(b_new):
        raise PreconditionError("B - b1 + a1 is not a base")
    if b2 in p.support_in_b(a1) and b1 in p.support_in_b(a2):
        raise PreconditionError("hypothesis fails: b2 in C(B, a1) and b1 in C(B, a2)")
    return (b2 in fundamental_circuit(m, b_new, a2)) == (b2 in p.support_in_b(a2))


def lemma4_property(p: BasePair, a: int, b: int, b_prime: int) -> bool:
    """After a symmetric swap (a, b) the inserted element inherits support and role.

    Checks C(B - b + a, b) == C(B, a) - b + a and
    (b in C(A - a + b, b')) iff (a in C(A, b')).
    """
    p._need_b(b_prime)
    if b_prime == b:
        raise PreconditionError("b' must differ from b")
    if not is_symmetric_exchange(p, a, b):
        raise PreconditionError("(a, b) is not a symmetric exchange")
    m = p.matroid
    b_new = p.b_base - {b} | {a}
    a_new = p.a_base - {a} | {b}
    part_i = fundamental_circuit(m, b_new, b) == p.support_in_b(a) - {b} | {a}
    part_ii = (b in fundamental_circuit(m, a_new, b_prime)) == (a in p.support_in_a(b_prime))
    return part_i and part_ii


def admissible_lemma3_tuples(p: BasePair) -> Iterator[tuple[int, int, int, int]]:
    m = p.matroid
    for a1 in sorted(p.a_base):
        for b1 in sorted(p.b_base):
            if not m.is_base(p.b_base - {b1} | {a1}):
                continue
            for a2 in sorted(p.a_base - {a1}):
                for b2 in sorted(p.b_base - {b1}):
                    if b2 in p.support_in_b(a1) and b1 in p.support_in_b(a2):
                        continue
                    yield a1, a2, b1, b2


def admissible_lemma4_tuples(p: BasePair) -> Iterator[tuple[int, int, int]]:
    for a, b in symmetric_exchanges(p):
        for bp in sorted(p.b_base - {b}):
            yield a, b, bp

