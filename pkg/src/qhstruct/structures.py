"""Enumeration of quasi-hereditary structures and the poset they form.

Every class contains a total order, so the enumeration walks all n! total
orders. For a total order the standard module at v depends only on the set of
vertices below v, which makes the per-order work a handful of memo lookups.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .errors import PreconditionError
from .order import PartialOrder, check_size, close_masks, is_adapted
from .poset import FinitePoset, hasse_dot
from .quiver import Quiver, is_path_unique, reachability
from .standard import (DecInc, confined_support, dec_inc, dec_inc_from_supports,
                       standard_system, _require_simple)


@dataclass(frozen=True)
class QhStructure:
    key: tuple[int, ...]
    min_order: PartialOrder
    decinc: DecInc
    representative: tuple[int, ...]   # permutation word, bottom first, 1-based
    tilting: tuple[frozenset[int], ...] | None = None

    @property
    def dec(self) -> frozenset[tuple[int, int]]:
        return self.decinc.dec

    @property
    def inc(self) -> frozenset[tuple[int, int]]:
        return self.decinc.inc

    @property
    def representative_order(self) -> PartialOrder:
        return PartialOrder.from_word(self.representative)

    def label(self) -> str:
        return "{" + ",".join(f"({i},{j})" for i, j in self.min_order.pairs()) + "}"

    def to_json(self) -> dict:
        return {"min_order": [list(p) for p in self.min_order.pairs()],
                "dec": sorted(map(list, self.dec)), "inc": sorted(map(list, self.inc)),
                "representative": list(self.representative)}


def _make_structure(n: int, key: tuple[int, ...], word: tuple[int, ...]) -> QhStructure:
    di = dec_inc_from_supports(n, key[:n], key[n:])
    return QhStructure(key, di.closure(), di, word)


def structure_of(o: PartialOrder, q: Quiver) -> QhStructure:
    """The class of an adapted order o (representative: its first linear extension)."""
    sys = standard_system(o, q)
    word = _first_linear_extension(o)
    return _make_structure(q.n, sys.key, word)


def _first_linear_extension(o: PartialOrder) -> tuple[int, ...]:
    placed = 0
    word = []
    for _ in range(o.n):
        v = next(v for v in range(o.n) if not placed >> v & 1 and o.below[v] & ~placed == 0)
        word.append(v + 1)
        placed |= 1 << v
    return tuple(word)


def key_of(o: PartialOrder, q: Quiver) -> tuple[int, ...]:
    """Class key (supports only) of an adapted order."""
    n = q.n
    d = [confined_support(q.succ, i, o.below[i] | 1 << i) for i in range(n)]
    u = [confined_support(q.pred, i, o.below[i] | 1 << i) for i in range(n)]
    return tuple(d + u)


class _KeyMemo:
    """Supports of standard and costandard modules at v given the set below v."""

    def __init__(self, q: Quiver):
        self.q = q
        p = reachability(q)
        self.rel = [p.up[v] | p.down[v] for v in range(q.n)]
        self.memo: list[dict[int, tuple[int, int]]] = [{} for _ in range(q.n)]

    def get(self, v: int, below: int) -> tuple[int, int]:
        s = below & self.rel[v]
        hit = self.memo[v].get(s)
        if hit is None:
            allowed = s | 1 << v
            hit = (confined_support(self.q.succ, v, allowed), confined_support(self.q.pred, v, allowed))
            self.memo[v][s] = hit
        return hit


def _scan(q: Quiver, shard: int, nshards: int) -> dict[tuple[int, ...], tuple[int, ...]]:
    """Class key -> lexicographically first permutation for one shard of the stream."""
    n = q.n
    memo = _KeyMemo(q)
    found: dict[tuple[int, ...], tuple[int, ...]] = {}
    perms = itertools.permutations(range(n))
    if nshards > 1:
        perms = itertools.islice(perms, shard, None, nshards)
    for perm in perms:
        key = [0] * (2 * n)
        below = 0
        for v in perm:
            d, u = memo.get(v, below)
            key[v] = d
            key[n + v] = u
            below |= 1 << v
        key = tuple(key)
        if key not in found:
            found[key] = perm
    return found


def default_workers() -> int:
    return len(os.sched_getaffinity(0)) if hasattr(os, "sched_getaffinity") else (os.cpu_count() or 1)


def enumerate_structures(q: Quiver, workers: int = 1, cap: int | None = None) -> "QhPoset":
    _require_simple(q)
    check_size(q.n, cap)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            parts = list(ex.map(_scan, [q] * workers, range(workers), [workers] * workers))
    else:
        parts = [_scan(q, 0, 1)]
    merged: dict[tuple[int, ...], tuple[int, ...]] = {}
    for part in parts:
        for key, perm in part.items():
            if key not in merged or perm < merged[key]:
                merged[key] = perm
    structures = [_make_structure(q.n, key, tuple(v + 1 for v in perm)) for key, perm in merged.items()]
    structures.sort(key=lambda s: (len(s.dec), s.key))
    return QhPoset(q, tuple(structures))


@dataclass(frozen=True)
class QhPoset:
    quiver: Quiver
    structures: tuple[QhStructure, ...]

    def __len__(self):
        return len(self.structures)

    @cached_property
    def index(self) -> dict[tuple[int, ...], int]:
        return {s.key: k for k, s in enumerate(self.structures)}

    @cached_property
    def poset(self) -> FinitePoset:
        dec = [s.decinc.dec_bits for s in self.structures]
        up = []
        for a in dec:
            m = 0
            for k, b in enumerate(dec):
                if a & ~b == 0:
                    m |= 1 << k
            up.append(m)
        return FinitePoset(len(dec), tuple(up))

    def leq(self, a: int, b: int) -> bool:
        return self.poset.leq(a, b)

    def leq_matrix(self) -> list[list[bool]]:
        return [[self.poset.leq(a, b) for b in range(len(self))] for a in range(len(self))]

    def inc_leq_matrix(self) -> list[list[bool]]:
        """The same relation computed from reverse Inc containment."""
        inc = [s.decinc.inc_bits for s in self.structures]
        return [[inc[b] & ~inc[a] == 0 for b in range(len(inc))] for a in range(len(inc))]

    def class_of(self, o: PartialOrder) -> int:
        return self.index[key_of(o, self.quiver)]

    def is_lattice(self) -> bool:
        return self.poset.is_lattice()

    def lattice_witness(self):
        return self.poset.lattice_witness()

    def meet(self, a: int, b: int) -> int | None:
        return self.poset.meet(a, b)

    def join(self, a: int, b: int) -> int | None:
        return self.poset.join(a, b)

    def top(self) -> list[int]:
        return self.poset.maximal()

    def bottom(self) -> list[int]:
        return self.poset.minimal()

    def to_dot(self) -> str:
        return hasse_dot(self.poset, [s.label() for s in self.structures], "qhstr")

    def to_json(self) -> dict:
        return {"quiver": self.quiver.to_json(), "count": len(self),
                "structures": [s.to_json() for s in self.structures],
                "covers": [list(c) for c in self.poset.covers()]}


# ---------------------------------------------------------------- meet / join

def _check_formula_inputs(o1: PartialOrder, o2: PartialOrder, q: Quiver):
    from .obstructions import has_Zn_full_subposet
    if not is_path_unique(q):
        raise PreconditionError("meet/join formulas need a path-unique quiver")
    m = has_Zn_full_subposet(reachability(q))
    if m is not None:
        raise PreconditionError(f"reachability poset contains Z_{m}")
    for o in (o1, o2):
        if not is_adapted(o, q):
            raise PreconditionError(f"{o} is not adapted")
    return dec_inc(standard_system(o1, q)), dec_inc(standard_system(o2, q))


def meet_of(a: DecInc, b: DecInc) -> PartialOrder:
    """((Dec1 & Dec2) | Inc1 | Inc2) closed, without precondition checks."""
    return close_masks(a.n, [(d1 & d2) | i1 | i2 for d1, d2, i1, i2 in
                             zip(a.dec_below, b.dec_below, a.inc_below, b.inc_below)])


def join_of(a: DecInc, b: DecInc) -> PartialOrder:
    """((Inc1 & Inc2) | Dec1 | Dec2) closed, without precondition checks."""
    return close_masks(a.n, [(i1 & i2) | d1 | d2 for d1, d2, i1, i2 in
                             zip(a.dec_below, b.dec_below, a.inc_below, b.inc_below)])


def meet_formula(o1: PartialOrder, o2: PartialOrder, q: Quiver) -> PartialOrder:
    return meet_of(*_check_formula_inputs(o1, o2, q))


def join_formula(o1: PartialOrder, o2: PartialOrder, q: Quiver) -> PartialOrder:
    return join_of(*_check_formula_inputs(o1, o2, q))


# ---------------------------------------------------------------- duality

def opposite_check(q: Quiver, workers: int = 1) -> bool:
    """The identity on orders is an order-reversing bijection qh.str(q) -> qh.str(q^op)."""
    p = enumerate_structures(q, workers)
    rq = q.reversed()
    pop = enumerate_structures(rq, workers)
    if len(p) != len(pop):
        return False
    mapping = [pop.class_of(s.representative_order) for s in p.structures]
    # the image must not depend on the chosen representative
    for s, m in zip(p.structures, mapping):
        if pop.class_of(s.min_order) != m:
            return False
    if sorted(mapping) != list(range(len(pop))):
        return False
    from .poset import isomorphic_via
    return isomorphic_via(mapping, p.poset, pop.poset.dual())


def poset_isomorphic_via(mapping: Sequence[int], p1, p2) -> bool:
    from .poset import isomorphic_via
    a = p1.poset if isinstance(p1, QhPoset) else p1
    b = p2.poset if isinstance(p2, QhPoset) else p2
    return isomorphic_via(mapping, a, b)
