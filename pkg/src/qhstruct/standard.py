"""Standard and costandard modules of a path algebra, read off confined paths.

For a vertex i with strict down-set D, the standard module has as basis the
paths starting at i whose vertices all lie in D + {i}; the costandard module
uses paths ending at i instead. Only supports and multiplicities are kept.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import ParallelArrowError, PreconditionError, UnsupportedError
from .order import PartialOrder, close_masks, is_adapted
from .quiver import Quiver, bits, is_type_a, labels, path_counts_from


def confined_support(adj: tuple[int, ...], i: int, allowed: int) -> int:
    """Vertices reachable from i along adj while staying inside allowed | {i}."""
    reach = 1 << i
    frontier = reach
    allowed |= reach
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        nxt &= allowed & ~reach
        reach |= nxt
        frontier = nxt
    return reach


@dataclass(frozen=True)
class StandardSystem:
    n: int
    delta_supp: tuple[int, ...]
    nabla_supp: tuple[int, ...]
    delta_dim: tuple[tuple[int, ...], ...]
    nabla_dim: tuple[tuple[int, ...], ...]

    @property
    def key(self) -> tuple[int, ...]:
        # multiplicities are determined by the supports, since confined paths
        # never leave the support; the masks alone identify the class
        return self.delta_supp + self.nabla_supp

    def delta_labels(self) -> tuple[frozenset[int], ...]:
        return tuple(labels(m) for m in self.delta_supp)

    def nabla_labels(self) -> tuple[frozenset[int], ...]:
        return tuple(labels(m) for m in self.nabla_supp)

    def to_json(self) -> dict:
        def part(supp, dim):
            return {str(i + 1): {"support": sorted(labels(supp[i])),
                                 "multiplicity": {str(j + 1): dim[i][j] for j in bits(supp[i])}}
                    for i in range(self.n)}
        return {"n": self.n, "delta": part(self.delta_supp, self.delta_dim),
                "nabla": part(self.nabla_supp, self.nabla_dim)}


def _require_simple(q: Quiver) -> None:
    if q.has_parallel_arrows:
        raise ParallelArrowError(f"{q} has parallel arrows")


def standard_system(o: PartialOrder, q: Quiver) -> StandardSystem:
    _require_simple(q)
    rq = q.reversed()
    dsupp, nsupp, ddim, ndim = [], [], [], []
    for i in range(q.n):
        allowed = o.below[i] | 1 << i
        ds = confined_support(q.succ, i, allowed)
        ns = confined_support(q.pred, i, allowed)
        dsupp.append(ds)
        nsupp.append(ns)
        ddim.append(tuple(path_counts_from(q, i, ds)))
        ndim.append(tuple(path_counts_from(rq, i, ns)))
    return StandardSystem(q.n, tuple(dsupp), tuple(nsupp), tuple(ddim), tuple(ndim))


def delta_supports(o: PartialOrder, q: Quiver) -> tuple[frozenset[int], ...]:
    return standard_system(o, q).delta_labels()


def nabla_supports(o: PartialOrder, q: Quiver) -> tuple[frozenset[int], ...]:
    return standard_system(o, q).nabla_labels()


@dataclass(frozen=True)
class DecInc:
    """Strict parts of Dec and Inc. dec_below[j] holds i with (i,j) in Dec, likewise inc."""

    n: int
    dec_below: tuple[int, ...]
    inc_below: tuple[int, ...]

    @cached_property
    def dec(self) -> frozenset[tuple[int, int]]:
        return frozenset((i + 1, j + 1) for j in range(self.n) for i in bits(self.dec_below[j]))

    @cached_property
    def inc(self) -> frozenset[tuple[int, int]]:
        return frozenset((i + 1, j + 1) for j in range(self.n) for i in bits(self.inc_below[j]))

    @cached_property
    def dec_bits(self) -> int:
        """Dec packed into one integer, for fast containment tests."""
        return _pack(self.dec_below, self.n)

    @cached_property
    def inc_bits(self) -> int:
        return _pack(self.inc_below, self.n)

    def closure(self) -> PartialOrder:
        return close_masks(self.n, [a | b for a, b in zip(self.dec_below, self.inc_below)])


def _pack(rows, n):
    out = 0
    for j, m in enumerate(rows):
        out |= m << (n * j)
    return out


def dec_inc_from_supports(n: int, delta_supp, nabla_supp) -> DecInc:
    return DecInc(n, tuple(delta_supp[j] & ~(1 << j) for j in range(n)),
                  tuple(nabla_supp[j] & ~(1 << j) for j in range(n)))


def dec_inc(sys: StandardSystem) -> DecInc:
    return dec_inc_from_supports(sys.n, sys.delta_supp, sys.nabla_supp)


def minimal_adapted(o: PartialOrder, q: Quiver) -> PartialOrder:
    if not is_adapted(o, q):
        raise PreconditionError(f"{o} is not adapted to {q}")
    sys = standard_system(o, q)
    m = dec_inc(sys).closure()
    assert all(mb & ~ob == 0 for mb, ob in zip(m.below, o.below)), "minimal order not contained in o"
    assert standard_system(m, q) == sys, "minimal order not equivalent to o"
    return m


def equivalent(o1: PartialOrder, o2: PartialOrder, q: Quiver) -> bool:
    return standard_system(o1, q) == standard_system(o2, q)


def tilting_supports(min_order: PartialOrder, q: Quiver) -> tuple[frozenset[int], ...]:
    """Supports of the indecomposable summands T(i) of the characteristic tilting module.

    Type A only: supp T(i) is the down-set of i under the minimal order, plus i.
    """
    if not is_type_a(q):
        raise UnsupportedError("tilting supports from the down-set formula need a type A quiver")
    if not is_adapted(min_order, q) or minimal_adapted(min_order, q) != min_order:
        raise PreconditionError(f"{min_order} is not a minimal adapted order")
    return tuple(labels(min_order.below[i] | 1 << i) for i in range(q.n))
