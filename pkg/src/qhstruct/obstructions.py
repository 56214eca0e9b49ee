"""Obstructions to the lattice property: crown subposets Z_m and D~ subquivers of trees."""

from __future__ import annotations

from .errors import UnsupportedError
from .quiver import Quiver, ReachPoset, bits, is_tree


def find_Zn(p: ReachPoset) -> tuple[int, ...] | None:
    """Vertices (1-based, in cyclic order, starting at a minimal one) of a smallest full
    subposet isomorphic to a crown Z_m, or None.

    A full crown is the same thing as a chordless cycle of length >= 4 in the
    comparability graph whose vertices alternate between lying below both
    neighbours and above both neighbours. The search walks such cycles from
    each possible bottom, going up from bottoms and down from tops.
    """
    n = p.n
    rel = [(p.up[v] | p.down[v]) & ~(1 << v) for v in range(n)]
    up = [p.up[v] & ~(1 << v) for v in range(n)]
    down = [p.down[v] & ~(1 << v) for v in range(n)]
    best: list[int] | None = None

    def extend(path: list[int], inner: int):
        # inner: union of relations of path[1:-1], which a new vertex must avoid
        nonlocal best
        last = path[-1]
        going_up = len(path) % 2 == 1
        start = path[0]
        cands = (up[last] if going_up else down[last]) & ~inner
        for x in bits(cands):
            if x in path:
                continue
            touches_start = len(path) > 1 and rel[x] >> start & 1
            size = len(path) + 1
            if touches_start:
                if going_up and size >= 4 and (best is None or size < len(best)):
                    best = path + [x]
                continue
            if best is not None and size + 1 >= len(best):
                continue
            extend(path + [x], inner | rel[last] if len(path) > 1 else inner)

    for s in range(n):
        extend([s], 0)
    if best is None:
        return None
    return tuple(v + 1 for v in best)


def has_Zn_full_subposet(p: ReachPoset) -> int | None:
    """Smallest even m >= 4 such that Z_m is a full subposet, else None."""
    w = find_Zn(p)
    return None if w is None else len(w)


def find_Dtilde(q: Quiver) -> tuple[int, int] | None:
    """(x, y) with x ~> y, two arrows into x and two out of y, or None.

    In a tree such a pair spans a D~ subquiver: the two in-neighbours of x, the
    path from x to y and the two out-neighbours of y are all distinct.
    """
    if not is_tree(q):
        raise UnsupportedError("D~ detection is implemented for tree quivers only")
    from .quiver import reachability
    p = reachability(q)
    indeg = [bin(m).count("1") for m in q.pred]
    outdeg = [bin(m).count("1") for m in q.succ]
    for x in range(q.n):
        if indeg[x] < 2:
            continue
        for y in bits(p.up[x]):
            if outdeg[y] >= 2:
                return (x + 1, y + 1)
    return None


def has_Dtilde_subquiver(q: Quiver) -> bool:
    return find_Dtilde(q) is not None
