"""Independent brute-force routes used to cross-check the fast code.

Paths are listed explicitly, and for thin representations (one-dimensional
at each vertex of a support set, identity maps on arrows inside it) Hom is
solved as a linear system and Ext^1 follows from the Euler form.
"""

from __future__ import annotations

import itertools
from typing import Iterable

import numpy as np

from .order import PartialOrder
from .quiver import Quiver, mask_of


def all_paths_from(q: Quiver, i: int) -> list[tuple[int, ...]]:
    """Every path starting at 1-based i, as vertex tuples (parallel arrows give repeats)."""
    out = []
    stack = [(i,)]
    while stack:
        path = stack.pop()
        out.append(path)
        for a, b in q.arrows:
            if a == path[-1]:
                stack.append(path + (b,))
    return out


def count_paths_listing(q: Quiver, i: int, j: int, allowed: Iterable[int] | None = None) -> int:
    allow = set(range(1, q.n + 1)) if allowed is None else set(allowed)
    return sum(1 for p in all_paths_from(q, i) if p[-1] == j and set(p) <= allow)


def confined_supports(o: PartialOrder, q: Quiver) -> tuple[list[frozenset[int]], list[frozenset[int]]]:
    """Supports of standard / costandard modules from explicit confined paths."""
    rq = q.reversed()
    delta, nabla = [], []
    for i in range(1, q.n + 1):
        allow = {j for j in range(1, q.n + 1) if o.lt(j, i)} | {i}
        delta.append(frozenset(p[-1] for p in all_paths_from(q, i) if set(p) <= allow))
        nabla.append(frozenset(p[-1] for p in all_paths_from(rq, i) if set(p) <= allow))
    return delta, nabla


# ---------------------------------------------------------------- thin modules

def hom_dim(q: Quiver, m: frozenset[int], n: frozenset[int]) -> int:
    common = sorted(m & n)
    if not common:
        return 0
    col = {v: k for k, v in enumerate(common)}
    rows = []
    for a, b in q.arrows:
        row = [0] * len(common)
        if a in n and b in n and a in col:
            row[col[a]] += 1
        if a in m and b in m and b in col:
            row[col[b]] -= 1
        if any(row):
            rows.append(row)
    rank = int(np.linalg.matrix_rank(np.array(rows))) if rows else 0
    return len(common) - rank


def euler(q: Quiver, m: frozenset[int], n: frozenset[int]) -> int:
    return len(m & n) - sum(1 for a, b in q.arrows if a in m and b in n)


def ext_dim(q: Quiver, m: frozenset[int], n: frozenset[int]) -> int:
    return hom_dim(q, m, n) - euler(q, m, n)


def connected_supports(q: Quiver) -> list[frozenset[int]]:
    """All vertex sets spanning a connected full subquiver (the indecomposables in type A)."""
    out = []
    for r in range(1, q.n + 1):
        for vs in itertools.combinations(range(1, q.n + 1), r):
            s = frozenset(vs)
            if len(q.components(mask_of(s))) == 1:
                out.append(s)
    return out


def characteristic_tilting_typeA(o: PartialOrder, q: Quiver) -> dict[int, frozenset[int]]:
    """T(i) for a type A quiver: the indecomposables that are Ext-orthogonal from the
    right to every standard and from the left to every costandard module, each
    labelled by the unique vertex of its support above all the others."""
    delta, nabla = confined_supports(o, q)
    found: dict[int, frozenset[int]] = {}
    for m in connected_supports(q):
        if any(ext_dim(q, d, m) for d in delta) or any(ext_dim(q, m, u) for u in nabla):
            continue
        tops = [i for i in m if all(o.lt(j, i) for j in m if j != i)]
        if len(tops) != 1 or tops[0] in found:
            raise AssertionError(f"unexpected module {sorted(m)} in F(Delta) and F(Nabla)")
        found[tops[0]] = m
    return found


def tilting_families_equioriented(n: int) -> set[frozenset[tuple[int, int]]]:
    """All sets of n pairwise Ext-free interval modules of 1 -> 2 -> ... -> n."""
    q = Quiver(n, tuple((i, i + 1) for i in range(1, n)))
    intervals = [(a, b) for a in range(1, n + 1) for b in range(a, n + 1)]
    supp = {iv: frozenset(range(iv[0], iv[1] + 1)) for iv in intervals}
    ok = {(x, y): ext_dim(q, supp[x], supp[y]) == 0 and ext_dim(q, supp[y], supp[x]) == 0
          for x in intervals for y in intervals}
    out = set()

    def grow(chosen: list, start: int):
        if len(chosen) == n:
            out.add(frozenset(chosen))
            return
        for k in range(start, len(intervals)):
            iv = intervals[k]
            if all(ok[(iv, c)] for c in chosen):
                grow(chosen + [iv], k + 1)

    grow([], 0)
    return out
