"""Finite acyclic quivers, path counting and the reachability poset.

Vertices are 1..n at the interface and 0..n-1 inside; vertex sets are int
bitmasks over the 0-based indices.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

MAX_VERTICES = 64


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of mask, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    """Bitmask of 1-based vertex labels."""
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


def labels(mask: int) -> frozenset[int]:
    return frozenset(i + 1 for i in bits(mask))


@dataclass(frozen=True)
class Quiver:
    n: int
    arrows: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "arrows", tuple((int(a), int(b)) for a, b in self.arrows))
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        for a, b in self.arrows:
            if not (1 <= a <= self.n and 1 <= b <= self.n):
                raise ValueError(f"arrow {a}->{b} out of range")
            if a == b:
                raise ValueError(f"loop at {a}")
        if len(self.topological_order) != self.n:
            raise ValueError("quiver has an oriented cycle")

    # adjacency as bitmasks, 0-based
    @cached_property
    def succ(self) -> tuple[int, ...]:
        s = [0] * self.n
        for a, b in self.arrows:
            s[a - 1] |= 1 << (b - 1)
        return tuple(s)

    @cached_property
    def pred(self) -> tuple[int, ...]:
        p = [0] * self.n
        for a, b in self.arrows:
            p[b - 1] |= 1 << (a - 1)
        return tuple(p)

    @cached_property
    def topological_order(self) -> tuple[int, ...]:
        indeg = [0] * self.n
        out: list[list[int]] = [[] for _ in range(self.n)]
        for a, b in self.arrows:
            indeg[b - 1] += 1
            out[a - 1].append(b - 1)
        stack = [i for i in range(self.n) if indeg[i] == 0][::-1]
        order = []
        while stack:
            i = stack.pop()
            order.append(i)
            for j in sorted(out[i], reverse=True):
                indeg[j] -= 1
                if indeg[j] == 0:
                    stack.append(j)
        return tuple(order)

    @cached_property
    def has_parallel_arrows(self) -> bool:
        return len(set(self.arrows)) != len(self.arrows)

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def reversed(self) -> "Quiver":
        return Quiver(self.n, tuple((b, a) for a, b in self.arrows))

    def restrict_to(self, vertices: Iterable[int]) -> "Quiver":
        """Full subquiver on the given labels, keeping the ambient labelling."""
        keep = set(vertices)
        return Quiver(self.n, tuple((a, b) for a, b in self.arrows if a in keep and b in keep))

    def neighbours(self, i: int) -> int:
        """Undirected neighbourhood mask of 0-based vertex i."""
        return self.succ[i] | self.pred[i]

    def components(self, within: int | None = None) -> list[int]:
        """Connected components (masks) of the full subquiver on `within`."""
        rest = self.all_mask if within is None else within
        comps = []
        while rest:
            seed = rest & -rest
            comp = seed
            frontier = seed
            while frontier:
                nxt = 0
                for v in bits(frontier):
                    nxt |= self.neighbours(v)
                nxt &= rest & ~comp
                comp |= nxt
                frontier = nxt
            comps.append(comp)
            rest &= ~comp
        return comps

    def to_json(self) -> dict:
        return {"vertices": self.n, "arrows": [list(a) for a in self.arrows]}

    @classmethod
    def from_json(cls, data: dict) -> "Quiver":
        return cls(int(data["vertices"]), tuple(tuple(a) for a in data.get("arrows", [])))

    def __str__(self):
        return f"Quiver({self.n}; " + ", ".join(f"{a}->{b}" for a, b in self.arrows) + ")"


@dataclass(frozen=True)
class ReachPoset:
    """Reflexive poset on 0..n-1 stored as up-sets: up[i] holds j with i <= j."""

    n: int
    up: tuple[int, ...]

    @cached_property
    def down(self) -> tuple[int, ...]:
        d = [0] * self.n
        for i in range(self.n):
            for j in bits(self.up[i]):
                d[j] |= 1 << i
        return tuple(d)

    def leq(self, i: int, j: int) -> bool:
        """1-based comparison."""
        return bool(self.up[i - 1] >> (j - 1) & 1)

    def strict_pairs(self) -> list[tuple[int, int]]:
        return [(i + 1, j + 1) for i in range(self.n) for j in bits(self.up[i]) if i != j]

    def matrix(self) -> list[list[bool]]:
        return [[bool(self.up[i] >> j & 1) for j in range(self.n)] for i in range(self.n)]

    def interval(self, i: int, j: int) -> int:
        """Mask of the closed interval [i,j], 0-based."""
        return self.up[i] & self.down[j]

    def hasse_quiver(self) -> Quiver:
        arrows = []
        for i in range(self.n):
            above = self.up[i] & ~(1 << i)
            for j in bits(above):
                # j covers i when nothing strictly between
                if (above & self.down[j] & ~(1 << j)) == 0:
                    arrows.append((i + 1, j + 1))
        return Quiver(self.n, tuple(arrows))

    def induced(self, subset: int) -> "ReachPoset":
        """Restriction to a vertex mask, index-preserving; outside vertices become isolated."""
        return ReachPoset(self.n, tuple(
            (self.up[i] & subset) | (1 << i) if subset >> i & 1 else 1 << i
            for i in range(self.n)))

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "ReachPoset":
        q = Quiver(n, tuple(pairs))
        return reachability(q)


def reachability(q: Quiver) -> ReachPoset:
    up = [0] * q.n
    for i in reversed(q.topological_order):
        m = 1 << i
        for j in bits(q.succ[i]):
            m |= up[j]
        up[i] = m
    return ReachPoset(q.n, tuple(up))


def _allowed_mask(q: Quiver, allowed) -> int:
    if allowed is None:
        return q.all_mask
    if isinstance(allowed, int):
        return allowed
    return mask_of(allowed)


def count_paths(q: Quiver, i: int, j: int, allowed=None) -> int:
    """Number of paths i -> j (1-based) through vertices of `allowed` only.

    `allowed` is an iterable of labels, a 0-based bitmask, or None for all.
    Parallel arrows give distinct paths.
    """
    return path_counts_from(q, i - 1, _allowed_mask(q, allowed))[j - 1]


def path_counts_from(q: Quiver, i: int, allowed: int) -> list[int]:
    """Path counts from 0-based i to every vertex, confined to `allowed`."""
    counts = [0] * q.n
    if not allowed >> i & 1:
        return counts
    counts[i] = 1
    mult = _arrow_multiplicities(q)
    for u in q.topological_order:
        c = counts[u]
        if not c:
            continue
        for v in bits(q.succ[u] & allowed):
            counts[v] += c * mult[(u, v)]
    return counts


def _arrow_multiplicities(q: Quiver) -> dict[tuple[int, int], int]:
    cache = q.__dict__.get("_mult")
    if cache is None:
        cache = {}
        for a, b in q.arrows:
            cache[(a - 1, b - 1)] = cache.get((a - 1, b - 1), 0) + 1
        q.__dict__["_mult"] = cache
    return cache


def is_path_unique(q: Quiver) -> bool:
    return all(max(path_counts_from(q, i, q.all_mask)) <= 1 for i in range(q.n))


def is_tree(q: Quiver) -> bool:
    return q.n > 0 and len(q.arrows) == q.n - 1 and len(q.components()) == 1


def is_type_a(q: Quiver) -> bool:
    """Underlying graph is a path (any orientation)."""
    return is_tree(q) and all(bin(q.neighbours(i)).count("1") <= 2 for i in range(q.n))


def sinks(q: Quiver) -> frozenset[int]:
    return frozenset(i + 1 for i in range(q.n) if q.succ[i] == 0)


def sources(q: Quiver) -> frozenset[int]:
    return frozenset(i + 1 for i in range(q.n) if q.pred[i] == 0)


def diamond_free(p: ReachPoset) -> bool:
    """No a < b,c < d with b, c incomparable; equivalently every open interval is a chain."""
    for a in range(p.n):
        for d in bits(p.up[a] & ~(1 << a)):
            inner = p.interval(a, d) & ~(1 << a) & ~(1 << d)
            for b in bits(inner):
                if inner & ~(p.up[b] | p.down[b]):
                    return False
    return True


# ---------------------------------------------------------------- catalog

def equioriented(n: int) -> Quiver:
    return Quiver(n, tuple((i, i + 1) for i in range(1, n)))


def complete_quiver(n: int) -> Quiver:
    """K_n: an arrow i -> j whenever i > j."""
    return Quiver(n, tuple((i, j) for i in range(n, 0, -1) for j in range(i - 1, 0, -1)))


def zigzag(n: int) -> Quiver:
    """Z_n, n even >= 4: odd labels are sources, even labels sinks, arranged in a cycle."""
    if n < 4 or n % 2:
        raise ValueError("Z_n needs an even n >= 4")
    arrows = []
    for k in range(1, n, 2):
        arrows.append((k, k + 1))
        arrows.append((k, k - 1 if k > 1 else n))
    return Quiver(n, tuple(sorted(arrows)))


def dtilde(n: int) -> Quiver:
    """D~_n on n+1 vertices: 1 -> 3 <- 2, a path 3 -> ... -> n-1, then n-1 -> n, n-1 -> n+1."""
    if n < 4:
        raise ValueError("D~_n needs n >= 4")
    arrows = [(1, 3), (2, 3)] + [(k, k + 1) for k in range(3, n - 1)] + [(n - 1, n), (n - 1, n + 1)]
    return Quiver(n + 1, tuple(arrows))


def star(r: int, s: int, t: int) -> Quiver:
    """Q(r,s,t): a_r -> ... -> a_0, then a_0 -> b_1 -> ... -> b_s and a_0 -> c_1 -> ... -> c_t.

    Labels: a_i = r+1-i, b_j = r+1+j, c_k = r+1+s+k.
    """
    a = lambda i: r + 1 - i
    b = lambda j: r + 1 + j
    c = lambda k: r + 1 + s + k
    arrows = [(a(i), a(i - 1)) for i in range(r, 0, -1)]
    arrows += [(a(0) if j == 1 else b(j - 1), b(j)) for j in range(1, s + 1)]
    arrows += [(a(0) if k == 1 else c(k - 1), c(k)) for k in range(1, t + 1)]
    return Quiver(r + s + t + 1, tuple(arrows))


def d1(n: int) -> Quiver:
    return star(n - 3, 1, 1)


def d2(n: int) -> Quiver:
    return star(1, n - 3, 1)


_NAME = re.compile(r"^(A|K|Z|Dtilde|D1|D2)(\d+)$")
_STAR = re.compile(r"^Q\((\d+),(\d+),(\d+)\)$")


def from_name(name: str) -> Quiver:
    name = name.replace(" ", "")
    m = _STAR.match(name)
    if m:
        return star(*map(int, m.groups()))
    m = _NAME.match(name)
    if not m:
        raise ValueError(f"unknown catalog quiver {name!r}")
    kind, n = m.group(1), int(m.group(2))
    build = {"A": equioriented, "K": complete_quiver, "Z": zigzag, "Dtilde": dtilde, "D1": d1, "D2": d2}
    if kind in ("D1", "D2") and n < 4:
        raise ValueError(f"{kind}<n> needs n >= 4")
    return build[kind](n)


def load_quiver(spec: str) -> Quiver:
    """Catalog name, or path to a JSON file in the quiver format."""
    try:
        return from_name(spec)
    except ValueError:
        pass
    with open(spec) as fh:
        return Quiver.from_json(json.load(fh))
