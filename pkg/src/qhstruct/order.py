"""Strict partial orders on the vertex set and the adaptedness test."""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import CycleError, SizeError, UnsupportedError
from .quiver import Quiver, bits, is_path_unique, reachability

DEFAULT_CAP = 10


def enumeration_cap() -> int:
    return int(os.environ.get("QHSTRUCT_CAP", DEFAULT_CAP))


@dataclass(frozen=True)
class PartialOrder:
    """Strict order on 0..n-1; below[j] is the mask of all i with i < j."""

    n: int
    below: tuple[int, ...]

    @cached_property
    def above(self) -> tuple[int, ...]:
        a = [0] * self.n
        for j in range(self.n):
            for i in bits(self.below[j]):
                a[i] |= 1 << j
        return tuple(a)

    def lt(self, i: int, j: int) -> bool:
        """1-based strict comparison i < j."""
        return bool(self.below[j - 1] >> (i - 1) & 1)

    def comparable(self, i: int, j: int) -> bool:
        return self.lt(i, j) or self.lt(j, i)

    def pairs(self) -> list[tuple[int, int]]:
        return sorted((i + 1, j + 1) for j in range(self.n) for i in bits(self.below[j]))

    def __len__(self):
        return sum(bin(m).count("1") for m in self.below)

    def is_total(self) -> bool:
        return len(self) == self.n * (self.n - 1) // 2

    def matrix(self) -> list[list[bool]]:
        return [[bool(self.below[j] >> i & 1) for j in range(self.n)] for i in range(self.n)]

    def to_json(self) -> dict:
        return {"n": self.n, "pairs": [list(p) for p in self.pairs()]}

    @classmethod
    def from_json(cls, data: dict) -> "PartialOrder":
        return transitive_closure([tuple(p) for p in data.get("pairs", [])], int(data["n"]))

    @classmethod
    def empty(cls, n: int) -> "PartialOrder":
        return cls(n, (0,) * n)

    @classmethod
    def from_word(cls, word: Iterable[int]) -> "PartialOrder":
        """Total order w(1) < w(2) < ... from a permutation word of 1-based labels."""
        word = list(word)
        below = [0] * len(word)
        seen = 0
        for v in word:
            below[v - 1] = seen
            seen |= 1 << (v - 1)
        return cls(len(word), tuple(below))

    def __str__(self):
        return "{" + ", ".join(f"{i}<{j}" for i, j in self.pairs()) + "}"


def _close(n: int, below: list[int]) -> list[int]:
    """Transitive closure of a below-mask relation (Warshall on bitmasks)."""
    below = list(below)
    for k in range(n):
        bk = below[k]
        kbit = 1 << k
        for j in range(n):
            if below[j] & kbit:
                below[j] |= bk
    return below


def close_masks(n: int, below: list[int]) -> PartialOrder:
    closed = _close(n, below)
    for j in range(n):
        if closed[j] >> j & 1:
            raise CycleError(_find_cycle(n, below, j))
    return PartialOrder(n, tuple(closed))


def _find_cycle(n: int, below: list[int], start: int) -> list[int]:
    # walk downward edges i -> j meaning i < j; search a path start .. start
    up = [0] * n
    for j in range(n):
        for i in bits(below[j]):
            up[i] |= 1 << j
    parent = {start: None}
    frontier = [start]
    while frontier:
        nxt = []
        for u in frontier:
            for v in bits(up[u]):
                if v == start:
                    path = [u]
                    while parent[path[-1]] is not None:
                        path.append(parent[path[-1]])
                    path.reverse()
                    return [x + 1 for x in path + [start]]
                if v not in parent:
                    parent[v] = u
                    nxt.append(v)
        frontier = nxt
    return [start + 1]


def transitive_closure(pairs: Iterable[tuple[int, int]], n: int) -> PartialOrder:
    below = [0] * n
    for i, j in pairs:
        if i == j:
            raise CycleError([i, i])
        below[j - 1] |= 1 << (i - 1)
    return close_masks(n, below)


def intersect(o1: PartialOrder, o2: PartialOrder) -> PartialOrder:
    if o1.n != o2.n:
        raise ValueError("orders on different vertex counts")
    return PartialOrder(o1.n, tuple(a & b for a, b in zip(o1.below, o2.below)))


def restrict(o: PartialOrder, s) -> PartialOrder:
    """Keep the pairs inside s (labels or 0-based mask); labels are preserved."""
    m = s if isinstance(s, int) else sum(1 << (v - 1) for v in set(s))
    return PartialOrder(o.n, tuple(o.below[j] & m if m >> j & 1 else 0 for j in range(o.n)))


def union_closure(orders: Iterable[PartialOrder], n: int) -> PartialOrder:
    below = [0] * n
    for o in orders:
        below = [a | b for a, b in zip(below, o.below)]
    return close_masks(n, below)


def check_size(n: int, cap: int | None = None) -> None:
    cap = enumeration_cap() if cap is None else cap
    if n > cap:
        raise SizeError(f"n = {n} exceeds the enumeration cap {cap} ({math.factorial(n)} orders); "
                        "set QHSTRUCT_CAP to override")


def total_orders(n: int, cap: int | None = None) -> Iterator[PartialOrder]:
    """All n! total orders, lexicographic in the permutation word (bottom first)."""
    check_size(n, cap)
    for w in itertools.permutations(range(1, n + 1)):
        yield PartialOrder.from_word(w)


def is_refinement(fine: PartialOrder, coarse: PartialOrder) -> bool:
    return all(c & ~f == 0 for f, c in zip(fine.below, coarse.below))


def is_adapted(o: PartialOrder, q: Quiver) -> bool:
    """Adaptedness of o for the path algebra of q.

    Total orders are always adapted. Otherwise q must have unique paths; then
    the condition reduces to interval modules: for i ~> j incomparable there
    has to be k in the interval with i < k or j < k.
    """
    if o.is_total():
        return True
    if not is_path_unique(q):
        raise UnsupportedError("adaptedness of a non-total order needs a path-unique quiver")
    p = reachability(q)
    for i in range(q.n):
        for j in bits(p.up[i] & ~(1 << i)):
            if (o.below[j] | o.above[j]) >> i & 1:
                continue
            inner = p.interval(i, j) & ~(1 << i) & ~(1 << j)
            if not inner & (o.above[i] | o.above[j]):
                return False
    return True
