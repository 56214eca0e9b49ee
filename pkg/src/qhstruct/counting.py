"""Counting quasi-hereditary structures for types A, D and E.

For a star Q(r,s,t) the count splits by which vertex can be put on top:
structures with a maximal a_i or b_j come from the algebra with that vertex
deleted, and C_k collects the structures with c_k maximal but no b-vertex
maximal. Deleting vertices leaves disjoint unions of equioriented paths and
smaller stars, whose counts multiply.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError("catalan(n) needs n >= 0")
    return comb(2 * n, n) // (n + 1)


def count_A(n: int) -> int:
    return catalan(n)


def count_D1(n: int) -> int:
    if n < 3:
        raise ValueError("count_D1(n) needs n >= 3")
    return 2 * catalan(n) - 3 * catalan(n - 1)


def count_D2(n: int) -> int:
    if n < 3:
        raise ValueError("count_D2(n) needs n >= 3")
    return 3 * catalan(n - 1) - catalan(n - 2)


def count_K(n: int) -> int:
    return factorial(n)


@lru_cache(maxsize=None)
def star_count(r: int, s: int, t: int) -> int:
    """|qh.str| of Q(r,s,t), arms allowed to be empty."""
    if s == 0 or t == 0:
        # one equioriented path a_r -> ... -> a_0 -> (remaining arm)
        return catalan(r + s + t + 1)
    if r == 0:
        # a_0 is a source splitting the quiver into two equioriented paths
        return catalan(s + 1) * catalan(t + 1)
    return count_star_detailed(r, s, t).total


@dataclass(frozen=True)
class StarCount:
    r: int
    s: int
    t: int
    a_terms: tuple[int, ...]   # index i = deleted a_i
    b_terms: tuple[int, ...]   # index j-1 = deleted b_j
    c_terms: tuple[int, ...]   # index k-1 = |C_k|

    @property
    def total(self) -> int:
        return sum(self.a_terms) + sum(self.b_terms) + sum(self.c_terms)


def count_star_detailed(r: int, s: int, t: int) -> StarCount:
    if min(r, s, t) < 1:
        raise ValueError("Q(r,s,t) needs r, s, t >= 1")
    c = catalan
    # deleting a_0 leaves three equioriented arms; deleting a_i (i >= 1) leaves
    # the star Q(i-1,s,t) and the path a_r .. a_{i+1}
    a_terms = [c(r) * c(s) * c(t)] + [star_count(i - 1, s, t) * c(r - i) for i in range(1, r + 1)]
    b_terms = [star_count(r, j - 1, t) * c(s - j) for j in range(1, s + 1)]
    c_terms = []
    for k in range(1, t + 1):
        with_ck_top = star_count(r, s, k - 1) * c(t - k)
        with_b_top = sum(star_count(r, j - 1, k - 1) * c(s - j) * c(t - k) for j in range(1, s + 1))
        c_terms.append(with_ck_top - with_b_top)
    return StarCount(r, s, t, tuple(a_terms), tuple(b_terms), tuple(c_terms))


def count_star(r: int, s: int, t: int) -> int:
    return count_star_detailed(r, s, t).total
