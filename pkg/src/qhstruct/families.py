"""Finite families of small quivers and posets, each listed once up to isomorphism."""

from __future__ import annotations

import itertools
from functools import lru_cache

import networkx as nx

from .quiver import Quiver, ReachPoset, diamond_free, reachability


def _digraph(q: Quiver) -> nx.DiGraph:
    g = nx.DiGraph()
    g.add_nodes_from(range(1, q.n + 1))
    g.add_edges_from(q.arrows)
    return g


def dedupe(quivers) -> list[Quiver]:
    """Drop quivers isomorphic to an earlier one."""
    buckets: dict[str, list[tuple[Quiver, nx.DiGraph]]] = {}
    out = []
    for q in quivers:
        g = _digraph(q)
        h = nx.weisfeiler_lehman_graph_hash(g)
        bucket = buckets.setdefault(h, [])
        if any(nx.is_isomorphic(g, other) for _, other in bucket):
            continue
        bucket.append((q, g))
        out.append(q)
    return out


def orientations(n: int, edges) -> list[Quiver]:
    edges = list(edges)
    out = []
    for flips in range(1 << len(edges)):
        arrows = tuple((b, a) if flips >> k & 1 else (a, b) for k, (a, b) in enumerate(edges))
        out.append(Quiver(n, arrows))
    return dedupe(out)


@lru_cache(maxsize=None)
def tree_quivers(n: int) -> tuple[Quiver, ...]:
    """All tree quivers on n vertices up to isomorphism."""
    if n == 1:
        return (Quiver(1),)
    out = []
    for t in nx.nonisomorphic_trees(n):
        out.extend(orientations(n, [(a + 1, b + 1) for a, b in t.edges()]))
    return tuple(dedupe(out))


def dynkin_graph(kind: str, n: int) -> list[tuple[int, int]]:
    """Edges of the Dynkin diagram A_n, D_n or E_n (n = 6, 7, 8)."""
    if kind == "A":
        return [(i, i + 1) for i in range(1, n)]
    if kind == "D":
        # path 1 - ... - (n-1) with n attached to n-2
        return [(i, i + 1) for i in range(1, n - 1)] + [(n - 2, n)]
    if kind == "E":
        # path 1 - ... - (n-1) with n attached to 3
        return [(i, i + 1) for i in range(1, n - 1)] + [(3, n)]
    raise ValueError(kind)


@lru_cache(maxsize=None)
def dynkin_quivers(kind: str, n: int) -> tuple[Quiver, ...]:
    return tuple(orientations(n, dynkin_graph(kind, n)))


def all_dynkin_quivers(max_n: int) -> list[tuple[str, Quiver]]:
    out = []
    for n in range(1, max_n + 1):
        out += [(f"A{n}", q) for q in dynkin_quivers("A", n)]
        if n >= 4:
            out += [(f"D{n}", q) for q in dynkin_quivers("D", n)]
        if 6 <= n <= 8:
            out += [(f"E{n}", q) for q in dynkin_quivers("E", n)]
    return out


@lru_cache(maxsize=None)
def connected_acyclic_quivers(n: int) -> tuple[Quiver, ...]:
    """Connected acyclic quivers without parallel arrows on n vertices, up to isomorphism.

    Every acyclic quiver has a labelling with arrows going from smaller to
    larger labels, so subsets of those pairs suffice.
    """
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    out = []
    for k in range(n - 1, len(pairs) + 1):
        for arrows in itertools.combinations(pairs, k):
            q = Quiver(n, arrows)
            if len(q.components()) == 1:
                out.append(q)
    return tuple(dedupe(out))


@lru_cache(maxsize=None)
def posets(n: int) -> tuple[ReachPoset, ...]:
    """All posets on n elements up to isomorphism, as reachability of their Hasse quivers."""
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    seen = set()
    hasse = []
    for k in range(len(pairs) + 1):
        for rel in itertools.combinations(pairs, k):
            p = reachability(Quiver(n, rel))
            if len(p.strict_pairs()) != k:
                continue          # not transitively closed
            key = p.up
            if key in seen:
                continue
            seen.add(key)
            hasse.append(p.hasse_quiver())
    return tuple(reachability(q) for q in dedupe(hasse))


def diamond_free_posets(n: int) -> list[ReachPoset]:
    return [p for p in posets(n) if diamond_free(p)]
