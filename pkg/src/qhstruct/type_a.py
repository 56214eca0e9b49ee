"""Binary trees with in-order labels, tree orders, and the Tamari lattice.

A tree is None (empty) or a Node(left, right); labels are implicit, assigned
in order starting from 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator

from .errors import NotTreeOrder, SizeError
from .order import PartialOrder
from .poset import FinitePoset


@dataclass(frozen=True)
class Node:
    left: "Node | None" = None
    right: "Node | None" = None

    @cached_property
    def size(self) -> int:
        return 1 + size(self.left) + size(self.right)

    def __str__(self):
        return to_parens(self)


BinaryTree = Node | None


def size(t: BinaryTree) -> int:
    return 0 if t is None else t.size


def to_parens(t: BinaryTree) -> str:
    """Dyck word: a node (L, R) is written '(' L ')' R."""
    out = []
    while t is not None:
        out.append("(" + to_parens(t.left) + ")")
        t = t.right
    return "".join(out)


def from_parens(s: str) -> BinaryTree:
    pos = 0

    def parse() -> BinaryTree:
        nonlocal pos
        if pos >= len(s) or s[pos] == ")":
            return None
        if s[pos] != "(":
            raise ValueError(f"unexpected {s[pos]!r} at {pos}")
        pos += 1
        left = parse()
        if pos >= len(s) or s[pos] != ")":
            raise ValueError("unbalanced parentheses")
        pos += 1
        right = parse()
        return Node(left, right)

    t = parse()
    if pos != len(s):
        raise ValueError("trailing characters in tree string")
    return t


def root_label(t: Node, offset: int = 0) -> int:
    return offset + size(t.left) + 1


def left_comb(n: int) -> BinaryTree:
    t = None
    for _ in range(n):
        t = Node(t, None)
    return t


def right_comb(n: int) -> BinaryTree:
    t = None
    for _ in range(n):
        t = Node(None, t)
    return t


@lru_cache(maxsize=None)
def _trees(n: int) -> tuple[BinaryTree, ...]:
    if n == 0:
        return (None,)
    out = []
    for k in range(n):
        for left in _trees(k):
            for right in _trees(n - 1 - k):
                out.append(Node(left, right))
    return tuple(out)


def enumerate_trees(n: int) -> Iterator[BinaryTree]:
    """All binary trees of size n; left subtree sizes increase, then recursively."""
    if n > 14:
        raise SizeError("tree enumeration is limited to n <= 14")

    def gen(m):
        if m == 0:
            yield None
            return
        for k in range(m):
            for left in gen(k):
                for right in gen(m - 1 - k):
                    yield Node(left, right)
    if n <= 10:
        yield from _trees(n)
    else:
        yield from gen(n)


def _walk(t: BinaryTree, offset: int, out: list):
    """Append (label, lo, hi, subtree mask) for every node; return the subtree mask."""
    if t is None:
        return 0
    r = root_label(t, offset)
    lm = _walk(t.left, offset, out)
    rm = _walk(t.right, r, out)
    m = lm | rm | 1 << (r - 1)
    out.append((r, offset + 1, offset + t.size, m))
    return m


def tree_to_order(t: BinaryTree) -> PartialOrder:
    """i < j iff i is in the subtree rooted at j."""
    n = size(t)
    nodes: list = []
    _walk(t, 0, nodes)
    below = [0] * n
    for r, _, _, m in nodes:
        below[r - 1] = m & ~(1 << (r - 1))
    return PartialOrder(n, tuple(below))


def tree_to_tilting(t: BinaryTree) -> tuple[tuple[int, int], ...]:
    """Vertex i -> the interval (min, max) of labels in the subtree of i."""
    nodes: list = []
    _walk(t, 0, nodes)
    spans = {r: (lo, hi) for r, lo, hi, _ in nodes}
    return tuple(spans[i] for i in range(1, size(t) + 1))


def check_tree_conditions(o: PartialOrder) -> None:
    """Raise NotTreeOrder unless o satisfies the two binary-tree conditions."""
    n = o.n
    # (2) for i < j < k: i below k forces j below k, and k below i forces j below i
    for i in range(1, n + 1):
        for k in range(i + 2, n + 1):
            for j in range(i + 1, k):
                if o.lt(i, k) and not o.lt(j, k):
                    raise NotTreeOrder(2, (i, j, k), f"{i} < {k} but not {j} < {k}")
                if o.lt(k, i) and not o.lt(j, i):
                    raise NotTreeOrder(2, (i, j, k), f"{k} < {i} but not {j} < {i}")
    # (1) incomparable i < j need a k strictly between lying above both
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if o.comparable(i, j):
                continue
            if not any(o.lt(i, k) and o.lt(j, k) for k in range(i + 1, j)):
                raise NotTreeOrder(1, (i, j), f"{i}, {j} incomparable with no common upper bound between them")


def order_to_tree(o: PartialOrder) -> BinaryTree:
    check_tree_conditions(o)

    def build(lo: int, hi: int) -> BinaryTree:
        if lo > hi:
            return None
        tops = [v for v in range(lo, hi + 1)
                if all(o.lt(u, v) for u in range(lo, hi + 1) if u != v)]
        if len(tops) != 1:
            raise NotTreeOrder(1, (lo, hi), "no unique maximum on a label interval")
        r = tops[0]
        return Node(build(lo, r - 1), build(r + 1, hi))

    t = build(1, o.n)
    if tree_to_order(t) != o:
        raise NotTreeOrder(1, (1, o.n), "order is not the order of the reconstructed tree")
    return t


# ---------------------------------------------------------------- Tamari

def right_rotations(t: BinaryTree) -> Iterator[BinaryTree]:
    """All trees one right rotation above t: (x, (y, A, B), C) -> (y, A, (x, B, C))."""
    if t is None:
        return
    if t.left is not None:
        a, b, c = t.left.left, t.left.right, t.right
        yield Node(a, Node(b, c))
    for l2 in right_rotations(t.left):
        yield Node(l2, t.right)
    for r2 in right_rotations(t.right):
        yield Node(t.left, r2)


@dataclass(frozen=True)
class TamariPoset:
    n: int
    trees: tuple[BinaryTree, ...]
    poset: FinitePoset
    cover_count: int

    @cached_property
    def index(self) -> dict:
        return {t: k for k, t in enumerate(self.trees)}


def tamari_poset(n: int) -> TamariPoset:
    if n > 10:
        raise SizeError("Tamari poset is limited to n <= 10")
    trees = tuple(enumerate_trees(n))
    index = {t: k for k, t in enumerate(trees)}
    covers = [(index[t], index[u]) for t in trees for u in right_rotations(t)]
    return TamariPoset(n, trees, FinitePoset.from_covers(len(trees), covers), len(covers))
