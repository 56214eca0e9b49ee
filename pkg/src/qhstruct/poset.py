"""Finite posets given by up-set bitmasks, with lattice checks and Hasse/DOT output."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Sequence

from .quiver import bits


@dataclass(frozen=True)
class FinitePoset:
    """Elements 0..size-1; up[a] is the mask of all b with a <= b (reflexive)."""

    size: int
    up: tuple[int, ...]

    @classmethod
    def from_leq(cls, size: int, leq: Callable[[int, int], bool]) -> "FinitePoset":
        return cls(size, tuple(sum(1 << b for b in range(size) if leq(a, b)) for a in range(size)))

    @classmethod
    def from_covers(cls, size: int, covers: Sequence[tuple[int, int]]) -> "FinitePoset":
        """Reflexive-transitive closure of the given (lower, upper) pairs."""
        succ = [0] * size
        for a, b in covers:
            succ[a] |= 1 << b
        up = [1 << a for a in range(size)]
        changed = True
        while changed:
            changed = False
            for a in range(size):
                m = up[a]
                for b in bits(succ[a]):
                    m |= up[b]
                if m != up[a]:
                    up[a] = m
                    changed = True
        return cls(size, tuple(up))

    def leq(self, a: int, b: int) -> bool:
        return bool(self.up[a] >> b & 1)

    @cached_property
    def down(self) -> tuple[int, ...]:
        d = [0] * self.size
        for a in range(self.size):
            for b in bits(self.up[a]):
                d[b] |= 1 << a
        return tuple(d)

    @cached_property
    def _linear(self):
        # sorting by down-set size is a linear extension; re-index so that bit
        # position order is that extension, then the lowest bit of any set is
        # one of its minimal elements
        perm = sorted(range(self.size), key=lambda a: (bin(self.down[a]).count("1"), a))
        pos = [0] * self.size
        for p, a in enumerate(perm):
            pos[a] = p

        def remap(mask):
            out = 0
            for b in bits(mask):
                out |= 1 << pos[b]
            return out
        up = [0] * self.size
        down = [0] * self.size
        for a in range(self.size):
            up[pos[a]] = remap(self.up[a])
            down[pos[a]] = remap(self.down[a])
        return perm, pos, up, down

    def join(self, a: int, b: int) -> int | None:
        perm, pos, up, _ = self._linear
        x = up[pos[a]] & up[pos[b]]
        if not x:
            return None
        m = (x & -x).bit_length() - 1
        return perm[m] if x & ~up[m] == 0 else None

    def meet(self, a: int, b: int) -> int | None:
        perm, pos, _, down = self._linear
        x = down[pos[a]] & down[pos[b]]
        if not x:
            return None
        m = x.bit_length() - 1
        return perm[m] if x & ~down[m] == 0 else None

    def lattice_witness(self) -> tuple[str, int, int] | None:
        """None when this is a lattice, else (kind, a, b) with no join/meet for a, b."""
        for a in range(self.size):
            for b in range(a + 1, self.size):
                if self.join(a, b) is None:
                    return ("join", a, b)
                if self.meet(a, b) is None:
                    return ("meet", a, b)
        return None

    def is_lattice(self) -> bool:
        return self.lattice_witness() is None

    def maximal(self) -> list[int]:
        return [a for a in range(self.size) if self.up[a] == 1 << a]

    def minimal(self) -> list[int]:
        return [a for a in range(self.size) if self.down[a] == 1 << a]

    def covers(self) -> list[tuple[int, int]]:
        out = []
        for a in range(self.size):
            strict = self.up[a] & ~(1 << a)
            for b in bits(strict):
                if strict & self.down[b] & ~(1 << b) == 0:
                    out.append((a, b))
        return out

    def dual(self) -> "FinitePoset":
        return FinitePoset(self.size, self.down)


def product(posets: Sequence[FinitePoset]) -> tuple[FinitePoset, list[tuple[int, ...]]]:
    """Componentwise product; also returns the tuple named by each element index."""
    import itertools
    tuples = list(itertools.product(*(range(p.size) for p in posets)))
    index = {t: k for k, t in enumerate(tuples)}
    up = []
    for t in tuples:
        m = 0
        for u in itertools.product(*(list(bits(p.up[x])) for p, x in zip(posets, t))):
            m |= 1 << index[u]
        up.append(m)
    return FinitePoset(len(tuples), tuple(up)), tuples


def isomorphic_via(mapping: Sequence[int], p1: FinitePoset, p2: FinitePoset) -> bool:
    """True when mapping (element of p1 -> element of p2) is an order isomorphism."""
    if p1.size != p2.size or len(mapping) != p1.size or sorted(mapping) != list(range(p2.size)):
        return False
    for a in range(p1.size):
        image = 0
        for b in bits(p1.up[a]):
            image |= 1 << mapping[b]
        if image != p2.up[mapping[a]]:
            return False
    return True


def hasse_dot(p: FinitePoset, names: Sequence[str], title: str = "poset") -> str:
    lines = [f"digraph {title} {{", "  rankdir=BT;", "  node [shape=box];"]
    for a in range(p.size):
        label = names[a].replace("\\", "\\\\").replace('"', '\\"')
        lines.append(f'  n{a} [label="{label}"];')
    for a, b in p.covers():
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
