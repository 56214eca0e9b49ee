"""Deconcatenation at sinks and sources, and the induced product decomposition.

Parts keep the ambient labels: a part is the full subquiver on its vertex set,
still living on n vertices, with everything outside it isolated.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (NotCut, NotSinkSourceError, NotTypeAError, PreconditionError,
                     UnsupportedError)
from .order import PartialOrder, restrict, union_closure
from .quiver import Quiver, bits, is_type_a, labels, mask_of
from .standard import tilting_supports
from .structures import QhStructure, structure_of


@dataclass(frozen=True)
class Deconcatenation:
    quiver: Quiver
    parts: tuple[tuple[frozenset[int], Quiver], ...]
    cut_vertices: tuple[tuple[int, str], ...]

    @property
    def masks(self) -> list[int]:
        return [mask_of(vs) for vs, _ in self.parts]

    def to_json(self) -> dict:
        return {"parts": [{"vertices": sorted(vs), "arrows": [list(a) for a in pq.arrows]}
                          for vs, pq in self.parts],
                "cut_vertices": [[v, kind] for v, kind in self.cut_vertices]}


def _kind(q: Quiver, v: int) -> str | None:
    i = v - 1
    if q.succ[i] == 0:
        return "sink"
    if q.pred[i] == 0:
        return "source"
    return None


def _split(q: Quiver, within: int, v: int) -> list[int]:
    """Parts of the full subquiver on `within` when cut at 0-based v."""
    comps = q.components(within & ~(1 << v))
    return [c | 1 << v if c & q.neighbours(v) else c for c in comps]


def deconcatenate(q: Quiver, v: int) -> Deconcatenation:
    kind = _kind(q, v)
    if kind is None:
        raise NotSinkSourceError(f"vertex {v} is neither a sink nor a source")
    parts = _split(q, q.all_mask, v - 1)
    touching = [p for p in parts if p >> (v - 1) & 1]
    if len(touching) < 2:
        raise NotCut(f"removing {v} leaves its neighbourhood connected")
    parts.sort(key=_low)
    return Deconcatenation(q, tuple((labels(m), q.restrict_to(labels(m))) for m in parts), ((v, kind),))


def _low(mask: int) -> int:
    return (mask & -mask).bit_length()


def _line(q: Quiver) -> list[int]:
    """Vertices of a type A quiver along the line, from the end with smaller label."""
    if q.n == 1:
        return [0]
    ends = [i for i in range(q.n) if bin(q.neighbours(i)).count("1") == 1]
    walk = [min(ends)]
    seen = 1 << walk[0]
    while len(walk) < q.n:
        nxt = q.neighbours(walk[-1]) & ~seen
        walk.append(nxt.bit_length() - 1)
        seen |= nxt
    return walk


def iterated_typeA(q: Quiver) -> Deconcatenation:
    """Split a type A quiver into maximal equioriented segments, left to right."""
    if not is_type_a(q):
        raise NotTypeAError(f"{q} is not of type A")
    line = _line(q)
    segments: list[list[int]] = [[line[0]]]
    cuts = []
    prev_dir = None
    for a, b in zip(line, line[1:]):
        d = bool(q.succ[a] >> b & 1)
        if prev_dir is not None and d != prev_dir:
            cuts.append((a + 1, "sink" if prev_dir else "source"))
            segments.append([a])
        segments[-1].append(b)
        prev_dir = d
    parts = tuple((frozenset(v + 1 for v in seg), q.restrict_to(v + 1 for v in seg)) for seg in segments)
    return Deconcatenation(q, parts, tuple(cuts))


def cut_candidates(q: Quiver, within: int) -> list[int]:
    """0-based sinks/sources of the part `within` whose removal disconnects it."""
    out = []
    for v in bits(within):
        nb = q.neighbours(v) & within
        if q.succ[v] & within and q.pred[v] & within:
            continue
        if len([c for c in q.components(within & ~(1 << v)) if c & nb]) >= 2:
            out.append(v)
    return out


def maximal_deconcatenation(q: Quiver, choose=min) -> Deconcatenation:
    """Cut repeatedly until no part has a cutting sink or source.

    `choose` picks the next cut among the candidates of the current part list;
    the resulting part multiset does not depend on it.
    """
    parts = q.components()
    cuts = []
    while True:
        options = [(k, v) for k, m in enumerate(parts) for v in cut_candidates(q, m)]
        if not options:
            break
        k, v = choose(options)
        m = parts.pop(k)
        parts.extend(_split(q, m, v))
        cuts.append((v + 1, _kind(q.restrict_to(labels(m)), v + 1)))
    parts.sort(key=_low)
    return Deconcatenation(q, tuple((labels(m), q.restrict_to(labels(m))) for m in parts), tuple(cuts))


def _validate(d: Deconcatenation):
    q = d.quiver
    cover = 0
    for m in d.masks:
        cover |= m
    if cover != q.all_mask:
        raise PreconditionError("parts do not cover the quiver")
    cut = mask_of(v for v, _ in d.cut_vertices)
    ms = d.masks
    for x in range(len(ms)):
        for y in range(x + 1, len(ms)):
            if ms[x] & ms[y] & ~cut:
                raise PreconditionError("parts overlap outside the cut vertices")
    inside = sum(len(pq.arrows) for _, pq in d.parts)
    if inside != len(q.arrows):
        raise PreconditionError("an arrow joins two different parts")


def phi(s: QhStructure, d: Deconcatenation) -> tuple[QhStructure, ...]:
    """Restrict the minimal order of s to each part."""
    _validate(d)
    return tuple(structure_of(restrict(s.min_order, m), pq) for m, (_, pq) in zip(d.masks, d.parts))


def psi(structs, d: Deconcatenation) -> QhStructure:
    """Glue minimal orders of the parts: the closure of their union."""
    _validate(d)
    orders = []
    for s, m in zip(structs, d.masks):
        o = s.min_order if isinstance(s, QhStructure) else s
        if any(o.below[j] for j in range(o.n) if not m >> j & 1) or any(b & ~m for b in o.below):
            raise PreconditionError("a part order relates vertices outside its part")
        orders.append(o)
    glued = union_closure(orders, d.quiver.n)
    return structure_of(glued, d.quiver)


# ---------------------------------------------------------------- tilting

def _compact(q: Quiver, mask: int) -> tuple[Quiver, list[int]]:
    verts = list(bits(mask))
    pos = {v: k for k, v in enumerate(verts)}
    arrows = tuple((pos[a - 1] + 1, pos[b - 1] + 1) for a, b in q.arrows
                   if mask >> (a - 1) & 1 and mask >> (b - 1) & 1)
    return Quiver(len(verts), arrows), verts


def _compact_order(o: PartialOrder, verts: list[int]) -> PartialOrder:
    below = []
    for v in verts:
        m = 0
        for k, u in enumerate(verts):
            if o.below[v] >> u & 1:
                m |= 1 << k
        below.append(m)
    return PartialOrder(len(verts), tuple(below))


def _tilt(q: Quiver, mask: int, order: PartialOrder) -> dict[int, int]:
    cq, verts = _compact(q, mask)
    if is_type_a(cq):
        supp = tilting_supports(_compact_order(order, verts), cq)
        return {verts[k]: mask_of(verts[x - 1] + 1 for x in supp[k]) for k in range(len(verts))}
    cands = cut_candidates(q, mask)
    if not cands:
        raise UnsupportedError(f"no sink or source cuts the part on {sorted(labels(mask))}, "
                               "and it is not of type A")
    v = cands[0]
    if q.pred[v] & mask == 0 and q.succ[v] & mask:
        # a source: reverse all arrows, making v a sink, and assemble there
        return _assemble_at_sink(q.reversed(), mask, order, v)
    return _assemble_at_sink(q, mask, order, v)


def _assemble_at_sink(q: Quiver, mask: int, order: PartialOrder, v: int) -> dict[int, int]:
    parts = [p for p in _split(q, mask, v)]
    sub = [_tilt(q, p, order) for p in parts]
    vbit = 1 << v
    out: dict[int, int] = {}
    for k, t in enumerate(sub):
        for i, supp in t.items():
            if i == v:
                continue
            if supp & vbit:
                for m, other in enumerate(sub):
                    if m != k:
                        supp |= other[v]
            out[i] = supp
    whole = 0
    for t in sub:
        whole |= t[v]
    out[v] = whole
    return out


def tree_tilting_supports(q: Quiver, s) -> tuple[frozenset[int], ...]:
    """Supports of T(1), ..., T(n) assembled over a decomposition at sinks and sources."""
    from .quiver import is_tree
    if not is_tree(q):
        raise PreconditionError("tree_tilting_supports needs a tree quiver")
    order = s.min_order if isinstance(s, QhStructure) else s
    t = _tilt(q, q.all_mask, order)
    return tuple(labels(t[i]) for i in range(q.n))


def downset_supports(o: PartialOrder) -> tuple[frozenset[int], ...]:
    return tuple(labels(o.below[i] | 1 << i) for i in range(o.n))
