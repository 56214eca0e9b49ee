from __future__ import annotations

import itertools
import random

import pytest

from qhstruct.deconcat import (deconcatenate, downset_supports, iterated_typeA, maximal_deconcatenation,
                               phi, psi, tree_tilting_supports)
from qhstruct.errors import NotCut, NotSinkSourceError, NotTypeAError, PreconditionError, UnsupportedError
from qhstruct.families import tree_quivers
from qhstruct.poset import product
from qhstruct.quiver import Quiver, equioriented, is_type_a, star, zigzag
from qhstruct.standard import tilting_supports
from qhstruct.structures import enumerate_structures

WORKED = Quiver(5, ((1, 2), (3, 2), (4, 3), (4, 5)))


def part_sets(d):
    return [sorted(vs) for vs, _ in d.parts]


def test_deconcatenate_examples():
    d = deconcatenate(WORKED, 2)
    assert part_sets(d) == [[1, 2], [2, 3, 4, 5]] and d.cut_vertices == ((2, "sink"),)
    d = deconcatenate(WORKED, 4)
    assert part_sets(d) == [[1, 2, 3, 4], [4, 5]] and d.cut_vertices == ((4, "source"),)
    # parts keep their ambient labels and arrows
    assert d.parts[1][1].arrows == ((4, 5),)


def test_deconcatenate_errors():
    with pytest.raises(NotSinkSourceError):
        deconcatenate(equioriented(3), 2)
    with pytest.raises(NotCut):
        deconcatenate(equioriented(3), 3)
    with pytest.raises(NotCut):
        deconcatenate(zigzag(4), 2)


def test_iterated_type_a_examples():
    assert part_sets(iterated_typeA(WORKED)) == [[1, 2], [2, 3, 4], [4, 5]]
    assert part_sets(iterated_typeA(equioriented(5))) == [[1, 2, 3, 4, 5]]
    assert part_sets(iterated_typeA(Quiver(3, ((2, 1), (2, 3))))) == [[1, 2], [2, 3]]
    with pytest.raises(NotTypeAError):
        iterated_typeA(star(1, 1, 1))


def _small_trees(n_max):
    return [q for n in range(1, n_max + 1) for q in tree_quivers(n)]


def test_maximal_deconcatenation_is_confluent():
    rng = random.Random(0)
    for q in _small_trees(7):
        ref = sorted(map(sorted, (vs for vs, _ in maximal_deconcatenation(q).parts)))
        for choose in (max, lambda xs: rng.choice(xs)):
            got = sorted(map(sorted, (vs for vs, _ in maximal_deconcatenation(q, choose).parts)))
            assert got == ref


def test_maximal_deconcatenation_of_type_a_is_the_segments():
    for q in _small_trees(7):
        if is_type_a(q):
            assert sorted(part_sets(maximal_deconcatenation(q))) == sorted(part_sets(iterated_typeA(q)))


def test_worked_example_product():
    d = iterated_typeA(WORKED)
    counts = [len(enumerate_structures(pq)) for _, pq in d.parts]
    assert counts == [2, 5, 2] and len(enumerate_structures(WORKED)) == 20


def test_single_part_phi_is_identity():
    q = equioriented(4)
    d = maximal_deconcatenation(q)
    assert len(d.parts) == 1
    for s in enumerate_structures(q).structures:
        assert [x.key for x in phi(s, d)] == [s.key]


def test_phi_psi_inverse_isomorphisms():
    for q in _small_trees(6):
        d = maximal_deconcatenation(q)
        if len(d.parts) == 1:
            continue
        whole = enumerate_structures(q)
        parts = [enumerate_structures(pq) for _, pq in d.parts]
        prod, tuples = product([p.poset for p in parts])
        assert len(prod.up) == len(whole)
        mapping = []
        for s in whole.structures:
            pieces = phi(s, d)
            idx = tuple(p.index[x.key] for p, x in zip(parts, pieces))
            assert psi(pieces, d).key == s.key
            mapping.append(tuples.index(idx))
        assert sorted(mapping) == list(range(len(prod.up)))
        for a, b in itertools.product(range(len(whole)), repeat=2):
            assert whole.leq(a, b) == prod.leq(mapping[a], mapping[b])


def test_psi_rejects_foreign_pairs():
    d = deconcatenate(WORKED, 2)
    from qhstruct.order import PartialOrder
    bad = PartialOrder.from_word([1, 2, 3, 4, 5])
    with pytest.raises(PreconditionError):
        psi([bad, bad], d)


def test_tilting_recursion_matches_downsets():
    for q in _small_trees(7):
        if len(maximal_deconcatenation(q).parts) == 1 and not is_type_a(q):
            continue
        if any(not is_type_a(pq) for _, pq in maximal_deconcatenation(q).parts):
            continue
        for s in enumerate_structures(q).structures:
            supp = tree_tilting_supports(q, s)
            assert supp == downset_supports(s.min_order)
            assert len(set(supp)) == q.n


def test_tilting_recursion_agrees_with_type_a():
    for q in _small_trees(6):
        if not is_type_a(q):
            continue
        for s in enumerate_structures(q).structures:
            assert tree_tilting_supports(q, s) == tilting_supports(s.min_order, q)


def test_tilting_cut_vertex_outside_support():
    # on 1 -> 2 <- 3 with 2 above 1 only, T(1) stays inside the first part
    q = Quiver(3, ((1, 2), (3, 2)))
    for s in enumerate_structures(q).structures:
        supp = tree_tilting_supports(q, s)
        for i in (1, 3):
            if 2 not in supp[i - 1]:
                assert supp[i - 1] == {i}


def test_tilting_errors():
    s = enumerate_structures(star(1, 1, 1)).structures[0]
    with pytest.raises(UnsupportedError):
        tree_tilting_supports(star(1, 1, 1), s)
    with pytest.raises(PreconditionError):
        tree_tilting_supports(zigzag(4), enumerate_structures(zigzag(4)).structures[0])
