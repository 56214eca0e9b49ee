from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qhstruct.errors import NotTreeOrder, SizeError
from qhstruct.oracles import tilting_families_equioriented
from qhstruct.order import PartialOrder, transitive_closure
from qhstruct.quiver import equioriented
from qhstruct.standard import minimal_adapted, tilting_supports
from qhstruct.structures import enumerate_structures
from qhstruct.type_a import (Node, check_tree_conditions, enumerate_trees, from_parens, left_comb,
                             order_to_tree, right_comb, tamari_poset, to_parens, tree_to_order,
                             tree_to_tilting)

LEAF = Node(None, None)


@pytest.mark.parametrize("n, count", [(0, 1), (1, 1), (3, 5), (5, 42), (8, 1430)])
def test_tree_counts(n, count):
    assert sum(1 for _ in enumerate_trees(n)) == count


def test_tree_count_cap():
    with pytest.raises(SizeError):
        next(enumerate_trees(15))
    with pytest.raises(SizeError):
        tamari_poset(11)


def test_tree_order_examples():
    assert tree_to_order(left_comb(3)).pairs() == [(1, 2), (1, 3), (2, 3)]
    assert tree_to_order(Node(LEAF, LEAF)).pairs() == [(1, 2), (3, 2)]
    t = Node(Node(LEAF, LEAF), LEAF)
    assert set(tree_to_order(t).pairs()) == {(2, 4), (1, 4), (3, 4), (5, 4), (1, 2), (3, 2)}


def test_tree_conditions():
    with pytest.raises(NotTreeOrder) as info:
        check_tree_conditions(PartialOrder.empty(2))
    assert info.value.condition == 1
    with pytest.raises(NotTreeOrder) as info:
        check_tree_conditions(transitive_closure({(1, 3)}, 3))
    assert info.value.condition == 2
    assert info.value.witness == (1, 2, 3)


@pytest.mark.parametrize("n", range(0, 9))
def test_order_tree_round_trip(n):
    orders = set()
    for t in enumerate_trees(n):
        o = tree_to_order(t)
        check_tree_conditions(o)
        assert order_to_tree(o) == t
        orders.add(o)
    assert len(orders) == sum(1 for _ in enumerate_trees(n))


def test_tree_orders_are_the_minimal_adapted_orders():
    for n in range(1, 7):
        q = equioriented(n)
        mins = {s.min_order for s in enumerate_structures(q).structures}
        trees = {tree_to_order(t) for t in enumerate_trees(n)}
        assert mins == trees
        for o in trees:
            assert minimal_adapted(o, q) == o


def test_tamari_pentagon():
    t = tamari_poset(3)
    assert len(t.trees) == 5 and t.cover_count == 5 and t.poset.is_lattice()
    assert t.poset.minimal() == [t.index[left_comb(3)]]
    assert t.poset.maximal() == [t.index[right_comb(3)]]


def test_tamari_sizes_are_lattices():
    for n in range(1, 7):
        assert tamari_poset(n).poset.is_lattice()


def test_tree_to_tilting_example():
    assert tree_to_tilting(Node(LEAF, LEAF)) == ((1, 1), (1, 3), (3, 3))


def test_tilting_intervals_match_supports():
    for n in range(1, 7):
        for t in enumerate_trees(n):
            spans = tree_to_tilting(t)
            supp = tilting_supports(tree_to_order(t), equioriented(n))
            assert tuple(frozenset(range(a, b + 1)) for a, b in spans) == supp


def test_tilting_families_oracle():
    for n in range(1, 7):
        families = {frozenset(tree_to_tilting(t)) for t in enumerate_trees(n)}
        assert families == tilting_families_equioriented(n)


@given(st.integers(0, 9).flatmap(lambda n: st.sampled_from(list(enumerate_trees(n)))))
def test_parens_round_trip(t):
    s = to_parens(t)
    assert from_parens(s) == t
    assert s.count("(") == (0 if t is None else t.size)
