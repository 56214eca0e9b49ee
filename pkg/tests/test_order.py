from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import dags
from qhstruct.errors import CycleError, SizeError, UnsupportedError
from qhstruct.families import tree_quivers
from qhstruct.order import (PartialOrder, intersect, is_adapted, is_refinement, restrict,
                            total_orders, transitive_closure)
from qhstruct.quiver import complete_quiver, equioriented
from qhstruct.standard import dec_inc, standard_system
from qhstruct.type_a import Node, tree_to_order


def test_closure_adds_transitive_pair():
    assert transitive_closure({(1, 2), (2, 3)}, 3).pairs() == [(1, 2), (1, 3), (2, 3)]


def test_closure_cycle_has_witness():
    with pytest.raises(CycleError) as info:
        transitive_closure({(1, 2), (2, 1)}, 2)
    assert set(info.value.cycle) == {1, 2}


def test_closure_longer_cycle_witness_is_a_cycle():
    pairs = {(1, 2), (2, 3), (3, 4), (4, 2)}
    with pytest.raises(CycleError) as info:
        transitive_closure(pairs, 4)
    cyc = info.value.cycle
    assert cyc[0] == cyc[-1]
    assert all((a, b) in pairs for a, b in zip(cyc, cyc[1:]))


def test_intersect_examples():
    o = PartialOrder.from_word([2, 1, 3])
    assert intersect(o, o) == o
    assert len(intersect(PartialOrder.from_word([1, 2, 3]), PartialOrder.from_word([3, 2, 1]))) == 0


def test_restrict_keeps_labels():
    r = restrict(PartialOrder.from_word([1, 2, 3]), {1, 3})
    assert r.pairs() == [(1, 3)] and r.n == 3


def test_total_orders_counts_and_order():
    assert sum(1 for _ in total_orders(3)) == 6
    assert sum(1 for _ in total_orders(5)) == 120
    words = [tuple(sorted(range(1, 4), key=lambda v: len([p for p in o.pairs() if p[1] == v])))
             for o in total_orders(3)]
    assert words == list(itertools.permutations(range(1, 4)))


def test_total_orders_cap(monkeypatch):
    with pytest.raises(SizeError):
        next(total_orders(11))
    monkeypatch.setenv("QHSTRUCT_CAP", "11")
    assert next(total_orders(11)).is_total()


def test_refinement():
    coarse = transitive_closure({(1, 2)}, 3)
    assert is_refinement(PartialOrder.from_word([1, 2, 3]), coarse)
    assert not is_refinement(PartialOrder.from_word([2, 1, 3]), coarse)


def test_adapted_examples():
    q3 = equioriented(3)
    for o in total_orders(3):
        assert is_adapted(o, q3)
    root2 = tree_to_order(Node(Node(), Node()))
    assert root2.pairs() == [(1, 2), (3, 2)]
    assert is_adapted(root2, q3)
    assert not is_adapted(PartialOrder.empty(2), equioriented(2))


def test_adapted_unsupported_for_multiple_paths():
    k3 = complete_quiver(3)
    assert is_adapted(PartialOrder.from_word([1, 2, 3]), k3)
    with pytest.raises(UnsupportedError):
        is_adapted(PartialOrder.empty(3), k3)


def test_json_round_trip():
    o = transitive_closure({(2, 1), (2, 3)}, 3)
    assert PartialOrder.from_json(o.to_json()) == o


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 7).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.tuples(st.integers(1, n), st.integers(1, n))
                                             .filter(lambda p: p[0] < p[1]), max_size=12))))
def test_closure_is_smallest_transitive(data):
    n, pairs = data
    o = transitive_closure(pairs, n)
    rel = set(o.pairs())
    assert set(pairs) <= rel
    for (a, b), (c, d) in itertools.product(rel, rel):
        if b == c:
            assert (a, d) in rel
    # every pair is forced: it lies on a chain of given pairs
    assert rel <= _naive_closure(set(pairs))


def _naive_closure(rel):
    rel = set(rel)
    while True:
        extra = {(a, d) for a, b in rel for c, d in rel if b == c} - rel
        if not extra:
            return rel
        rel |= extra


def _adapted_orders_by_class(q):
    """key -> (total orders, minimal order, a few intermediate adapted orders)."""
    classes = {}
    for w in itertools.permutations(range(1, q.n + 1)):
        o = PartialOrder.from_word(w)
        classes.setdefault(standard_system(o, q).key, []).append(o)
    return classes


def test_refinements_share_standard_systems():
    for n in range(1, 6):
        for q in tree_quivers(n):
            for key, totals in _adapted_orders_by_class(q).items():
                m = dec_inc(standard_system(totals[0], q)).closure()
                assert is_adapted(m, q)
                # intermediate orders: pairwise intersections of totals in the class
                mids = [intersect(a, b) for a, b in zip(totals, totals[1:])] + [m]
                for o in mids:
                    assert is_adapted(o, q)
                    assert standard_system(o, q).key == key
                    for t in totals:
                        if is_refinement(t, o):
                            assert standard_system(t, q).key == key


@settings(max_examples=60, deadline=None)
@given(dags(max_n=5), st.data())
def test_intersection_of_equivalent_adapted_orders(q, data):
    from qhstruct.quiver import is_path_unique
    classes = _adapted_orders_by_class(q)
    key = data.draw(st.sampled_from(sorted(classes)))
    totals = classes[key]
    a = data.draw(st.sampled_from(totals))
    b = data.draw(st.sampled_from(totals))
    o = intersect(a, b)
    if is_path_unique(q) or o.is_total():
        assert is_adapted(o, q)
    assert standard_system(o, q).key == key
