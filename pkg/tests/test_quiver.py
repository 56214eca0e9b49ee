from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import given, settings

from conftest import dags
from qhstruct.oracles import count_paths_listing
from qhstruct.quiver import (Quiver, ReachPoset, complete_quiver, count_paths, diamond_free,
                             dtilde, equioriented, from_name, is_path_unique, is_tree, reachability,
                             sinks, sources, star, zigzag)

WORKED = Quiver(5, ((1, 2), (3, 2), (4, 3), (4, 5)))


def test_reachability_chain():
    p = reachability(equioriented(3))
    assert p.strict_pairs() == [(1, 2), (1, 3), (2, 3)]
    assert all(p.leq(i, i) for i in range(1, 4))


def test_reachability_single_vertex():
    p = reachability(Quiver(1))
    assert p.strict_pairs() == [] and p.leq(1, 1)


def test_reachability_worked_example():
    assert set(reachability(WORKED).strict_pairs()) == {(1, 2), (3, 2), (4, 3), (4, 2), (4, 5)}


def test_count_paths_examples():
    assert count_paths(equioriented(3), 1, 3) == 1
    k3 = Quiver(3, ((3, 2), (3, 1), (2, 1)))
    assert count_paths(k3, 3, 1) == 2
    assert count_paths(k3, 3, 1, allowed=[1, 3]) == 1
    assert count_paths(k3, 2, 2, allowed=[2]) == 1


def test_parallel_arrows_count_separately():
    q = Quiver(2, ((1, 2), (1, 2)))
    assert count_paths(q, 1, 2) == 2
    assert not is_path_unique(q)


def test_path_uniqueness_examples():
    assert is_path_unique(WORKED)
    assert not is_path_unique(complete_quiver(3))
    assert is_path_unique(zigzag(4))


def test_tree_sinks_sources():
    assert is_tree(WORKED)
    assert sinks(WORKED) == {2, 5} and sources(WORKED) == {1, 4}
    assert not is_tree(zigzag(4))
    assert sinks(equioriented(2)) == {2} and sources(equioriented(2)) == {1}


def test_diamond_examples():
    assert diamond_free(reachability(WORKED))
    diamond = ReachPoset.from_pairs(4, [(1, 2), (1, 3), (2, 4), (3, 4)])
    assert not diamond_free(diamond)
    assert diamond_free(reachability(zigzag(6)))


def test_catalog_shapes():
    z = zigzag(6)
    assert sources(z) == {1, 3, 5} and sinks(z) == {2, 4, 6}
    assert set(z.arrows) == {(1, 2), (3, 2), (3, 4), (5, 4), (5, 6), (1, 6)}
    d = dtilde(4)
    assert d.n == 5 and set(d.arrows) == {(1, 3), (2, 3), (3, 4), (3, 5)}
    assert dtilde(5).n == 6
    q = star(1, 3, 2)
    # a_1 -> a_0 -> b_1 -> b_2 -> b_3, a_0 -> c_1 -> c_2
    assert set(q.arrows) == {(1, 2), (2, 3), (3, 4), (4, 5), (2, 6), (6, 7)}
    assert from_name("Q(1,3,2)") == q
    assert from_name("D16") == star(3, 1, 1) and from_name("D26") == star(1, 3, 1)
    assert len(complete_quiver(4).arrows) == 6


def test_bad_quivers_rejected():
    with pytest.raises(ValueError):
        Quiver(2, ((1, 2), (2, 1)))
    with pytest.raises(ValueError):
        Quiver(2, ((1, 1),))
    with pytest.raises(ValueError):
        Quiver(2, ((1, 3),))
    with pytest.raises(ValueError):
        from_name("X7")


def test_json_round_trip():
    assert Quiver.from_json(WORKED.to_json()) == WORKED


def test_path_unique_vs_diamond_free_exhaustive():
    # every acyclic quiver with <= 5 vertices and <= 6 arrows, labelled so arrows go up.
    # Unique paths always give a diamond-free reachability poset; the converse
    # needs the quiver to be the Hasse diagram (a shortcut arrow i -> k next to
    # i -> j -> k doubles paths without creating a diamond).
    for n in range(1, 6):
        pairs = list(itertools.combinations(range(1, n + 1), 2))
        for k in range(0, min(6, len(pairs)) + 1):
            for arrows in itertools.combinations(pairs, k):
                q = Quiver(n, arrows)
                p = reachability(q)
                if is_path_unique(q):
                    assert diamond_free(p), q
                if set(p.hasse_quiver().arrows) == set(q.arrows):
                    assert is_path_unique(q) == diamond_free(p), q


def test_shortcut_arrow_breaks_uniqueness_without_diamond():
    q = Quiver(3, ((1, 2), (2, 3), (1, 3)))
    assert not is_path_unique(q) and diamond_free(reachability(q))


@settings(max_examples=150, deadline=None)
@given(dags(max_n=6))
def test_count_paths_matches_matrix_powers(q):
    m = np.zeros((q.n, q.n), dtype=np.int64)
    for a, b in q.arrows:
        m[a - 1, b - 1] += 1
    total = np.eye(q.n, dtype=np.int64)
    power = np.eye(q.n, dtype=np.int64)
    for _ in range(q.n):
        power = power @ m
        total = total + power
    for i in range(1, q.n + 1):
        for j in range(1, q.n + 1):
            assert count_paths(q, i, j) == total[i - 1, j - 1]


@settings(max_examples=100, deadline=None)
@given(dags(max_n=6))
def test_count_paths_confined_matches_listing(q):
    allowed = [v for v in range(1, q.n + 1) if v % 2 or v == 1]
    for i in allowed:
        for j in allowed:
            assert count_paths(q, i, j, allowed) == count_paths_listing(q, i, j, allowed)


@settings(max_examples=100, deadline=None)
@given(dags(max_n=7))
def test_reachability_of_hasse_reduction(q):
    p = reachability(q)
    assert reachability(p.hasse_quiver()) == p
    # reflexive, antisymmetric
    for i in range(q.n):
        assert p.up[i] >> i & 1
        for j in range(q.n):
            if i != j:
                assert not (p.up[i] >> j & 1 and p.up[j] >> i & 1)
