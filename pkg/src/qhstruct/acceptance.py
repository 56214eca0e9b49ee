"""The acceptance suite: twelve end-to-end checks with their time budgets.

Each check returns (ok, detail). `run` times it and reports against the budget;
both the `verify` command and tests/test_acceptance.py go through here.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass
from typing import Callable

from . import counting
from .deconcat import iterated_typeA, psi
from .families import all_dynkin_quivers, diamond_free_posets, tree_quivers
from .lift import lift_order
from .obstructions import has_Dtilde_subquiver, has_Zn_full_subposet
from .oracles import characteristic_tilting_typeA
from .order import PartialOrder, intersect, is_adapted, is_refinement
from .poset import FinitePoset, isomorphic_via, product
from .quiver import (Quiver, bits, complete_quiver, d1, d2, dtilde, equioriented, from_name,
                     is_type_a, mask_of, reachability, star, zigzag)
from .standard import dec_inc, standard_system, tilting_supports
from .structures import (QhPoset, _check_formula_inputs, enumerate_structures, join_of, key_of,
                         meet_of, opposite_check)
from .type_a import enumerate_trees, tamari_poset, tree_to_order, tree_to_tilting

WORKED = Quiver(5, ((1, 2), (3, 2), (4, 3), (4, 5)))
E_TABLE = {(1, 2, 2): (106, (7, 19)), (2, 2, 1): (130, (23,)), (1, 3, 2): (322, (19, 52)),
           (2, 3, 1): (416, (66,)), (3, 2, 1): (453, (76,)), (1, 4, 2): (1020, (56, 154)),
           (2, 4, 1): (1368, (202,)), (4, 2, 1): (1584, (255,))}


@dataclass(frozen=True)
class Result:
    number: int
    title: str
    ok: bool
    detail: str
    seconds: float
    budget: float | None

    @property
    def within_budget(self) -> bool:
        return self.budget is None or self.seconds <= self.budget

    @property
    def passed(self) -> bool:
        return self.ok and self.within_budget

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        limit = f" / {self.budget:g}s" if self.budget is not None else ""
        late = "" if self.within_budget else " (over budget)"
        return f"[{mark}] {self.number:2d}. {self.title}: {self.detail} ({self.seconds:.2f}s{limit}){late}"


# ---------------------------------------------------------------- helpers

def _segment_order(tree, segment: list[int], n: int) -> PartialOrder:
    """Tree order on an equioriented segment, vertices listed along the arrows."""
    local = tree_to_order(tree)
    below = [0] * n
    for k, v in enumerate(segment):
        below[v - 1] = mask_of(segment[x] for x in bits(local.below[k]))
    return PartialOrder(n, tuple(below))


def _along_arrows(q: Quiver, vertices) -> list[int]:
    part = q.restrict_to(vertices)
    start = next(v for v in sorted(vertices) if part.pred[v - 1] == 0)
    walk = [start]
    while part.succ[walk[-1] - 1]:
        walk.append(part.succ[walk[-1] - 1].bit_length())
    return walk


def _tamari_map(n: int):
    tam = tamari_poset(n)
    qp = enumerate_structures(equioriented(n))
    mapping = [qp.class_of(tree_to_order(t)) for t in tam.trees]
    return tam, qp, mapping


def _weak_order(n: int) -> tuple[list[tuple[int, ...]], FinitePoset]:
    perms = list(itertools.permutations(range(1, n + 1)))

    def inversions(w):
        pos = {x: k for k, x in enumerate(w)}
        return {(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if pos[i] > pos[j]}
    inv = [inversions(w) for w in perms]
    # v <= w when every inversion of w is an inversion of v
    return perms, FinitePoset.from_leq(len(perms), lambda a, b: inv[b] <= inv[a])


# ---------------------------------------------------------------- criteria

def check_type_a_counts():
    got = {n: len(enumerate_structures(equioriented(n))) for n in range(1, 8)}
    want = {n: counting.catalan(n) for n in range(1, 8)}
    return got == want, f"counts {list(got.values())}, expected {list(want.values())}"


def check_tamari():
    bad = []
    for n in range(2, 7):
        tam, qp, mapping = _tamari_map(n)
        if not isomorphic_via(mapping, tam.poset, qp.poset):
            bad.append(n)
    return not bad, "isomorphic for n = 2..6" if not bad else f"fails for n in {bad}"


def check_worked_example():
    q = WORKED
    whole = enumerate_structures(q)
    d = iterated_typeA(q)
    factors = []
    part_posets = []
    for vs, pq in d.parts:
        seg = _along_arrows(q, vs)
        k = len(seg)
        pp = enumerate_structures(pq)
        tam = tamari_poset(k)
        mapping = [pp.class_of(_segment_order(t, seg, q.n)) for t in tam.trees]
        if not isomorphic_via(mapping, tam.poset, pp.poset):
            return False, f"part {sorted(vs)} is not Tamari({k})"
        factors.append(k)
        part_posets.append(pp)
    prod, tuples = product([pp.poset for pp in part_posets])
    mapping = [whole.index[psi([pp.structures[x] for pp, x in zip(part_posets, t)], d).key] for t in tuples]
    ok = len(whole) == 20 and isomorphic_via(mapping, prod, whole.poset)
    names = " x ".join(f"Tamari({k})" for k in factors)
    return ok, f"{len(whole)} structures, psi: {names} -> qh.str {'isomorphism' if ok else 'FAILED'}"


def check_type_d():
    rows = []
    ok = True
    for n in range(4, 8):
        b1, b2 = len(enumerate_structures(d1(n))), len(enumerate_structures(d2(n)))
        f1, f2 = counting.count_D1(n), counting.count_D2(n)
        ok &= b1 == f1 and b2 == f2
        rows.append(f"n={n}: {b1}/{f1}, {b2}/{f2}")
    return ok, "; ".join(rows)


def check_type_e():
    ok = True
    rows = []
    for (r, s, t), (total, cs) in E_TABLE.items():
        det = counting.count_star_detailed(r, s, t)
        brute = len(enumerate_structures(star(r, s, t)))
        good = det.total == total == brute and det.c_terms[:len(cs)] == cs and not any(det.c_terms[len(cs):])
        ok &= good
        rows.append(f"Q({r},{s},{t})={det.total}" + ("" if good else f"[brute {brute}, C {det.c_terms}]"))
    return ok, ", ".join(rows)


def check_weak_order():
    bad = []
    for n in range(3, 6):
        qp = enumerate_structures(complete_quiver(n))
        perms, weak = _weak_order(n)
        mapping = [qp.class_of(PartialOrder.from_word(w)) for w in perms]
        if len(qp) != math.factorial(n) or not isomorphic_via(mapping, weak, qp.poset):
            bad.append(n)
    return not bad, "n! structures, weak order for n = 3..5" if not bad else f"fails for n in {bad}"


def check_lattice_criteria():
    problems = []
    tested = 0
    for n in range(1, 7):
        for q in tree_quivers(n):
            lat = enumerate_structures(q).is_lattice()
            dt = has_Dtilde_subquiver(q)
            zn = has_Zn_full_subposet(reachability(q))
            tested += 1
            if lat == dt or lat != (zn is None):
                problems.append(str(q))
    for name, q in all_dynkin_quivers(7):
        tested += 1
        if not enumerate_structures(q).is_lattice() or has_Dtilde_subquiver(q):
            problems.append(name + str(q))
    for name in ("Dtilde4", "Dtilde5", "Z4", "Z6"):
        q = from_name(name)
        tested += 1
        lat = enumerate_structures(q).is_lattice()
        zn = has_Zn_full_subposet(reachability(q))
        expect_tree = name.startswith("D")
        if lat or zn is None or (expect_tree and not has_Dtilde_subquiver(q)):
            problems.append(name)
    return not problems, f"{tested} quivers, mismatches: {problems if problems else 'none'}"


def check_meet_join():
    pairs = 0
    bad = 0
    quivers = 0
    for n in range(1, 7):
        for q in tree_quivers(n):
            if has_Dtilde_subquiver(q):
                continue
            quivers += 1
            qp = enumerate_structures(q)
            ss = qp.structures
            # preconditions once per quiver; adaptedness holds for every class representative
            _check_formula_inputs(ss[0].min_order, ss[-1].min_order, q)
            for a in range(len(ss)):
                for b in range(a, len(ss)):
                    pairs += 1
                    m = qp.index.get(key_of(meet_of(ss[a].decinc, ss[b].decinc), q))
                    j = qp.index.get(key_of(join_of(ss[a].decinc, ss[b].decinc), q))
                    if m != qp.meet(a, b) or j != qp.join(a, b):
                        bad += 1
    return bad == 0, f"{quivers} quivers, {pairs} pairs, {bad} disagreements"


def _minimal_order_quivers():
    from .families import connected_acyclic_quivers
    qs = [q for n in range(1, 7) for q in tree_quivers(n)]
    qs += [q for n in range(1, 5) for q in connected_acyclic_quivers(n) if len(q.arrows) >= n]
    qs += [zigzag(4), zigzag(6), complete_quiver(5), dtilde(4), dtilde(5)]
    return qs


def check_minimal_orders():
    quivers = _minimal_order_quivers()
    orders = 0
    bad = 0
    for q in quivers:
        classes: dict[tuple[int, ...], list[PartialOrder]] = {}
        systems = {}
        for w in itertools.permutations(range(1, q.n + 1)):
            o = PartialOrder.from_word(w)
            sys = standard_system(o, q)
            classes.setdefault(sys.key, []).append(o)
            systems.setdefault(sys.key, sys)
        for key, totals in classes.items():
            sys = systems[key]
            m = dec_inc(sys).closure()
            common = totals[0]
            for o in totals[1:]:
                common = intersect(common, o)
            candidates = totals + [m, common]
            for o in candidates:
                orders += 1
                same = standard_system(o, q) == sys
                if not (is_refinement(o, m) and same):
                    bad += 1
            if common != m:
                bad += 1
    return bad == 0, f"{len(quivers)} quivers, {orders} adapted orders, {bad} failures"


def check_tilting():
    bad = 0
    trees = 0
    for n in range(1, 9):
        q = equioriented(n)
        for t in enumerate_trees(n):
            trees += 1
            supp = tilting_supports(tree_to_order(t), q)
            want = tuple(frozenset(range(lo, hi + 1)) for lo, hi in tree_to_tilting(t))
            if supp != want:
                bad += 1
    # every orientation of type A up to 6 vertices: down-set formula against
    # the Ext-orthogonality oracle
    structures = 0
    for n in range(1, 7):
        for q in tree_quivers(n):
            if not is_type_a(q):
                continue
            for s in enumerate_structures(q).structures:
                structures += 1
                supp = tilting_supports(s.min_order, q)
                oracle = characteristic_tilting_typeA(s.min_order, q)
                if tuple(oracle.get(i) for i in range(1, n + 1)) != supp:
                    bad += 1
    return bad == 0, f"{trees} trees, {structures} type A structures vs Ext oracle, {bad} failures"


def check_lifting():
    checked = 0
    bad = []
    for p in diamond_free_posets(5):
        big_q = p.hasse_quiver()
        big = enumerate_structures(big_q)
        for sub in itertools.combinations(range(5), 3):
            checked += 1
            qmask = sum(1 << v for v in sub)
            problem = _lift_problem(p, big, big_q, qmask)
            if problem:
                bad.append(f"{p.strict_pairs()} on {[v + 1 for v in sub]}: {problem}")
    return not bad, f"{checked} (poset, subset) pairs" + (f", failures: {bad[:3]}" if bad else ", all good")


def _lift_problem(p, big: QhPoset, big_q: Quiver, qmask: int) -> str | None:
    sub_q = p.induced(qmask).hasse_quiver()       # ambient labels, outside vertices isolated
    verts = list(bits(qmask))
    small_q = Quiver(3, tuple((verts.index(a - 1) + 1, verts.index(b - 1) + 1) for a, b in sub_q.arrows))
    small = enumerate_structures(small_q)
    image = []
    for s in small.structures:
        targets = set()
        # every total order of the class must lift to the same structure
        for w in itertools.permutations(range(1, 4)):
            o = PartialOrder.from_word(w)
            if key_of(o, small_q) != s.key:
                continue
            amb = PartialOrder(5, tuple(
                mask_of(verts[x] + 1 for x in bits(o.below[verts.index(j)])) if j in verts else 0
                for j in range(5)))
            lifted = lift_order(p, qmask, amb)
            if not is_adapted(lifted, big_q):
                return "lift not adapted"
            sysl = standard_system(lifted, big_q)
            if any(sysl.delta_supp[r] != 1 << r for r in range(5) if not qmask >> r & 1):
                return "standard module outside the subset is not simple"
            targets.add(sysl.key)
        if len(targets) != 1:
            return "not well defined"
        image.append(big.index[targets.pop()])
    if len(set(image)) != len(image):
        return "not injective"
    for a in range(len(small)):
        for b in range(len(small)):
            if small.leq(a, b) != big.leq(image[a], image[b]):
                return "not full"
    img = set(image)
    for a in range(len(small)):
        for b in range(len(small)):
            if not small.leq(a, b):
                continue
            between = big.poset.up[image[a]] & big.poset.down[image[b]]
            if any(z not in img for z in bits(between)):
                return "not interval-preserving"
    return None


def catalog_up_to(n_max: int) -> list[str]:
    names = [f"A{n}" for n in range(1, n_max + 1)] + [f"K{n}" for n in range(1, n_max + 1)]
    names += [f"Z{n}" for n in range(4, n_max + 1, 2)]
    names += [f"Dtilde{n}" for n in range(4, n_max)]
    names += [f"D1{n}" for n in range(4, n_max + 1)] + [f"D2{n}" for n in range(4, n_max + 1)]
    names += [f"Q({r},{s},{t})" for r in range(1, n_max) for s in range(1, n_max) for t in range(1, n_max)
              if r + s + t + 1 <= n_max]
    return names


def check_duality():
    names = catalog_up_to(6)
    bad = [name for name in names if not opposite_check(from_name(name))]
    return not bad, f"{len(names)} catalog quivers" + (f", failures: {bad}" if bad else ", all anti-isomorphic")


CRITERIA: list[tuple[int, str, Callable, float | None]] = [
    (1, "type A counts are Catalan numbers (n = 1..7)", check_type_a_counts, 5.0),
    (2, "qh.str of the equioriented A_n is Tamari (n = 2..6)", check_tamari, 5.0),
    (3, "worked example 1->2<-3<-4->5", check_worked_example, None),
    (4, "type D closed forms vs brute force (n = 4..7)", check_type_d, 20.0),
    (5, "type E table via recursion and brute force", check_type_e, 60.0),
    (6, "complete quiver K_n and the weak order (n = 3..5)", check_weak_order, None),
    (7, "lattice criteria (D~ for trees, Z_m for posets)", check_lattice_criteria, None),
    (8, "meet/join formulas vs brute force", check_meet_join, None),
    (9, "minimal adapted order properties", check_minimal_orders, None),
    (10, "tilting supports commute with the tree bijection", check_tilting, None),
    (11, "lifting from 3-element full subposets", check_lifting, None),
    (12, "duality on catalog quivers (n <= 6)", check_duality, None),
]


def run_one(number: int) -> Result:
    num, title, fn, budget = next(c for c in CRITERIA if c[0] == number)
    start = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:          # report, do not hide, unexpected failures
        ok, detail = False, f"raised {type(exc).__name__}: {exc}"
    return Result(num, title, ok, detail, time.perf_counter() - start, budget)


def run_all(numbers=None) -> list[Result]:
    return [run_one(c[0]) for c in CRITERIA if numbers is None or c[0] in numbers]
