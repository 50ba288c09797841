"""Acceptance criteria 1-10, one test each.

Each test records a PASS/FAIL line; the lines are printed at the end of the
pytest run (see conftest.py) and when this file is run as a script.
"""

from __future__ import annotations

import time
from collections import Counter
from itertools import combinations, permutations
from math import comb, factorial

import pytest

from lrtrees.hopf import (
    GENERATOR,
    antipode,
    convolution_check,
    star_power_generator,
    tensor_star,
    tree_coproduct,
    tree_power_generator,
    tree_star,
)
from lrtrees.linear import LinComb
from lrtrees.loopgraphs import (
    LoopGraph,
    enumerate_loop_graphs,
    first_summand_analysis,
    generation_multiset,
    is_interval_closed,
    root_bridge,
)
from lrtrees.perms import Permutation, all_perms, mr_coproduct, mr_star, shuffles
from lrtrees.recursion import acceptance_cases, verify_recursion
from lrtrees.render import tikz_graphs
from lrtrees.trees import LEAF, comb_left, comb_right, enumerate_trees, parse_tree

RESULTS: dict[int, tuple[bool, str]] = {}


def record(num: int, desc: str, check) -> None:
    start = time.perf_counter()
    try:
        check()
    except AssertionError as exc:
        first = str(exc).splitlines()[0] if str(exc) else "assertion failed"
        RESULTS[num] = (False, f"{desc} ({time.perf_counter() - start:.1f}s) :: {first[:300]}")
        raise
    RESULTS[num] = (True, f"{desc} ({time.perf_counter() - start:.1f}s)")


def B(x):
    return LinComb.basis(x)


def trees_upto(total):
    return [t for n in range(total + 1) for t in enumerate_trees(n)]


# 1

def test_criterion_01_catalan_dimensions():
    def check():
        start = time.perf_counter()
        for n in range(13):
            expected = factorial(2 * n) // (factorial(n + 1) * factorial(n))
            assert len(enumerate_trees(n)) == expected, n
        assert time.perf_counter() - start < 10
    record(1, "Catalan dimensions |Y^n| for n=0..12 under 10 s", check)


# 2

def test_criterion_02_shuffles():
    def check():
        assert set(shuffles(1, 2)) == {Permutation(p) for p in [(1, 2, 3), (2, 1, 3), (3, 1, 2)]}
        for p in range(11):
            for q in range(11 - p):
                assert len(shuffles(p, q)) == comb(p + q, p)
    record(2, "shuffles(1,2) fixture and binomial counts for p+q <= 10", check)


# 3

def test_criterion_03_star_powers():
    def check():
        t12, t21 = comb_left(2), comb_right(2)
        assert star_power_generator(2) == B(t12) + B(t21)
        p3 = star_power_generator(3)
        assert len(p3) == 5
        assert sorted(p3.coeff(t) for t in p3) == [1, 1, 1, 1, 2]
        assert p3.coefficient_sum() == 6
        for n in range(8):
            p = star_power_generator(n)
            assert p.support() == set(enumerate_trees(n))
            assert p.coefficient_sum() == factorial(n)
    record(3, "(1)^{*n} fixtures, support Y^n and coefficient sum n! for n <= 7", check)


# 4

def _coassociative_trees(t):
    d = tree_coproduct(B(t))
    left = d.map_basis(lambda pq: tree_coproduct(B(pq[0])).map_basis(lambda ab: B((ab[0], ab[1], pq[1]))))
    right = d.map_basis(lambda pq: tree_coproduct(B(pq[1])).map_basis(lambda ab: B((pq[0], ab[0], ab[1]))))
    return left == right


def _coassociative_perms(s):
    d = mr_coproduct(B(s))
    left = d.map_basis(lambda pq: mr_coproduct(B(pq[0])).map_basis(lambda ab: B((ab[0], ab[1], pq[1]))))
    right = d.map_basis(lambda pq: mr_coproduct(B(pq[1])).map_basis(lambda ab: B((pq[0], ab[0], ab[1]))))
    return left == right


def test_criterion_04_hopf_axioms():
    def check():
        start = time.perf_counter()
        # associativity to total grade 6, trees and permutations
        for a in trees_upto(6):
            for b in trees_upto(6 - a.order):
                ab = tree_star(B(a), B(b))
                for c in trees_upto(6 - a.order - b.order):
                    assert tree_star(ab, B(c)) == tree_star(B(a), tree_star(B(b), B(c))), (a, b, c)
        perms_by = {n: all_perms(n) for n in range(7)}
        for i in range(7):
            for j in range(7 - i):
                for k in range(7 - i - j):
                    for x in perms_by[i]:
                        for y in perms_by[j]:
                            xy = mr_star(B(x), B(y))
                            for z in perms_by[k]:
                                assert mr_star(xy, B(z)) == mr_star(B(x), mr_star(B(y), B(z)))
        # coassociativity to grade 6
        for t in trees_upto(6):
            assert _coassociative_trees(t), t
        for n in range(7):
            for s in perms_by[n]:
                assert _coassociative_perms(s), s
        # Δ is an algebra map to grade 5
        for a in trees_upto(5):
            for b in trees_upto(5 - a.order):
                assert tree_coproduct(tree_star(B(a), B(b))) == tensor_star(tree_coproduct(B(a)), tree_coproduct(B(b)))
        for i in range(6):
            for j in range(6 - i):
                for x in perms_by[i]:
                    for y in perms_by[j]:
                        lhs = mr_coproduct(mr_star(B(x), B(y)))
                        assert lhs == tensor_star(mr_coproduct(B(x)), mr_coproduct(B(y)), mr_star)
        # antipode
        assert convolution_check(7)
        assert antipode(B(GENERATOR)) == -B(GENERATOR)
        assert antipode(B(comb_left(2))) == B(comb_right(2))
        assert antipode(B(comb_right(2))) == B(comb_left(2))
        for n in range(7):
            x = tree_power_generator(n)
            assert antipode(x) == x * (-1) ** n, n
        assert time.perf_counter() - start < 120
    record(4, "Hopf axioms, convolution to order 7, antipode fixtures, under 2 min", check)


# 5

def replay_strict(n, g):
    """Sequential contraction with relabeling; a loop blocks its neighbours."""
    found = set()

    def walk(tree, free, pairs, depth):
        if depth == g:
            found.add((tree, frozenset(pairs)))
            return
        for i in range(len(free) - 1):
            a, b = free[i], free[i + 1]
            if b == a + 1:
                walk(tree, free[:i] + free[i + 2:], pairs | {(a, b)}, depth + 1)

    if n + 2 - 2 * g >= 1:
        for t in enumerate_trees(n):
            walk(t, list(range(n + 1)), frozenset(), 0)
    return found


def test_criterion_05_loop_graph_counts():
    def check():
        assert len(enumerate_loop_graphs(1, 1)) == 1
        assert len(enumerate_loop_graphs(3, 2)) == 5
        for n in range(7):
            for g in range(4):
                got = {(x.base, frozenset(x.matching)) for x in enumerate_loop_graphs(n, g)}
                assert got == replay_strict(n, g), (n, g)
        assert len(enumerate_loop_graphs(3, 1)) == len(replay_strict(3, 1)) == 15
        assert len(enumerate_loop_graphs(2, 1)) == len(replay_strict(2, 1)) == 4
    record(5, "|(Y^1)^1|=1, |(Y^3)^2|=5, enumeration equals contraction replay for n<=6, g<=3", check)


# 6

def replay_relabel(leaves, g):
    """Sequential contraction on the relabeled free leaves, no blocking."""
    found = set()

    def walk(free, pairs, depth):
        if depth == g:
            found.add(frozenset(pairs))
            return
        for i in range(len(free) - 1):
            walk(free[:i] + free[i + 2:], pairs | {(free[i], free[i + 1])}, depth + 1)

    walk(list(range(leaves)), frozenset(), 0)
    return found


def all_partial_matchings(leaves, g):
    out = []
    for used in combinations(range(leaves), 2 * g):
        def pairings(pts):
            if not pts:
                yield ()
                return
            for j in range(1, len(pts)):
                rest = pts[1:j] + pts[j + 1:]
                for p in pairings(rest):
                    yield ((pts[0], pts[j]),) + p
        out.extend(frozenset(p) for p in pairings(used))
    return out


def test_criterion_06_canonical_matching_soundness():
    def check():
        for n in range(7):
            for g in range(4):
                if n + 2 - 2 * g < 1:
                    continue
                reachable = replay_relabel(n + 1, g)
                for m in all_partial_matchings(n + 1, g):
                    assert (m in reachable) == is_interval_closed(tuple(sorted(m))), (n, g, sorted(m))
    record(6, "reachable by relabeling contraction <=> interval-closed, n<=6, g<=3", check)


# 7

def test_criterion_07_recursion():
    def check():
        start = time.perf_counter()
        cases = acceptance_cases(5)
        assert len(cases) == 14
        bad = []
        for g, k in cases:
            r = verify_recursion(g, k)
            if not r.equal:
                bad.append((g, k, len(r.missing), len(r.extra)))
        assert not bad, bad
        assert time.perf_counter() - start < 300
    record(7, "verify_recursion equal for all (g,k) with 1 <= 2g+k-2 <= 5, under 5 min", check)


# 8

def test_criterion_08_weight_lemma():
    def check():
        offenders = []
        for g in (1, 3):
            for n in range(1, 6):
                for row in first_summand_analysis(g, n):
                    if (row.multiplicity == 2) != row.symmetric:
                        offenders.append(f"g={g} {row.graph} sym={row.symmetric} mult={row.multiplicity}")
        assert not offenders, f"{len(offenders)} graphs break the rule, e.g. {offenders[:3]}"
    record(8, "weight 2 exactly on mirror-symmetric root-bridge graphs, g in {1,3}, n<=5", check)


# 9

def test_criterion_09_double_counting():
    def check():
        for n in range(6):
            ms = generation_multiset(n, 2)
            same_branch = {x: c for x, c in ms.items() if root_bridge(x) is None}
            assert all(c % 2 == 0 for c in same_branch.values()), n
            halved = Counter({x: c // 2 for x, c in same_branch.items()})
            expected = Counter(x for x in enumerate_loop_graphs(n, 2) if root_bridge(x) is None)
            assert halved == expected, n
    record(9, "same-branch genus-2 graphs generated an even number of times; halves give the graph set, n<=5", check)


# 10

def test_criterion_10_figures():
    def check():
        w13 = tikz_graphs(enumerate_loop_graphs(3, 1), weights=True)
        assert w13.count("\\begin{tikzpicture}") == 15
        assert w13.count("\\times 2") == 1
        w21 = tikz_graphs(enumerate_loop_graphs(3, 2), weights=True)
        assert w21.count("\\begin{tikzpicture}") == 5
    record(10, "TikZ: 15 pictures with one x2 for W^1_3, 5 pictures for W^2_1", check)


def summary_lines() -> list[str]:
    lines = []
    for num in sorted(RESULTS):
        ok, desc = RESULTS[num]
        lines.append(f"criterion {num:2d}: {'PASS' if ok else 'FAIL'} - {desc}")
    return lines


if __name__ == "__main__":
    import sys

    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]
    for fn in tests:
        try:
            fn()
        except AssertionError:
            pass
    print("\n".join(summary_lines()))
    sys.exit(0 if all(ok for ok, _ in RESULTS.values()) else 1)
