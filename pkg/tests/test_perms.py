from itertools import permutations
from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from lrtrees.linear import LinComb
from lrtrees.perms import (
    EMPTY,
    Permutation,
    all_perms,
    compose,
    cross,
    fiber,
    identity,
    mr_coproduct,
    mr_star,
    parse_perm,
    perm,
    perm_to_tree,
    shuffles,
    split_at,
)
from lrtrees.hopf import perm_tensor_star
from lrtrees.trees import enumerate_trees, graft, LEAF, parse_tree

P = parse_perm


@st.composite
def perms_upto(draw, n_max=5):
    n = draw(st.integers(0, n_max))
    return Permutation(draw(st.permutations(range(1, n + 1))))


def test_compose_by_table():
    # brute-force multiplication table of S_3 from explicit maps
    for r in permutations((1, 2, 3)):
        for s in permutations((1, 2, 3)):
            rho = dict(zip((1, 2, 3), r))
            sig = dict(zip((1, 2, 3), s))
            expected = tuple(rho[sig[i]] for i in (1, 2, 3))
            assert compose(Permutation(r), Permutation(s)) == expected
    assert compose(P("(213)"), P("(132)")) == P("(231)")


@given(perms_upto())
def test_compose_identity_and_inverse(s):
    assert compose(identity(len(s)), s) == s
    assert compose(s, s.inverse()) == identity(len(s))


def test_compose_grade_mismatch():
    with pytest.raises(ValueError):
        compose(P("(12)"), P("(1)"))


def test_shuffles_fixture():
    assert set(shuffles(1, 2)) == {P("(123)"), P("(213)"), P("(312)")}
    assert shuffles(0, 3) == [identity(3)]


def shuffles_by_filter(p, q):
    out = []
    for s in permutations(range(1, p + q + 1)):
        if list(s[:p]) == sorted(s[:p]) and list(s[p:]) == sorted(s[p:]):
            out.append(Permutation(s))
    return out


def test_shuffles_by_filter():
    assert sorted(shuffles(3, 3)) == sorted(shuffles_by_filter(3, 3))
    assert len(shuffles(3, 3)) == 20
    for p in range(5):
        for q in range(5):
            assert sorted(shuffles(p, q)) == sorted(shuffles_by_filter(p, q))


@pytest.mark.parametrize("p", range(11))
def test_shuffle_counts(p):
    for q in range(11 - p):
        assert len(shuffles(p, q)) == comb(p + q, p)


def test_cross():
    assert cross(P("(1)"), P("(1)")) == P("(12)")
    assert cross(P("(21)"), P("(1)")) == P("(213)")
    assert len(cross(P("(231)"), P("(21)"))) == 5


def reconstruct(left, right, w):
    return compose(cross(left, right), w.inverse())


def test_split_at_examples():
    s = P("(312)")
    assert split_at(s, 0) == (EMPTY, s, identity(3))
    matches = [(l, r, w) for w in shuffles(1, 2) for l in all_perms(1) for r in all_perms(2) if reconstruct(l, r, w) == s]
    assert len(matches) == 1
    assert split_at(s, 1) == matches[0]


@pytest.mark.parametrize("n", range(6))
def test_split_at_reconstruction(n):
    for s in all_perms(n):
        for i in range(n + 1):
            left, right, w = split_at(s, i)
            assert w in shuffles(i, n - i)
            assert reconstruct(left, right, w) == s


def test_split_at_range():
    with pytest.raises(ValueError):
        split_at(P("(12)"), 3)


def test_star_fixtures():
    assert mr_star(perm(1), perm(1)) == perm(1, 2) + perm(2, 1)
    triple = mr_star(mr_star(perm(1), perm(1)), perm(1))
    assert triple == LinComb((P(x), 1) for x in ["(123)", "(321)", "(312)", "(132)", "(231)", "(213)"])
    assert mr_star(perm(), perm(3, 1, 2)) == perm(3, 1, 2)


@pytest.mark.parametrize("n", range(7))
def test_star_power_is_all_of_sn(n):
    x = perm()
    for _ in range(n):
        x = mr_star(x, perm(1))
    assert x == LinComb((s, 1) for s in all_perms(n))


def test_star_associative_to_grade_6():
    by_grade = {n: all_perms(n) for n in range(7)}
    for a in range(7):
        for b in range(7 - a):
            for c in range(7 - a - b):
                for x in by_grade[a]:
                    for y in by_grade[b]:
                        xy = mr_star(LinComb.basis(x), LinComb.basis(y))
                        for z in by_grade[c]:
                            zz = LinComb.basis(z)
                            assert mr_star(xy, zz) == mr_star(LinComb.basis(x), mr_star(LinComb.basis(y), zz))


def test_star_graded():
    x = mr_star(perm(2, 1), perm(1, 3, 2))
    assert all(len(s) == 5 for s in x)
    assert x.coefficient_sum() == comb(5, 2)


def test_coproduct_fixtures():
    assert mr_coproduct(perm()) == LinComb.basis((EMPTY, EMPTY))
    assert mr_coproduct(perm(1)) == LinComb([((P("(1)"), EMPTY), 1), ((EMPTY, P("(1)")), 1)])
    assert mr_coproduct(perm(1, 2)) == LinComb(
        [((EMPTY, P("(12)")), 1), ((P("(1)"), P("(1)")), 1), ((P("(12)"), EMPTY), 1)]
    )


def _delta_left(x):
    return mr_coproduct(x).map_basis(
        lambda pq: mr_coproduct(LinComb.basis(pq[0])).map_basis(lambda ab: LinComb.basis((ab[0], ab[1], pq[1])))
    )


def _delta_right(x):
    return mr_coproduct(x).map_basis(
        lambda pq: mr_coproduct(LinComb.basis(pq[1])).map_basis(lambda ab: LinComb.basis((pq[0], ab[0], ab[1])))
    )


@pytest.mark.parametrize("n", range(7))
def test_coassociative(n):
    for s in all_perms(n):
        x = LinComb.basis(s)
        assert _delta_left(x) == _delta_right(x)


def test_bialgebra_compatibility_to_grade_5():
    for a in range(6):
        for b in range(6 - a):
            for x in all_perms(a):
                for y in all_perms(b):
                    lx, ly = LinComb.basis(x), LinComb.basis(y)
                    assert mr_coproduct(mr_star(lx, ly)) == perm_tensor_star(mr_coproduct(lx), mr_coproduct(ly))


def test_perm_to_tree_examples():
    assert perm_to_tree(P("(1)")) == graft(LEAF, LEAF)
    assert perm_to_tree(P("(132)")) == perm_to_tree(P("(231)"))
    assert perm_to_tree(P("(12)")) == parse_tree("((||)|)")


def test_fibers_over_y3():
    sizes = sorted(len(fiber(t)) for t in enumerate_trees(3))
    assert sizes == [1, 1, 1, 1, 2]
    assert fiber(graft(LEAF, LEAF)) == [P("(1)")]
    assert len(fiber(parse_tree("((||)(||))"))) == 2


@pytest.mark.parametrize("n", range(7))
def test_perm_to_tree_surjective(n):
    images = {perm_to_tree(s) for s in all_perms(n)}
    assert images == set(enumerate_trees(n))
    assert sum(len(fiber(t)) for t in enumerate_trees(n)) == factorial(n)


def test_parse_and_print():
    assert str(P("(312)")) == "(312)"
    assert P("3,1,2") == P("(312)")
    assert str(EMPTY) == "()"
    with pytest.raises(ValueError):
        P("(113)")
