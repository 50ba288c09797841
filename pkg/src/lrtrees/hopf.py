"""The Loday–Ronco Hopf algebra k[Y∞] of planar binary trees.

The product uses the grafting recursion directly. The coproduct is obtained
by lifting trees to fiber sums in k[S∞], applying the permutation coproduct
and projecting back, which also certifies that the fibers span a
subcoalgebra.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .linear import LinComb
from .perms import EMPTY, Permutation, _fibers, fiber_sum, mr_coproduct, mr_star, perm_to_tree
from .trees import LEAF, Tree, enumerate_trees, graft

GENERATOR = graft(LEAF, LEAF)


class NotInTreeSubalgebra(ValueError):
    """Raised when a permutation combination is not constant on fibers."""

    def __init__(self, witness, coefficient, expected):
        self.witness = witness
        super().__init__(
            f"not in tree subalgebra: {witness} has coefficient {coefficient}, "
            f"fiber requires {expected}"
        )


def tree(t: Tree | str) -> LinComb:
    from .trees import parse_tree

    return LinComb.basis(parse_tree(t) if isinstance(t, str) else t)


def _graft_lc(a: LinComb, b: LinComb) -> LinComb:
    return a.bilinear(b, lambda x, y: LinComb.basis(graft(x, y)))


@lru_cache(maxsize=None)
def _star_basis(t: Tree, u: Tree) -> LinComb:
    if t.is_leaf:
        return LinComb.basis(u)
    if u.is_leaf:
        return LinComb.basis(t)
    # t∗u = t1∨(t2∗u) + (t∗u1)∨u2
    left = _graft_lc(LinComb.basis(t.left), _star_basis(t.right, u))
    right = _graft_lc(_star_basis(t, u.left), LinComb.basis(u.right))
    return left + right


def tree_star(a: LinComb, b: LinComb) -> LinComb:
    return a.bilinear(b, _star_basis)


def project(x: LinComb) -> LinComb:
    """Push a permutation combination forward along ``perm_to_tree``."""
    return x.map_basis(lambda s: LinComb.basis(perm_to_tree(s)))


@lru_cache(maxsize=None)
def _perm_power(n: int) -> LinComb:
    if n == 0:
        return LinComb.basis(EMPTY)
    return mr_star(_perm_power(n - 1), LinComb.basis(Permutation((1,))))


def star_power_generator(n: int) -> LinComb:
    """``(1)∗…∗(1)`` with ``n`` factors, taken in k[S∞] and projected to trees.

    Every permutation of S_n appears once, so the projection counts the
    permutations above each tree: support Y^n, coefficient sum n!.
    Use :func:`tree_power_generator` for the power inside k[Y∞].
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    return project(_perm_power(n))


@lru_cache(maxsize=None)
def tree_power_generator(n: int) -> LinComb:
    """``(1)∗…∗(1)`` computed with :func:`tree_star`; equals Σ_{t ∈ Y^n} t."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return LinComb.basis(LEAF)
    return tree_star(tree_power_generator(n - 1), LinComb.basis(GENERATOR))


def support(x: LinComb) -> list[Tree]:
    return sorted(x.support(), key=lambda t: t.sort_key())


def factor_through_fibers(x: LinComb) -> LinComb:
    """Write ``x = Σ c_t·fiberSum(t)`` and return ``Σ c_t·t``."""
    by_tree: dict[Tree, int | Fraction] = {}
    for s in x:
        t = perm_to_tree(s)
        c = x.coeff(s)
        if t in by_tree and by_tree[t] != c:
            raise NotInTreeSubalgebra(s, c, by_tree[t])
        by_tree[t] = c
    for t, c in by_tree.items():
        for s in _fibers(t.order)[t]:
            if x.coeff(s) != c:
                raise NotInTreeSubalgebra(s, x.coeff(s), c)
    return LinComb(by_tree)


def factor_tensor_through_fibers(x: LinComb) -> LinComb:
    """Tensor version of :func:`factor_through_fibers` acting on both legs."""
    by_pair: dict[tuple[Tree, Tree], int | Fraction] = {}
    for a, b in x:
        key = (perm_to_tree(a), perm_to_tree(b))
        c = x.coeff((a, b))
        if key in by_pair and by_pair[key] != c:
            raise NotInTreeSubalgebra((a, b), c, by_pair[key])
        by_pair[key] = c
    for (ta, tb), c in by_pair.items():
        for a in _fibers(ta.order)[ta]:
            for b in _fibers(tb.order)[tb]:
                if x.coeff((a, b)) != c:
                    raise NotInTreeSubalgebra((a, b), x.coeff((a, b)), c)
    return LinComb(by_pair)


def embed(x: LinComb) -> LinComb:
    """Tree combination to its fiber-sum image in k[S∞]."""
    return x.map_basis(fiber_sum)


@lru_cache(maxsize=None)
def _coproduct_basis(t: Tree) -> LinComb:
    return factor_tensor_through_fibers(mr_coproduct(fiber_sum(t)))


def tree_coproduct(a: LinComb) -> LinComb:
    """Δ on trees; basis elements of the result are ``(left, right)`` pairs."""
    return a.map_basis(_coproduct_basis)


def reduced_coproduct(a: LinComb) -> LinComb:
    def basis(t: Tree) -> LinComb:
        full = _coproduct_basis(t)
        if t.is_leaf:
            return full - LinComb.basis((LEAF, LEAF))
        return full - LinComb([((t, LEAF), 1), ((LEAF, t), 1)])

    return a.map_basis(basis)


def counit(a: LinComb) -> int | Fraction:
    return a.coeff(LEAF)


@lru_cache(maxsize=None)
def _antipode_basis(t: Tree) -> LinComb:
    if t.is_leaf:
        return LinComb.basis(LEAF)
    # S(t) = -t - Σ S(t_(1)) ∗ t_(2) over the reduced coproduct
    red = reduced_coproduct(LinComb.basis(t))
    parts = [(tree_star(_antipode_basis(x), LinComb.basis(y)), -c) for (x, y), c in red.items()]
    return LinComb.linear_sum([(LinComb.basis(t), -1)] + parts)


def antipode(a: LinComb) -> LinComb:
    return a.map_basis(_antipode_basis)


def _convolve(t: Tree, left_s: bool) -> LinComb:
    parts = []
    for (x, y), c in _coproduct_basis(t).items():
        if left_s:
            parts.append((tree_star(_antipode_basis(x), LinComb.basis(y)), c))
        else:
            parts.append((tree_star(LinComb.basis(x), _antipode_basis(y)), c))
    return LinComb.linear_sum(parts)


def convolution_check(n: int) -> bool:
    """Check ``m(S⊗Id)Δ = m(Id⊗S)Δ = η·ε`` on every tree of order ≤ n."""
    for order in range(n + 1):
        for t in enumerate_trees(order):
            expected = LinComb.basis(LEAF) if t.is_leaf else LinComb()
            if _convolve(t, True) != expected or _convolve(t, False) != expected:
                return False
    return True


def tensor_star(x: LinComb, y: LinComb, star=tree_star) -> LinComb:
    """Componentwise product on tensors: ``(a⊗b)(c⊗d) = (a∗c)⊗(b∗d)``."""
    def basis(p, q):
        left = star(LinComb.basis(p[0]), LinComb.basis(q[0]))
        right = star(LinComb.basis(p[1]), LinComb.basis(q[1]))
        return left.bilinear(right, lambda u, v: LinComb.basis((u, v)))

    return x.bilinear(y, basis)


def perm_tensor_star(x: LinComb, y: LinComb) -> LinComb:
    return tensor_star(x, y, mr_star)
