"""Permutations, shuffles and the Malvenuto–Reutenauer algebra k[S∞].

Permutations are written by their image sequence, ``(312)`` meaning
``1 ↦ 3, 2 ↦ 1, 3 ↦ 2``. Composition is ``(ρ·σ)(i) = ρ(σ(i))``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations

from .linear import LinComb
from .trees import LEAF, Tree, graft


class Permutation(tuple):
    """An element of S_n stored as its images ``(σ(1), ..., σ(n))``."""

    __slots__ = ()

    def __new__(cls, images=()):
        t = tuple.__new__(cls, (int(x) for x in images))
        if sorted(t) != list(range(1, len(t) + 1)):
            raise ValueError(f"not a permutation: {tuple(t)}")
        return t

    @classmethod
    def _trusted(cls, images) -> Permutation:
        return tuple.__new__(cls, images)

    @property
    def n(self) -> int:
        return len(self)

    def __call__(self, i: int) -> int:
        return self[i - 1]

    def inverse(self) -> Permutation:
        inv = [0] * len(self)
        for i, v in enumerate(self, 1):
            inv[v - 1] = i
        return Permutation._trusted(inv)

    def sort_key(self) -> tuple:
        return (len(self), tuple(self))

    def __str__(self) -> str:
        if len(self) == 0:
            return "()"
        sep = "" if len(self) < 10 else ","
        return "(" + sep.join(str(x) for x in self) + ")"

    def __repr__(self) -> str:
        return f"Permutation({tuple(self)})"


EMPTY = Permutation(())


def identity(n: int) -> Permutation:
    return Permutation._trusted(range(1, n + 1))


def parse_perm(s: str) -> Permutation:
    """Parse ``(312)``, ``312`` or ``(3,1,2)``."""
    body = s.strip().strip("()").strip()
    if not body:
        return EMPTY
    if "," in body:
        return Permutation(int(x) for x in body.split(","))
    if not body.isdigit():
        raise ValueError(f"not a permutation string: {s!r}")
    return Permutation(int(c) for c in body)


def compose(rho: Permutation, sigma: Permutation) -> Permutation:
    if len(rho) != len(sigma):
        raise ValueError(f"grade mismatch: {len(rho)} vs {len(sigma)}")
    return Permutation._trusted(rho[s - 1] for s in sigma)


@lru_cache(maxsize=None)
def _shuffles(p: int, q: int) -> tuple[Permutation, ...]:
    n = p + q
    out = []
    for first in combinations(range(1, n + 1), p):
        rest = [x for x in range(1, n + 1) if x not in first]
        out.append(Permutation._trusted(first + tuple(rest)))
    return tuple(out)


def shuffles(p: int, q: int) -> list[Permutation]:
    """All σ in S_{p+q} increasing on positions 1..p and on p+1..p+q."""
    if p < 0 or q < 0:
        raise ValueError("shuffle type must be non-negative")
    return list(_shuffles(p, q))


def cross(rho: Permutation, sigma: Permutation) -> Permutation:
    """Block product ρ×σ: ρ on the first letters, σ shifted on the rest."""
    p = len(rho)
    return Permutation._trusted(tuple(rho) + tuple(x + p for x in sigma))


def split_at(sigma: Permutation, i: int) -> tuple[Permutation, Permutation, Permutation]:
    """Unique ``(σ_i, σ'_{n-i}, w)`` with ``σ = (σ_i × σ'_{n-i}) · w^{-1}`` and ``w`` a shuffle."""
    n = len(sigma)
    if not 0 <= i <= n:
        raise ValueError(f"cut {i} out of range 0..{n}")
    low = [pos for pos, v in enumerate(sigma, 1) if v <= i]
    high = [pos for pos, v in enumerate(sigma, 1) if v > i]
    w = Permutation._trusted(low + high)
    left = Permutation._trusted(sigma[pos - 1] for pos in low)
    right = Permutation._trusted(sigma[pos - 1] - i for pos in high)
    return left, right, w


@lru_cache(maxsize=None)
def _star_basis(rho: Permutation, sigma: Permutation) -> LinComb:
    block = cross(rho, sigma)
    return LinComb((compose(alpha, block), 1) for alpha in _shuffles(len(rho), len(sigma)))


def mr_star(a: LinComb, b: LinComb) -> LinComb:
    """``ρ∗σ = Σ_{α ∈ S(n,m)} α·(ρ×σ)``, extended bilinearly."""
    return a.bilinear(b, _star_basis)


@lru_cache(maxsize=None)
def _coproduct_basis(sigma: Permutation) -> LinComb:
    out = []
    for i in range(len(sigma) + 1):
        left, right, _ = split_at(sigma, i)
        out.append(((left, right), 1))
    return LinComb(out)


def mr_coproduct(a: LinComb) -> LinComb:
    """``Δσ = Σ_i σ_i ⊗ σ'_{n-i}`` as a combination of pairs."""
    return a.map_basis(_coproduct_basis)


def perm(*images: int) -> LinComb:
    """Basis vector of k[S∞]; ``perm()`` is the unit."""
    return LinComb.basis(Permutation(images))


# Tree correspondence: the maximal letter is the root vertex, the letters to
# its left and right build the two subtrees.

def _max_split(word: tuple[int, ...]) -> Tree:
    if not word:
        return LEAF
    k = word.index(max(word))
    return graft(_max_split(word[:k]), _max_split(word[k + 1:]))


def perm_to_tree(sigma: Permutation) -> Tree:
    """Forget the levels of σ: ``σ_L n σ_R ↦ tree(σ_L) ∨ tree(σ_R)``."""
    return _max_split(tuple(sigma))


@lru_cache(maxsize=None)
def _fibers(n: int) -> dict[Tree, tuple[Permutation, ...]]:
    acc: dict[Tree, list[Permutation]] = {}
    for images in permutations(range(1, n + 1)):
        s = Permutation._trusted(images)
        acc.setdefault(perm_to_tree(s), []).append(s)
    return {t: tuple(v) for t, v in acc.items()}


def fiber(t: Tree) -> list[Permutation]:
    """All σ with ``perm_to_tree(σ) = t``, in lexicographic order."""
    return list(_fibers(t.order).get(t, ()))


def fiber_sum(t: Tree) -> LinComb:
    return LinComb((s, 1) for s in _fibers(t.order)[t])


def all_perms(n: int) -> list[Permutation]:
    return [Permutation._trusted(p) for p in permutations(range(1, n + 1))]
