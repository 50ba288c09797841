"""Planar binary trees.

A tree is either the bare leaf ``|`` or a node grafting a left and a right
subtree. The canonical text form writes a node as ``(`` left right ``)`` with
``|`` for leaves, so the one-vertex tree is ``(||)``.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial


class Tree:
    """Immutable planar binary tree. Use :data:`LEAF` and :func:`graft` to build."""

    __slots__ = ("left", "right", "order", "_str", "_hash")

    def __init__(self, left: Tree | None = None, right: Tree | None = None):
        if (left is None) != (right is None):
            raise ValueError("a node needs both subtrees")
        self.left = left
        self.right = right
        self.order = 0 if left is None else left.order + right.order + 1
        self._str = "|" if left is None else f"({left._str}{right._str})"
        self._hash = hash(self._str)

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    @property
    def leaf_count(self) -> int:
        return self.order + 1

    def sort_key(self) -> tuple[int, str]:
        return (self.order, self._str)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Tree) and self._str == other._str

    def __lt__(self, other: Tree) -> bool:
        return self.sort_key() < other.sort_key()

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        return self._str

    def __repr__(self) -> str:
        return f"Tree({self._str!r})"

    def to_nested(self) -> list | str:
        """Nested-array export: ``"|"`` for a leaf, ``[left, right]`` for a node."""
        if self.is_leaf:
            return "|"
        return [self.left.to_nested(), self.right.to_nested()]


LEAF = Tree()


def graft(t1: Tree, t2: Tree) -> Tree:
    """``t1 ∨ t2``: a new root vertex with ``t1`` on the left and ``t2`` on the right."""
    return Tree(t1, t2)


def root_decompose(t: Tree) -> tuple[Tree, Tree]:
    if t.is_leaf:
        raise ValueError("the bare leaf has no root vertex")
    return t.left, t.right


def mirror(t: Tree) -> Tree:
    if t.is_leaf:
        return t
    return graft(mirror(t.right), mirror(t.left))


def from_nested(x: list | str) -> Tree:
    if x == "|":
        return LEAF
    left, right = x
    return graft(from_nested(left), from_nested(right))


def parse_tree(s: str) -> Tree:
    """Inverse of ``str(t)``. Whitespace and ``∨`` separators are ignored."""
    text = "".join(ch for ch in s if not ch.isspace() and ch != "∨")
    pos = 0

    def rec() -> Tree:
        nonlocal pos
        if pos >= len(text):
            raise ValueError(f"unexpected end of tree string at position {pos}")
        ch = text[pos]
        if ch == "|":
            pos += 1
            return LEAF
        if ch == "(":
            pos += 1
            left = rec()
            right = rec()
            if pos >= len(text) or text[pos] != ")":
                raise ValueError(f"expected ')' at position {pos} in {s!r}")
            pos += 1
            return graft(left, right)
        raise ValueError(f"unexpected character {ch!r} at position {pos} in {s!r}")

    t = rec()
    if pos != len(text):
        raise ValueError(f"trailing input at position {pos} in {s!r}")
    return t


@lru_cache(maxsize=None)
def _enumerate(n: int) -> tuple[Tree, ...]:
    if n == 0:
        return (LEAF,)
    out = [graft(a, b) for i in range(n) for a in _enumerate(i) for b in _enumerate(n - 1 - i)]
    return tuple(sorted(out, key=str))


def enumerate_trees(n: int) -> list[Tree]:
    """All trees with ``n`` internal vertices, sorted by canonical string."""
    if n < 0:
        raise ValueError("order must be non-negative")
    return list(_enumerate(n))


def catalan(n: int) -> int:
    """(2n)! / ((n+1)! n!)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return factorial(2 * n) // (factorial(n + 1) * factorial(n))


def comb_left(n: int) -> Tree:
    t = LEAF
    for _ in range(n):
        t = graft(t, LEAF)
    return t


def comb_right(n: int) -> Tree:
    t = LEAF
    for _ in range(n):
        t = graft(LEAF, t)
    return t
