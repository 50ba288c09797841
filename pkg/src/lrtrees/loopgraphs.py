"""Loop graphs: planar binary trees with matched pairs of leaves.

A genus-g graph on a tree of order n joins g disjoint pairs of leaves by an
edge. The remaining k-1 = n+1-2g leaves stay free and carry labels, and the
root carries one more label.

Contraction joins two consecutive free leaves. In the strict form a
contraction may not reach across an existing loop, because the loop leaves
no neighbour on one side. Under that rule the reachable matchings are exactly
the sets of disjoint adjacent pairs ``{a, a+1}``. Dropping the rule yields
every matching closed under intervals. Both closures are available here.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Literal

from .trees import LEAF, Tree, enumerate_trees, graft, mirror, parse_tree

Pair = tuple[int, int]
Side = Literal["left", "right", "opposite"]


def is_interval_closed(matching: tuple[Pair, ...]) -> bool:
    """Every leaf strictly inside a pair is matched strictly inside it too."""
    mate = {}
    for a, b in matching:
        mate[a] = b
        mate[b] = a
    for a, b in matching:
        for j in range(a + 1, b):
            if j not in mate or not a < mate[j] < b:
                return False
    return True


def is_adjacent(matching: tuple[Pair, ...]) -> bool:
    return all(b == a + 1 for a, b in matching)


@dataclass(frozen=True, order=False)
class LoopGraph:
    base: Tree
    matching: tuple[Pair, ...] = ()

    def __post_init__(self):
        pairs = tuple(sorted(tuple(sorted(p)) for p in self.matching))
        object.__setattr__(self, "matching", pairs)
        used = [x for p in pairs for x in p]
        if len(set(used)) != len(used):
            raise ValueError(f"pairs are not disjoint: {pairs}")
        if any(not 0 <= x <= self.base.order for x in used) or any(a == b for a, b in pairs):
            raise ValueError(f"pair out of range for a tree with {self.base.leaf_count} leaves")
        if not is_interval_closed(pairs):
            raise ValueError(f"matching is not interval-closed: {pairs}")
        if self.label_count < 1:
            raise ValueError("no label left for the root")

    @property
    def order(self) -> int:
        return self.base.order

    @property
    def genus(self) -> int:
        return len(self.matching)

    @property
    def label_count(self) -> int:
        """k: root label plus free leaves, so that 2 - 2g - k = -n."""
        return self.base.order + 2 - 2 * len(self.matching)

    def free_leaves(self) -> list[int]:
        used = {x for p in self.matching for x in p}
        return [j for j in range(self.base.leaf_count) if j not in used]

    def sort_key(self) -> tuple:
        return (self.base.order, len(self.matching), str(self.base), self.matching)

    def __lt__(self, other: LoopGraph) -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        inner = ", ".join(f"{a}-{b}" for a, b in self.matching)
        return f"{self.base} ⋈ {{{inner}}}"

    def to_json(self) -> dict:
        return {"tree": self.base.to_nested(), "matching": [list(p) for p in self.matching]}


def parse_graph(s: str) -> LoopGraph:
    """Inverse of ``str(gph)``; a bare tree string has the empty matching."""
    if "⋈" not in s:
        return LoopGraph(parse_tree(s))
    tree_part, pairs_part = s.split("⋈", 1)
    body = pairs_part.strip().strip("{}").strip()
    pairs = []
    if body:
        for chunk in body.split(","):
            a, b = chunk.split("-")
            pairs.append((int(a), int(b)))
    return LoopGraph(parse_tree(tree_part), tuple(pairs))


def euler_diagnostic(n: int, g: int) -> str | None:
    """Reason why no graph of order n and genus g exists, or None."""
    if n < 0 or g < 0:
        return "order and genus must be non-negative"
    k = n + 2 - 2 * g
    if k < 1:
        return f"2 - 2g - k = -n forces k = {k} < 1 for n={n}, g={g}: not enough leaves"
    return None


@lru_cache(maxsize=None)
def adjacent_matchings(leaves: int, g: int) -> tuple[tuple[Pair, ...], ...]:
    """Sets of g disjoint pairs {a, a+1} among ``leaves`` leaves, lexicographic."""
    out = []
    for starts in combinations(range(leaves - 1), g):
        if all(b - a >= 2 for a, b in zip(starts, starts[1:])):
            out.append(tuple((a, a + 1) for a in starts))
    return tuple(out)


@lru_cache(maxsize=None)
def interval_closed_matchings(leaves: int, g: int) -> tuple[tuple[Pair, ...], ...]:
    out = []
    for used in combinations(range(leaves), 2 * g):
        for m in _noncrossing_pairings(used):
            if is_interval_closed(m):
                out.append(tuple(sorted(m)))
    return tuple(sorted(set(out)))


def _noncrossing_pairings(points: tuple[int, ...]):
    if not points:
        yield ()
        return
    first = points[0]
    for idx in range(1, len(points), 2):
        inside, outside = points[1:idx], points[idx + 1:]
        for a in _noncrossing_pairings(inside):
            for b in _noncrossing_pairings(outside):
                yield ((first, points[idx]),) + a + b


def enumerate_loop_graphs(n: int, g: int) -> list[LoopGraph]:
    """All graphs of order n and genus g reachable by strict contraction.

    Ordered by base tree (canonical string), then matching. Empty when the
    Euler relation leaves no label for the root (see :func:`euler_diagnostic`).
    """
    if euler_diagnostic(n, g):
        return []
    return [LoopGraph(t, m) for t in enumerate_trees(n) for m in adjacent_matchings(n + 1, g)]


def contract(gph: LoopGraph, i: int, strict: bool = True) -> LoopGraph | None:
    """Join the i-th and (i+1)-th free leaves; None when undefined.

    With ``strict`` the two leaves must be neighbours in the tree, i.e. no
    loop may sit between them.
    """
    free = gph.free_leaves()
    if i < 0 or i + 1 >= len(free):
        return None
    a, b = free[i], free[i + 1]
    if strict and b != a + 1:
        return None
    return LoopGraph(gph.base, gph.matching + ((a, b),))


def reachable_by_contraction(n: int, g: int, strict: bool = True) -> set[LoopGraph]:
    """Oracle: replay every contraction sequence from the bare trees."""
    if euler_diagnostic(n, g):
        return set()
    level = {LoopGraph(t) for t in enumerate_trees(n)}
    for _ in range(g):
        nxt = set()
        for gph in level:
            for i in range(len(gph.free_leaves()) - 1):
                h = contract(gph, i, strict)
                if h is not None:
                    nxt.add(h)
        level = nxt
    return level


def generation_multiset(n: int, g: int) -> Counter:
    """Single strict contractions applied to all genus g-1 graphs, before dedup."""
    out: Counter = Counter()
    if g == 0 or euler_diagnostic(n, g):
        return out
    for h in enumerate_loop_graphs(n, g - 1):
        for i in range(len(h.free_leaves()) - 1):
            c = contract(h, i)
            if c is not None:
                out[c] += 1
    return out


def branch_side(gph: LoopGraph, pair: Pair) -> Side:
    if gph.base.is_leaf:
        raise ValueError("the bare leaf has no branches")
    split = gph.base.left.leaf_count
    a, b = sorted(pair)
    if b < split:
        return "left"
    if a >= split:
        return "right"
    return "opposite"


def root_bridge(gph: LoopGraph) -> Pair | None:
    """The pair spanning the root, if any."""
    if gph.base.is_leaf:
        return None
    for p in gph.matching:
        if branch_side(gph, p) == "opposite":
            return p
    return None


def mirror_graph(gph: LoopGraph) -> LoopGraph:
    n = gph.base.order
    return LoopGraph(mirror(gph.base), tuple((n - b, n - a) for a, b in gph.matching))


def is_mirror_symmetric(gph: LoopGraph) -> bool:
    return mirror_graph(gph) == gph


def weight(gph: LoopGraph, multiset: Counter | None = None) -> int:
    """Multiplicity of ``gph`` in the full graph sum.

    A graph whose root bridge makes it symmetric under reflection is reached
    from both orientations of the bridge and counts twice. The one-vertex
    loop ``(||) ⋈ {0-1}`` is excluded: exchanging its two root edges gives
    the same term, so there is only one orientation. ``multiset`` is accepted
    for symmetry with :func:`generation_multiset`. Strict contraction reaches
    every genus-g graph exactly g times, so it carries no extra information.
    """
    if multiset is not None and gph not in multiset:
        raise ValueError(f"{gph} does not occur in the given multiset")
    if root_bridge(gph) is None:
        return 1
    if gph.base.order >= 3 and is_mirror_symmetric(gph):
        return 2
    return 1


@dataclass(frozen=True)
class BridgeGraph:
    """``left ⊓ right``: two graphs joined under a new root by a bridge.

    The bridge runs from the rightmost leaf of ``left`` to the leftmost leaf
    of ``right``; both must be free.
    """

    left: LoopGraph
    right: LoopGraph

    def to_loop_graph(self) -> LoopGraph:
        return join(self.left, self.right, bridge=True)


def join(left: LoopGraph, right: LoopGraph, bridge: bool = False) -> LoopGraph:
    """``left ∨ right``, optionally adding the bridge across the root."""
    shift = left.base.leaf_count
    pairs = list(left.matching) + [(a + shift, b + shift) for a, b in right.matching]
    if bridge:
        a, b = shift - 1, shift
        if a not in left.free_leaves() or 0 not in right.free_leaves():
            raise ValueError("bridge endpoints must be free leaves")
        pairs.append((a, b))
    return LoopGraph(graft(left.base, right.base), tuple(pairs))


def split_at_root(gph: LoopGraph) -> tuple[LoopGraph, LoopGraph, bool]:
    """Inverse of :func:`join`: the two branch graphs and whether a bridge was present."""
    if gph.base.is_leaf:
        raise ValueError("the bare leaf has no branches")
    shift = gph.base.left.leaf_count
    bridge = root_bridge(gph)
    left = [p for p in gph.matching if p[1] < shift]
    right = [(a - shift, b - shift) for a, b in gph.matching if a >= shift]
    return LoopGraph(gph.base.left, tuple(left)), LoopGraph(gph.base.right, tuple(right)), bridge is not None


# Ungrafting.

@dataclass(frozen=True)
class UngraftedGraph:
    """A tree of order n-1 whose root edge is q, with one leaf carrying q̄.

    ``matching`` holds the loops carried over from the original graph,
    re-indexed to the new leaf order.
    """

    tree: Tree
    matching: tuple[Pair, ...]
    qbar: int

    def mirrored(self) -> UngraftedGraph:
        m = self.tree.order
        pairs = tuple(sorted((m - b, m - a) for a, b in self.matching))
        return UngraftedGraph(mirror(self.tree), pairs, m - self.qbar)

    def __str__(self) -> str:
        inner = ", ".join(f"{a}-{b}" for a, b in self.matching)
        return f"{self.tree} ⋈ {{{inner}}} q̄@{self.qbar}"


def _reroot_left(t: Tree, tail: Tree) -> Tree:
    """Re-root ``t`` at its leftmost leaf; the old root edge becomes ``tail``."""
    spine = []
    v = t
    while not v.is_leaf:
        spine.append(v)
        v = v.left
    out = tail
    for node in spine:
        out = graft(node.right, out)
    return out


def _replace_rightmost(t: Tree, sub: Tree) -> Tree:
    if t.is_leaf:
        return sub
    return graft(t.left, _replace_rightmost(t.right, sub))


def ungraft(gph: LoopGraph) -> UngraftedGraph:
    """Remove the root vertex and reconnect across the root bridge.

    The left branch keeps its place, the bridge edge becomes the new root
    edge q, and the right branch hangs re-rooted from its leftmost leaf with
    the old root edge turned into the rightmost leaf q̄. Leaves keep their
    left-to-right order, with q̄ appended at the end.
    """
    bridge = root_bridge(gph)
    if bridge is None:
        raise ValueError("nothing to ungraft across: no pair spans the root")
    a, b = bridge
    if b != a + 1:
        raise ValueError("the root bridge must join neighbouring leaves")
    t1, t2 = gph.base.left, gph.base.right
    tree = _replace_rightmost(t1, _reroot_left(t2, LEAF))
    n = gph.base.order

    def pos(j: int) -> int:
        return j if j < a else j - 2

    pairs = tuple(sorted((pos(x), pos(y)) for x, y in gph.matching if (x, y) != bridge))
    return UngraftedGraph(tree, pairs, n - 1)


def exchanged_ungraft(gph: LoopGraph) -> UngraftedGraph:
    """Ungraft with the roles of q and q̄ exchanged; q̄ lands on the leftmost leaf."""
    return ungraft(mirror_graph(gph)).mirrored()


def orientation_multiplicity(gph: LoopGraph) -> int:
    """How many of the two ungrafting orientations yield the term of ``gph``.

    The two orientations give ``ungraft`` and ``exchanged_ungraft``. A term
    and its reflection describe the same product of kernels, so a distinct
    orientation counts when it equals the plain ungraft up to reflection.
    """
    u = ungraft(gph)
    e = exchanged_ungraft(gph)
    hits = {x for x in (u, e) if x == u or x.mirrored() == u}
    return len(hits)


@dataclass(frozen=True)
class FirstSummandRow:
    graph: LoopGraph
    symmetric: bool
    multiplicity: int
    weight: int


def first_summand_analysis(g: int, n: int) -> list[FirstSummandRow]:
    """Every root-bridge graph of order n and genus g with its orientation count."""
    rows = []
    for gph in enumerate_loop_graphs(n, g):
        if root_bridge(gph) is None:
            continue
        rows.append(FirstSummandRow(gph, is_mirror_symmetric(gph), orientation_multiplicity(gph), weight(gph)))
    return rows


def classify(gph: LoopGraph) -> tuple[str, int, int]:
    """``("split", a, g-a)`` for ``(t1)^a ∨ (t2)^{g-a}``, ``("bridge", a, g-1-a)`` for ``(t1)^a ⊓ (t2)^{g-1-a}``."""
    left, right, bridged = split_at_root(gph)
    return ("bridge" if bridged else "split", left.genus, right.genus)
