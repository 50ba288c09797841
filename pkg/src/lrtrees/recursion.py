"""Correlator terms, graph expansions and the topological recursion check.

A term is a product of kernels ``K_x(q_i, q̄_i)``, one per internal vertex,
and cylinders ``W2(x, y)`` joining a leaf marker to a label or two leaf
markers across a loop. Marker indices follow a depth-first walk from the
root, left child first.

Terms are compared through the graph they describe: kernels are trivalent
vertices, shared markers and cylinders between markers are edges, and labels
are legs. The leg ``p`` is distinguished. The other labels are either named
(strict mode) or anonymous, which identifies terms that differ by a
permutation of the labels.
"""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Literal

from .loopgraphs import LoopGraph, enumerate_loop_graphs, weight
from .trees import Tree

ROOT = "p"
Kernel = tuple[str, str, str]
Cylinder = tuple[str, str]
Mode = Literal["support", "multiset", "strict"]


def euler_char(g: int, k: int) -> int:
    return 2 - 2 * g - k


def order_of(g: int, k: int) -> int:
    """Base-tree order n = -χ."""
    return 2 * g + k - 2


def _check_gk(g: int, k: int) -> None:
    if g < 0 or k < 1:
        raise ValueError(f"invalid (g, k) = ({g}, {k}): need g >= 0 and k >= 1")
    if order_of(g, k) < 1 and (g, k) != (0, 2):
        raise ValueError(f"invalid (g, k) = ({g}, {k}): 2g + k - 2 = {order_of(g, k)} < 1")


def labels_for(k: int) -> list[str]:
    return [f"p{i}" for i in range(1, k)]


def is_marker(x: str) -> bool:
    return x.startswith("q")


@dataclass(frozen=True)
class CorrelatorTerm:
    kernels: tuple[Kernel, ...]
    cylinders: tuple[Cylinder, ...]

    def __str__(self) -> str:
        ks = [f"K_{a}({b},{c})" for a, b, c in self.kernels]
        cs = [f"W2({x},{y})" for x, y in self.cylinders]
        return "·".join(ks + cs)

    @property
    def labels(self) -> list[str]:
        out = [y for _, y in self.cylinders if not is_marker(y)]
        out += [x for x, _ in self.cylinders if not is_marker(x) and x != ROOT]
        return sorted(out)

    def to_json(self) -> dict:
        return {"kernels": [list(k) for k in self.kernels], "cylinders": [list(c) for c in self.cylinders]}


def check_term(term: CorrelatorTerm) -> None:
    """Raise if a marker is used inconsistently."""
    child_count: Counter = Counter()
    other_use: Counter = Counter()
    for parent, a, b in term.kernels:
        child_count[a] += 1
        child_count[b] += 1
        if parent != ROOT:
            other_use[parent] += 1
    for x, y in term.cylinders:
        for z in (x, y):
            if is_marker(z):
                other_use[z] += 1
    for m, c in child_count.items():
        if c != 1:
            raise ValueError(f"marker {m} is a kernel child {c} times")
        if other_use[m] != 1:
            raise ValueError(f"marker {m} is used {other_use[m]} times outside its kernel")
    for m in other_use:
        if m not in child_count:
            raise ValueError(f"marker {m} never appears as a kernel child")


class _Namer:
    def __init__(self, start: int = 1):
        self.next = start

    def fresh(self) -> tuple[str, str]:
        i = self.next
        self.next += 1
        return f"q{i}", f"q{i}b"


def _decorate(
    tree: Tree,
    matching: tuple[tuple[int, int], ...],
    root: str,
    labels: list[str],
    namer: _Namer,
) -> tuple[list[Kernel], list[Cylinder]]:
    kernels: list[Kernel] = []
    slots: list[str] = []

    def walk(t: Tree, parent: str) -> None:
        if t.is_leaf:
            slots.append(parent)
            return
        a, b = namer.fresh()
        kernels.append((parent, a, b))
        walk(t.left, a)
        walk(t.right, b)

    walk(tree, root)
    cylinders: list[Cylinder] = []
    matched = set()
    for a, b in matching:
        cylinders.append((slots[a], slots[b]))
        matched.update((a, b))
    free = [j for j in range(len(slots)) if j not in matched]
    if len(free) != len(labels):
        raise ValueError(f"graph has {len(free)} free leaves but {len(labels)} labels were given")
    for j, lab in zip(free, labels):
        cylinders.append((slots[j], lab))
    return kernels, cylinders


def psi_term(gph: LoopGraph | Tree, labels: list[str] | None = None) -> CorrelatorTerm:
    """Decorate a graph: kernels at vertices, cylinders at free leaves and loops."""
    if isinstance(gph, Tree):
        gph = LoopGraph(gph)
    if labels is None:
        labels = labels_for(gph.label_count)
    if len(labels) != gph.label_count - 1:
        raise ValueError(f"expected {gph.label_count - 1} labels, got {len(labels)}")
    if gph.base.is_leaf:
        return CorrelatorTerm((), ((ROOT, labels[0]),))
    ks, cs = _decorate(gph.base, gph.matching, ROOT, list(labels), _Namer())
    return CorrelatorTerm(tuple(ks), tuple(cs))


@dataclass
class CorrelatorExpansion:
    g: int
    k: int
    terms: Counter = field(default_factory=Counter)

    def add(self, term: CorrelatorTerm, c: int = 1) -> None:
        self.terms[term] += c

    def term_count(self) -> int:
        return sum(self.terms.values())

    def __len__(self) -> int:
        return len(self.terms)

    def to_string(self) -> str:
        lines = []
        for term, c in self.terms.items():
            lines.append(f"{c}·{term}" if c != 1 else str(term))
        return "\n".join(lines)


def _graphs(n: int, g: int) -> list[LoopGraph]:
    return enumerate_loop_graphs(n, g)


def expand_W(g: int, k: int, with_label_perms: bool = False) -> CorrelatorExpansion:
    """Σ over the genus-g graphs of order 2g+k-2 of their terms, with weights."""
    _check_gk(g, k)
    out = CorrelatorExpansion(g, k)
    labs = labels_for(k)
    orders = list(permutations(labs)) if with_label_perms else [tuple(labs)]
    if (g, k) == (0, 2):
        for order in orders:
            out.add(CorrelatorTerm((), ((ROOT, order[0]),)))
        return out
    for gph in _graphs(order_of(g, k), g):
        w = weight(gph)
        for order in orders:
            out.add(psi_term(gph, list(order)), w)
    return out


def _factor(g: int, root: str, labels: list[str], namer: _Namer):
    """All decorations of W^g_{|labels|+1}(root, labels); yields (kernels, cylinders)."""
    k = len(labels) + 1
    if (g, k) == (0, 2):
        yield [], [(root, labels[0])]
        return
    start = namer.next
    for gph in _graphs(order_of(g, k), g):
        namer.next = start
        yield _decorate(gph.base, gph.matching, root, labels, namer)


def rhs_recursion(
    g: int,
    k: int,
    with_label_perms: bool = False,
    all_splits: bool | None = None,
    qbar_slots: Literal["first", "all"] = "first",
) -> CorrelatorExpansion:
    """Right-hand side of the recursion for W^g_k(p, K), built one level deep.

    Top kernel ``K_p(q1, q1b)`` times
    ``W^{g-1}_{k+1}(q1, q1b, K)``, with q1b bound to the first free slot, plus
    ``Σ W^h(q1, L) W^{g-h}(q1b, M)`` over splittings ``L ∪ M = K`` that avoid
    the unstable factors ``W^0_1``. By default the labels are anonymous and
    each split size is taken once; with ``all_splits`` every subset ``L`` is
    used, as needed for named labels. ``qbar_slots="all"`` lets q1b take
    any free slot of the genus g-1 factor instead of the first one.
    """
    _check_gk(g, k)
    if all_splits is None:
        all_splits = with_label_perms
    out = CorrelatorExpansion(g, k)
    labs = labels_for(k)
    if (g, k) == (0, 2):
        out.add(CorrelatorTerm((), ((ROOT, labs[0]),)))
        return out
    top: Kernel = (ROOT, "q1", "q1b")
    orders = list(permutations(labs)) if with_label_perms else [tuple(labs)]

    if g >= 1:
        positions = range(k) if qbar_slots == "all" else [0]
        for order in orders:
            for pos in positions:
                slot_labels = list(order)
                slot_labels.insert(pos, "q1b")
                for ks, cs in _factor(g - 1, "q1", slot_labels, _Namer(2)):
                    out.add(CorrelatorTerm((top, *ks), tuple(cs)))

    for h in range(g + 1):
        for size in range(k):
            rest = k - 1 - size
            if h == 0 and size == 0:
                continue
            if h == g and rest == 0:
                continue
            subsets = combinations(range(k - 1), size) if all_splits else [tuple(range(size))]
            for chosen in subsets:
                for order in orders:
                    left = [order[i] for i in chosen]
                    right = [order[i] for i in range(k - 1) if i not in chosen]
                    namer = _Namer(2)
                    for ks1, cs1 in _factor(h, "q1", left, namer):
                        for ks2, cs2 in _factor(g - h, "q1b", right, namer):
                            out.add(CorrelatorTerm((top, *ks1, *ks2), tuple(cs1 + cs2)))
    return out


# Canonical forms.

def canonical_form(term: CorrelatorTerm, anonymous: bool = True) -> tuple:
    """Isomorphism-invariant key of the graph underlying ``term``."""
    if not term.kernels:
        labs = sorted("x" if anonymous else lab for lab in term.labels)
        return ("cylinder", tuple(labs))
    n = len(term.kernels)
    owner: dict[str, list[int]] = {}
    for v, (parent, a, b) in enumerate(term.kernels):
        for mk in (parent, a, b):
            owner.setdefault(mk, []).append(v)
    adj = [[0] * n for _ in range(n)]
    legs: list[list[str]] = [[] for _ in range(n)]

    def link(u: int, w: int) -> None:
        adj[u][w] += 1
        if u != w:
            adj[w][u] += 1

    for mk, vs in owner.items():
        if len(vs) == 2:
            link(vs[0], vs[1])
        elif mk == ROOT:
            legs[vs[0]].append(ROOT)
    for x, y in term.cylinders:
        if is_marker(x) and is_marker(y):
            link(owner[x][0], owner[y][0])
        else:
            mk, lab = (x, y) if is_marker(x) else (y, x)
            if mk == ROOT:
                raise ValueError("the root label cannot sit on a cylinder of a kernel term")
            legs[owner[mk][0]].append("x" if anonymous else lab)
    leg_keys = [tuple(sorted(v)) for v in legs]
    start = next(v for v in range(n) if ROOT in legs[v])
    nbrs = [[w for w in range(n) if adj[v][w] and w != v] for v in range(n)]
    best: tuple | None = None

    def key_of(order: list[int]) -> tuple:
        return (
            tuple(leg_keys[v] for v in order),
            tuple(adj[u][w] for u in order for w in order),
        )

    def search(order: list[int], seen: set[int], head: int) -> None:
        nonlocal best
        if len(order) == n:
            key = key_of(order)
            if best is None or key < best:
                best = key
            return
        v = order[head]
        new = [w for w in nbrs[v] if w not in seen]
        if not new:
            search(order, seen, head + 1)
            return
        for perm in permutations(new):
            search(order + list(perm), seen | set(perm), head + 1)

    search([start], {start}, 0)
    return best


def _canon_many(terms: list[CorrelatorTerm], anonymous: bool) -> list[tuple]:
    workers = int(os.environ.get("LRTREES_MAX_WORKERS", "1") or 1)
    if workers > 1 and len(terms) > 200:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(canonical_form, terms, [anonymous] * len(terms), chunksize=64))
    return [canonical_form(t, anonymous) for t in terms]


def canonical_multiset(exp: CorrelatorExpansion, anonymous: bool = True) -> tuple[Counter, dict]:
    """Counts per canonical class and one representative term for each class."""
    terms = list(exp.terms)
    keys = _canon_many(terms, anonymous)
    counts: Counter = Counter()
    reps: dict = {}
    for term, key in zip(terms, keys):
        counts[key] += exp.terms[term]
        if key not in reps or str(term) < str(reps[key]):
            reps[key] = term
    return counts, reps


@dataclass
class RecursionReport:
    g: int
    k: int
    mode: str
    equal: bool
    support_equal: bool
    multiplicity_equal: bool
    missing: list[str]
    extra: list[str]
    multiplicity_diff: list[tuple[str, int, int]]
    lhs_terms: int
    rhs_terms: int
    classes: int

    def to_json(self) -> dict:
        return {
            "g": self.g,
            "k": self.k,
            "mode": self.mode,
            "equal": self.equal,
            "support_equal": self.support_equal,
            "multiplicity_equal": self.multiplicity_equal,
            "missing": self.missing,
            "extra": self.extra,
            "multiplicity_diff": [list(x) for x in self.multiplicity_diff],
            "lhs_terms": self.lhs_terms,
            "rhs_terms": self.rhs_terms,
            "classes": self.classes,
        }


def verify_recursion(g: int, k: int, mode: Mode = "support") -> RecursionReport:
    """Compare the graph expansion of W^g_k with the right-hand side of the recursion.

    ``support`` (default) compares the sets of label-symmetrized term classes:
    every class produced by one side is produced by the other. ``multiset``
    also requires equal counts per class. ``strict`` keeps labels named and
    sums both sides over all label permutations before comparing counts.
    ``missing`` lists classes of the graph expansion absent from the
    right-hand side, ``extra`` the converse.
    """
    _check_gk(g, k)
    strict = mode == "strict"
    lhs = expand_W(g, k, with_label_perms=strict)
    rhs = rhs_recursion(g, k, with_label_perms=strict)
    lc, lreps = canonical_multiset(lhs, anonymous=not strict)
    rc, rreps = canonical_multiset(rhs, anonymous=not strict)
    missing = sorted(str(lreps[c]) for c in lc if c not in rc)
    extra = sorted(str(rreps[c]) for c in rc if c not in lc)
    support_equal = not missing and not extra
    diff = []
    for c in set(lc) | set(rc):
        if lc[c] != rc[c]:
            rep = lreps.get(c) or rreps[c]
            diff.append((str(rep), lc[c], rc[c]))
    diff.sort()
    mult_equal = not diff
    equal = support_equal if mode == "support" else mult_equal
    return RecursionReport(
        g, k, mode, equal, support_equal, mult_equal, missing, extra, diff,
        lhs.term_count(), rhs.term_count(), len(set(lc) | set(rc)),
    )


def acceptance_cases(max_order: int = 5) -> list[tuple[int, int]]:
    """All (g, k) with 1 <= 2g + k - 2 <= max_order and k >= 1."""
    out = []
    for g in range(max_order + 1):
        for k in range(1, max_order + 3):
            if 1 <= order_of(g, k) <= max_order:
                out.append((g, k))
    return out
