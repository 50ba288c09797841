"""DOT and TikZ output for trees and loop graphs.

Leaves sit on a horizontal line with the root below. Matched leaves are
joined by an arc over the top, free leaves carry their labels.
"""

from __future__ import annotations

from .loopgraphs import LoopGraph, weight
from .trees import Tree


def _layout(t: Tree) -> tuple[list[tuple[float, float]], list[tuple[int, int]], list[int]]:
    """Node coordinates, edges (parent, child) and the node ids of the leaves."""
    coords: list[tuple[float, float]] = []
    edges: list[tuple[int, int]] = []
    leaves: list[int] = []
    top = t.order / 2

    def walk(s: Tree, lo: int) -> int:
        hi = lo + s.order
        node = len(coords)
        coords.append(((lo + hi) / 2, top - (hi - lo) / 2))
        if s.is_leaf:
            leaves.append(node)
            return node
        left = walk(s.left, lo)
        right = walk(s.right, lo + s.left.order + 1)
        edges.append((node, left))
        edges.append((node, right))
        return node

    walk(t, 0)
    return coords, edges, leaves


def _num(x: float) -> str:
    return f"{x:g}"


def tikz_picture(gph: LoopGraph, annotate: int = 1, labels: bool = True) -> str:
    t = gph.base
    coords, edges, leaves = _layout(t)
    top = t.order / 2
    lines = ["\\begin{tikzpicture}[scale=0.6]"]
    rx, ry = coords[0]
    lines.append(f"  \\draw ({_num(rx)},{_num(ry - 0.6)}) node[below] {{$p$}} -- ({_num(rx)},{_num(ry)});")
    for u, v in edges:
        (x1, y1), (x2, y2) = coords[u], coords[v]
        lines.append(f"  \\draw ({_num(x1)},{_num(y1)}) -- ({_num(x2)},{_num(y2)});")
    for a, b in gph.matching:
        xa, xb = coords[leaves[a]][0], coords[leaves[b]][0]
        h = _num(top + 0.4 + 0.25 * (b - a))
        lines.append(
            f"  \\draw ({_num(xa)},{_num(top)}) .. controls ({_num(xa)},{h}) and ({_num(xb)},{h}) .. ({_num(xb)},{_num(top)});"
        )
    if labels:
        for i, j in enumerate(gph.free_leaves(), 1):
            x = coords[leaves[j]][0]
            lines.append(f"  \\node[above] at ({_num(x)},{_num(top)}) {{$p_{{{i}}}$}};")
    if annotate > 1:
        lines.append(f"  \\node[left] at ({_num(-0.5)},{_num(top / 2)}) {{$\\times {annotate}$}};")
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines)


def tikz_document(pictures: list[str]) -> str:
    body = "\n".join(pictures)
    return f"\\documentclass[tikz]{{standalone}}\n\\begin{{document}}\n{body}\n\\end{{document}}\n"


def tikz_graphs(graphs: list[LoopGraph], weights: bool = False) -> str:
    return tikz_document([tikz_picture(g, weight(g) if weights else 1) for g in graphs])


def dot_graph(gph: LoopGraph, name: str = "G", annotate: int = 1) -> str:
    coords, edges, leaves = _layout(gph.base)
    lines = [f'digraph "{name}" {{', "  node [shape=point];"]
    if annotate > 1:
        lines.append(f'  label="x{annotate}";')
    for i in range(len(coords)):
        lines.append(f"  n{i};")
    for u, v in edges:
        lines.append(f"  n{u} -> n{v};")
    for a, b in gph.matching:
        lines.append(f"  n{leaves[a]} -> n{leaves[b]} [dir=none, style=dashed, constraint=false];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dot_graphs(graphs: list[LoopGraph], weights: bool = False) -> str:
    return "".join(dot_graph(g, f"G{i}", weight(g) if weights else 1) for i, g in enumerate(graphs))
