"""Command-line interface.

Exit codes: 0 success, 1 verification mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import hopf, loopgraphs, perms, recursion, render
from .linear import LinComb, tensor_string
from .trees import LEAF, Tree, enumerate_trees, parse_tree

SCHEMA = "lrtrees.cli/1"


class UsageError(Exception):
    pass


def parse_operand(s: str, space: str) -> LinComb:
    """A tree string like ``(|(||))``, or a permutation like ``(132)``."""
    text = s.strip()
    is_perm = any(ch.isdigit() for ch in text) or text == "()"
    try:
        if space == "perm":
            if not is_perm:
                raise ValueError(f"expected a permutation, got {s!r}")
            return LinComb.basis(perms.parse_perm(text))
        if is_perm:
            return LinComb.basis(perms.perm_to_tree(perms.parse_perm(text)))
        return LinComb.basis(parse_tree(text))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _basis_json(b) -> object:
    if isinstance(b, Tree):
        return b.to_nested()
    if isinstance(b, perms.Permutation):
        return list(b)
    if isinstance(b, tuple):
        return [_basis_json(x) for x in b]
    return str(b)


def _lincomb_json(x: LinComb) -> list:
    return [{"basis": _basis_json(b), "text": _basis_text(b), "coeff": str(c)} for b, c in x.items()]


def _basis_text(b) -> str:
    if isinstance(b, tuple) and not isinstance(b, perms.Permutation):
        return " ⊗ ".join(str(x) for x in b)
    return str(b)


def _emit(args, text: str, payload: dict | None = None) -> None:
    if args.format == "json" and payload is not None:
        doc = {"schema": SCHEMA, "command": args.command, **payload}
        text = json.dumps(doc, indent=2, ensure_ascii=False, sort_keys=True) + "\n"
    elif not text.endswith("\n"):
        text += "\n"
    if args.out and args.command != "verify":
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _check_order(args, n: int) -> None:
    if n < 0:
        raise UsageError("order must be non-negative")
    if n > args.max_order:
        raise UsageError(f"order {n} exceeds --max-order {args.max_order}")


def cmd_enum(args) -> int:
    if args.kind == "trees":
        if args.g is not None:
            raise UsageError("'enum trees' takes only an order")
        _check_order(args, args.n)
        items = enumerate_trees(args.n)
        lines = [f"count {len(items)}"] + [str(t) for t in items]
        _emit(args, "\n".join(lines), {"kind": "trees", "n": args.n, "count": len(items), "items": [t.to_nested() for t in items]})
        return 0
    g = 0 if args.g is None else args.g
    _check_order(args, args.n)
    diag = loopgraphs.euler_diagnostic(args.n, g)
    if diag:
        sys.stderr.write(f"no graphs: {diag}\n")
        _emit(args, "count 0", {"kind": "graphs", "n": args.n, "g": g, "count": 0, "items": [], "diagnostic": diag})
        return 0
    items = loopgraphs.enumerate_loop_graphs(args.n, g)
    lines = [f"count {len(items)}"] + [str(x) for x in items]
    _emit(args, "\n".join(lines), {"kind": "graphs", "n": args.n, "g": g, "count": len(items), "items": [x.to_json() for x in items]})
    return 0


def cmd_algebra(args) -> int:
    op = args.op
    space = "perm" if args.perm else "tree"
    xs = [parse_operand(s, space) for s in args.operands]
    if op == "star":
        if not xs:
            raise UsageError("star needs at least one operand")
        star = perms.mr_star if space == "perm" else hopf.tree_star
        result = xs[0]
        for x in xs[1:]:
            result = star(result, x)
        text = result.to_string()
    elif op in ("coproduct", "antipode"):
        if len(xs) != 1:
            raise UsageError(f"{op} takes exactly one operand")
        if op == "coproduct":
            result = perms.mr_coproduct(xs[0]) if space == "perm" else hopf.tree_coproduct(xs[0])
            text = tensor_string(result)
        else:
            if space == "perm":
                raise UsageError("antipode is only available on trees")
            result = hopf.antipode(xs[0])
            text = result.to_string()
    else:
        raise UsageError(f"unknown operation {op!r}")
    _emit(args, text, {"op": op, "space": space, "operands": args.operands, "result": _lincomb_json(result)})
    return 0


def _gk(args) -> tuple[int, int]:
    try:
        recursion._check_gk(args.g, args.k)
    except ValueError as exc:
        raise UsageError(f"{exc}; the Euler relation 2 - 2g - k = -n needs n >= 1") from exc
    _check_order(args, recursion.order_of(args.g, args.k))
    return args.g, args.k


def cmd_verify(args) -> int:
    g, k = _gk(args)
    report = recursion.verify_recursion(g, k, mode=args.mode)
    data = {"schema": SCHEMA, "command": "verify", **report.to_json()}
    status = "equal" if report.equal else "MISMATCH"
    text = (
        f"W^{g}_{k}: {status} (mode={report.mode}, classes={report.classes}, "
        f"lhs_terms={report.lhs_terms}, rhs_terms={report.rhs_terms}, "
        f"multiplicity_equal={report.multiplicity_equal})\n"
    )
    if args.format == "json":
        sys.stdout.write(json.dumps(data, indent=2, ensure_ascii=False, sort_keys=True) + "\n")
    else:
        sys.stdout.write(text)
        for m in report.missing:
            sys.stdout.write(f"missing {m}\n")
        for e in report.extra:
            sys.stdout.write(f"extra {e}\n")
    out = args.out
    if out is None and not report.equal:
        out = f"verify-g{g}-k{k}.json"
    if out:
        Path(out).write_text(json.dumps(data, indent=2, ensure_ascii=False, sort_keys=True) + "\n", encoding="utf-8")
    return 0 if report.equal else 1


def cmd_expand(args) -> int:
    g, k = _gk(args)
    exp = recursion.rhs_recursion(g, k, args.label_perms) if args.rhs else recursion.expand_W(g, k, args.label_perms)
    lines = [f"terms {exp.term_count()}", exp.to_string()]
    payload = {
        "g": g, "k": k, "side": "rhs" if args.rhs else "graphs", "term_count": exp.term_count(),
        "terms": [{"term": t.to_json(), "text": str(t), "coeff": c} for t, c in exp.terms.items()],
    }
    _emit(args, "\n".join(lines), payload)
    return 0


def cmd_render(args) -> int:
    fmt = args.format if args.format in ("dot", "tikz") else None
    if fmt is None:
        raise UsageError("render needs --format dot or --format tikz")
    weights = False
    if args.what == "trees":
        if len(args.params) != 1:
            raise UsageError("render trees takes an order")
        _check_order(args, args.params[0])
        graphs = [loopgraphs.LoopGraph(t) for t in enumerate_trees(args.params[0])]
    elif args.what == "graphs":
        if len(args.params) != 2:
            raise UsageError("render graphs takes an order and a genus")
        n, g = args.params
        _check_order(args, n)
        graphs = loopgraphs.enumerate_loop_graphs(n, g)
    else:
        if len(args.params) != 2:
            raise UsageError("render expand takes a genus and a label count")
        args.g, args.k = args.params
        g, k = _gk(args)
        graphs = loopgraphs.enumerate_loop_graphs(recursion.order_of(g, k), g)
        weights = True
    text = render.tikz_graphs(graphs, weights) if fmt == "tikz" else render.dot_graphs(graphs, weights)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "dot", "tikz"], default="text")
    common.add_argument("--label-perms", action="store_true", help="sum over permutations of the free labels")
    common.add_argument("--max-order", type=int, default=12, help="largest accepted tree order (default 12)")
    common.add_argument("--out", help="write the output to this path")

    parser = argparse.ArgumentParser(prog="lrtrees", description="Planar binary trees, loop graphs and the recursion check.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enum", parents=[common], help="list trees or loop graphs")
    p.add_argument("kind", choices=["trees", "graphs"])
    p.add_argument("n", type=int)
    p.add_argument("g", type=int, nargs="?")
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("algebra", parents=[common], help="star, coproduct or antipode")
    p.add_argument("op", choices=["star", "coproduct", "antipode"])
    p.add_argument("operands", nargs="+")
    p.add_argument("--perm", action="store_true", help="work in k[S∞] instead of on trees")
    p.set_defaults(func=cmd_algebra)

    for op in ("star", "coproduct", "antipode"):
        p = sub.add_parser(op, parents=[common], help=f"shortcut for 'algebra {op}'")
        p.add_argument("operands", nargs="+")
        p.add_argument("--perm", action="store_true", help="work in k[S∞] instead of on trees")
        p.set_defaults(func=cmd_algebra, op=op)

    p = sub.add_parser("verify", parents=[common], help="check the recursion for W^g_k")
    p.add_argument("g", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--mode", choices=["support", "multiset", "strict"], default="support")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("expand", parents=[common], help="print the terms of W^g_k")
    p.add_argument("g", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--rhs", action="store_true", help="expand the right-hand side of the recursion instead")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("render", parents=[common], help="draw trees or graphs as DOT or TikZ")
    p.add_argument("what", choices=["trees", "graphs", "expand"])
    p.add_argument("params", type=int, nargs="+")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
