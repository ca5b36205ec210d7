"""Command line front end and the plain-text hypergraph format.

A hypergraph file holds one edge per line as whitespace-separated vertex
tokens. Text after ``#`` is a comment and blank lines are skipped. A line
may also wrap its tokens in braces, ``{x, y, z}``, in which case commas
separate tokens too and ``{}`` is rejected as an empty edge.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import warnings
from typing import Callable, List, Optional, Sequence

from .classify import classify
from .core import Hypergraph, VertexSpace, check_token, dual, minimize, normalize
from .errors import EmptyEdgeLine, HypergraphError, InternalInconsistency, MalformedToken, ParseError
from .jointree import build_disjoint_branch_join_tree, build_join_tree, to_dot
from .leaves import LeafKind, elimination_order
from .reduce import dm_reduce, gyo_reduce

__all__ = ["DuplicateEdgeWarning", "parse", "render", "main"]


class DuplicateEdgeWarning(UserWarning):
    pass


def _default_warn(message: str) -> None:
    warnings.warn(message, DuplicateEdgeWarning, stacklevel=3)


def _line_tokens(body: str, lineno: int) -> Optional[List[str]]:
    body = body.strip()
    if not body:
        return None
    if body.startswith("{"):
        if not body.endswith("}"):
            raise ParseError("unterminated '{'", lineno)
        toks = [t for t in re.split(r"[\s,]+", body[1:-1]) if t]
        if not toks:
            raise EmptyEdgeLine("edge marker with no vertices", lineno)
        for t in toks:
            if "{" in t or "}" in t:
                raise MalformedToken(f"invalid vertex token {t!r}", lineno)
        return toks
    toks = body.split()
    for t in toks:
        try:
            check_token(t)
        except MalformedToken as exc:
            raise MalformedToken(str(exc), lineno) from None
    return toks


def parse(text: str, warn: Optional[Callable[[str], None]] = None) -> Hypergraph:
    """Read a hypergraph; vertices are interned in order of first appearance.

    >>> parse("x y\\ny z\\nx y z\\n")
    Hypergraph({{x,y}, {x,y,z}, {y,z}})
    """
    warn = warn or _default_warn
    edges: List[List[str]] = []
    seen = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = _line_tokens(raw.split("#", 1)[0], lineno)
        if toks is None:
            continue
        key = frozenset(toks)
        if key in seen:
            warn(f"line {lineno}: duplicate edge {{{','.join(sorted(key))}}} "
                 f"(first seen on line {seen[key]}) collapsed")
            continue
        seen[key] = lineno
        edges.append(toks)
    space = VertexSpace(dict.fromkeys(t for e in edges for t in e))
    return Hypergraph(edges, space=space)


def render(H: Hypergraph) -> str:
    """One edge per line, tokens sorted, lines in lexicographic order."""
    return "".join(" ".join(e) + "\n" for e in H.sorted_edges())


def _fmt(edge) -> str:
    return "{" + ",".join(sorted(edge)) + "}"


# -- commands ----------------------------------------------------------------------

def _cmd_classify(H: Hypergraph, args, out) -> int:
    report = classify(H)
    if args.json:
        out.write(json.dumps(report.to_dict()) + "\n")
        return 0
    for k, v in report.flags().items():
        out.write(f"{k}: {'yes' if v else 'no'}\n")
    for k, w in sorted(report.witnesses.items()):
        out.write(f"witness {k}: {json.dumps(w.to_json())}\n")
    return 0


def _cmd_elim(H: Hypergraph, args, out) -> int:
    order = elimination_order(H, LeafKind.coerce(args.kind))
    if order is None:
        out.write(f"no {args.kind} elimination order\n")
    else:
        out.write(" ".join(order.order) + "\n")
    return 0


def _cmd_reduce(H: Hypergraph, args, out) -> int:
    trace = dm_reduce(H) if args.dm else gyo_reduce(H)
    if args.trace:
        out.write(trace.render() + "\n")
    else:
        res = trace.residual
        out.write(f"reducible: {'yes' if not res else 'no'}\n")
        out.write("residual: " + (" ".join(_fmt(e) for e in res.sorted_edges()) or "empty") + "\n")
    return 0


def _split_root(text: str) -> List[str]:
    return [t for t in re.split(r"[\s,{}]+", text) if t]


def _cmd_jointree(H: Hypergraph, args, out) -> int:
    root = _split_root(args.root) if args.root is not None else None
    if root is not None:
        H.edge_mask(root)
    if args.disjoint_branches:
        if root is None:
            if not H:
                out.write("empty hypergraph\n")
                return 0
            root = H.sorted_edges()[0]
        T = build_disjoint_branch_join_tree(H, root)
        missing = "no join tree with disjoint branches (not gamma acyclic)"
    else:
        T = build_join_tree(H)
        missing = "no join tree (not alpha acyclic)"
        if T is not None and root is not None:
            node = next(n for n, e in T.labels.items() if e == frozenset(root))
            T = type(T)(T.labels, T.tree_edges, (node,))
    if T is None:
        out.write(missing + "\n")
        return 0
    out.write(to_dot(T) if args.dot else T.render() + "\n")
    return 0


def _cmd_transform(H: Hypergraph, args, out) -> int:
    if args.dual:
        D, mapping = dual(H)
        out.write(render(D))
    elif args.normalize:
        out.write(render(normalize(H)))
    else:
        out.write(render(minimize(H)))
    return 0


def _cmd_oracle(H: Hypergraph, args, out) -> int:
    from .oracle import beta_cycle, gamma_triangle_brute, has_cycle_brute, is_conformal_brute

    cyc = has_cycle_brute(H)
    clique = is_conformal_brute(H)
    bc = beta_cycle(H)
    tri = gamma_triangle_brute(H)
    flags = {
        "gamma": cyc is None and tri is None,
        "beta": bc is None,
        "alpha": cyc is None and clique is None,
        "cycle_free": cyc is None,
        "conformal": clique is None,
    }
    wit = {k: w.to_json() for k, w in
           (("cycle", cyc), ("clique", clique), ("beta_cycle", bc), ("gamma_triangle", tri))
           if w is not None}
    if args.json:
        out.write(json.dumps(dict(flags, witnesses=wit)) + "\n")
        return 0
    for k, v in flags.items():
        out.write(f"{k}: {'yes' if v else 'no'}\n")
    for k, w in wit.items():
        out.write(f"witness {k}: {json.dumps(w)}\n")
    return 0


def _cmd_census(args, out, err) -> int:
    from .oracle import (census_size, enumerate_hypergraphs, has_cycle_brute, is_beta_brute,
                         is_conformal_brute, is_gamma_brute)

    if args.vertices < 0 or args.vertices > 5:
        err.write("error: --vertices must be between 0 and 5\n")
        return 1
    if args.vertices == 5 and (args.edge_cap is None or args.edge_cap > 4):
        err.write("error: the 5-vertex census needs --edge-cap of at most 4\n")
        return 1
    total = census_size(args.vertices, args.edge_cap)
    counts = {k: 0 for k in ("gamma", "beta", "alpha", "cycle_free", "conformal")}
    mismatches = 0
    for H in enumerate_hypergraphs(args.vertices, args.edge_cap):
        fast = classify(H).flags()
        cf = has_cycle_brute(H) is None
        conf = is_conformal_brute(H) is None
        slow = {
            "gamma": is_gamma_brute(H),
            "beta": is_beta_brute(H),
            "alpha": cf and conf,
            "cycle_free": cf,
            "conformal": conf,
        }
        for k, v in slow.items():
            counts[k] += v
            if fast[k] != v:
                mismatches += 1
                err.write(f"mismatch {k}: {H}\n")
    out.write(f"hypergraphs: {total}\n")
    for k, v in counts.items():
        out.write(f"{k}: {v}\n")
    out.write(f"mismatches: {mismatches}\n")
    return 0 if mismatches == 0 else 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        sys.exit(1)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hgacyclic", description="Hypergraph acyclicity toolkit.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("classify", help="report all acyclicity properties")
    c.add_argument("file")
    c.add_argument("--json", action="store_true")

    e = sub.add_parser("elim-order", help="greedy elimination order of a given kind")
    e.add_argument("--kind", required=True, choices=[k.value for k in LeafKind])
    e.add_argument("file")

    r = sub.add_parser("reduce", help="GYO or DM reduction")
    g = r.add_mutually_exclusive_group(required=True)
    g.add_argument("--gyo", action="store_true")
    g.add_argument("--dm", action="store_true")
    r.add_argument("--trace", action="store_true")
    r.add_argument("file")

    j = sub.add_parser("jointree", help="join tree, optionally rooted with disjoint branches")
    j.add_argument("file")
    j.add_argument("--root", help="root edge tokens, e.g. 'x,y,z'")
    j.add_argument("--disjoint-branches", action="store_true")
    j.add_argument("--dot", action="store_true")

    t = sub.add_parser("transform", help="dual, normalization or minimization")
    g = t.add_mutually_exclusive_group(required=True)
    g.add_argument("--dual", action="store_true")
    g.add_argument("--normalize", action="store_true")
    g.add_argument("--minimize", action="store_true")
    t.add_argument("file")

    o = sub.add_parser("oracle", help="brute-force pattern search")
    o.add_argument("file")
    o.add_argument("--json", action="store_true")

    s = sub.add_parser("census", help="compare fast and brute-force answers on all small hypergraphs")
    s.add_argument("--vertices", type=int, required=True)
    s.add_argument("--edge-cap", type=int)
    return p


_COMMANDS = {
    "classify": _cmd_classify,
    "elim-order": _cmd_elim,
    "reduce": _cmd_reduce,
    "jointree": _cmd_jointree,
    "transform": _cmd_transform,
    "oracle": _cmd_oracle,
}


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    if args.command == "census":
        return _cmd_census(args, out, err)
    try:
        text = _read(args.file)
        H = parse(text, warn=lambda msg: err.write(f"warning: {msg}\n"))
        return _COMMANDS[args.command](H, args, out)
    except InternalInconsistency:
        raise
    except (OSError, HypergraphError) as exc:
        err.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
