"""Minor operations and the gamma expansion of an alpha-acyclic hypergraph."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Tuple, Union

from .core import Hypergraph, as_hypergraph, induced, remove_edges
from .errors import InvalidSubset, NotAlphaAcyclic, NotNeighbours
from .jointree import build_join_tree

__all__ = [
    "EdgeShrink",
    "VertexRemoval",
    "EdgeRemoval",
    "EdgeContraction",
    "shrink_edge",
    "contract_edge",
    "remove_edge",
    "remove_vertex",
    "apply_minor",
    "gamma_expansion",
    "replay_contractions",
]


@dataclass(frozen=True)
class EdgeShrink:
    edge: frozenset
    subset: frozenset


@dataclass(frozen=True)
class VertexRemoval:
    vertex: str


@dataclass(frozen=True)
class EdgeRemoval:
    edge: frozenset


@dataclass(frozen=True)
class EdgeContraction:
    x: str
    y: str


MinorOp = Union[EdgeShrink, VertexRemoval, EdgeRemoval, EdgeContraction]


def shrink_edge(H: Hypergraph, e: Iterable[str], s: Iterable[str]) -> Hypergraph:
    """Replace edge ``e`` by a non-empty subset ``s`` of it."""
    H = as_hypergraph(H)
    em = H.edge_mask(e)
    s = frozenset(s)
    if not s:
        raise InvalidSubset("the replacement set must be non-empty")
    sm = H.space.mask(s) if s <= H.vertices else None
    if sm is None or sm & em != sm:
        raise InvalidSubset(f"{sorted(s)} is not a subset of {list(H.names(em))}")
    return H._derive((H.masks - {em}) | {sm})


def contract_edge(H: Hypergraph, x: str, y: str) -> Hypergraph:
    """Replace ``x`` by ``y`` in every edge; ``x`` and ``y`` must share an edge.

    >>> contract_edge(Hypergraph([["x", "y"]]), "x", "y")
    Hypergraph({{y}})
    """
    H = as_hypergraph(H)
    bx, by = H.vertex_bit(x), H.vertex_bit(y)
    if bx == by:
        raise NotNeighbours(f"cannot contract {x!r} into itself")
    both = bx | by
    if not any(m & both == both for m in H.masks):
        raise NotNeighbours(f"{x!r} and {y!r} do not share an edge")
    return H._derive((m & ~bx) | by if m & bx else m for m in H.masks)


def remove_edge(H: Hypergraph, e: Iterable[str]) -> Hypergraph:
    return remove_edges(H, [e])


def remove_vertex(H: Hypergraph, x: str) -> Hypergraph:
    H = as_hypergraph(H)
    H.vertex_bit(x)
    return induced(H, H.vertices - {x})


def apply_minor(H: Hypergraph, op: MinorOp) -> Hypergraph:
    if isinstance(op, EdgeShrink):
        return shrink_edge(H, op.edge, op.subset)
    if isinstance(op, VertexRemoval):
        return remove_vertex(H, op.vertex)
    if isinstance(op, EdgeRemoval):
        return remove_edge(H, op.edge)
    if isinstance(op, EdgeContraction):
        return contract_edge(H, op.x, op.y)
    raise TypeError(f"not a minor operation: {op!r}")


def _copy(x: str, a: int, b: int = None) -> str:
    if b is None or a == b:
        return f"{x}@{a}"
    a, b = sorted((a, b))
    return f"{x}@{a}-{b}"


def gamma_expansion(H: Hypergraph) -> Tuple[Hypergraph, List[Tuple[str, str]]]:
    """Gamma-acyclic hypergraph that contracts back onto ``H``.

    Each node a of a join tree of ``H`` becomes an edge holding a private copy
    ``x@a`` of each of its vertices, plus a copy ``x@a-b`` shared with each
    tree neighbour b that also contains x. The returned plan is a list of
    pairs (u, v) for :func:`contract_edge` that merges all copies of every
    vertex into one.
    """
    H = as_hypergraph(H)
    T = build_join_tree(H)
    if T is None:
        raise NotAlphaAcyclic("gamma expansion needs an alpha acyclic hypergraph")
    new_edges = []
    for a in T.nodes:
        e = T.labels[a]
        f = {_copy(x, a) for x in e}
        for b in T.neighbours(a):
            f.update(_copy(x, a, b) for x in e & T.labels[b])
        new_edges.append(sorted(f))
    expanded = Hypergraph(sorted(new_edges))

    plan: List[Tuple[str, str]] = []
    for x in sorted(H.vertices):
        holders = [a for a in T.nodes if x in T.labels[a]]
        r = holders[0]
        target = _copy(x, r)
        seen = {r}
        queue = [r]
        for a in queue:
            if a != r:
                plan.append((_copy(x, a), target))
            for b in T.neighbours(a):
                if b not in seen and x in T.labels[b]:
                    seen.add(b)
                    plan.append((_copy(x, a, b), target))
                    queue.append(b)
    return expanded, plan


def replay_contractions(H: Hypergraph, plan: Iterable[Tuple[str, str]]) -> Hypergraph:
    for u, v in plan:
        H = contract_edge(H, u, v)
    return H


def original_names(H: Hypergraph) -> Dict[str, str]:
    """Map copy tokens back to the vertex they were made from."""
    return {t: t.rsplit("@", 1)[0] for t in H.vertices}
