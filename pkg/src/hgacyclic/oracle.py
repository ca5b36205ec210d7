"""Brute-force characterizations by forbidden patterns, and exhaustive
enumeration of small hypergraphs.

Everything here is exponential and meant for a handful of vertices. The
functions share no code with the elimination-based classifiers so the two
can be checked against each other.
"""

from __future__ import annotations

import random
from itertools import combinations
from typing import Iterator, List, Optional, Tuple

from .classify import BetaCycle, CycleWitness, GammaTriangle, NonConformalClique
from .core import Hypergraph, VertexSpace, as_hypergraph

__all__ = [
    "has_cycle_brute",
    "is_conformal_brute",
    "is_beta_brute",
    "is_beta_brute_subsets",
    "beta_cycle",
    "is_gamma_brute",
    "gamma_triangle_brute",
    "enumerate_hypergraphs",
    "census_size",
    "random_hypergraphs",
]


def _subsets(vs, k):
    return (frozenset(c) for c in combinations(vs, k))


def _min_trace(edges, S):
    traces = {e & S for e in edges} - {frozenset()}
    return {t for t in traces if not any(t < u for u in traces)}


def _polygon_order(sets, S) -> Optional[Tuple[str, ...]]:
    """Cyclic order of S if ``sets`` is exactly the edge set of a polygon on S."""
    if len(sets) != len(S) or any(len(p) != 2 for p in sets):
        return None
    nbr = {x: [] for x in S}
    for p in sets:
        a, b = sorted(p)
        nbr[a].append(b)
        nbr[b].append(a)
    if any(len(v) != 2 for v in nbr.values()):
        return None
    start = min(S)
    order = [start, min(nbr[start])]
    while len(order) < len(S):
        a, b = nbr[order[-1]]
        nxt = a if a != order[-2] else b
        if nxt == start:
            return None  # closed too early: more than one polygon
        order.append(nxt)
    return tuple(order)


def has_cycle_brute(H) -> Optional[CycleWitness]:
    """First vertex set S, by size then token order, with the polygon pattern."""
    H = as_hypergraph(H)
    edges = H.edges
    vs = sorted(H.vertices)
    for k in range(3, len(vs) + 1):
        for S in _subsets(vs, k):
            order = _polygon_order(_min_trace(edges, S), S)
            if order is not None:
                return CycleWitness(order)
    return None


def is_conformal_brute(H) -> Optional[NonConformalClique]:
    """First S with |S| >= 3 whose maximal traces are the sets S minus one vertex.

    ``None`` means conformal.
    """
    H = as_hypergraph(H)
    edges = H.edges
    vs = sorted(H.vertices)
    for k in range(3, len(vs) + 1):
        for S in _subsets(vs, k):
            if _min_trace(edges, S) == {S - {x} for x in S}:
                return NonConformalClique(tuple(sorted(S)))
    return None


def is_beta_brute_subsets(H) -> bool:
    """Literal check: no subset of the edges has a cycle. 2^|H| subsets."""
    H = as_hypergraph(H)
    edges = sorted(H.sorted_edges())
    for k in range(len(edges) + 1):
        for sub in combinations(edges, k):
            if has_cycle_brute(Hypergraph(sub)) is not None:
                return False
    return True


def _hamiltonian(S: List[str], pairs) -> Optional[Tuple[str, ...]]:
    adj = {x: set() for x in S}
    for a, b in pairs:
        adj[a].add(b)
        adj[b].add(a)
    if any(len(v) < 2 for v in adj.values()):
        return None
    n = len(S)
    path = [S[0]]
    used = {S[0]}

    def extend() -> bool:
        if len(path) == n:
            return S[0] in adj[path[-1]]
        for w in sorted(adj[path[-1]] - used):
            path.append(w)
            used.add(w)
            if extend():
                return True
            path.pop()
            used.discard(w)
        return False

    if not extend():
        return None
    if path[1] > path[-1]:
        path[1:] = path[1:][::-1]
    return tuple(path)


def beta_cycle(H) -> Optional[BetaCycle]:
    """An edge subset with a cycle, or ``None`` when every subset is cycle-free.

    A subset F has the cycle t1..tn exactly when each consecutive pair is the
    trace on S of some edge, so it is enough to look, for every vertex set
    S, for a Hamiltonian cycle in the graph of edges whose trace on S has
    exactly two vertices.
    """
    H = as_hypergraph(H)
    edges = H.edges
    vs = sorted(H.vertices)
    for k in range(3, len(vs) + 1):
        for S in _subsets(vs, k):
            by_pair = {}
            for e in sorted(edges, key=sorted):
                t = e & S
                if len(t) == 2:
                    by_pair.setdefault(tuple(sorted(t)), e)
            cyc = _hamiltonian(sorted(S), by_pair)
            if cyc is None:
                continue
            used = []
            for i in range(len(cyc)):
                p = tuple(sorted((cyc[i], cyc[(i + 1) % len(cyc)])))
                used.append(tuple(sorted(by_pair[p])))
            return BetaCycle(tuple(sorted(set(used))), CycleWitness(cyc))
    return None


def is_beta_brute(H) -> bool:
    """True iff every subset of the edges is cycle-free."""
    return beta_cycle(H) is None


def gamma_triangle_brute(H) -> Optional[GammaTriangle]:
    """A triple whose traces include two pairs and the whole triple."""
    H = as_hypergraph(H)
    edges = H.edges
    for S in _subsets(sorted(H.vertices), 3):
        traces = {e & S for e in edges}
        if S not in traces:
            continue
        two = sorted((tuple(sorted(t)) for t in traces if len(t) == 2))
        if len(two) >= 2:
            p, q = set(two[0]), set(two[1])
            (x,) = p & q
            (y,) = p - q
            (z,) = q - p
            y, z = sorted((y, z))
            return GammaTriangle(x, y, z)
    return None


def is_gamma_brute(H) -> bool:
    """True iff cycle-free and no three vertices carry the gamma triangle."""
    return has_cycle_brute(H) is None and gamma_triangle_brute(H) is None


# -- enumeration -------------------------------------------------------------------

def census_size(n: int, edge_cap: Optional[int] = None) -> int:
    from math import comb

    m = 2 ** n - 1
    if edge_cap is None or edge_cap >= m:
        return 2 ** m
    return sum(comb(m, k) for k in range(edge_cap + 1))


def enumerate_hypergraphs(n: int, edge_cap: Optional[int] = None) -> Iterator[Hypergraph]:
    """Every hypergraph whose edges are non-empty subsets of v1..vn.

    Pattern p selects subset number j (the j-th non-empty subset as a bit
    mask, ascending) when bit j of p is set; patterns come in ascending order.
    Hypergraphs with more than ``edge_cap`` edges are skipped.
    """
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    space = VertexSpace(f"v{i}" for i in range(1, n + 1))
    subsets = list(range(1, 2 ** n))
    end = 2 ** len(subsets)
    p = 0
    while p < end:
        if edge_cap is not None and p.bit_count() > edge_cap:
            # jump to the next pattern whose low bits can still be cleared
            p += p & -p
            continue
        yield Hypergraph.from_masks(space, (subsets[j] for j in range(len(subsets)) if p >> j & 1))
        p += 1


enumerate = enumerate_hypergraphs  # noqa: A001


def random_hypergraphs(n: int, count: int, seed: int, max_edges: Optional[int] = None) -> Iterator[Hypergraph]:
    """``count`` random hypergraphs on v1..vn from a fixed seed.

    The edge count is drawn uniformly from 0..max_edges (default 2n), then
    that many distinct non-empty subsets are drawn uniformly.
    """
    rng = random.Random(seed)
    space = VertexSpace(f"v{i}" for i in range(1, n + 1))
    top = 2 ** n - 1
    cap = min(top, 2 * n if max_edges is None else max_edges)
    for _ in range(count):
        k = rng.randint(0, cap)
        yield Hypergraph.from_masks(space, rng.sample(range(1, top + 1), k))
