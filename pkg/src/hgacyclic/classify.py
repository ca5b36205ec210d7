"""Classifiers for gamma, beta and alpha acyclicity, cycle-freedom,
conformity and Berge acyclicity, with witnesses for negative answers."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, FrozenSet, List, Optional, Tuple

from .core import Hypergraph, as_hypergraph, bits, induced, induced_masks, minimize_masks
from .errors import InternalInconsistency
from .leaves import EliminationOrder, LeafKind, elimination_order

__all__ = [
    "CycleWitness",
    "NonConformalClique",
    "GammaTriangle",
    "IncidenceCycle",
    "BetaCycle",
    "AcyclicityReport",
    "is_cycle_free",
    "is_conformal",
    "is_alpha_acyclic",
    "is_beta_acyclic",
    "is_gamma_acyclic",
    "is_berge_acyclic",
    "find_cycle",
    "conformity_witness",
    "find_gamma_triangle",
    "berge_witness",
    "classify",
]

BETA_WITNESS_MAX_VERTICES = 12


def _polygon(S: Tuple[str, ...]) -> FrozenSet[FrozenSet[str]]:
    n = len(S)
    return frozenset(frozenset((S[i], S[(i + 1) % n])) for i in range(n))


def _minimized_trace(H: Hypergraph, S) -> FrozenSet[FrozenSet[str]]:
    keep = H.space.mask(S)
    return frozenset(
        frozenset(H.names(m)) for m in minimize_masks(induced_masks(H.masks, keep))
    )


# -- witnesses -------------------------------------------------------------

@dataclass(frozen=True)
class CycleWitness:
    """Distinct vertices t1..tn (n >= 3) whose induced maximal edges are the polygon."""

    vertices: Tuple[str, ...]

    def verify(self, H: Hypergraph) -> bool:
        S = self.vertices
        if len(S) < 3 or len(set(S)) != len(S) or not set(S) <= H.vertices:
            return False
        return _minimized_trace(H, S) == _polygon(S)

    def to_json(self):
        return list(self.vertices)


@dataclass(frozen=True)
class NonConformalClique:
    """A set S, |S| >= 3, whose induced maximal edges are all the S minus one vertex."""

    vertices: Tuple[str, ...]

    def verify(self, H: Hypergraph) -> bool:
        S = frozenset(self.vertices)
        if len(S) < 3 or not S <= H.vertices:
            return False
        return _minimized_trace(H, S) == frozenset(S - {x} for x in S)

    def to_json(self):
        return list(self.vertices)


@dataclass(frozen=True)
class GammaTriangle:
    """Vertices with {x,y}, {x,z} and {x,y,z} all among the traces on {x,y,z}."""

    x: str
    y: str
    z: str

    def verify(self, H: Hypergraph) -> bool:
        if len({self.x, self.y, self.z}) != 3 or not {self.x, self.y, self.z} <= H.vertices:
            return False
        sub = induced(H, (self.x, self.y, self.z)).edges
        x, y, z = self.x, self.y, self.z
        return {frozenset((x, y)), frozenset((x, z)), frozenset((x, y, z))} <= sub

    def to_json(self):
        return [self.x, self.y, self.z]


@dataclass(frozen=True)
class IncidenceCycle:
    """Closed walk x1, e1, x2, e2, ... in the vertex/edge incidence graph."""

    vertices: Tuple[str, ...]
    edges: Tuple[Tuple[str, ...], ...]

    def verify(self, H: Hypergraph) -> bool:
        k = len(self.vertices)
        if k < 2 or len(self.edges) != k:
            return False
        if len(set(self.vertices)) != k or len(set(self.edges)) != k:
            return False
        for i, e in enumerate(self.edges):
            if frozenset(e) not in H.edges:
                return False
            if self.vertices[i] not in e or self.vertices[(i + 1) % k] not in e:
                return False
        return True

    def to_json(self):
        out = []
        for x, e in zip(self.vertices, self.edges):
            out.extend([x, list(e)])
        return out


@dataclass(frozen=True)
class BetaCycle:
    """A subset of edges together with a cycle of that subset."""

    edges: Tuple[Tuple[str, ...], ...]
    cycle: CycleWitness

    def verify(self, H: Hypergraph) -> bool:
        if not all(frozenset(e) in H.edges for e in self.edges):
            return False
        return self.cycle.verify(Hypergraph(self.edges))

    def to_json(self):
        return {"edges": [list(e) for e in self.edges], "cycle": self.cycle.to_json()}


# -- cycle-freedom and conformity ---------------------------------------------

def _adjacency(masks, universe) -> Dict[int, int]:
    adj = {i: 0 for i in bits(universe)}
    for m in masks:
        for i in bits(m):
            adj[i] |= m
    for i in adj:
        adj[i] &= ~(1 << i)
    return adj


def _covered(masks, s: int) -> bool:
    return any(m & s == s for m in masks)


def _find_cycle_masks(H: Hypergraph, masks, universe) -> Optional[List[int]]:
    name = H.space.name
    order = sorted(bits(universe), key=name)
    adj = _adjacency(masks, universe)
    # triangles not covered by an edge
    for a, b, c in combinations(order, 3):
        if adj[a] >> b & 1 and adj[a] >> c & 1 and adj[b] >> c & 1:
            if not _covered(masks, (1 << a) | (1 << b) | (1 << c)):
                return [a, b, c]
    # chordless cycles of length >= 4 in the two-section
    for v in order:
        nbrs = [i for i in order if adj[v] >> i & 1]
        for a, b in combinations(nbrs, 2):
            if adj[a] >> b & 1:
                continue
            banned = (adj[v] | (1 << v)) & ~((1 << a) | (1 << b))
            prev = {a: None}
            queue = deque([a])
            while queue and b not in prev:
                u = queue.popleft()
                for w in sorted(bits(adj[u] & ~banned), key=name):
                    if w not in prev:
                        prev[w] = u
                        queue.append(w)
            if b in prev:
                path = []
                u = b
                while u is not None:
                    path.append(u)
                    u = prev[u]
                return [v] + path[::-1]
    return None


def _canonical_cycle(names: List[str]) -> Tuple[str, ...]:
    k = names.index(min(names))
    rot = names[k:] + names[:k]
    if rot[-1] < rot[1]:
        rot = [rot[0]] + rot[1:][::-1]
    return tuple(rot)


def find_cycle(H: Hypergraph) -> Optional[CycleWitness]:
    """Return a cycle of ``H`` or ``None`` when it is cycle-free.

    A cycle is either three pairwise adjacent vertices that no edge covers,
    or a chordless cycle of length at least four in the two-section graph.
    Polynomial time.
    """
    H = as_hypergraph(H)
    got = _find_cycle_masks(H, H.masks, H.universe)
    if got is None:
        return None
    return CycleWitness(_canonical_cycle([H.space.name(i) for i in got]))


def _max_cliques(adj: Dict[int, int]):
    out = []

    def expand(r, p, x):
        if not p and not x:
            out.append(r)
            return
        pivot = max(bits(p | x), key=lambda u: (adj[u] & p).bit_count())
        for v in list(bits(p & ~adj[pivot])):
            expand(r | (1 << v), p & adj[v], x & adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    everything = 0
    for i in adj:
        everything |= 1 << i
    if everything:
        expand(0, everything, 0)
    return out


def _conformity_masks(H: Hypergraph, masks, universe) -> Optional[int]:
    name = H.space.name
    for q in sorted(_max_cliques(_adjacency(masks, universe)),
                    key=lambda q: H.names(q)):
        if _covered(masks, q):
            continue
        for i in sorted(bits(q), key=name):
            if not _covered(masks, q & ~(1 << i)):
                q &= ~(1 << i)
        return q
    return None


def conformity_witness(H: Hypergraph) -> Optional[NonConformalClique]:
    """A minimal clique not contained in any edge, or ``None`` if conformal."""
    H = as_hypergraph(H)
    q = _conformity_masks(H, H.masks, H.universe)
    return None if q is None else NonConformalClique(H.names(q))


def is_conformal(H: Hypergraph) -> bool:
    """True iff every clique of the two-section lies inside some edge."""
    return conformity_witness(H) is None


def is_cycle_free(H: Hypergraph) -> bool:
    """True iff a pure elimination order exists."""
    return elimination_order(H, LeafKind.PURE) is not None


def is_alpha_acyclic(H: Hypergraph) -> bool:
    return elimination_order(H, LeafKind.ALPHA) is not None


def is_beta_acyclic(H: Hypergraph) -> bool:
    return elimination_order(H, LeafKind.BETA) is not None


def is_gamma_acyclic(H: Hypergraph) -> bool:
    return elimination_order(H, LeafKind.GAMMA) is not None


def find_gamma_triangle(H: Hypergraph) -> Optional[GammaTriangle]:
    """Smallest triple x, y, z with {x,y}, {x,z}, {x,y,z} among its traces."""
    H = as_hypergraph(H)
    name = H.space.name
    order = sorted(bits(H.universe), key=name)
    for t in combinations(order, 3):
        full = (1 << t[0]) | (1 << t[1]) | (1 << t[2])
        traces = {m & full for m in H.masks}
        if full not in traces:
            continue
        pairs = [p for p in traces if p.bit_count() == 2]
        if len(pairs) < 2:
            continue
        p, q = sorted(pairs, key=H.names)[:2]
        x = (p & q).bit_length() - 1
        y = (p & ~q).bit_length() - 1
        z = (q & ~p).bit_length() - 1
        y, z = sorted((name(y), name(z)))
        return GammaTriangle(name(x), y, z)
    return None


# -- Berge acyclicity ------------------------------------------------------------

def berge_witness(H: Hypergraph) -> Optional[IncidenceCycle]:
    """A cycle of the vertex/edge incidence graph, or ``None`` if it is a forest."""
    H = as_hypergraph(H)
    name = H.space.name
    edges = H.sorted_masks()
    # nodes: ("v", i) for vertices, ("e", j) for edges
    nbrs = {}
    for i in sorted(bits(H.universe), key=name):
        b = 1 << i
        nbrs[("v", i)] = [("e", j) for j, m in enumerate(edges) if m & b]
    for j, m in enumerate(edges):
        nbrs[("e", j)] = [("v", i) for i in sorted(bits(m), key=name)]

    parent: Dict = {}
    for start in nbrs:
        if start in parent or start[0] != "v":
            continue
        parent[start] = None
        stack = [(start, iter(nbrs[start]))]
        while stack:
            node, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                stack.pop()
                continue
            if nxt == parent[node]:
                continue
            if nxt in parent:
                # back edge closes a cycle nxt ... node
                path = [node]
                while path[-1] != nxt:
                    path.append(parent[path[-1]])
                path.reverse()
                if path[0][0] != "v":
                    path = path[1:] + path[:1]
                verts = tuple(name(i) for kind, i in path if kind == "v")
                es = tuple(H.names(edges[j]) for kind, j in path if kind == "e")
                return IncidenceCycle(verts, es)
            parent[nxt] = node
            stack.append((nxt, iter(nbrs[nxt])))
    return None


def is_berge_acyclic(H: Hypergraph) -> bool:
    """True iff the vertex/edge incidence graph is a forest.

    Edges are a set, so repeated edges of a multi-hypergraph count once.
    """
    H = as_hypergraph(H)
    # leaf pruning on the incidence graph
    deg: Dict = {}
    nbrs: Dict = {}
    for j, m in enumerate(H.masks):
        for i in bits(m):
            nbrs.setdefault(("v", i), []).append(("e", j))
            nbrs.setdefault(("e", j), []).append(("v", i))
    for n, ns in nbrs.items():
        deg[n] = len(ns)
    queue = deque(n for n, d in deg.items() if d <= 1)
    removed = set()
    while queue:
        n = queue.popleft()
        if n in removed:
            continue
        removed.add(n)
        for w in nbrs[n]:
            if w not in removed:
                deg[w] -= 1
                if deg[w] == 1:
                    queue.append(w)
    return len(removed) == len(nbrs)


# -- report ---------------------------------------------------------------------

@dataclass(frozen=True)
class AcyclicityReport:
    gamma: bool
    beta: bool
    alpha: bool
    cycle_free: bool
    conformal: bool
    berge: bool
    witnesses: Dict[str, object] = field(default_factory=dict)
    orders: Dict[str, EliminationOrder] = field(default_factory=dict)

    def flags(self) -> Dict[str, bool]:
        return {
            "gamma": self.gamma,
            "beta": self.beta,
            "alpha": self.alpha,
            "cycle_free": self.cycle_free,
            "conformal": self.conformal,
            "berge": self.berge,
        }

    def check(self) -> None:
        problems = []
        if self.gamma and not self.beta:
            problems.append("gamma without beta")
        if self.beta and not self.alpha:
            problems.append("beta without alpha")
        if self.alpha and not self.cycle_free:
            problems.append("alpha without cycle-freedom")
        if self.alpha != (self.conformal and self.cycle_free):
            problems.append("alpha differs from conformal and cycle-free")
        if self.berge and not self.gamma:
            problems.append("Berge without gamma")
        if problems:
            raise InternalInconsistency("; ".join(problems))

    def to_dict(self) -> Dict[str, object]:
        out: Dict[str, object] = dict(self.flags())
        out["witnesses"] = {k: w.to_json() for k, w in sorted(self.witnesses.items())}
        out["orders"] = {k: list(o.order) for k, o in sorted(self.orders.items())}
        return out


def beta_witness(H: Hypergraph) -> Optional[BetaCycle]:
    from .oracle import beta_cycle

    return beta_cycle(H)


def classify(H: Hypergraph) -> AcyclicityReport:
    """Run every classifier, attach witnesses for negative answers and
    cross-check the results against each other."""
    H = as_hypergraph(H)
    orders = {}
    for kind in LeafKind:
        o = elimination_order(H, kind)
        if o is not None:
            orders[kind.value if kind is not LeafKind.PURE else "cycle_free"] = o
    gamma, beta, alpha = "gamma" in orders, "beta" in orders, "alpha" in orders
    cycle_free = "cycle_free" in orders

    witnesses: Dict[str, object] = {}
    cyc = find_cycle(H)
    if (cyc is None) != cycle_free:
        raise InternalInconsistency("cycle search disagrees with the pure elimination order")
    if cyc is not None:
        witnesses["cycle"] = cyc
    clique = conformity_witness(H)
    if clique is not None:
        witnesses["clique"] = clique
    if not gamma:
        tri = find_gamma_triangle(H)
        if tri is not None:
            witnesses["gamma_triangle"] = tri
    if not beta and H.universe.bit_count() <= BETA_WITNESS_MAX_VERTICES:
        bc = beta_witness(H)
        if bc is None:
            raise InternalInconsistency("no edge subset with a cycle in a non beta acyclic hypergraph")
        witnesses["beta_cycle"] = bc
    bw = berge_witness(H)
    if bw is not None:
        witnesses["berge"] = bw

    report = AcyclicityReport(
        gamma=gamma,
        beta=beta,
        alpha=alpha,
        cycle_free=cycle_free,
        conformal=clique is None,
        berge=bw is None,
        witnesses=witnesses,
        orders=orders,
    )
    report.check()
    if __debug__:
        from .reduce import dm_reduce, gyo_reduce

        if (not gyo_reduce(H).residual) != alpha:
            raise InternalInconsistency("GYO reduction disagrees with alpha elimination")
        if (not dm_reduce(H).residual) != gamma:
            raise InternalInconsistency("DM reduction disagrees with gamma elimination")
        if not gamma and cycle_free and "gamma_triangle" not in witnesses:
            raise InternalInconsistency("cycle-free, not gamma acyclic, and no gamma triangle")
    return report
