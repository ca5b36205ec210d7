"""Join trees: construction from GYO traces, verification, and the rooted
variant with disjoint branches that characterizes gamma acyclicity.

Trees are forests in general, one tree per connected component of the
hypergraph. Node ids are dense integers in construction order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from .core import Hypergraph, as_hypergraph, union_masks
from .errors import MalformedTree
from .reduce import IncludedEdgeRemoval, SingletonVertexRemoval, gyo_reduce

__all__ = [
    "JoinTree",
    "build_join_tree",
    "verify_join_property",
    "join_property_violation",
    "build_disjoint_branch_join_tree",
    "verify_disjoint_branches",
    "disjoint_branch_trees_for_all_roots",
    "to_dot",
]


@dataclass(frozen=True)
class JoinTree:
    """Forest whose nodes carry distinct edges as labels.

    ``roots`` is empty for unrooted trees. For rooted trees the first entry
    is the chosen root and the rest root the other components.
    """

    labels: Dict[int, FrozenSet[str]]
    tree_edges: FrozenSet[Tuple[int, int]]
    roots: Tuple[int, ...] = ()
    _adj: Dict[int, List[int]] = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        adj: Dict[int, List[int]] = {n: [] for n in self.labels}
        for a, b in self.tree_edges:
            if a not in adj or b not in adj:
                raise MalformedTree(f"tree edge ({a}, {b}) names an unknown node")
            adj[a].append(b)
            adj[b].append(a)
        for ns in adj.values():
            ns.sort()
        object.__setattr__(self, "_adj", adj)

    @property
    def nodes(self) -> Tuple[int, ...]:
        return tuple(sorted(self.labels))

    @property
    def root(self) -> Optional[int]:
        return self.roots[0] if self.roots else None

    def neighbours(self, n: int) -> List[int]:
        return self._adj[n]

    def hypergraph(self) -> Hypergraph:
        return Hypergraph(sorted(sorted(e) for e in self.labels.values()))

    def components(self) -> List[List[int]]:
        seen, out = set(), []
        for n in self.nodes:
            if n in seen:
                continue
            comp, stack = [], [n]
            seen.add(n)
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in self._adj[u]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            out.append(sorted(comp))
        return out

    def check_structure(self) -> None:
        for a, b in self.tree_edges:
            if a == b:
                raise MalformedTree(f"self loop on node {a}")
        if len({frozenset(e) for e in self.tree_edges}) != len(self.tree_edges):
            raise MalformedTree("repeated tree edge")
        if len(self.tree_edges) != len(self.labels) - len(self.components()):
            raise MalformedTree("tree edges do not form a forest")
        if len(set(self.labels.values())) != len(self.labels):
            raise MalformedTree("labels are not injective")
        if any(not e for e in self.labels.values()):
            raise MalformedTree("empty label")

    def parents(self) -> Dict[int, Optional[int]]:
        """Parent pointers from BFS at the roots, then at the smallest node of
        every component that has no root."""
        par: Dict[int, Optional[int]] = {}
        starts = list(self.roots) + self.nodes_sorted_by_label()
        for s in starts:
            if s in par:
                continue
            par[s] = None
            queue = [s]
            for u in queue:
                for w in self._adj[u]:
                    if w not in par:
                        par[w] = u
                        queue.append(w)
        return par

    def nodes_sorted_by_label(self) -> List[int]:
        return sorted(self.labels, key=lambda n: tuple(sorted(self.labels[n])))

    def path(self, a: int, b: int, par=None) -> Optional[List[int]]:
        par = par if par is not None else self.parents()
        up_a = [a]
        while par[up_a[-1]] is not None:
            up_a.append(par[up_a[-1]])
        pos = {n: k for k, n in enumerate(up_a)}
        up_b = [b]
        while up_b[-1] not in pos:
            nxt = par[up_b[-1]]
            if nxt is None:
                return None
            up_b.append(nxt)
        return up_a[: pos[up_b[-1]]] + up_b[::-1]

    def render(self) -> str:
        lines = []
        for n in self.nodes:
            lines.append(f"{n}: {_fmt(self.labels[n])}")
        for a, b in sorted(self.tree_edges):
            lines.append(f"{a} -- {b}")
        if self.roots:
            lines.append("root: " + " ".join(str(r) for r in self.roots))
        return "\n".join(lines)


def _fmt(edge) -> str:
    return "{" + ",".join(sorted(edge)) + "}"


def _edge(a: int, b: int) -> Tuple[int, int]:
    return (a, b) if a < b else (b, a)


def join_property_violation(T: JoinTree) -> Optional[Tuple[int, int, Optional[int]]]:
    """First (a, b, v) where node v on the a-b path misses L(a) & L(b).

    v is ``None`` when a and b share vertices but lie in different trees.
    """
    T.check_structure()
    par = T.parents()
    for a, b in combinations(T.nodes, 2):
        common = T.labels[a] & T.labels[b]
        if not common:
            continue
        p = T.path(a, b, par)
        if p is None:
            return (a, b, None)
        for v in p:
            if not common <= T.labels[v]:
                return (a, b, v)
    return None


def verify_join_property(T: JoinTree) -> bool:
    """True iff every label on the path between two nodes contains their common vertices."""
    return join_property_violation(T) is None


def verify_disjoint_branches(T: JoinTree) -> bool:
    """True iff labels of nodes unrelated by ancestry are disjoint."""
    if not T.roots:
        raise MalformedTree("disjoint branches are defined for rooted trees only")
    T.check_structure()
    par = T.parents()
    anc: Dict[int, set] = {}
    for n in T.nodes:
        s, u = set(), n
        while u is not None:
            s.add(u)
            u = par[u]
        anc[n] = s
    for a, b in combinations(T.nodes, 2):
        if a in anc[b] or b in anc[a]:
            continue
        if T.labels[a] & T.labels[b]:
            return False
    return True


def build_join_tree(H: Hypergraph) -> Optional[JoinTree]:
    """Join tree of ``H`` or ``None`` when ``H`` is not alpha acyclic.

    The GYO trace is replayed backwards: a removed included edge hangs off
    its container, and a removed singleton vertex either extends the node of
    the edge it left or, when that smaller edge is also an edge of the
    hypergraph, gets a fresh node attached to it.
    """
    H = as_hypergraph(H)
    trace = gyo_reduce(H)
    if trace.residual:
        return None
    labels: Dict[int, FrozenSet[str]] = {}
    node_of: Dict[FrozenSet[str], int] = {}
    tree_edges = set()
    befores = (trace.source,) + trace.states[:-1]
    for step, before in zip(reversed(trace.steps), reversed(befores)):
        if isinstance(step, IncludedEdgeRemoval):
            n = len(labels)
            labels[n] = step.edge
            node_of[step.edge] = n
            tree_edges.add(_edge(n, node_of[step.container]))
        elif isinstance(step, SingletonVertexRemoval):
            rest = step.edge - {step.vertex}
            if not rest:
                n = len(labels)
                labels[n] = step.edge
                node_of[step.edge] = n
            elif rest in before:
                n = len(labels)
                labels[n] = step.edge
                node_of[step.edge] = n
                tree_edges.add(_edge(n, node_of[rest]))
            else:
                n = node_of.pop(rest)
                labels[n] = step.edge
                node_of[step.edge] = n
        else:  # pragma: no cover - gyo traces hold only these two kinds
            raise TypeError(step)
    T = JoinTree(labels, frozenset(tree_edges))
    _self_check(T, H)
    return T


def _self_check(T: JoinTree, H: Hypergraph, rooted: bool = False) -> None:
    from .errors import InternalInconsistency

    if T.hypergraph() != H:
        raise InternalInconsistency("join tree labels differ from the hypergraph edges")
    if not verify_join_property(T):
        raise InternalInconsistency("constructed tree violates the join property")
    if rooted and not verify_disjoint_branches(T):
        raise InternalInconsistency("constructed tree has overlapping branches")


# -- rooted trees with disjoint branches ----------------------------------------

def _components(masks: List[int]) -> List[List[int]]:
    """Group masks into classes connected by shared vertices."""
    out: List[List[int]] = []
    left = list(masks)
    while left:
        comp = [left.pop(0)]
        cover = comp[0]
        grew = True
        while grew:
            grew = False
            for m in list(left):
                if m & cover:
                    comp.append(m)
                    cover |= m
                    left.remove(m)
                    grew = True
        out.append(comp)
    return out


def _hang(H: Hypergraph, members: List[int], r: int, children: Dict[int, List[int]]) -> bool:
    """Arrange ``members`` below root ``r`` so that branches are disjoint.

    Each class of the remaining edges, connected through shared vertices,
    must form one branch whose top edge holds everything the class shares
    with ``r``. Candidate tops are tried in token order.
    """
    rest = [m for m in members if m != r]
    kids = []
    for comp in _components(rest):
        need = r & union_masks(comp)
        for top in sorted(comp, key=H.names):
            if top & need != need:
                continue
            trial: Dict[int, List[int]] = {}
            if _hang(H, comp, top, trial):
                children.update(trial)
                kids.append(top)
                break
        else:
            return False
    children[r] = sorted(kids, key=H.names)
    return True


def build_disjoint_branch_join_tree(H: Hypergraph, root: Iterable[str]) -> Optional[JoinTree]:
    """Rooted join tree with disjoint branches, rooted at edge ``root``.

    Components of ``H`` that do not meet ``root`` become separate trees rooted
    at their smallest edge. Returns ``None`` when no such tree exists. A
    single root says little on its own: the gamma triangle {xy, yz, xyz} has
    such a tree rooted at {x,y} but not at {x,y,z}. Trees for every root
    exist exactly when ``H`` is gamma acyclic.
    """
    H = as_hypergraph(H)
    r = H.edge_mask(root)
    comps = _components(H.sorted_masks())
    comps.sort(key=lambda c: (r not in c, H.names(min(c, key=H.names))))
    children: Dict[int, List[int]] = {}
    tops = []
    for comp in comps:
        top = r if r in comp else min(comp, key=H.names)
        if not _hang(H, comp, top, children):
            return None
        tops.append(top)

    ids: Dict[int, int] = {}
    tree_edges = set()
    for top in tops:
        queue = [top]
        ids[top] = len(ids)
        for u in queue:
            for c in children.get(u, []):
                ids[c] = len(ids)
                tree_edges.add(_edge(ids[u], ids[c]))
                queue.append(c)
    labels = {n: frozenset(H.names(m)) for m, n in ids.items()}
    T = JoinTree(labels, frozenset(tree_edges), tuple(ids[t] for t in tops))
    if T.hypergraph() != H or not verify_join_property(T) or not verify_disjoint_branches(T):
        return None
    return T


def disjoint_branch_trees_for_all_roots(H: Hypergraph) -> bool:
    """True iff every edge of ``H`` roots a join tree with disjoint branches,
    which holds exactly when ``H`` is gamma acyclic."""
    H = as_hypergraph(H)
    return all(build_disjoint_branch_join_tree(H, e) is not None for e in H.sorted_edges())


def to_dot(T: JoinTree, name: str = "jointree") -> str:
    """Undirected DOT text with node labels such as "{a,b,c}"."""
    lines = [f"graph {name} {{"]
    for n in T.nodes:
        extra = ", shape=doublecircle" if n in T.roots[:1] else ""
        lines.append(f'  n{n} [label="{_fmt(T.labels[n])}"{extra}];')
    for a, b in sorted(T.tree_edges):
        lines.append(f"  n{a} -- n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
