"""Hypergraph data model and the basic transforms.

A hypergraph is a finite set of non-empty vertex sets. Vertices are text
tokens interned into a :class:`VertexSpace`; every edge is stored as an int
bit mask over that space, so subset and intersection tests are single
machine operations. Values are immutable and all functions are pure.
"""

from __future__ import annotations

import re
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple

from .errors import EdgeNotInHypergraph, MalformedToken, UnknownVertex

__all__ = [
    "VertexSpace",
    "Hypergraph",
    "as_hypergraph",
    "induced",
    "remove_vertices",
    "remove_edges",
    "star",
    "dual",
    "normalize",
    "minimize",
    "intersecting_edges",
    "neighbourhood",
    "isomorphic",
]

_TOKEN = re.compile(r"[^\s#]+")


def check_token(token) -> str:
    if not isinstance(token, str) or not _TOKEN.fullmatch(token):
        raise MalformedToken(f"invalid vertex token {token!r}")
    return token


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask``, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class VertexSpace:
    """Interner mapping vertex tokens to bit positions.

    A space only ever grows by creating a new space, so hypergraphs sharing
    a space can compare masks directly.
    """

    __slots__ = ("tokens", "index", "_names")

    def __init__(self, tokens: Iterable[str] = ()):
        self.tokens: Tuple[str, ...] = tuple(check_token(t) for t in tokens)
        self.index: Dict[str, int] = {t: i for i, t in enumerate(self.tokens)}
        if len(self.index) != len(self.tokens):
            raise ValueError("duplicate tokens in vertex space")
        self._names: Dict[int, Tuple[str, ...]] = {}

    def __len__(self):
        return len(self.tokens)

    def __repr__(self):
        return f"VertexSpace({list(self.tokens)!r})"

    def bit(self, token: str) -> int:
        try:
            return 1 << self.index[token]
        except KeyError:
            raise UnknownVertex(token) from None

    def mask(self, tokens: Iterable[str]) -> int:
        m = 0
        for t in tokens:
            m |= self.bit(t)
        return m

    def names(self, mask: int) -> Tuple[str, ...]:
        """Sorted tokens of a mask. Doubles as the canonical sort key of an edge."""
        got = self._names.get(mask)
        if got is None:
            got = tuple(sorted(self.tokens[i] for i in bits(mask)))
            self._names[mask] = got
        return got

    def name(self, index: int) -> str:
        return self.tokens[index]

    def extended(self, tokens: Iterable[str]) -> "VertexSpace":
        new = [t for t in dict.fromkeys(tokens) if t not in self.index]
        if not new:
            return self
        return VertexSpace(self.tokens + tuple(new))


def minimize_masks(masks: Iterable[int]) -> FrozenSet[int]:
    masks = list(masks)
    return frozenset(
        m for m in masks if not any(m != f and m & f == m for f in masks)
    )


def induced_masks(masks: Iterable[int], keep: int) -> FrozenSet[int]:
    return frozenset(m & keep for m in masks if m & keep)


def union_masks(masks: Iterable[int]) -> int:
    u = 0
    for m in masks:
        u |= m
    return u


class Hypergraph:
    """A finite set of non-empty edges over text-token vertices.

    ``Hypergraph([["x", "y"], ["y", "z"]])`` builds {xy, yz}. Duplicate edges
    collapse; an empty edge raises ``ValueError``.
    """

    __slots__ = ("_space", "_masks", "_universe", "_edges", "_hash")

    def __init__(self, edges: Iterable[Iterable[str]] = (), space: Optional[VertexSpace] = None):
        edge_lists = [list(e) for e in edges]
        for e in edge_lists:
            if not e:
                raise ValueError("hypergraph edges must be non-empty")
        if space is None:
            order = dict.fromkeys(t for e in edge_lists for t in e)
            space = VertexSpace(order)
        else:
            space = space.extended(t for e in edge_lists for t in e)
        self._init(space, frozenset(space.mask(e) for e in edge_lists))

    def _init(self, space, masks):
        self._space = space
        self._masks = masks
        self._universe = union_masks(masks)
        self._edges = None
        self._hash = None

    @classmethod
    def from_masks(cls, space: VertexSpace, masks: Iterable[int]) -> "Hypergraph":
        h = cls.__new__(cls)
        h._init(space, frozenset(masks))
        return h

    def _derive(self, masks) -> "Hypergraph":
        return Hypergraph.from_masks(self._space, masks)

    # -- views -----------------------------------------------------------
    @property
    def space(self) -> VertexSpace:
        return self._space

    @property
    def masks(self) -> FrozenSet[int]:
        return self._masks

    @property
    def universe(self) -> int:
        """Bit mask of the vertex set (union of all edges)."""
        return self._universe

    @property
    def vertices(self) -> FrozenSet[str]:
        return frozenset(self._space.names(self._universe))

    @property
    def edges(self) -> FrozenSet[FrozenSet[str]]:
        if self._edges is None:
            names = self._space.names
            self._edges = frozenset(frozenset(names(m)) for m in self._masks)
        return self._edges

    @property
    def size(self) -> int:
        """Sum of the edge cardinalities."""
        return sum(m.bit_count() for m in self._masks)

    def sorted_vertices(self) -> List[str]:
        return list(self._space.names(self._universe))

    def sorted_masks(self) -> List[int]:
        return sorted(self._masks, key=self._space.names)

    def sorted_edges(self) -> List[Tuple[str, ...]]:
        """Edges as sorted token tuples, in lexicographic order."""
        return sorted(self._space.names(m) for m in self._masks)

    def edge_mask(self, edge: Iterable[str]) -> int:
        """Mask of ``edge`` in this space; raises if it is not an edge."""
        try:
            m = self._space.mask(edge)
        except UnknownVertex:
            raise EdgeNotInHypergraph(frozenset(edge)) from None
        if m not in self._masks:
            raise EdgeNotInHypergraph(frozenset(edge))
        return m

    def vertex_bit(self, x: str) -> int:
        b = self._space.index.get(x)
        if b is None or not (self._universe >> b) & 1:
            raise UnknownVertex(x)
        return 1 << b

    def names(self, mask: int) -> Tuple[str, ...]:
        return self._space.names(mask)

    def in_space(self, space: VertexSpace) -> "Hypergraph":
        """The same hypergraph re-interned into ``space`` (extended if needed)."""
        if space is self._space:
            return self
        return Hypergraph(self.sorted_edges(), space=space)

    # -- set protocol ----------------------------------------------------
    def __len__(self):
        return len(self._masks)

    def __bool__(self):
        return bool(self._masks)

    def __iter__(self) -> Iterator[FrozenSet[str]]:
        return (frozenset(e) for e in self.sorted_edges())

    def __contains__(self, edge) -> bool:
        try:
            return self._space.mask(edge) in self._masks
        except (UnknownVertex, TypeError):
            return False

    def __eq__(self, other):
        if not isinstance(other, Hypergraph):
            return NotImplemented
        if other._space is self._space:
            return self._masks == other._masks
        return self.edges == other.edges

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.edges)
        return self._hash

    def __repr__(self):
        body = ", ".join("{" + ",".join(e) + "}" for e in self.sorted_edges())
        return f"Hypergraph({{{body}}})"

    def __str__(self):
        return "{" + ", ".join("".join(e) if all(len(t) == 1 for t in e) else "{" + ",".join(e) + "}"
                               for e in self.sorted_edges()) + "}"


def as_hypergraph(obj) -> Hypergraph:
    """Coerce an edge list or :class:`Hypergraph` to a :class:`Hypergraph`."""
    if isinstance(obj, Hypergraph):
        return obj
    if isinstance(obj, str):
        raise TypeError("pass an iterable of edges, or use hgacyclic.cli.parse for text")
    return Hypergraph(obj)


# -- transforms ------------------------------------------------------------

def induced(H: Hypergraph, S: Iterable[str]) -> Hypergraph:
    """The induced subhypergraph {e ∩ S | e ∈ H} minus the empty set.

    Members of ``S`` outside the vertex set are ignored.
    """
    idx = H.space.index
    keep = 0
    for t in S:
        i = idx.get(t)
        if i is not None:
            keep |= 1 << i
    return H._derive(induced_masks(H.masks, keep))


def remove_vertices(H: Hypergraph, S: Iterable[str]) -> Hypergraph:
    drop = 0
    idx = H.space.index
    for t in S:
        if t in idx:
            drop |= 1 << idx[t]
    return H._derive(induced_masks(H.masks, H.universe & ~drop))


def remove_edges(H: Hypergraph, edges: Iterable[Iterable[str]]) -> Hypergraph:
    drop = {H.edge_mask(e) for e in edges}
    return H._derive(H.masks - drop)


def star(H: Hypergraph, x: str) -> Hypergraph:
    """Edges of ``H`` containing ``x``; empty when ``x`` is not a vertex."""
    i = H.space.index.get(x)
    if i is None:
        return H._derive(())
    b = 1 << i
    return H._derive(m for m in H.masks if m & b)


def minimize(H: Hypergraph) -> Hypergraph:
    """Edges of ``H`` that are maximal for inclusion."""
    return H._derive(minimize_masks(H.masks))


def intersecting_edges(e: Iterable[str], f: Iterable[str]) -> bool:
    """True iff ``e`` and ``f`` are incomparable and share a vertex."""
    e, f = frozenset(e), frozenset(f)
    return not e <= f and not f <= e and bool(e & f)


def neighbourhood(H: Hypergraph, x: str) -> FrozenSet[str]:
    """Union of the edges containing ``x`` (always includes ``x``)."""
    b = H.vertex_bit(x)
    return frozenset(H.names(union_masks(m for m in H.masks if m & b)))


def star_signatures(H: Hypergraph) -> Dict[int, int]:
    """Map vertex index -> bit mask over the sorted edge list of ``H``."""
    sig: Dict[int, int] = {}
    for j, m in enumerate(H.sorted_masks()):
        for i in bits(m):
            sig[i] = sig.get(i, 0) | (1 << j)
    return sig


def dual(H: Hypergraph) -> Tuple[Hypergraph, Dict[str, FrozenSet[str]]]:
    """Dual hypergraph: one vertex per edge of ``H``, one edge per star.

    The vertex standing for an edge is named by its sorted tokens joined with
    ``+``. Vertices with equal stars yield a single dual edge. Returns the dual
    and the mapping from new vertex names to the original edges.
    """
    masks = H.sorted_masks()
    names = ["+".join(H.names(m)) for m in masks]
    if len(set(names)) != len(names):
        raise ValueError("dual vertex names collide; tokens must not contain '+'")
    space = VertexSpace(names)
    stars = set()
    for i in bits(H.universe):
        b = 1 << i
        s = 0
        for j, m in enumerate(masks):
            if m & b:
                s |= 1 << j
        stars.add(s)
    mapping = {n: frozenset(H.names(m)) for n, m in zip(names, masks)}
    return Hypergraph.from_masks(space, stars), mapping


def twin_classes(H: Hypergraph) -> List[List[int]]:
    """Vertex indices grouped by identical stars, each class sorted by token."""
    groups: Dict[int, List[int]] = {}
    for i, s in star_signatures(H).items():
        groups.setdefault(s, []).append(i)
    name = H.space.name
    return sorted((sorted(g, key=name) for g in groups.values()), key=lambda g: name(g[0]))


def normalize(H: Hypergraph) -> Hypergraph:
    """Contract every class of vertices with identical stars to one vertex.

    The kept representative is the lexicographically smallest token.
    """
    keep = 0
    for cls in twin_classes(H):
        keep |= 1 << cls[0]
    return H._derive(induced_masks(H.masks, keep))


# -- isomorphism -------------------------------------------------------------

def _vertex_profile(H: Hypergraph, i: int) -> Tuple[int, ...]:
    b = 1 << i
    return tuple(sorted(m.bit_count() for m in H.masks if m & b))


def isomorphic(H1: Hypergraph, H2: Hypergraph) -> Optional[Dict[str, str]]:
    """Find a vertex bijection mapping ``H1`` onto ``H2``, or ``None``.

    Backtracking over the vertices of ``H1`` in token order, trying images
    in token order, so the first witness found is the lexicographically
    least one. Meant for small inputs (about a dozen vertices).
    """
    if len(H1) != len(H2) or H1.size != H2.size:
        return None
    v1 = sorted(bits(H1.universe), key=H1.space.name)
    v2 = sorted(bits(H2.universe), key=H2.space.name)
    if len(v1) != len(v2):
        return None
    p1 = {i: _vertex_profile(H1, i) for i in v1}
    p2 = {i: _vertex_profile(H2, i) for i in v2}
    if sorted(p1.values()) != sorted(p2.values()):
        return None
    if sorted(m.bit_count() for m in H1.masks) != sorted(m.bit_count() for m in H2.masks):
        return None

    # order H1 vertices so that each one is constrained by earlier ones
    masks1, masks2 = list(H1.masks), list(H2.masks)
    target = H2.masks

    def pair_profile(masks, a, b):
        ab = (1 << a) | (1 << b)
        return tuple(sorted(m.bit_count() for m in masks if m & ab == ab))

    assign: Dict[int, int] = {}
    used = set()

    def extend(k: int) -> bool:
        if k == len(v1):
            img = frozenset(
                union_masks(1 << assign[i] for i in bits(m)) for m in masks1
            )
            return img == target
        a = v1[k]
        for b in v2:
            if b in used or p1[a] != p2[b]:
                continue
            if any(
                pair_profile(masks1, a, u) != pair_profile(masks2, b, assign[u])
                for u in v1[:k]
            ):
                continue
            assign[a] = b
            used.add(b)
            if extend(k + 1):
                return True
            del assign[a]
            used.discard(b)
        return False

    if not extend(0):
        return None
    n1, n2 = H1.space.name, H2.space.name
    return {n1(a): n2(b) for a, b in assign.items()}


def apply_mapping(H: Hypergraph, mapping: Dict[str, str]) -> Hypergraph:
    return Hypergraph([mapping[t] for t in e] for e in H.sorted_edges())


def pairs(iterable):
    return combinations(iterable, 2)
