"""Leaf predicates and elimination orders.

Removing a vertex x means passing to the induced hypergraph on V minus x.
A hypergraph is acyclic of a given kind exactly when repeatedly removing
leaves of that kind empties it, and the choice of leaf never matters, so a
greedy loop that always removes the smallest leaf is a complete decider.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Iterable, List, Optional, Tuple

from .core import Hypergraph, as_hypergraph, bits, induced_masks, union_masks
from .errors import InternalInconsistency

__all__ = [
    "LeafKind",
    "EliminationOrder",
    "is_alpha_leaf",
    "is_beta_leaf",
    "is_gamma_leaf",
    "is_pure_leaf",
    "is_leaf",
    "leaves",
    "elimination_order",
    "sacred_order",
]


class LeafKind(enum.Enum):
    ALPHA = "alpha"
    BETA = "beta"
    GAMMA = "gamma"
    PURE = "pure"

    @classmethod
    def coerce(cls, kind) -> "LeafKind":
        if isinstance(kind, cls):
            return kind
        try:
            return cls(str(kind).lower())
        except ValueError:
            raise ValueError(f"unknown leaf kind {kind!r}") from None


# -- mask-level predicates ---------------------------------------------------
# Each takes the edge masks, and the bit of the vertex, which must occur.

def _star(masks, b):
    return [m for m in masks if m & b]


def _alpha(masks, b) -> bool:
    st = _star(masks, b)
    return union_masks(st) in st


def _chain(st) -> bool:
    st = sorted(st, key=int.bit_count)
    return all(a & c == a for a, c in zip(st, st[1:]))


def _beta(masks, b) -> bool:
    return _chain(_star(masks, b))


def _gamma(masks, b) -> bool:
    st = _star(masks, b)
    if not _chain(st):
        return False
    top = max(st, key=int.bit_count)
    near = union_masks(m for m in masks if m & b and m != top) & ~b
    for i in bits(near):
        if not _chain(_star(masks, 1 << i)):
            return False
    return True


def _pure(masks, b) -> bool:
    st = _star(masks, b)
    near = list(bits(union_masks(st) & ~b))
    for k, i in enumerate(near):
        for j in near[k + 1:]:
            # a clique neighbourhood with no triangle through x means every
            # pair of neighbours shares an edge with x itself
            xyz = b | (1 << i) | (1 << j)
            if not any(m & xyz == xyz for m in st):
                return False
    return True


_TESTS: dict = {
    LeafKind.ALPHA: _alpha,
    LeafKind.BETA: _beta,
    LeafKind.GAMMA: _gamma,
    LeafKind.PURE: _pure,
}


def leaf_test(kind) -> Callable:
    return _TESTS[LeafKind.coerce(kind)]


def _check(H: Hypergraph, x: str) -> int:
    return as_hypergraph(H).vertex_bit(x)


def is_alpha_leaf(H: Hypergraph, x: str) -> bool:
    """True iff the edges containing ``x`` have a largest element."""
    H = as_hypergraph(H)
    return _alpha(H.masks, _check(H, x))


def is_beta_leaf(H: Hypergraph, x: str) -> bool:
    """True iff the edges containing ``x`` form a chain under inclusion."""
    H = as_hypergraph(H)
    return _beta(H.masks, _check(H, x))


def is_gamma_leaf(H: Hypergraph, x: str) -> bool:
    """True iff ``x`` is a beta leaf with top edge e_x, and every vertex sharing
    an edge other than e_x with ``x`` is itself a beta leaf of ``H``."""
    H = as_hypergraph(H)
    return _gamma(H.masks, _check(H, x))


def is_pure_leaf(H: Hypergraph, x: str) -> bool:
    """True iff the neighbourhood of ``x`` is a clique and ``x`` lies in no
    three-vertex set whose induced maximal edges are exactly its three pairs."""
    H = as_hypergraph(H)
    return _pure(H.masks, _check(H, x))


def is_leaf(H: Hypergraph, x: str, kind) -> bool:
    H = as_hypergraph(H)
    return leaf_test(kind)(H.masks, _check(H, x))


def _leaf_indices(H: Hypergraph, masks, universe, test) -> List[int]:
    name = H.space.name
    return sorted((i for i in bits(universe) if test(masks, 1 << i)), key=name)


def leaves(H: Hypergraph, kind) -> List[str]:
    """All leaves of the given kind, sorted by token."""
    H = as_hypergraph(H)
    test = leaf_test(kind)
    return [H.space.name(i) for i in _leaf_indices(H, H.masks, H.universe, test)]


@dataclass(frozen=True)
class EliminationOrder:
    kind: LeafKind
    order: Tuple[str, ...]

    def __iter__(self):
        return iter(self.order)

    def __len__(self):
        return len(self.order)

    def replays_on(self, H: Hypergraph) -> bool:
        """Check that each vertex is a leaf when removed and the result is empty."""
        H = as_hypergraph(H)
        test = leaf_test(self.kind)
        masks, universe = H.masks, H.universe
        if len(set(self.order)) != len(self.order):
            return False
        for x in self.order:
            i = H.space.index.get(x)
            if i is None or not (universe >> i) & 1:
                return False
            b = 1 << i
            if not test(masks, b):
                return False
            universe &= ~b
            masks = induced_masks(masks, universe)
        return not masks


def _greedy(H: Hypergraph, masks, universe, test, order: List[int]):
    name = H.space.name
    while universe:
        pick = None
        for i in bits(universe):
            if (pick is None or name(i) < name(pick)) and test(masks, 1 << i):
                pick = i
        if pick is None:
            return None
        order.append(pick)
        universe &= ~(1 << pick)
        masks = induced_masks(masks, universe)
    return order


def elimination_order(H: Hypergraph, kind) -> Optional[EliminationOrder]:
    """Greedy elimination: repeatedly drop the smallest leaf of ``kind``.

    Returns ``None`` when a non-empty residual has no leaf.

    >>> elimination_order(Hypergraph([["x", "y"], ["y", "z"], ["x", "y", "z"]]), "beta").order
    ('x', 'y', 'z')
    """
    H = as_hypergraph(H)
    kind = LeafKind.coerce(kind)
    got = _greedy(H, H.masks, H.universe, _TESTS[kind], [])
    if got is None:
        return None
    return EliminationOrder(kind, tuple(H.space.name(i) for i in got))


def sacred_order(H: Hypergraph, kind, e: Iterable[str]) -> Optional[EliminationOrder]:
    """Elimination order that removes every vertex outside edge ``e`` first.

    ``kind`` is alpha, beta or gamma. Returns ``None`` when the hypergraph is
    not acyclic of that kind.
    """
    H = as_hypergraph(H)
    kind = LeafKind.coerce(kind)
    if kind is LeafKind.PURE:
        raise ValueError("sacred orders are defined for alpha, beta and gamma leaves")
    keep = H.edge_mask(e)
    test = _TESTS[kind]
    name = H.space.name
    masks, universe = H.masks, H.universe
    order: List[int] = []
    while universe & ~keep:
        pick = None
        for i in bits(universe & ~keep):
            if (pick is None or name(i) < name(pick)) and test(masks, 1 << i):
                pick = i
        if pick is None:
            if _greedy(H, masks, universe, test, []) is not None:
                raise InternalInconsistency(
                    "acyclic residual without a leaf outside the protected edge"
                )
            return None
        order.append(pick)
        universe &= ~(1 << pick)
        masks = induced_masks(masks, universe)
    if _greedy(H, masks, universe, test, order) is None:
        return None
    return EliminationOrder(kind, tuple(name(i) for i in order))
