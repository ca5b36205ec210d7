"""GYO and DM reductions with recorded, replayable traces.

Both engines apply their operations until none applies, always picking the
highest priority operation and, within it, the smallest target by token
order. GYO empties a hypergraph exactly when it is alpha acyclic; DM empties
it exactly when it is gamma acyclic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, List, Optional, Tuple, Union

from .core import Hypergraph, as_hypergraph, bits, star_signatures
from .errors import StepDoesNotApply

__all__ = [
    "IncludedEdgeRemoval",
    "SingletonVertexRemoval",
    "SingletonEdgeRemoval",
    "Linearization",
    "ReductionTrace",
    "gyo_reduce",
    "dm_reduce",
    "gyo_steps",
    "dm_steps",
    "apply_step",
    "check_step_preservation",
]


def _fmt(edge) -> str:
    return "{" + ",".join(sorted(edge)) + "}"


@dataclass(frozen=True)
class IncludedEdgeRemoval:
    edge: FrozenSet[str]
    container: FrozenSet[str]

    def __str__(self):
        return f"included-edge-removal {_fmt(self.edge)} in {_fmt(self.container)}"


@dataclass(frozen=True)
class SingletonVertexRemoval:
    vertex: str
    edge: FrozenSet[str]

    def __str__(self):
        return f"singleton-vertex-removal {self.vertex} from {_fmt(self.edge)}"


@dataclass(frozen=True)
class SingletonEdgeRemoval:
    edge: FrozenSet[str]

    def __str__(self):
        return f"singleton-edge-removal {_fmt(self.edge)}"


@dataclass(frozen=True)
class Linearization:
    removed: str
    kept: str

    def __str__(self):
        return f"linearization {self.removed} twin of {self.kept}"


Step = Union[IncludedEdgeRemoval, SingletonVertexRemoval, SingletonEdgeRemoval, Linearization]
GYO_STEPS = (IncludedEdgeRemoval, SingletonVertexRemoval)
DM_STEPS = (SingletonVertexRemoval, SingletonEdgeRemoval, Linearization)


@dataclass(frozen=True)
class ReductionTrace:
    """Steps applied to ``source``; ``states[i]`` is the hypergraph after step i."""

    engine: str
    source: Hypergraph
    steps: Tuple[Step, ...]
    states: Tuple[Hypergraph, ...]

    @property
    def residual(self) -> Hypergraph:
        return self.states[-1] if self.states else self.source

    @property
    def reduced(self) -> bool:
        return not self.residual

    def replay(self) -> Hypergraph:
        H = self.source
        for s in self.steps:
            H = apply_step(H, s)
        return H

    def render(self) -> str:
        lines = [str(s) for s in self.steps]
        res = self.residual
        if res:
            lines.append("residual: " + " ".join(_fmt(e) for e in res.sorted_edges()))
        else:
            lines.append("residual: empty")
        return "\n".join(lines)


# -- step discovery ---------------------------------------------------------------

def _included(H: Hypergraph) -> List[IncludedEdgeRemoval]:
    out = []
    ms = H.sorted_masks()
    for e in ms:
        for f in ms:
            if e != f and e & f == e:
                out.append(IncludedEdgeRemoval(frozenset(H.names(e)), frozenset(H.names(f))))
    return out


def _singleton_vertices(H: Hypergraph) -> List[SingletonVertexRemoval]:
    out = []
    name = H.space.name
    for i in sorted(bits(H.universe), key=name):
        st = [m for m in H.masks if m >> i & 1]
        if len(st) == 1:
            out.append(SingletonVertexRemoval(name(i), frozenset(H.names(st[0]))))
    return out


def _singleton_edges(H: Hypergraph) -> List[SingletonEdgeRemoval]:
    return [SingletonEdgeRemoval(frozenset(H.names(m)))
            for m in H.sorted_masks() if m.bit_count() == 1]


def _linearizations(H: Hypergraph) -> List[Linearization]:
    name = H.space.name
    groups = {}
    for i, s in star_signatures(H).items():
        groups.setdefault(s, []).append(name(i))
    out = []
    for g in groups.values():
        g.sort()
        for y in g:
            for x in g:
                if x != y:
                    out.append(Linearization(y, x))
    return sorted(out, key=lambda s: (s.removed, s.kept))


def gyo_steps(H: Hypergraph) -> List[Step]:
    """Every GYO step applicable to ``H``, highest priority first."""
    H = as_hypergraph(H)
    return _included(H) + _singleton_vertices(H)


def dm_steps(H: Hypergraph) -> List[Step]:
    """Every DM step applicable to ``H``, highest priority first."""
    H = as_hypergraph(H)
    return _singleton_vertices(H) + _singleton_edges(H) + _linearizations(H)


def _next_dm(H: Hypergraph) -> Optional[Step]:
    sv = _singleton_vertices(H)
    if sv:
        return sv[0]
    se = _singleton_edges(H)
    if se:
        return se[0]
    # remove the smallest vertex that has a smaller twin, keeping the class minimum
    best = None
    name = H.space.name
    groups = {}
    for i, s in star_signatures(H).items():
        groups.setdefault(s, []).append(name(i))
    for g in groups.values():
        if len(g) > 1:
            g.sort()
            cand = Linearization(g[1], g[0])
            if best is None or cand.removed < best.removed:
                best = cand
    return best


def _next_gyo(H: Hypergraph) -> Optional[Step]:
    inc = _included(H)
    if inc:
        return inc[0]
    sv = _singleton_vertices(H)
    return sv[0] if sv else None


# -- application -------------------------------------------------------------------

def apply_step(H: Hypergraph, step: Step) -> Hypergraph:
    """Apply one reduction step after checking that it applies to ``H``."""
    H = as_hypergraph(H)
    sp = H.space
    try:
        if isinstance(step, IncludedEdgeRemoval):
            e, f = sp.mask(step.edge), sp.mask(step.container)
            if e not in H.masks or f not in H.masks or e == f or e & f != e:
                raise StepDoesNotApply(f"{step}: not a strictly included edge")
            return H._derive(H.masks - {e})
        if isinstance(step, SingletonVertexRemoval):
            b, e = sp.bit(step.vertex), sp.mask(step.edge)
            st = [m for m in H.masks if m & b]
            if st != [e]:
                raise StepDoesNotApply(f"{step}: vertex is not in exactly that one edge")
            return H._derive(m & ~b for m in H.masks if m & ~b)
        if isinstance(step, SingletonEdgeRemoval):
            e = sp.mask(step.edge)
            if e not in H.masks or e.bit_count() != 1:
                raise StepDoesNotApply(f"{step}: not a singleton edge")
            return H._derive(H.masks - {e})
        if isinstance(step, Linearization):
            y, x = sp.bit(step.removed), sp.bit(step.kept)
            if x == y or not H.universe & y or not H.universe & x:
                raise StepDoesNotApply(f"{step}: vertices must be two distinct vertices")
            if any(bool(m & x) != bool(m & y) for m in H.masks):
                raise StepDoesNotApply(f"{step}: vertices are not twins")
            return H._derive(m & ~y for m in H.masks)
    except KeyError:
        raise StepDoesNotApply(f"{step}: unknown vertex") from None
    raise TypeError(f"not a reduction step: {step!r}")


def _run(H: Hypergraph, engine: str, pick) -> ReductionTrace:
    H = as_hypergraph(H)
    steps, states = [], []
    cur = H
    while True:
        s = pick(cur)
        if s is None:
            break
        cur = apply_step(cur, s)
        steps.append(s)
        states.append(cur)
    return ReductionTrace(engine, H, tuple(steps), tuple(states))


def gyo_reduce(H: Hypergraph) -> ReductionTrace:
    """Included-edge removal first, then singleton-vertex removal.

    >>> gyo_reduce(Hypergraph([["x", "y"], ["x", "y", "z"]])).reduced
    True
    """
    return _run(H, "gyo", _next_gyo)


def dm_reduce(H: Hypergraph) -> ReductionTrace:
    """Singleton-vertex removal, then singleton-edge removal, then linearization."""
    return _run(H, "dm", _next_dm)


def check_step_preservation(H: Hypergraph, step: Step) -> bool:
    """Whether ``step`` leaves the matching acyclicity flag unchanged.

    DM steps are checked against gamma acyclicity, GYO steps against alpha
    acyclicity; singleton-vertex removal belongs to both and is checked for both.
    """
    from .classify import is_alpha_acyclic, is_gamma_acyclic

    H = as_hypergraph(H)
    after = apply_step(H, step)
    ok = True
    if isinstance(step, DM_STEPS):
        ok &= is_gamma_acyclic(H) == is_gamma_acyclic(after)
    if isinstance(step, GYO_STEPS):
        ok &= is_alpha_acyclic(H) == is_alpha_acyclic(after)
    return bool(ok)
