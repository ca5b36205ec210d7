"""Acyclicity notions for hypergraphs: gamma, beta, alpha, cycle-freedom,
conformity and Berge acyclicity, with reductions, join trees and minors."""

from .core import (
    Hypergraph,
    VertexSpace,
    dual,
    induced,
    intersecting_edges,
    isomorphic,
    minimize,
    neighbourhood,
    normalize,
    star,
)
from .leaves import (
    EliminationOrder,
    LeafKind,
    elimination_order,
    is_alpha_leaf,
    is_beta_leaf,
    is_gamma_leaf,
    is_pure_leaf,
    sacred_order,
)
from .classify import (
    AcyclicityReport,
    classify,
    is_alpha_acyclic,
    is_berge_acyclic,
    is_beta_acyclic,
    is_conformal,
    is_cycle_free,
    is_gamma_acyclic,
)
from .reduce import ReductionTrace, apply_step, check_step_preservation, dm_reduce, gyo_reduce
from .jointree import (
    JoinTree,
    build_disjoint_branch_join_tree,
    build_join_tree,
    verify_disjoint_branches,
    verify_join_property,
)
from .minors import contract_edge, gamma_expansion, remove_edge, remove_vertex, shrink_edge
from .errors import *  # noqa: F401,F403

__version__ = "0.1.0"
