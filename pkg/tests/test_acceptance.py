"""The thirteen acceptance criteria, each run against its time limit.

Every test appends one "PASS criterion N" or "FAIL criterion N" line; the
lines are also printed at the end of the pytest run.
"""

import functools
import time

from hgacyclic import (Hypergraph, build_disjoint_branch_join_tree, build_join_tree, classify,
                       contract_edge, dm_reduce, dual, elimination_order, gamma_expansion,
                       gyo_reduce, is_alpha_acyclic, is_beta_acyclic, is_cycle_free,
                       is_gamma_acyclic, isomorphic, normalize, remove_edge, sacred_order,
                       shrink_edge, verify_join_property)
from hgacyclic.core import induced_masks
from hgacyclic.jointree import disjoint_branch_trees_for_all_roots
from hgacyclic.leaves import LeafKind, leaf_test, leaves
from hgacyclic.minors import replay_contractions
from hgacyclic.oracle import (enumerate_hypergraphs, has_cycle_brute, is_beta_brute,
                              is_conformal_brute, is_gamma_brute, random_hypergraphs)

from helpers import ACCEPTANCE_LINES, NORM_EXAMPLE, SIX_EXAMPLES, H1, H4, H5, KEYS, TRIANGLE, hg

SEED = 20241016
KINDS = (LeafKind.ALPHA, LeafKind.BETA, LeafKind.GAMMA)


def criterion(number: int, limit: float, title: str):
    def wrap(fn):
        @functools.wraps(fn)
        def run():
            start = time.perf_counter()
            try:
                fn()
            except BaseException:
                ACCEPTANCE_LINES.append(f"FAIL criterion {number}: {title} (assertion failed)")
                raise
            took = time.perf_counter() - start
            ok = took < limit
            ACCEPTANCE_LINES.append(
                f"{'PASS' if ok else 'FAIL'} criterion {number}: {title} "
                f"({took:.2f}s, limit {limit:g}s)")
            print(ACCEPTANCE_LINES[-1])
            assert ok, f"took {took:.2f}s, limit {limit:g}s"
        return run
    return wrap


def _oracle_acyclic(H, kind):
    if kind is LeafKind.ALPHA:
        return has_cycle_brute(H) is None and is_conformal_brute(H) is None
    if kind is LeafKind.BETA:
        return is_beta_brute(H)
    return is_gamma_brute(H)


def _non_neighbour_leaves(H, kind):
    """Two leaves of ``kind`` sharing no edge once the full edge is dropped."""
    rest = [e for e in H.edges if e != H.vertices]
    ls = leaves(H, kind)
    for i, x in enumerate(ls):
        for y in ls[i + 1:]:
            if not any(x in e and y in e for e in rest):
                return x, y
    return None


def _reach_empty(masks, universe, test, memo):
    """Set of outcomes (reached empty or not) over every sequence of leaf choices."""
    key = (masks, universe)
    if key in memo:
        return memo[key]
    if not universe:
        memo[key] = {True}
        return memo[key]
    out = set()
    i = 0
    while universe >> i:
        b = 1 << i
        if universe & b and test(masks, b):
            rest = universe & ~b
            out |= _reach_empty(induced_masks(masks, rest), rest, test, memo)
        i += 1
    memo[key] = out or {False}
    return memo[key]


@criterion(1, 1, "six standard examples classified")
def test_criterion_01_six_examples_table():
    for spec, expected in SIX_EXAMPLES.items():
        flags = classify(hg(spec)).flags()
        assert tuple(flags[k] for k in KEYS) == expected, spec


@criterion(2, 1, "dual and normalization of the nine-vertex example")
def test_criterion_02_norm_example():
    H = Hypergraph([list(v) for v in NORM_EXAMPLE.values()])
    D, mapping = dual(H)
    drawn = Hypergraph([list(s) for s in ("ab", "bc", "dc", "ecfg", "cfg", "f", "g")])
    assert len(H.vertices) == 9 and len(D) == 7
    assert isomorphic(D, drawn) is not None
    name = {frozenset(v): k for k, v in NORM_EXAMPLE.items()}
    assert {frozenset(name[mapping[t]] for t in e) for e in D.edges} == drawn.edges
    N = normalize(H)
    assert H.vertices - N.vertices == {"u", "z"}
    assert N == Hypergraph([list(e.replace("u", "").replace("z", "")) for e in NORM_EXAMPLE.values()])
    assert isomorphic(N, dual(D)[0]) is not None


@criterion(3, 10, "elimination orders match the oracles on all 128 hypergraphs over 3 vertices")
def test_criterion_03_main_equivalence_n3():
    n = 0
    for H in enumerate_hypergraphs(3):
        n += 1
        for kind in KINDS:
            assert (elimination_order(H, kind) is not None) == _oracle_acyclic(H, kind), (H, kind)
    assert n == 128


@criterion(4, 300, "alpha, gamma and cycle-freedom census at n=4")
def test_criterion_04_census_n4():
    n = 0
    for H in enumerate_hypergraphs(4):
        n += 1
        cyc = has_cycle_brute(H) is None
        conf = is_conformal_brute(H) is None
        alpha = cyc and conf
        gamma = cyc and is_gamma_brute(H)
        f = classify(H).flags()
        assert (f["alpha"], f["gamma"], f["cycle_free"], f["conformal"]) == (alpha, gamma, cyc, conf)
        assert gyo_reduce(H).reduced == alpha
        assert dm_reduce(H).reduced == gamma
        assert (elimination_order(H, LeafKind.PURE) is not None) == cyc
    assert n == 32768


@criterion(5, 300, "beta census at n=4 with at most 8 edges and 5000 random n=5 instances")
def test_criterion_05_beta_census():
    n = 0
    for H in enumerate_hypergraphs(4, 8):
        n += 1
        assert is_beta_acyclic(H) == is_beta_brute(H), H
    assert n == 22819
    for H in random_hypergraphs(5, 5000, seed=SEED):
        assert is_beta_acyclic(H) == is_beta_brute(H), H


@criterion(6, 120, "two non-neighbour leaves at n=4")
def test_criterion_06_two_non_neighbour_leaves():
    counted = dict.fromkeys(KINDS, 0)
    for H in enumerate_hypergraphs(4):
        f = classify(H).flags()
        if f["alpha"] and H and H.vertices not in H.edges:
            x, y = _non_neighbour_leaves(H, LeafKind.ALPHA)
            assert not any(x in e and y in e for e in H.edges)
            counted[LeafKind.ALPHA] += 1
        if len(H.vertices) >= 2:
            for kind in (LeafKind.BETA, LeafKind.GAMMA):
                if f[kind.value]:
                    assert _non_neighbour_leaves(H, kind) is not None, (H, kind)
                    counted[kind] += 1
    assert all(counted.values())


@criterion(7, 60, "leaf removal reaches empty independently of choices at n=3")
def test_criterion_07_weakened_confluence():
    for kind in LeafKind:
        test = leaf_test(kind)
        memo = {}
        for H in enumerate_hypergraphs(3):
            outcomes = _reach_empty(H.masks, H.universe, test, memo)
            assert len(outcomes) == 1, (H, kind)
            assert outcomes == {elimination_order(H, kind) is not None}


@criterion(8, 300, "sacred orders for every edge of every acyclic hypergraph at n=4")
def test_criterion_08_sacred_node():
    for H in enumerate_hypergraphs(4):
        f = classify(H).flags()
        for kind in KINDS:
            if not f[kind.value]:
                continue
            for e in H.sorted_edges():
                order = sacred_order(H, kind, e)
                assert order is not None and order.replays_on(H), (H, kind, e)
                outside = len(H.vertices - set(e))
                assert not set(order.order[:outside]) & set(e)


@criterion(9, 300, "join trees and disjoint-branch join trees at n=4")
def test_criterion_09_join_trees():
    for H in enumerate_hypergraphs(4):
        f = classify(H).flags()
        T = build_join_tree(H)
        assert (T is not None) == f["alpha"], H
        if T is not None:
            assert verify_join_property(T) and T.hypergraph() == H
        assert disjoint_branch_trees_for_all_roots(H) == f["gamma"], H
    tri = hg("xy yz xyz")
    assert build_disjoint_branch_join_tree(tri, "xyz") is None


@criterion(10, 120, "beta and gamma are self-dual at n=4; alpha is not")
def test_criterion_10_self_duality():
    for H in enumerate_hypergraphs(4):
        D = dual(H)[0]
        assert is_beta_acyclic(D) == is_beta_acyclic(H), H
        assert is_gamma_acyclic(D) == is_gamma_acyclic(H), H
    A = hg("xy yz xz xyz")
    B = hg("egh efh fgh")
    assert is_alpha_acyclic(A) and not is_cycle_free(B)
    assert isomorphic(dual(A)[0], B) is not None


@criterion(11, 300, "closure under contraction and edge removal; limit closure family")
def test_criterion_11_closure():
    for H in enumerate_hypergraphs(4):
        f = classify(H).flags()
        if f["alpha"] or f["cycle_free"]:
            for x in sorted(H.vertices):
                for y in sorted(H.vertices):
                    if x != y and any(x in e and y in e for e in H.edges):
                        K = contract_edge(H, x, y)
                        assert not f["alpha"] or is_alpha_acyclic(K)
                        assert not f["cycle_free"] or is_cycle_free(K)
        if f["beta"]:
            for e in H.sorted_edges():
                K = remove_edge(H, e)
                assert is_beta_acyclic(K)
                assert not f["gamma"] or is_gamma_acyclic(K)
    # shrinking: a gamma acyclic H1 gives the triangle
    assert is_gamma_acyclic(H1)
    H3 = shrink_edge(shrink_edge(shrink_edge(H1, "xabc", "ab"), "yabc", "bc"), "zabc", "ac")
    assert H3 == hg("ab bc ac") and not is_cycle_free(H3)
    assert isomorphic(H3, hg(TRIANGLE)) is not None
    # contraction: a gamma acyclic H4 gives an alpha, non-beta H5
    for H in (hg("x"), hg("xyz"), hg("xyz x y z"), H4):
        assert is_gamma_acyclic(H)
    got = H4
    for x, y in (("x2", "y1"), ("y2", "z1"), ("z2", "x1")):
        got = contract_edge(got, x, y)
    assert got == H5 and is_alpha_acyclic(H5) and not is_beta_acyclic(H5)
    H6 = remove_edge(H5, ["x1", "y1", "z1"])
    assert not is_cycle_free(H6)


@criterion(12, 1, "interval hypergraph on 10 points")
def test_criterion_12_interval_bound():
    n = 10
    H = Hypergraph([[f"p{k}" for k in range(i, j + 1)] for i in range(n) for j in range(i, n)])
    assert len(H) == 55 == n * (n + 1) // 2
    assert is_beta_acyclic(H)


@criterion(13, 300, "gamma expansion of every alpha acyclic hypergraph at n=4")
def test_criterion_13_gamma_expansion():
    n = 0
    for H in enumerate_hypergraphs(4):
        if not is_alpha_acyclic(H):
            continue
        n += 1
        H2, plan = gamma_expansion(H)
        assert is_gamma_acyclic(H2), H
        assert isomorphic(replay_contractions(H2, plan), H) is not None, H
    assert n == 22112
