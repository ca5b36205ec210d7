from itertools import combinations

import pytest

from hgacyclic import LeafKind, elimination_order, sacred_order
from hgacyclic import is_alpha_leaf, is_beta_leaf, is_gamma_leaf, is_pure_leaf
from hgacyclic.core import induced
from hgacyclic.errors import EdgeNotInHypergraph, UnknownVertex
from hgacyclic.leaves import EliminationOrder, is_leaf, leaves
from hgacyclic.oracle import enumerate_hypergraphs, has_cycle_brute

from helpers import GAMMA_TRIANGLE, SQUARE, TETRAEDRON, TRIANGLE, hg


def test_alpha_leaf():
    assert not is_alpha_leaf(hg("xy xz"), "x")
    assert is_alpha_leaf(hg("xy yz xz xyz"), "x")


def test_full_edge_makes_every_vertex_an_alpha_leaf():
    H = hg("xy yzt xyzt tu xyztu")
    assert all(is_alpha_leaf(H, v) for v in H.vertices)


def test_beta_leaf():
    assert is_beta_leaf(hg("xy xyz"), "x")
    assert not is_beta_leaf(hg(GAMMA_TRIANGLE), "y")
    assert is_beta_leaf(hg(GAMMA_TRIANGLE), "x")


def test_gamma_leaf():
    assert not is_gamma_leaf(hg(GAMMA_TRIANGLE), "x")
    assert is_gamma_leaf(hg("xy xyz"), "z")


def test_non_intersecting_edges_with_full_edge_are_all_gamma_leaves():
    H = hg("xy zt x xyzt")
    assert all(is_gamma_leaf(H, v) for v in H.vertices)


def test_pure_leaf():
    assert not is_pure_leaf(hg(TRIANGLE), "x")
    assert is_pure_leaf(hg("xy"), "x")
    assert is_pure_leaf(hg(TETRAEDRON), "x")


def test_leaf_on_unknown_vertex():
    for f in (is_alpha_leaf, is_beta_leaf, is_gamma_leaf, is_pure_leaf):
        with pytest.raises(UnknownVertex):
            f(hg("xy"), "q")


def test_kind_coercion():
    assert LeafKind.coerce("Gamma") is LeafKind.GAMMA
    with pytest.raises(ValueError):
        LeafKind.coerce("delta")


def test_leaves_sorted():
    assert leaves(hg(GAMMA_TRIANGLE), "beta") == ["x", "z"]


def test_empty_order():
    for kind in LeafKind:
        assert elimination_order(hg(""), kind).order == ()


def test_beta_order_gamma_triangle():
    assert elimination_order(hg(GAMMA_TRIANGLE), LeafKind.BETA).order == ("x", "y", "z")


def test_gamma_triangle_has_no_gamma_order():
    assert elimination_order(hg(GAMMA_TRIANGLE), "gamma") is None


def test_square_has_no_pure_order():
    assert elimination_order(hg(SQUARE), "pure") is None


def test_singleton_edges_only():
    H = hg("x y z")
    for kind in LeafKind:
        assert elimination_order(H, kind).order == ("x", "y", "z")


def test_orders_replay():
    H = hg("xy yz xyz t tu")
    for kind in LeafKind:
        o = elimination_order(H, kind)
        if o is not None:
            assert o.replays_on(H)
    assert not EliminationOrder(LeafKind.GAMMA, ("x", "y", "z")).replays_on(hg(GAMMA_TRIANGLE))


def test_sacred_order_protects_edge():
    o = sacred_order(hg("xy xyz"), "gamma", "xy")
    assert o.order[0] == "z" and o.replays_on(hg("xy xyz"))


def test_sacred_order_full_edge_is_plain_order():
    H = hg("xy xyz")
    assert sacred_order(H, "alpha", "xyz").replays_on(H)


def test_sacred_order_absent_for_triangle():
    assert sacred_order(hg(TRIANGLE), "alpha", "xy") is None


def test_sacred_order_errors():
    with pytest.raises(EdgeNotInHypergraph):
        sacred_order(hg("xy"), "alpha", "xz")
    with pytest.raises(ValueError):
        sacred_order(hg("xy"), "pure", "xy")


def test_leaf_hierarchy_census():
    for H in enumerate_hypergraphs(4):
        for v in H.vertices:
            g, b, a = is_gamma_leaf(H, v), is_beta_leaf(H, v), is_alpha_leaf(H, v)
            assert (not g or b) and (not b or a)


def test_removing_a_leaf_preserves_acyclicity_census():
    for H in enumerate_hypergraphs(3):
        for kind in LeafKind:
            ok = elimination_order(H, kind) is not None
            for v in H.vertices:
                if is_leaf(H, v, kind):
                    rest = induced(H, H.vertices - {v})
                    assert (elimination_order(rest, kind) is not None) == ok


def test_pure_order_matches_cycle_oracle_census():
    for H in enumerate_hypergraphs(4):
        assert (elimination_order(H, "pure") is not None) == (has_cycle_brute(H) is None)


def test_beta_leaf_after_full_edge_removal_census():
    # a beta leaf of H minus its full edge stays a beta leaf of H
    for H in enumerate_hypergraphs(4):
        full = H.vertices
        if full not in H.edges:
            continue
        rest = H._derive(H.masks - {H.universe})
        for v in rest.vertices:
            if is_beta_leaf(rest, v):
                assert is_beta_leaf(H, v)


def test_gamma_leaf_readings_agree_census():
    # the inner test may be read as "beta leaf of H" or "beta leaf of H minus
    # e_x"; on every hypergraph up to four vertices the two leaf sets coincide
    # and the resulting orders match the pattern oracle
    from hgacyclic.leaves import _chain, _gamma, _star
    from hgacyclic.oracle import is_gamma_brute

    def alt(masks, b):
        st = _star(masks, b)
        if not _chain(st):
            return False
        top = max(st, key=int.bit_count)
        rest = [m for m in masks if m != top]
        near = 0
        for m in rest:
            if m & b:
                near |= m
        near &= ~b
        return all(_chain(_star(rest, 1 << i)) for i in range(near.bit_length()) if near >> i & 1)

    for H in enumerate_hypergraphs(4):
        for v in H.vertices:
            b = H.vertex_bit(v)
            assert alt(H.masks, b) == _gamma(H.masks, b)
        assert (elimination_order(H, "gamma") is not None) == is_gamma_brute(H)
