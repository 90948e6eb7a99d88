import json

import pytest
from hypothesis import given, settings

from fourtutte.errors import InputError
from fourtutte.expansions import tutte_bivariate
from fourtutte.graph import Graph, kappa, mask, submasks
from fourtutte.poly import VARS12, Poly
from fourtutte.subgraph import (HatActivities, activities_json, corank_nullity_hat, crapo_interval,
                                crapo_partition, crapo_toggle_cut, crapo_toggle_cycle, gordon_traldi_sum,
                                hat_activities, hat_activities_dct, hat_activities_direct, interval_sums)

from conftest import small_graphs

E = lambda *ks: mask(k - 1 for k in ks)  # noqa: E731  1-based edge labels

# activity columns of the worked triangle example
K3_HAT = {
    E(): (E(1, 2), E()),
    E(2): (E(1, 2), E()),
    E(1): (E(1, 2), E()),
    E(1, 2): (E(1, 2), E()),
    E(3): (E(1), E()),
    E(1, 3): (E(1), E()),
    E(2, 3): (E(), E(1)),
    E(1, 2, 3): (E(), E(1)),
}


@pytest.mark.parametrize("s", sorted(K3_HAT))
def test_k3_activity_columns(k3, s):
    g, _ = k3
    want = HatActivities(*K3_HAT[s])
    assert hat_activities_dct(g, s) == want
    assert hat_activities_direct(g, s) == want


def test_isthmus_always_cut_active():
    g = Graph(2, ((0, 1),))
    assert hat_activities(g, 1) == HatActivities(1, 0)
    assert hat_activities(g, 0) == HatActivities(1, 0)


def test_subset_outside_graph_rejected(k3):
    with pytest.raises(InputError):
        hat_activities(k3[0], 0b1000)


def test_k3_crapo_partition(k3):
    g, _ = k3
    parts = crapo_partition(g)
    assert [(iv.lower, iv.upper) for iv in parts] == [(E(), E(1, 2)), (E(3), E(1, 3)), (E(2, 3), E(1, 2, 3))]
    assert [iv.size for iv in parts] == [4, 2, 2]
    assert sum(iv.size for iv in parts) == 8
    assert [iv.representative_forest for iv in parts] == [E(1, 2), E(1, 3), E(2, 3)]


def test_single_edge_partition():
    parts = crapo_partition(Graph(2, ((0, 1),)))
    assert [(iv.lower, iv.upper) for iv in parts] == [(0, 1)]


def test_isolated_vertex_is_inert(k3):
    g, _ = k3
    bigger = Graph(4, g.edges)
    assert [(a.lower, a.upper) for a in crapo_partition(bigger)] == [(a.lower, a.upper) for a in crapo_partition(g)]


def test_toggles_on_k3(k3):
    g, _ = k3
    assert crapo_toggle_cut(g, E()) == E(1, 2)
    assert crapo_toggle_cycle(g, E(1, 2, 3)) == E(2, 3)
    for s in submasks(g.all_edges):
        assert crapo_toggle_cut(g, crapo_toggle_cut(g, s)) == s
        assert crapo_toggle_cycle(g, crapo_toggle_cycle(g, s)) == s


def test_gordon_traldi_k3(k3):
    g, _ = k3
    xh, wh, yh, zh = (Poly.var(VARS12, v) for v in ("xh", "wh", "yh", "zh"))
    gt = gordon_traldi_sum(g)
    assert gt == (xh + wh) ** 2 + (xh + wh) + (yh + zh)
    # forests counted at xh = yh = 1, wh = zh = 0
    assert gt.evaluate({v: 1 if v in ("xh", "yh") else 0 for v in VARS12}) == 3


def test_gordon_traldi_single_loop():
    g = Graph(1, ((0, 0),))
    yh, zh = Poly.var(VARS12, "yh"), Poly.var(VARS12, "zh")
    assert gordon_traldi_sum(g) == yh + zh


def test_activities_json_is_sorted(k3):
    rows = json.loads(activities_json(k3[0]))
    assert rows[0] == {"S": [], "i_hat": [0, 1], "l_hat": [],
                       "interval": {"lower": [], "upper": [0, 1], "forest": [0, 1]}}
    assert [r["S"] for r in rows] == sorted((r["S"] for r in rows), key=lambda s: sum(1 << i for i in s))


@settings(max_examples=60, deadline=None)
@given(small_graphs())
def test_direct_matches_deletion_contraction(g):
    for s in submasks(g.all_edges):
        assert hat_activities_dct(g, s) == hat_activities_direct(g, s)


@settings(max_examples=60, deadline=None)
@given(small_graphs())
def test_activity_sets_are_disjoint_and_rank_counts(g):
    k0, n = kappa(g), g.vertex_count
    for s in submasks(g.all_edges):
        h = hat_activities(g, s)
        assert h.i_hat & h.l_hat == 0
        ks = kappa(g, s)
        assert (h.i_hat & ~s).bit_count() == ks - k0
        assert (h.l_hat & s).bit_count() == ks + s.bit_count() - n


@settings(max_examples=40, deadline=None)
@given(small_graphs())
def test_activities_constant_on_intervals(g):
    for s in submasks(g.all_edges):
        iv = crapo_interval(g, s)
        assert s in iv
        for t in submasks(iv.upper & ~iv.lower):
            assert hat_activities(g, iv.lower | t) == hat_activities(g, s)


@settings(max_examples=40, deadline=None)
@given(small_graphs())
def test_partition_counts_forests(g):
    parts = crapo_partition(g)
    assert sum(iv.size for iv in parts) == 1 << g.p
    assert len(parts) == tutte_bivariate(g).evaluate({"x": 1, "y": 1})
    r = g.vertex_count - kappa(g)
    for iv in parts:
        f = iv.representative_forest
        assert f in iv and f.bit_count() == r and kappa(g, f) == kappa(g)


@settings(max_examples=40, deadline=None)
@given(small_graphs())
def test_interval_sums_agree(g):
    for iv in crapo_partition(g):
        lhs, rhs = interval_sums(g, iv)
        assert lhs == rhs


@settings(max_examples=40, deadline=None)
@given(small_graphs())
def test_gordon_traldi_expansion(g):
    xh, wh, yh, zh = (Poly.var(VARS12, v) for v in ("xh", "wh", "yh", "zh"))
    t = tutte_bivariate(g).substitute({"x": xh + wh, "y": yh + zh}, VARS12)
    gt = gordon_traldi_sum(g)
    assert gt == t
    assert gt.partial({"xh": 1, "yh": 1}) == corank_nullity_hat(g)
