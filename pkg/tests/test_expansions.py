from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from fourtutte.corpus import builtin
from fourtutte.expansions import (WZ, Y1, EdgeWeights, convolution_lambda_check, convolution_lambda_sides,
                                  normal_identity_check, normal_identity_sides, partial_specialize,
                                  qconnected_sides, specialize, theorem_main_double_sum, theorem_main_lhs,
                                  theorem_main_rhs, theorem_main_subgraph_form, tutte_at, tutte_bivariate)
from fourtutte.fourientation import las_vergnas_sum
from fourtutte.graph import Graph, SignLabels, as_minor, kappa
from fourtutte.oracles import tutte_deletion_contraction
from fourtutte.poly import VARS12, XY, Poly
from fourtutte.subgraph import gordon_traldi_sum

from conftest import labelled_graphs, small_graphs

x, y = Poly.gens(XY)
K3T = x ** 2 + x + y


def ones(**kw):
    d = {v: 1 for v in VARS12}
    d.update(kw)
    return d


def test_tutte_small(k3):
    assert tutte_bivariate(k3[0]) == K3T
    assert tutte_bivariate(Graph(2, ((0, 1),))) == x
    assert tutte_bivariate(Graph(1, ((0, 0),))) == y
    assert tutte_bivariate(Graph(1, ())).to_text() == "1"
    assert tutte_bivariate(builtin("K3+K2")[0]) == K3T * x


def test_tutte_k4(k4):
    assert tutte_bivariate(k4[0]).to_text() == "x^3 + 3*x^2 + 4*x*y + 2*x + y^3 + 3*y^2 + 2*y"
    assert tutte_at(k4[0], 1, 1) == 16


@settings(max_examples=60, deadline=None)
@given(small_graphs(max_edges=6))
def test_tutte_matches_deletion_contraction(g):
    t = tutte_bivariate(g)
    assert t == tutte_deletion_contraction(g)
    assert t.degree("x") <= as_minor(g).n - kappa(g)


@settings(max_examples=40, deadline=None)
@given(small_graphs(max_edges=3), small_graphs(max_edges=3))
def test_tutte_multiplicative(a, b):
    assert tutte_bivariate(a.disjoint_union(b)) == tutte_bivariate(a) * tutte_bivariate(b)


def test_lhs_total_count(k3):
    assert specialize(theorem_main_lhs(k3[0]), ones()) == 64


def test_lhs_restrictions(k3):
    g, _ = k3
    lhs = theorem_main_lhs(g)
    assert partial_specialize(lhs, {"k1": 1, "k2": 1, "l": 0, "m": 0}) == las_vergnas_sum(g)
    assert partial_specialize(lhs, {"k1": 0, "k2": 0, "l": 1, "m": 1}) == gordon_traldi_sum(g)


@pytest.mark.parametrize("name", ["K3", "K4", "loop+isthmus", "dipole-3"])
def test_main_identity_corpus(name):
    g, lab = builtin(name)
    lhs = theorem_main_lhs(g)
    assert lhs == theorem_main_rhs(g, lab)
    assert lhs == theorem_main_subgraph_form(g)


def test_double_sum(k3):
    assert theorem_main_double_sum(k3[0]) == theorem_main_lhs(k3[0])


def test_named_specializations(k3):
    g, lab = k3
    rhs = theorem_main_rhs(g, lab)
    lhs = theorem_main_lhs(g)
    assert specialize(rhs, ones(m=0, y=0, z=0)) == 25
    assert specialize(rhs, ones(w=0, wh=0)) == 32
    assert specialize(lhs, ones(l=0, m=0, y=0, z=0)) == 6
    assert 2 * tutte_at(g, 3, Fraction(1, 2)) == 25
    assert 8 * tutte_at(g, 1, 2) == 32


def test_convolution_k3(k3):
    assert convolution_lambda_check(k3[0], 1)
    assert convolution_lambda_check(k3[0], Fraction(1, 2))


def test_convolution_single_loop():
    g = Graph(1, ((0, 0),))
    lhs, rhs = convolution_lambda_sides(g, 5)
    yv = Poly.var(Y1, "y")
    assert lhs == rhs == 1 + yv


@settings(max_examples=30, deadline=None)
@given(small_graphs(max_edges=5), st.fractions(min_value=-3, max_value=3, max_denominator=4))
def test_convolution_any_lambda(g, lam):
    assert convolution_lambda_check(g, lam)


def test_normal_identity_unit_weights(k3):
    g, lab = k3
    assert normal_identity_check(g, lab, EdgeWeights.unit(3))
    lhs, _ = normal_identity_sides(g, lab, EdgeWeights.unit(3))
    w, z = Poly.gens(WZ)
    spec = theorem_main_lhs(g).substitute(
        {**{v: Poly.const(WZ, 1) for v in VARS12}, "w": w, "wh": w, "z": z, "zh": z}, WZ)
    assert lhs == spec


def test_normal_identity_given_weights(k3):
    g, lab = k3
    wts = EdgeWeights((1, 2, 3), (1, 1, 2), (0, 1, 1), (2, 0, 1))
    assert normal_identity_check(g, lab, wts)


def test_normal_identity_single_edge():
    g = Graph(2, ((0, 1),))
    wts = EdgeWeights((Fraction(2, 3),), (5,), (7,), (Fraction(-1, 2),))
    assert normal_identity_check(g, SignLabels.default(1), wts)


weights = st.integers(-2, 3)


@settings(max_examples=25, deadline=None)
@given(labelled_graphs(max_edges=4), st.data())
def test_normal_identity_random(gl, data):
    g, lab = gl
    pick = lambda: tuple(data.draw(weights) for _ in range(g.p))  # noqa: E731
    assert normal_identity_check(g, lab, EdgeWeights(pick(), pick(), pick(), pick()))


@settings(max_examples=25, deadline=None)
@given(labelled_graphs(max_edges=4))
def test_main_identity_random(gl):
    g, lab = gl
    lhs = theorem_main_lhs(g)
    assert lhs == theorem_main_rhs(g, lab)
    assert lhs == theorem_main_subgraph_form(g) == theorem_main_double_sum(g)


def test_qconnected_values(k3, k4):
    yv = Poly.var(Y1, "y")
    lhs, rhs = qconnected_sides(*k3)
    assert lhs == rhs == yv + 5
    lhs, rhs = qconnected_sides(*k4)
    assert lhs == rhs == yv ** 3 + 9 * yv ** 2 + 39 * yv + 79
