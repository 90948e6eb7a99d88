import pytest
from hypothesis import given, settings

from fourtutte.corpus import ACCEPTANCE_CORPUS, builtin
from fourtutte.errors import InputError, SizeGuardError
from fourtutte.expansions import tutte_bivariate
from fourtutte.graph import Graph
from fourtutte.oracles import (COUNT_CLASSES, count_acyclic_orientations, count_strongly_connected_orientations,
                               named_count, tutte_deletion_contraction)
from fourtutte.poly import XY, Poly

from conftest import small_graphs

x, y = Poly.gens(XY)

# frozen from direct enumeration, in COUNT_CLASSES order
COUNTS = {
    "K3": (6, 2, 25, 49, 32, 3, 8, 64),
    "K4": (24, 24, 543, 1606, 2432, 16, 64, 4096),
    "P3": (4, 0, 9, 16, 4, 1, 4, 16),
    "dipole-3": (2, 6, 15, 18, 56, 3, 8, 64),
    "loop+isthmus": (0, 0, 3, 4, 8, 1, 4, 16),
    "K3+K2": (12, 0, 75, 196, 64, 3, 16, 256),
}


def test_dc_base_cases():
    assert tutte_deletion_contraction(Graph(1, ())) == Poly.const(XY, 1)
    assert tutte_deletion_contraction(Graph(2, ((0, 1),))) == x
    assert tutte_deletion_contraction(Graph(1, ((0, 0),))) == y
    assert tutte_deletion_contraction(Graph(3, ())) == Poly.const(XY, 1)


def test_dc_disjoint_union():
    k3, _ = builtin("K3")
    both, _ = builtin("K3+K2")
    assert tutte_deletion_contraction(both) == tutte_deletion_contraction(k3) * x


@pytest.mark.parametrize("name", ACCEPTANCE_CORPUS)
def test_dc_agrees_with_subset_sum(name):
    g, _ = builtin(name)
    assert tutte_deletion_contraction(g) == tutte_bivariate(g)


def test_dc_guard():
    with pytest.raises(SizeGuardError):
        tutte_deletion_contraction(Graph(1, ((0, 0),) * 5), max_edges=4)


@pytest.mark.parametrize("name", ACCEPTANCE_CORPUS)
def test_frozen_counts(name):
    g, lab = builtin(name)
    got = tuple(named_count(g, c, lab) for c in COUNT_CLASSES)
    assert got == COUNTS[name]


def test_unknown_class():
    g, lab = builtin("K3")
    with pytest.raises(InputError):
        named_count(g, "bogus", lab)
    with pytest.raises(InputError):
        named_count(g, "i-minus-u-free")


@settings(max_examples=40, deadline=None)
@given(small_graphs(max_edges=6))
def test_orientation_counts_are_tutte_values(g):
    t = tutte_bivariate(g)
    assert count_acyclic_orientations(g) == t.evaluate({"x": 2, "y": 0})
    assert count_strongly_connected_orientations(g) == t.evaluate({"x": 0, "y": 2})
