import pytest
from hypothesis import strategies as st

from fourtutte.corpus import builtin
from fourtutte.graph import Graph, SignLabels


@pytest.fixture
def k3():
    return builtin("K3")


@pytest.fixture
def k4():
    return builtin("K4")


@st.composite
def small_graphs(draw, max_vertices=4, max_edges=5, min_edges=0):
    """Multigraphs with loops, parallel edges and possibly several components."""
    n = draw(st.integers(1, max_vertices))
    p = draw(st.integers(min_edges, max_edges))
    edges = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)),
                          min_size=p, max_size=p))
    return Graph(n, tuple(edges))


@st.composite
def labelled_graphs(draw, **kw):
    g = draw(small_graphs(**kw))
    signs = st.tuples(*[st.sampled_from((1, -1))] * g.p)
    return g, SignLabels(draw(signs), draw(signs))
