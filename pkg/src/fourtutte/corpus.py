"""Builtin test graphs, stored in the graph file format."""
from __future__ import annotations

from .errors import InputError
from .graph import parse_graph

_FILES = {
    # triangle with the worked-example order and reference orientation
    "K3": """\
# triangle; e1 = v1v2, e2 = v1v3, e3 = v2v3
vertices 3
edge 0 1
edge 2 0
edge 2 1
sigma_u ---
sigma_b +++
""",
    "K4": """\
# complete graph on 4 vertices, with the order and orientation of the K4 example
vertices 4
edge 0 2
edge 0 3
edge 3 2
edge 1 2
edge 1 0
edge 1 3
sigma_u ------
sigma_b ++++++
""",
    "P3": """\
# path on three vertices
vertices 3
edge 0 1
edge 1 2
""",
    "dipole-3": """\
# three parallel edges
vertices 2
edge 0 1
edge 0 1
edge 1 0
""",
    "loop+isthmus": """\
# an isthmus followed by a loop at its head
vertices 2
edge 0 1
edge 1 1
""",
    "K3+K2": """\
# triangle plus a disjoint edge
vertices 5
edge 0 1
edge 2 0
edge 2 1
edge 3 4
""",
    "isthmus": """\
vertices 2
edge 0 1
""",
    "loop": """\
vertices 1
edge 0 0
""",
    "empty": """\
vertices 1
""",
}

ACCEPTANCE_CORPUS = ("K3", "K4", "P3", "dipole-3", "loop+isthmus", "K3+K2")
NAMES = tuple(_FILES)


def builtin_text(name):
    try:
        return _FILES[name]
    except KeyError:
        raise InputError(f"unknown builtin graph {name!r}; choose from {', '.join(NAMES)}") from None


def builtin(name):
    """``(Graph, SignLabels)`` for a builtin name."""
    return parse_graph(builtin_text(name))
