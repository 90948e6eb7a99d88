"""Brute-force oracles: deletion-contraction Tutte polynomial and named counts
by direct enumeration.  Nothing here goes through activities or phi, except
``i_minus_u_free`` which uses the witness-quantified activity definition."""
from __future__ import annotations

from functools import lru_cache

from .errors import InputError, check_size
from .fourientation import (MAX_FOURIENTATION_EDGES, MAX_ORIENTATION_EDGES, all_fourientations,
                            all_orientations, intrinsic_activities_oracle, is_potential_cycle)
from .graph import as_minor, enumerate_circuits, is_isthmus, kappa, minor_contract, minor_delete, submasks
from .poly import XY, Poly

MAX_DC_EDGES = 18


@lru_cache(maxsize=1 << 14)
def _dc(m):
    if m.alive == 0:
        return Poly.const(XY, 1)
    e = m.max_edge()
    a, b = m.endpoints(e)
    if a == b:
        return Poly.var(XY, "y") * _dc(minor_delete(m, e))
    if is_isthmus(m, e):
        return Poly.var(XY, "x") * _dc(minor_contract(m, e))
    return _dc(minor_delete(m, e)) + _dc(minor_contract(m, e))


def tutte_deletion_contraction(g, max_edges=MAX_DC_EDGES):
    m = as_minor(g)
    check_size(m.p, max_edges, "deletion-contraction edges")
    return _dc(m)


def _arcs(m, o):
    """Class-level arcs present in ``o``."""
    out = []
    for e in m.edge_list():
        a, b = m.endpoints(e)
        if o.fwd >> e & 1:
            out.append((a, b))
        if o.bwd >> e & 1:
            out.append((b, a))
    return out


def _has_directed_cycle(nodes, arcs):
    indeg = {v: 0 for v in nodes}
    succ = {v: [] for v in nodes}
    for a, b in arcs:
        succ[a].append(b)
        indeg[b] += 1
    queue = [v for v in nodes if indeg[v] == 0]
    seen = 0
    while queue:
        v = queue.pop()
        seen += 1
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return seen < len(nodes)


def _reaches(arcs, src, dst):
    seen, stack = {src}, [src]
    while stack:
        v = stack.pop()
        for a, b in arcs:
            if a == v and b not in seen:
                seen.add(b)
                stack.append(b)
    return dst in seen


def count_acyclic_orientations(g, max_edges=MAX_ORIENTATION_EDGES):
    m = as_minor(g)
    nodes = m.vertex_classes
    return sum(not _has_directed_cycle(nodes, _arcs(m, o)) for o in all_orientations(m, max_edges))


def count_strongly_connected_orientations(g, max_edges=MAX_ORIENTATION_EDGES):
    # strongly connected on every component <=> every arc lies on a directed cycle
    m = as_minor(g)
    total = 0
    for o in all_orientations(m, max_edges):
        arcs = _arcs(m, o)
        total += all(_reaches(arcs, b, a) for a, b in arcs)
    return total


def count_acyclic_partial(g, max_edges=MAX_FOURIENTATION_EDGES):
    m = as_minor(g)
    nodes = m.vertex_classes
    total = 0
    for o in all_fourientations(m, max_edges):
        if o.bioriented & m.alive:
            continue
        total += not _has_directed_cycle(nodes, _arcs(m, o))
    return total


def count_potential_cycle_free(g, max_edges=MAX_FOURIENTATION_EDGES):
    m = as_minor(g)
    circuits = enumerate_circuits(m)
    return sum(not any(is_potential_cycle(m, o, w) for w in circuits)
               for o in all_fourientations(m, max_edges))


def count_i_minus_u_free(g, labels, max_edges=MAX_FOURIENTATION_EDGES):
    m = as_minor(g)
    total = 0
    for o in all_fourientations(m, max_edges):
        act = intrinsic_activities_oracle(m, o, labels)
        total += not act.i_u and not act.i_o & o.minus
    return total


def count_spanning_trees(g, max_edges=20):
    """Maximal forests: subsets with kappa(S) = kappa and no cycle."""
    m = as_minor(g)
    check_size(m.p, max_edges, "spanning tree enumeration edges")
    k0, r = kappa(m), m.n - kappa(m)
    return sum(s.bit_count() == r and kappa(m, s) == k0 for s in submasks(m.alive))


def count_subgraphs(g, max_edges=20):
    m = as_minor(g)
    check_size(m.p, max_edges, "subgraph enumeration edges")
    return sum(1 for _ in submasks(m.alive))


def count_fourientations(g, max_edges=MAX_FOURIENTATION_EDGES):
    return sum(1 for _ in all_fourientations(g, max_edges))


COUNT_CLASSES = ("acyclic-orientations", "strongly-connected-orientations", "acyclic-partial",
                 "potential-cycle-free", "i-minus-u-free", "spanning-trees", "subgraphs",
                 "fourientations")


def named_count(g, which, labels=None, max_edges=None):
    m = as_minor(g)
    kw = {} if max_edges is None else {"max_edges": max_edges}
    if which == "acyclic-orientations":
        return count_acyclic_orientations(m, **kw)
    if which == "strongly-connected-orientations":
        return count_strongly_connected_orientations(m, **kw)
    if which == "acyclic-partial":
        return count_acyclic_partial(m, **kw)
    if which == "potential-cycle-free":
        return count_potential_cycle_free(m, **kw)
    if which == "i-minus-u-free":
        if labels is None:
            raise InputError("i-minus-u-free needs sign labels")
        return count_i_minus_u_free(m, labels, **kw)
    if which == "spanning-trees":
        return count_spanning_trees(m, **kw)
    if which == "subgraphs":
        return count_subgraphs(m, **kw)
    if which == "fourientations":
        return count_fourientations(m, **kw)
    raise InputError(f"unknown count class {which!r}")
