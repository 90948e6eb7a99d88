"""Fourientations, potential cuts and cycles, and intrinsic activities.

A fourientation is stored as two edge masks: ``fwd`` holds the edges whose
positive arc ``e^+`` is present and ``bwd`` those whose ``e^-`` is present.
An edge in exactly one mask is oriented, in both is bioriented, and in
neither is unoriented.

The min-edge tests reduce to a single reachability query each.  Arcs of
the traversal digraph are the arcs present in the fourientation
(bioriented edges contribute both, unoriented edges none):

* ``e`` (oriented ``a -> b``) is the min edge of a potential cut iff, after
  contracting every smaller edge, ``b`` cannot reach ``a``;
* ``e`` is the min edge of a potential cycle iff, after deleting every
  smaller edge, ``b`` reaches ``a`` without using ``e``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .errors import InputError, check_size
from .graph import MINUS, PLUS, as_minor, bit, enumerate_bonds, enumerate_circuits, members, submasks
from .poly import VARS12, Poly

MAX_ORIENTATION_EDGES = 13
MAX_FOURIENTATION_EDGES = 10

STATUS_CHARS = "+-ub"


@dataclass(frozen=True)
class Fourientation:
    fwd: int
    bwd: int

    @classmethod
    def from_string(cls, text):
        fwd = bwd = 0
        for i, ch in enumerate(text):
            if ch == "+":
                fwd |= bit(i)
            elif ch in "-−":
                bwd |= bit(i)
            elif ch == "b":
                fwd |= bit(i)
                bwd |= bit(i)
            elif ch in "u.":
                pass
            else:
                raise InputError(f"bad fourientation character {ch!r} in {text!r}")
        return cls(fwd, bwd)

    @classmethod
    def from_statuses(cls, statuses):
        return cls.from_string("".join(statuses))

    def to_string(self, g):
        """Status string over all edges of the base graph; dead edges of a minor print as ``.``."""
        m = as_minor(g)
        out = []
        for e in range(m.graph.p):
            if not m.alive >> e & 1:
                out.append(".")
            else:
                out.append(self.status(e))
        return "".join(out)

    def status(self, e):
        f, b = self.fwd >> e & 1, self.bwd >> e & 1
        return "b" if f and b else "+" if f else "-" if b else "u"

    def restrict(self, alive):
        return Fourientation(self.fwd & alive, self.bwd & alive)

    @property
    def oriented(self):
        return self.fwd ^ self.bwd

    @property
    def plus(self):
        return self.fwd & ~self.bwd

    @property
    def minus(self):
        return self.bwd & ~self.fwd

    @property
    def bioriented(self):
        return self.fwd & self.bwd

    def unoriented(self, alive):
        return alive & ~(self.fwd | self.bwd)

    def __or__(self, arc):
        e, s = arc
        return Fourientation(self.fwd | bit(e), self.bwd) if s > 0 else Fourientation(self.fwd, self.bwd | bit(e))

    def __sub__(self, arc):
        e, s = arc
        return Fourientation(self.fwd & ~bit(e), self.bwd) if s > 0 else Fourientation(self.fwd, self.bwd & ~bit(e))


def parts(g, o):
    """``(O+, O-, Ou, Ob)`` as masks over the alive edges of ``g``."""
    alive = as_minor(g).alive
    return o.plus & alive, o.minus & alive, o.unoriented(alive), o.bioriented & alive


def toggle_edge(g, o, e):
    m = as_minor(g)
    m._require(e)
    return Fourientation(o.fwd ^ bit(e), o.bwd ^ bit(e))


def reverse(g, o, s):
    """Reverse the oriented edges in ``s``; unoriented and bioriented edges are untouched."""
    m = as_minor(g)
    if s & ~m.alive:
        raise InputError("reversal set is not a subset of the alive edges")
    flip = s & o.oriented
    return Fourientation(o.fwd ^ flip, o.bwd ^ flip)


def all_fourientations(g, max_edges=MAX_FOURIENTATION_EDGES):
    m = as_minor(g)
    check_size(m.p, max_edges, "fourientation enumeration edges")
    es = m.edge_list()
    for statuses in product(STATUS_CHARS, repeat=len(es)):
        fwd = bwd = 0
        for e, st in zip(es, statuses):
            if st in "+b":
                fwd |= bit(e)
            if st in "-b":
                bwd |= bit(e)
        yield Fourientation(fwd, bwd)


def all_orientations(g, max_edges=MAX_ORIENTATION_EDGES):
    m = as_minor(g)
    check_size(m.p, max_edges, "orientation enumeration edges")
    for fwd in submasks(m.alive):
        yield Fourientation(fwd, m.alive & ~fwd)


# ---------------------------------------------------------------------------
# Witness-level definitions (oracle side).


def _arc_present(o, e, s):
    return bool((o.fwd if s > 0 else o.bwd) >> e & 1)


def is_potential_cut(g, o, w):
    if w.kind != "cut":
        raise InputError("witness is not a cut")
    return all(not _arc_present(o, e, -s) for e, s in w.arcs)


def is_potential_cycle(g, o, w):
    if w.kind != "cycle":
        raise InputError("witness is not a cycle")
    return all(_arc_present(o, e, s) for e, s in w.arcs)


def min_in_potential_cut_oracle(g, o, e):
    m = as_minor(g)
    return any(w.min_edge == e and is_potential_cut(m, o, w) for w in enumerate_bonds(m))


def min_in_potential_cycle_oracle(g, o, e):
    m = as_minor(g)
    return any(w.min_edge == e and is_potential_cycle(m, o, w) for w in enumerate_circuits(m))


# ---------------------------------------------------------------------------
# Production tests.


@lru_cache(maxsize=1 << 14)
def _cut_frames(m):
    """For each alive ``e``: endpoints of the alive edges ``>= e`` after contracting all smaller ones."""
    parent = {c: c for c in set(m.classes)}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    es = m.edge_list()
    frames = {}
    for i, e in enumerate(es):
        frames[e] = tuple((f, find(m.classes[m.graph.edges[f][0]]), find(m.classes[m.graph.edges[f][1]]))
                          for f in es[i:])
        a, b = find(m.classes[m.graph.edges[e][0]]), find(m.classes[m.graph.edges[e][1]])
        if a != b:
            parent[a] = b
    return frames


@lru_cache(maxsize=1 << 14)
def _cycle_frames(m):
    es = m.edge_list()
    ends = [(f, *m.endpoints(f)) for f in es]
    return {e: tuple(ends[i + 1:]) for i, e in enumerate(es)}


def _orient_ends(fwd, e, a, b):
    return (a, b) if fwd >> e & 1 else (b, a)


def _cut_test(m, fwd, bwd, e):
    frame = _cut_frames(m)[e]
    _, t, h = frame[0]
    a, b = _orient_ends(fwd, e, t, h)
    if a == b:
        return False
    arcs = []
    for f, x, y in frame:
        if x == y:
            continue
        if fwd >> f & 1:
            arcs.append((x, y))
        if bwd >> f & 1:
            arcs.append((y, x))
    reach = {a}
    grew = True
    while grew:
        grew = False
        for x, y in arcs:
            if y in reach and x not in reach:
                reach.add(x)
                grew = True
    return b not in reach


def _cycle_test(m, fwd, bwd, e):
    t, h = m.endpoints(e)
    a, b = _orient_ends(fwd, e, t, h)
    if a == b:
        return True
    arcs = []
    for f, x, y in _cycle_frames(m)[e]:
        if x == y:
            continue
        if fwd >> f & 1:
            arcs.append((x, y))
        if bwd >> f & 1:
            arcs.append((y, x))
    reach = {b}
    grew = True
    while grew:
        grew = False
        for x, y in arcs:
            if x in reach and y not in reach:
                if y == a:
                    return True
                reach.add(y)
                grew = True
    return False


def _require_oriented(m, o, e):
    m._require(e)
    if not (o.oriented >> e & 1):
        raise InputError(f"edge e{e + 1} must be simply oriented for this test")


def min_in_potential_cut(g, o, e):
    m = as_minor(g)
    _require_oriented(m, o, e)
    return _cut_test(m, o.fwd & m.alive, o.bwd & m.alive, e)


def min_in_potential_cycle(g, o, e):
    m = as_minor(g)
    _require_oriented(m, o, e)
    return _cycle_test(m, o.fwd & m.alive, o.bwd & m.alive, e)


@dataclass(frozen=True)
class IntrinsicActivities:
    i_o: int
    l_o: int
    i_u: int
    l_b: int

    def to_dict(self):
        return {k: members(getattr(self, k)) for k in ("i_o", "l_o", "i_u", "l_b")}


@lru_cache(maxsize=1 << 18)
def _intrinsic(m, fwd, bwd, sigma_u, sigma_b):
    i_o = l_o = i_u = l_b = 0
    for e in m.edge_list():
        f, b = fwd >> e & 1, bwd >> e & 1
        be = 1 << e
        if f != b:
            if _cut_test(m, fwd, bwd, e):
                i_o |= be
            if _cycle_test(m, fwd, bwd, e):
                l_o |= be
        elif not f:
            if sigma_u[e] == PLUS:
                hit = _cut_test(m, fwd | be, bwd, e)
            else:
                hit = _cut_test(m, fwd, bwd | be, e)
            if hit:
                i_u |= be
        else:
            if sigma_b[e] == PLUS:
                hit = _cycle_test(m, fwd & ~be, bwd, e)
            else:
                hit = _cycle_test(m, fwd, bwd & ~be, e)
            if hit:
                l_b |= be
    return IntrinsicActivities(i_o, l_o, i_u, l_b)


def intrinsic_activities(g, o, labels):
    m = as_minor(g)
    return _intrinsic(m, o.fwd & m.alive, o.bwd & m.alive, labels.sigma_u, labels.sigma_b)


def intrinsic_activities_oracle(g, o, labels):
    """Same sets, each membership decided by quantifying over enumerated witnesses."""
    m = as_minor(g)
    o = o.restrict(m.alive)
    i_o = l_o = i_u = l_b = 0
    for e in m.edge_list():
        st = o.status(e)
        if st in "+-":
            if min_in_potential_cut_oracle(m, o, e):
                i_o |= bit(e)
            if min_in_potential_cycle_oracle(m, o, e):
                l_o |= bit(e)
        elif st == "u":
            if min_in_potential_cut_oracle(m, o | (e, labels.sigma_u[e]), e):
                i_u |= bit(e)
        else:
            if min_in_potential_cycle_oracle(m, o - (e, labels.sigma_b[e]), e):
                l_b |= bit(e)
    return IntrinsicActivities(i_o, l_o, i_u, l_b)


def orientation_activities(g, o):
    """Las Vergnas cut/cycle activities ``(I, L)`` of a full orientation."""
    m = as_minor(g)
    if o.oriented & m.alive != m.alive:
        raise InputError("not a full orientation: some edge is unoriented or bioriented")
    p = m.graph.p
    act = _intrinsic(m, o.fwd & m.alive, o.bwd & m.alive, (MINUS,) * p, (PLUS,) * p)
    return act.i_o, act.l_o


def las_vergnas_sum(g, max_edges=MAX_ORIENTATION_EDGES):
    """Sum over orientations of x^|I+| w^|I-| y^|L+| z^|L-|, in the 12 variables."""
    m = as_minor(g)
    counts = Counter()
    for o in all_orientations(m, max_edges):
        i, l = orientation_activities(m, o)
        exp = [0] * 12
        exp[4] = (i & o.plus).bit_count()
        exp[5] = (i & o.minus).bit_count()
        exp[8] = (l & o.plus).bit_count()
        exp[9] = (l & o.minus).bit_count()
        counts[tuple(exp)] += 1
    return Poly(VARS12, counts)


# ---------------------------------------------------------------------------
# Potential paths.


def potential_path(g, o, u, v):
    """A shortest potential path from class ``u`` to class ``v`` as ``[(edge, sign), ...]``, or None."""
    m = as_minor(g)
    u, v = m.classes[u], m.classes[v]
    prev = {u: None}
    frontier = [u]
    while frontier:
        nxt = []
        for x in frontier:
            for e in m.edge_list():
                a, b = m.endpoints(e)
                for s, (p, q) in ((PLUS, (a, b)), (MINUS, (b, a))):
                    if p == x and q not in prev and _arc_present(o, e, s):
                        prev[q] = (x, e, s)
                        nxt.append(q)
        frontier = nxt
    if v not in prev:
        return None
    path = []
    cur = v
    while prev[cur] is not None:
        x, e, s = prev[cur]
        path.append((e, s))
        cur = x
    return path[::-1]


# ---------------------------------------------------------------------------
# Export.


def export_dot(g, o, styled=True):
    m = as_minor(g)
    lines = ["digraph G {", "  node [shape=circle];"]
    for c in m.vertex_classes:
        lines.append(f"  v{c};")
    for e in m.edge_list():
        a, b = m.endpoints(e)
        st = o.status(e)
        label = f'label="e{e + 1}"'
        if st == "+":
            lines.append(f"  v{a} -> v{b} [{label}];")
        elif st == "-":
            lines.append(f"  v{b} -> v{a} [{label}];")
        elif st == "u":
            extra = ", style=dashed" if styled else ""
            lines.append(f"  v{a} -> v{b} [{label}, dir=none{extra}];")
        else:
            extra = ", color=blue" if styled else ""
            lines.append(f"  v{a} -> v{b} [{label}, dir=both{extra}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
