"""Generalized (Gordon-Traldi) activities of spanning subgraphs.

``hat_activities`` walks the single deletion-contraction branch belonging
to ``S``: edges are removed from the largest down, contracting those in
``S`` and deleting the rest, and an edge is cut-active (cycle-active)
exactly when it is an isthmus (loop) at the moment it is reached.
``hat_activities_direct`` is the literal definition, quantified over
enumerated bonds and circuits; it is kept as an oracle.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .errors import InputError, check_size
from .graph import (as_minor, bit, enumerate_bonds, enumerate_circuits, is_isthmus, kappa,
                    members, minor_contract, minor_delete, submasks)
from .poly import VARS12, Poly

MAX_SUBSET_EDGES = 16


@dataclass(frozen=True)
class HatActivities:
    i_hat: int
    l_hat: int

    def to_dict(self):
        return {"i_hat": members(self.i_hat), "l_hat": members(self.l_hat)}


@dataclass(frozen=True)
class CrapoInterval:
    lower: int
    upper: int
    representative_forest: int

    def __contains__(self, s):
        return self.lower & ~s == 0 and s & ~self.upper == 0

    @property
    def size(self):
        return 1 << (self.upper & ~self.lower).bit_count()

    def to_dict(self):
        return {"lower": members(self.lower), "upper": members(self.upper),
                "forest": members(self.representative_forest)}


def _check_subset(m, s):
    if s & ~m.alive:
        raise InputError("subset contains edges that are not in the graph")


@lru_cache(maxsize=1 << 16)
def _dct_branch(m, s):
    i_hat = l_hat = 0
    cur = m
    for e in reversed(m.edge_list()):
        a, b = cur.endpoints(e)
        if a == b:
            l_hat |= bit(e)
        elif is_isthmus(cur, e):
            i_hat |= bit(e)
        cur = minor_contract(cur, e) if s >> e & 1 else minor_delete(cur, e)
    return HatActivities(i_hat, l_hat)


def hat_activities_dct(g, s):
    m = as_minor(g)
    _check_subset(m, s)
    return _dct_branch(m, s)


hat_activities = hat_activities_dct


def hat_activities_direct(g, s):
    """Literal definition: ``e`` is cut-active iff it is the min edge of a bond
    avoiding ``S - e``; cycle-active iff the min edge of a circuit inside ``S + e``."""
    m = as_minor(g)
    _check_subset(m, s)
    i_hat = l_hat = 0
    for w in enumerate_bonds(m):
        e = w.min_edge
        if w.edges & s & ~bit(e) == 0:
            i_hat |= bit(e)
    for w in enumerate_circuits(m):
        e = w.min_edge
        if w.edges & ~(s | bit(e)) == 0:
            l_hat |= bit(e)
    return HatActivities(i_hat, l_hat)


def crapo_interval(g, s):
    m = as_minor(g)
    h = hat_activities(m, s)
    act = h.i_hat | h.l_hat
    return CrapoInterval(s & ~act, s | act, (s & ~h.l_hat) | h.i_hat)


def crapo_partition(g, max_edges=MAX_SUBSET_EDGES):
    m = as_minor(g)
    check_size(m.p, max_edges, "Crapo partition edges")
    seen = {}
    for s in submasks(m.alive):
        iv = crapo_interval(m, s)
        seen.setdefault(iv.lower, iv)
    return [seen[k] for k in sorted(seen)]


def crapo_toggle_cut(g, s):
    return s ^ hat_activities(as_minor(g), s).i_hat


def crapo_toggle_cycle(g, s):
    return s ^ hat_activities(as_minor(g), s).l_hat


def gordon_traldi_sum(g, max_edges=MAX_SUBSET_EDGES):
    """Sum over spanning subgraphs of xh^|I∩S| wh^|I-S| yh^|L-S| zh^|L∩S|."""
    m = as_minor(g)
    check_size(m.p, max_edges, "Gordon-Traldi expansion edges")
    counts = Counter()
    for s in submasks(m.alive):
        h = hat_activities(m, s)
        exp = [0] * 12
        exp[6] = (h.i_hat & s).bit_count()
        exp[7] = (h.i_hat & ~s).bit_count()
        exp[10] = (h.l_hat & ~s).bit_count()
        exp[11] = (h.l_hat & s).bit_count()
        counts[tuple(exp)] += 1
    return Poly(VARS12, counts)


def corank_nullity_hat(g, max_edges=MAX_SUBSET_EDGES):
    """Sum over S of wh^(kappa(S)-kappa) zh^(kappa(S)+|S|-n), in the 12 variables."""
    m = as_minor(g)
    check_size(m.p, max_edges, "corank-nullity edges")
    k0, n = kappa(m), m.n
    counts = Counter()
    for s in submasks(m.alive):
        ks = kappa(m, s)
        exp = [0] * 12
        exp[7] = ks - k0
        exp[11] = ks + s.bit_count() - n
        counts[tuple(exp)] += 1
    return Poly(VARS12, counts)


def interval_sums(g, interval):
    """Both sides of the per-interval identity, as polynomials in xh, wh, yh, zh.

    Left: the activity generating sum over the interval.  Right: the sum of
    (xh+wh-1)^(kappa(S)-kappa) (yh+zh-1)^(|S|-n+kappa(S)) over the interval.
    """
    m = as_minor(g)
    xh, wh, yh, zh = (Poly.var(VARS12, v) for v in ("xh", "wh", "yh", "zh"))
    k0, n = kappa(m), m.n
    free = interval.upper & ~interval.lower
    lhs = Counter()
    rhs = Poly(VARS12)
    a, b = xh + wh - 1, yh + zh - 1
    for sub in submasks(free):
        s = interval.lower | sub
        h = hat_activities(m, s)
        exp = [0] * 12
        exp[6] = (h.i_hat & s).bit_count()
        exp[7] = (h.i_hat & ~s).bit_count()
        exp[10] = (h.l_hat & ~s).bit_count()
        exp[11] = (h.l_hat & s).bit_count()
        lhs[tuple(exp)] += 1
        ks = kappa(m, s)
        rhs = rhs + a ** (ks - k0) * b ** (s.bit_count() - n + ks)
    return Poly(VARS12, lhs), rhs


def activities_json(g, subsets=None):
    """Deterministic JSON listing of activities and Crapo intervals."""
    m = as_minor(g)
    if subsets is None:
        subsets = sorted(submasks(m.alive))
    rows = []
    for s in subsets:
        rows.append({"S": members(s), **hat_activities(m, s).to_dict(),
                     "interval": crapo_interval(m, s).to_dict()})
    return json.dumps(rows, separators=(",", ":"))
