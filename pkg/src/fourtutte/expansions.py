"""Tutte polynomial, both sides of the twelve-variable expansion, and the
convolution and normal-function identities built on top of it."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import check_size
from .fourientation import MAX_FOURIENTATION_EDGES, _intrinsic, all_fourientations
from .graph import as_minor, cyclomatic, kappa, members, restrict, submasks
from .phi import full_activities
from .poly import VARS12, XY, Poly
from .subgraph import MAX_SUBSET_EDGES, hat_activities

MAX_TUTTE_EDGES = 20


@lru_cache(maxsize=4096)
def _rank_counts(m):
    k0, n = kappa(m), m.n
    counts = Counter()
    for s in submasks(m.alive):
        ks = kappa(m, s)
        counts[(ks - k0, s.bit_count() + ks - n)] += 1
    return counts


def tutte_bivariate(g, max_edges=MAX_TUTTE_EDGES):
    """T_G(x, y) from the corank-nullity sum over all spanning subgraphs."""
    m = as_minor(g)
    check_size(m.p, max_edges, "Tutte subset-sum edges")
    x, y = Poly.gens(XY)
    total = Poly(XY)
    for (a, b), c in _rank_counts(m).items():
        total = total + c * (x - 1) ** a * (y - 1) ** b
    return total


def tutte_at(g, x, y):
    return tutte_bivariate(g).evaluate({"x": x, "y": y})


def _v(name):
    return Poly.var(VARS12, name)


def theorem_main_lhs(g):
    """(k1+m)^(n-kappa) (k2+l)^g T(X/(k1+m), Y/(k2+l)) with denominators cleared.

    Each coefficient t_ij of T contributes X^i Y^j (k1+m)^(n-kappa-i) (k2+l)^(g-j);
    the exponents stay nonnegative because deg_x T <= n-kappa and deg_y T <= g.
    """
    m = as_minor(g)
    t = tutte_bivariate(m)
    k1, k2, l, mm, x, w, xh, wh, y, z, yh, zh = Poly.gens(VARS12)
    X = k1 * x + k2 * w + mm * xh + l * wh
    Y = k2 * y + k1 * z + l * yh + mm * zh
    A, B = k1 + mm, k2 + l
    r, gg = m.n - kappa(m), cyclomatic(m)
    total = Poly(VARS12)
    for (i, j), c in t.terms.items():
        total = total + c * X ** i * Y ** j * A ** (r - i) * B ** (gg - j)
    return total


def theorem_main_rhs(g, labels, max_edges=MAX_FOURIENTATION_EDGES, tiebreak="reference"):
    """Sum over all fourientations of the twelve-variable activity monomial."""
    m = as_minor(g)
    counts = Counter()
    for o in all_fourientations(m, max_edges):
        counts[full_activities(m, o, labels, tiebreak).exponents(o, m.alive)] += 1
    return Poly(VARS12, counts)


def theorem_main_subgraph_form(g, max_edges=MAX_SUBSET_EDGES):
    """The intermediate sum over S of per-edge binomial factors.

    Inactive edges of S give (k1+m), inactive edges outside S give (k2+l),
    and active edges give (k1 x + m xh), (k2 w + l wh), (k2 y + l yh) or
    (k1 z + m zh) according to their kind and membership in S.
    """
    m = as_minor(g)
    check_size(m.p, max_edges, "subgraph form edges")
    k1, k2, l, mm, x, w, xh, wh, y, z, yh, zh = Poly.gens(VARS12)
    factors = (k1 + mm, k2 + l, k1 * x + mm * xh, k2 * w + l * wh, k2 * y + l * yh, k1 * z + mm * zh)
    counts = Counter()
    alive = m.alive
    for s in submasks(alive):
        h = hat_activities(m, s)
        act = h.i_hat | h.l_hat
        counts[((s & ~act).bit_count(), (alive & ~(s | act)).bit_count(),
                (h.i_hat & s).bit_count(), (h.i_hat & ~s).bit_count(),
                (h.l_hat & ~s).bit_count(), (h.l_hat & s).bit_count())] += 1
    total = Poly(VARS12)
    for exps, c in counts.items():
        term = Poly.const(VARS12, c)
        for f, k in zip(factors, exps):
            if k:
                term = term * f ** k
        total = total + term
    return total


def theorem_main_double_sum(g, max_edges=10):
    """The fully expanded double sum over pairs (S, S') of spanning subgraphs."""
    m = as_minor(g)
    check_size(m.p, max_edges, "double sum edges")
    alive = m.alive
    counts = Counter()
    for s in submasks(alive):
        h = hat_activities(m, s)
        I, L = h.i_hat, h.l_hat
        for s2 in submasks(alive):
            both, only2, only1 = s & s2, s2 & ~s, s & ~s2
            neither = alive & ~(s | s2)
            counts[(both.bit_count(), only2.bit_count(), neither.bit_count(), only1.bit_count(),
                    (I & both).bit_count(), (I & only2).bit_count(),
                    (I & only1).bit_count(), (I & neither).bit_count(),
                    (L & only2).bit_count(), (L & both).bit_count(),
                    (L & neither).bit_count(), (L & only1).bit_count())] += 1
    return Poly(VARS12, counts)


def specialize(p, assignment):
    return p.evaluate(assignment)


def partial_specialize(p, assignment):
    return p.partial(assignment)


# ---------------------------------------------------------------------------
# Convolution identity in lambda.

Y1 = ("y",)


def convolution_lambda_sides(g, lam, max_edges=MAX_SUBSET_EDGES):
    """Both sides of 2^g T_G(2 lam + 1, (1+y)/2) = sum_S lam^(kappa(S)-kappa) T_{G|S}(lam+1, y)."""
    m = as_minor(g)
    check_size(m.p, max_edges, "convolution identity edges")
    lam = Fraction(lam)
    y = Poly.var(Y1, "y")
    lhs = 2 ** cyclomatic(m) * tutte_bivariate(m).substitute(
        {"x": Poly.const(Y1, 2 * lam + 1), "y": (1 + y) * Fraction(1, 2)}, Y1)
    k0 = kappa(m)
    rhs = Poly(Y1)
    for s in submasks(m.alive):
        part = tutte_bivariate(restrict(m, s)).substitute({"x": Poly.const(Y1, lam + 1), "y": y}, Y1)
        rhs = rhs + lam ** (kappa(m, s) - k0) * part
    return lhs, rhs


def convolution_lambda_check(g, lam):
    lhs, rhs = convolution_lambda_sides(g, lam)
    return lhs == rhs


# ---------------------------------------------------------------------------
# Edge-weighted normal function.

WZ = ("w", "z")


@dataclass(frozen=True)
class EdgeWeights:
    """Per-edge weights k1(e), k2(e), l(e), m(e), indexed by base edge."""
    k1: tuple
    k2: tuple
    l: tuple
    m: tuple

    @classmethod
    def unit(cls, p):
        one = (Fraction(1),) * p
        return cls(one, one, one, one)

    def alpha(self, e):
        return Fraction(self.k1[e]) + Fraction(self.m[e])

    def beta(self, e):
        return Fraction(self.k2[e]) + Fraction(self.l[e])


def normal_function(g, alpha, beta, max_edges=MAX_SUBSET_EDGES):
    """N_G(alpha(e), beta(e); 1+w, 1+z) over (w, z), from its defining subset sum."""
    m = as_minor(g)
    check_size(m.p, max_edges, "normal function edges")
    k0, n = kappa(m), m.n
    terms = Counter()
    for s in submasks(m.alive):
        coeff = Fraction(1)
        for e in m.edge_list():
            coeff *= alpha(e) if s >> e & 1 else beta(e)
        ks = kappa(m, s)
        terms[(ks - k0, s.bit_count() - n + ks)] += coeff
    return Poly(WZ, terms)


def normal_identity_sides(g, labels, weights, max_edges=MAX_FOURIENTATION_EDGES):
    m = as_minor(g)
    lhs = normal_function(m, weights.alpha, weights.beta)
    terms = Counter()
    for o in all_fourientations(m, max_edges):
        fa = full_activities(m, o, labels)
        coeff = Fraction(1)
        for e in m.edge_list():
            st = o.status(e)
            if st == "u":
                coeff *= Fraction(weights.l[e])
            elif st == "b":
                coeff *= Fraction(weights.m[e])
            elif fa.phi >> e & 1:
                coeff *= Fraction(weights.k1[e])
            else:
                coeff *= Fraction(weights.k2[e])
        key = ((fa.i_u | fa.i_minus).bit_count(), (fa.l_b | fa.l_minus).bit_count())
        terms[key] += coeff
    return lhs, Poly(WZ, terms)


def normal_identity_check(g, labels, weights):
    lhs, rhs = normal_identity_sides(g, labels, weights)
    return lhs == rhs


# ---------------------------------------------------------------------------
# Rooted-connectivity convolution (checked empirically only).


def _qconn_sum(m, labels, allow_unoriented):
    terms = Counter()
    for o in all_fourientations(m):
        if o.bioriented & m.alive:
            continue
        if not allow_unoriented and o.unoriented(m.alive):
            continue
        act = _intrinsic(m, o.fwd & m.alive, o.bwd & m.alive, labels.sigma_u, labels.sigma_b)
        if act.i_u or act.i_o & o.minus:
            continue
        terms[(act.l_o.bit_count(),)] += Fraction(1, 2 ** act.l_o.bit_count())
    return Poly(Y1, terms)


def qconnected_sides(g, labels):
    """Both sides of the lambda = 0 fourientation identity that has no general proof.

    Left sums (y/2)^|Lo| over fourientations with no bioriented edge and
    I^u = I^- = empty; right sums the same over full orientations of the
    connected spanning subgraphs.
    """
    m = as_minor(g)
    lhs = _qconn_sum(m, labels, True)
    k0 = kappa(m)
    rhs = Poly(Y1)
    for s in submasks(m.alive):
        if kappa(m, s) == k0:
            rhs = rhs + _qconn_sum(restrict(m, s), labels, False)
    return lhs, rhs


def qconnected_check(g, labels):
    lhs, rhs = qconnected_sides(g, labels)
    return lhs == rhs


def edge_list_text(s):
    return ",".join(f"e{e + 1}" for e in members(s))
