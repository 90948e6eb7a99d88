"""The verification suite: every structural property and identity, run per graph.

Each check returns ``None`` on success or a short replayable counterexample
string.  Exceptions raised inside a check count as failures and their
message becomes the counterexample.
"""
from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from . import expansions as ex
from . import oracles
from .corpus import ACCEPTANCE_CORPUS, builtin
from .errors import SizeGuardError
from .fourientation import (_cycle_test, all_fourientations, all_orientations, intrinsic_activities,
                            intrinsic_activities_oracle, is_potential_cut, is_potential_cycle,
                            las_vergnas_sum, min_in_potential_cut, min_in_potential_cut_oracle,
                            min_in_potential_cycle, min_in_potential_cycle_oracle, potential_path)
from .graph import (SignLabels, as_minor, bit, cyclomatic, enumerate_bonds, enumerate_circuits,
                    fmt_edges, is_isthmus, is_loop, kappa, members, minor_contract, minor_delete, submasks)
from .phi import (TOGGLES, _classify, activity_toggle, full_activities, isthmus_lemma_holds,
                  key_lemma_status, loop_lemma_holds, phi, phi_tilde_inverse, phi_tilde_inverse_search)
from .poly import VARS12
from .subgraph import (crapo_interval, crapo_partition, gordon_traldi_sum, hat_activities_dct,
                       hat_activities_direct, interval_sums)


@dataclass(frozen=True)
class Case:
    name: str
    graph: object
    labels: SignLabels
    seed: int = 0
    tiebreak: str = "reference"
    label_trials: int = 3
    orientation_trials: int = 2


@dataclass
class CheckResult:
    name: str
    graph: str
    passed: bool
    counterexample: str | None
    seconds: float
    informational: bool = False

    def to_dict(self, timing=False):
        d = {"check": self.name, "graph": self.graph, "pass": self.passed}
        if self.counterexample is not None:
            d["counterexample"] = self.counterexample
        if self.informational:
            d["informational"] = True
        if timing:
            d["seconds"] = round(self.seconds, 4)
        return d


@dataclass
class VerificationReport:
    results: list = field(default_factory=list)

    @property
    def passed(self):
        return all(r.passed for r in self.results if not r.informational)

    def failures(self):
        return [r for r in self.results if not r.passed and not r.informational]

    def to_json(self, timing=False):
        return json.dumps({"pass": self.passed, "checks": [r.to_dict(timing) for r in self.results]},
                          separators=(",", ":"))

    def to_text(self, timing=False):
        lines = []
        for r in self.results:
            tag = "PASS" if r.passed else ("INFO" if r.informational else "FAIL")
            line = f"{tag} {r.graph} {r.name}"
            if timing:
                line += f" ({r.seconds:.3f}s)"
            if r.counterexample is not None:
                line += f": {r.counterexample}"
            lines.append(line)
        n_fail = len(self.failures())
        lines.append(f"{len(self.results)} checks, {n_fail} failed")
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# helpers


def _first_diff(a, b):
    keys = sorted(set(a.terms) | set(b.terms), reverse=True)
    for k in keys:
        if a.terms.get(k, 0) != b.terms.get(k, 0):
            mono = "*".join(f"{v}^{e}" if e > 1 else v for v, e in zip(a.vars, k) if e) or "1"
            return f"coefficient of {mono}: {a.terms.get(k, 0)} vs {b.terms.get(k, 0)}"
    return None


def _ostr(m, o):
    return o.to_string(m)


def random_labels(p, rng):
    return SignLabels(tuple(rng.choice((1, -1)) for _ in range(p)),
                      tuple(rng.choice((1, -1)) for _ in range(p)))


def variants(case):
    """(tag, graph, labels) triples: the given labels, then random labels under
    the given and under random reference orientations."""
    rng = random.Random(case.seed)
    g = case.graph
    out = [("given", g, case.labels)]
    flips = [0] + [rng.getrandbits(g.p) if g.p else 0 for _ in range(case.orientation_trials - 1)]
    for j, flip in enumerate(flips):
        h = g.reoriented(flip)
        for k in range(case.label_trials):
            out.append((f"flip={flip:b},labels#{k}", h, random_labels(g.p, rng)))
    return out


def dc_minors(g):
    """Every minor in the deletion-contraction tree on the largest edge (deduplicated)."""
    seen, stack, out = set(), [as_minor(g)], []
    while stack:
        m = stack.pop()
        if m in seen:
            continue
        seen.add(m)
        out.append(m)
        if m.alive:
            e = m.max_edge()
            stack += [minor_delete(m, e), minor_contract(m, e)]
    return sorted(out, key=lambda m: (-m.p, m.alive, m.classes))


# ---------------------------------------------------------------------------
# graph_core


def check_minor_rules(case):
    for m in dc_minors(case.graph):
        k, g = kappa(m), cyclomatic(m)
        for e in m.edge_list():
            d, c = minor_delete(m, e), minor_contract(m, e)
            isth, loop = is_isthmus(m, e), is_loop(m, e)
            if kappa(c) != k or kappa(d) != k + isth:
                return f"kappa rule fails at e{e + 1} of minor {m.alive:b}"
            if cyclomatic(d) != g - (0 if isth else 1) or cyclomatic(c) != g - (1 if loop else 0):
                return f"cyclomatic rule fails at e{e + 1} of minor {m.alive:b}"
        for e, f in combinations(m.edge_list(), 2):
            for op1 in (minor_delete, minor_contract):
                for op2 in (minor_delete, minor_contract):
                    if op2(op1(m, e), f) != op1(op2(m, f), e):
                        return f"{op1.__name__}/{op2.__name__} on e{e + 1},e{f + 1} do not commute"
    return None


def check_bond_circuit_orthogonality(case):
    m = as_minor(case.graph)
    for b in enumerate_bonds(m):
        for c in enumerate_circuits(m):
            if (b.edges & c.edges).bit_count() == 1:
                return f"bond {fmt_edges(b.edges)} meets circuit {fmt_edges(c.edges)} once"
    return None


# ---------------------------------------------------------------------------
# subgraph activities


def check_hat_methods(case):
    m = as_minor(case.graph)
    for s in submasks(m.alive):
        if hat_activities_dct(m, s) != hat_activities_direct(m, s):
            return f"S={fmt_edges(s)}"
    return None


def check_intervals(case):
    m = as_minor(case.graph)
    for s in submasks(m.alive):
        h = hat_activities_dct(m, s)
        if h.i_hat & h.l_hat:
            return f"I and L meet for S={fmt_edges(s)}"
        iv = crapo_interval(m, s)
        for sub in submasks(iv.upper & ~iv.lower):
            if hat_activities_dct(m, iv.lower | sub) != h:
                return f"activities differ inside the interval of S={fmt_edges(s)}"
    return None


def check_rank_activities(case):
    m = as_minor(case.graph)
    k0, n = kappa(m), m.n
    for s in submasks(m.alive):
        h = hat_activities_dct(m, s)
        ks = kappa(m, s)
        if (h.i_hat & ~s).bit_count() != ks - k0 or (h.l_hat & s).bit_count() != ks + s.bit_count() - n:
            return f"S={fmt_edges(s)}"
    return None


def check_crapo_partition(case):
    m = as_minor(case.graph)
    parts = crapo_partition(m)
    covered = 0
    k0, r = kappa(m), m.n - kappa(m)
    for iv in parts:
        forests = [s for s in submasks(iv.upper & ~iv.lower)
                   if (iv.lower | s).bit_count() == r and kappa(m, iv.lower | s) == k0]
        if forests != [iv.representative_forest & ~iv.lower]:
            return f"interval {iv.to_dict()} does not contain exactly its representative forest"
        covered += iv.size
        lhs, rhs = interval_sums(m, iv)
        if lhs != rhs:
            return f"interval sums differ on {iv.to_dict()}: {_first_diff(lhs, rhs)}"
    if covered != 1 << m.p:
        return f"intervals cover {covered} subsets"
    if len(parts) != ex.tutte_at(m, 1, 1):
        return f"{len(parts)} intervals vs T(1,1)"
    return None


def check_gordon_traldi(case):
    m = as_minor(case.graph)
    gt = gordon_traldi_sum(m)
    xh, wh, yh, zh = (ex.Poly.var(VARS12, v) for v in ("xh", "wh", "yh", "zh"))
    t = ex.tutte_bivariate(m).substitute({"x": xh + wh, "y": yh + zh}, VARS12)
    return _first_diff(gt, t)


def check_tutte_oracle(case):
    return _first_diff(ex.tutte_bivariate(case.graph), oracles.tutte_deletion_contraction(case.graph))


# ---------------------------------------------------------------------------
# fourientation


def check_reachability_oracle(case):
    m = as_minor(case.graph)
    lab = case.labels
    for o in all_fourientations(m):
        for e in m.edge_list():
            if o.oriented >> e & 1:
                if min_in_potential_cut(m, o, e) != min_in_potential_cut_oracle(m, o, e):
                    return f"cut test O={_ostr(m, o)} e{e + 1}"
                if min_in_potential_cycle(m, o, e) != min_in_potential_cycle_oracle(m, o, e):
                    return f"cycle test O={_ostr(m, o)} e{e + 1}"
        act = intrinsic_activities(m, o, lab)
        if act != intrinsic_activities_oracle(m, o, lab):
            return f"intrinsic activities O={_ostr(m, o)}"
        if act.i_o & act.l_o:
            return f"oriented edge both cut- and cycle-active in O={_ostr(m, o)}"
    return None


def check_orientation_partition(case):
    m = as_minor(case.graph)
    bonds, circuits = enumerate_bonds(m), enumerate_circuits(m)
    for o in all_orientations(m):
        cut = cyc = 0
        for w in bonds:
            if is_potential_cut(m, o, w):
                cut |= w.edges
        for w in circuits:
            if is_potential_cycle(m, o, w):
                cyc |= w.edges
        if cut & cyc or cut | cyc != m.alive:
            return f"O={_ostr(m, o)}"
    return None


def check_preliminary(case):
    m = as_minor(case.graph)
    circuits = enumerate_circuits(m)
    classes = m.vertex_classes
    for o in all_fourientations(m):
        for u in classes:
            for v in classes:
                if u == v:
                    continue
                p1, p2 = potential_path(m, o, u, v), potential_path(m, o, v, u)
                if p1 is None or p2 is None:
                    continue
                walk = 0
                for e, _ in p1 + p2:
                    walk |= bit(e)
                for e in members(walk & o.oriented):
                    if not any(w.edges & ~walk == 0 and w.edges >> e & 1 and is_potential_cycle(m, o, w)
                               for w in circuits):
                        return f"O={_ostr(m, o)} u=v{u + 1} v=v{v + 1} e{e + 1}"
    return None


def check_las_vergnas(case):
    m = as_minor(case.graph)
    lv = las_vergnas_sum(m)
    x, w, y, z = (ex.Poly.var(VARS12, v) for v in ("x", "w", "y", "z"))
    t = ex.tutte_bivariate(m).substitute({"x": x + w, "y": y + z}, VARS12)
    if lv != t:
        return _first_diff(lv, t)
    # two-variable collapses of both expansions
    uv = ("u", "v")
    half_u, half_v = ex.Poly.var(uv, "u") * Fraction(1, 2), ex.Poly.var(uv, "v") * Fraction(1, 2)
    zero = ex.Poly.const(uv, 0)
    t_uv = ex.tutte_bivariate(m).substitute({"x": ex.Poly.var(uv, "u"), "y": ex.Poly.var(uv, "v")}, uv)
    imgs = {v: zero for v in VARS12}
    lv_uv = lv.substitute({**imgs, "x": half_u, "w": half_u, "y": half_v, "z": half_v}, uv)
    gt_uv = gordon_traldi_sum(m).substitute({**imgs, "xh": half_u, "wh": half_u, "yh": half_v, "zh": half_v}, uv)
    return _first_diff(lv_uv, t_uv) or _first_diff(gt_uv, t_uv)


# ---------------------------------------------------------------------------
# phi


def check_fibers(case):
    m = as_minor(case.graph)
    sizes = {}
    pairs = set()
    for o in all_fourientations(m):
        s = phi(m, o, case.labels, case.tiebreak)
        sizes[s] = sizes.get(s, 0) + 1
        pairs.add((s, o.oriented & m.alive))
    want = 1 << m.p
    if len(sizes) != want or any(c != want for c in sizes.values()):
        bad = next((s for s in submasks(m.alive) if sizes.get(s, 0) != want), None)
        return f"fiber of {fmt_edges(bad)} has size {sizes.get(bad, 0)}"
    if len(pairs) != 4 ** m.p:
        return "(phi, oriented part) is not injective"
    return None


def check_placement(case):
    m = as_minor(case.graph)
    for o in all_fourientations(m):
        fa = full_activities(m, o, case.labels, case.tiebreak)
        s = fa.phi
        bad = []
        if o.bioriented & m.alive & ~s:
            bad.append("Ob not inside phi")
        if o.unoriented(m.alive) & s:
            bad.append("Ou meets phi")
        if fa.i_plus & ~s or fa.i_minus & s or fa.l_minus & ~s or fa.l_plus & s:
            bad.append("I/L placement")
        if bad:
            return f"O={_ostr(m, o)} phi={fmt_edges(s)}: {', '.join(bad)}"
    return None


def check_compatibility(case):
    m = as_minor(case.graph)
    for o in all_fourientations(m):
        fa = full_activities(m, o, case.labels, case.tiebreak)
        act = intrinsic_activities(m, o, case.labels)
        ori = o.oriented & m.alive
        if (fa.I & ori, fa.I & o.unoriented(m.alive), fa.L & ori, fa.L & o.bioriented) != \
                (act.i_o, act.i_u, act.l_o, act.l_b):
            return f"O={_ostr(m, o)}"
    return None


def check_key_lemma(case):
    for m in dc_minors(case.graph):
        if not m.alive or _classify(m, m.max_edge()) != "ordinary":
            continue
        e = m.max_edge()
        for o in all_fourientations(m):
            try:
                st = key_lemma_status(m, o, case.labels)
            except AssertionError as err:
                return str(err)
            status = o.status(e)
            if status == "b" and not st.cond1 or status == "u" and not st.cond2:
                return f"O={_ostr(m, o)}: status {status} but conditions {st.cond1},{st.cond2}"
    return None


def check_isthmus_loop_lemmas(case):
    for m in dc_minors(case.graph):
        if not m.alive:
            continue
        kind = _classify(m, m.max_edge())
        if kind == "ordinary":
            continue
        holds = isthmus_lemma_holds if kind == "isthmus" else loop_lemma_holds
        for o in all_fourientations(m):
            if not holds(m, o, case.labels):
                return f"{kind} lemma fails for O={_ostr(m, o)}"
    return None


def check_prefix_coherence(case):
    m = as_minor(case.graph)
    fibers = {}
    for o in all_fourientations(m):
        fibers.setdefault(phi(m, o, case.labels), []).append(o)
    for s, os in fibers.items():
        for i in range(1, m.graph.p + 1):
            pre = (1 << i) - 1
            seen = {}
            for o in os:
                key = o.oriented & pre
                val = (o.fwd & pre, o.bwd & pre)
                if seen.setdefault(key, val) != val:
                    return f"fiber {fmt_edges(s)} disagrees on the first {i} edges"
    return None


def check_phi_inverse(case, search_limit=4):
    m = as_minor(case.graph)
    for o in all_fourientations(m):
        s, so = phi(m, o, case.labels), o.oriented & m.alive
        back = phi_tilde_inverse(m, s, so, case.labels)
        if back.restrict(m.alive) != o.restrict(m.alive):
            return f"O={_ostr(m, o)} replays to {_ostr(m, back)}"
        if m.p <= search_limit and phi_tilde_inverse_search(m, s, so, case.labels) != back:
            return f"replay and fiber search disagree for O={_ostr(m, o)}"
    return None


# exponent swap performed by each toggle (indices into VARS12)
TOGGLE_SWAPS = {
    "cut-hat": ("xh", "wh"),
    "cut-plain": ("x", "w"),
    "cut-cross": ("x", "xh"),
    "cycle-hat": ("yh", "zh"),
    "cycle-plain": ("y", "z"),
    "cycle-cross": ("z", "zh"),
}


def _swap(exps, a, b):
    i, j = VARS12.index(a), VARS12.index(b)
    out = list(exps)
    out[i], out[j] = out[j], out[i]
    return tuple(out)


def check_toggles(case):
    m = as_minor(case.graph)
    lab = case.labels
    for which in TOGGLES:
        a, b = TOGGLE_SWAPS[which]
        for o in all_fourientations(m):
            t = activity_toggle(m, o, lab, which)
            if activity_toggle(m, t, lab, which).restrict(m.alive) != o.restrict(m.alive):
                return f"{which} is not an involution at O={_ostr(m, o)}"
            e0 = full_activities(m, o, lab).exponents(o, m.alive)
            e1 = full_activities(m, t, lab).exponents(t, m.alive)
            if e1[4:] != _swap(e0, a, b)[4:]:
                return f"{which} does not swap {a},{b} at O={_ostr(m, o)}"
    rhs = ex.theorem_main_rhs(m, lab).partial({"k1": 1, "k2": 1, "l": 1, "m": 1})
    for which, (a, b) in TOGGLE_SWAPS.items():
        swapped = ex.Poly(VARS12, {_swap(k, a, b): c for k, c in rhs.terms.items()})
        if swapped != rhs:
            return f"aggregate not symmetric under {a}<->{b}"
    return None


# ---------------------------------------------------------------------------
# polynomial identities


def check_theorem_main(case):
    for tag, g, lab in variants(case):
        lhs = ex.theorem_main_lhs(g)
        rhs = ex.theorem_main_rhs(g, lab, tiebreak=case.tiebreak)
        if lhs != rhs:
            su, sb = lab.to_strings()
            return f"{tag} sigma_u={su} sigma_b={sb}: {_first_diff(lhs, rhs)}"
    return None


def check_proof_forms(case):
    lhs = ex.theorem_main_lhs(case.graph)
    d = _first_diff(lhs, ex.theorem_main_subgraph_form(case.graph))
    if d:
        return f"subgraph form: {d}"
    if case.graph.p <= 8:
        d = _first_diff(lhs, ex.theorem_main_double_sum(case.graph))
        if d:
            return f"double sum: {d}"
    return None


def check_specializations(case):
    m = as_minor(case.graph)
    rhs = ex.theorem_main_rhs(m, case.labels, tiebreak=case.tiebreak)
    lv = rhs.partial({"k1": 1, "k2": 1, "l": 0, "m": 0})
    d = _first_diff(lv, las_vergnas_sum(m))
    if d:
        return f"(1,1,0,0): {d}"
    gt = rhs.partial({"k1": 0, "k2": 0, "l": 1, "m": 1})
    d = _first_diff(gt, gordon_traldi_sum(m))
    if d:
        return f"(0,0,1,1): {d}"
    return None


def _ones(**kw):
    d = {v: 1 for v in VARS12}
    d.update(kw)
    return d


def _t(g, x, y):
    return ex.tutte_at(g, Fraction(x), Fraction(y))


# name -> (Tutte evaluation, specialization of the twelve-variable sum or None)
COUNT_FORMULAS = {
    "acyclic-orientations": (lambda g, m: _t(g, 2, 0), _ones(l=0, m=0, y=0, z=0)),
    "strongly-connected-orientations": (lambda g, m: _t(g, 0, 2), _ones(l=0, m=0, x=0, w=0)),
    "acyclic-partial": (lambda g, m: 2 ** cyclomatic(m) * _t(g, 3, Fraction(1, 2)), _ones(m=0, y=0, z=0)),
    "i-minus-u-free": (lambda g, m: 2 ** m.p * _t(g, 1, 2), _ones(w=0, wh=0)),
    "spanning-trees": (lambda g, m: _t(g, 1, 1), _ones(k1=0, k2=0, wh=0, zh=0)),
    "subgraphs": (lambda g, m: _t(g, 2, 2), _ones(k1=0, k2=0)),
    "fourientations": (lambda g, m: 2 ** (m.n - kappa(m) + cyclomatic(m)) * _t(g, 2, 2), _ones()),
}


def count_potential_cycle_free_by_reachability(g):
    """Second route to the potential-cycle-free count: some arc of O closes a
    potential cycle iff it is the min edge of one for some choice of direction."""
    m = as_minor(g)
    total = 0
    for o in all_fourientations(m):
        fwd, bwd = o.fwd & m.alive, o.bwd & m.alive
        cyclic = False
        for e in m.edge_list():
            be = bit(e)
            for f, b in ((fwd, bwd & ~be), (fwd & ~be, bwd)):
                if (f ^ b) & be and _cycle_test(m, f, b, e):
                    cyclic = True
        total += not cyclic
    return total


def check_named_counts(case):
    m = as_minor(case.graph)
    rhs = ex.theorem_main_rhs(m, case.labels, tiebreak=case.tiebreak)
    bad = []
    for name in oracles.COUNT_CLASSES:
        got = oracles.named_count(m, name, case.labels)
        if name == "potential-cycle-free":
            if count_potential_cycle_free_by_reachability(m) != got:
                bad.append(name)
            continue
        tutte, assignment = COUNT_FORMULAS[name]
        if tutte(m, m) != got or rhs.evaluate(assignment) != got:
            bad.append(f"{name} oracle={got} tutte={tutte(m, m)} rhs={rhs.evaluate(assignment)}")
    return "; ".join(bad) or None


def check_convolution(case):
    for lam in (Fraction(1), Fraction(1, 2)):
        lhs, rhs = ex.convolution_lambda_sides(case.graph, lam)
        if lhs != rhs:
            return f"lambda={lam}: {_first_diff(lhs, rhs)}"
    return None


def random_weights(p, rng):
    def pick():
        return tuple(rng.randint(0, 3) for _ in range(p))
    return ex.EdgeWeights(pick(), pick(), pick(), pick())


def check_normal_identity(case):
    rng = random.Random(case.seed + 1)
    p = case.graph.p
    for weights in (ex.EdgeWeights.unit(p), random_weights(p, rng), random_weights(p, rng)):
        lhs, rhs = ex.normal_identity_sides(case.graph, case.labels, weights)
        if lhs != rhs:
            return f"weights {weights}: {_first_diff(lhs, rhs)}"
    return None


def check_qconnected(case):
    lhs, rhs = ex.qconnected_sides(case.graph, case.labels)
    return _first_diff(lhs, rhs)


# name, function, max edges, informational
CHECKS = (
    ("minor-rules", check_minor_rules, 8, False),
    ("bond-circuit-orthogonality", check_bond_circuit_orthogonality, 12, False),
    ("tutte-oracle", check_tutte_oracle, 16, False),
    ("hat-methods", check_hat_methods, 12, False),
    ("crapo-intervals", check_intervals, 12, False),
    ("rank-activities", check_rank_activities, 16, False),
    ("crapo-partition", check_crapo_partition, 12, False),
    ("gordon-traldi", check_gordon_traldi, 14, False),
    ("las-vergnas", check_las_vergnas, 12, False),
    ("reachability-oracle", check_reachability_oracle, 6, False),
    ("orientation-partition", check_orientation_partition, 10, False),
    ("preliminary-path", check_preliminary, 6, False),
    ("phi-fibers", check_fibers, 8, False),
    ("phi-placement", check_placement, 8, False),
    ("compatibility", check_compatibility, 8, False),
    ("key-lemma", check_key_lemma, 7, False),
    ("isthmus-loop-lemmas", check_isthmus_loop_lemmas, 7, False),
    ("prefix-coherence", check_prefix_coherence, 8, False),
    ("phi-inverse", check_phi_inverse, 7, False),
    ("toggles", check_toggles, 6, False),
    ("theorem-main", check_theorem_main, 7, False),
    ("proof-forms", check_proof_forms, 8, False),
    ("specializations", check_specializations, 8, False),
    ("named-counts", check_named_counts, 7, False),
    ("convolution", check_convolution, 10, False),
    ("normal-identity", check_normal_identity, 7, False),
    ("qconnected", check_qconnected, 7, True),
)

CHECK_NAMES = tuple(c[0] for c in CHECKS)


def run_case(case, only=None, report=None, max_edges=None):
    """Run the selected checks on one case, appending to ``report``.

    Checks whose edge budget is below ``case.graph.p`` raise SizeGuardError
    unless ``max_edges`` lifts the budget.
    """
    report = report if report is not None else VerificationReport()
    for name, fn, limit, info in CHECKS:
        if only and name not in only:
            continue
        if case.graph.p > (max_edges if max_edges is not None else limit):
            raise SizeGuardError(f"check {name} needs at most {limit} edges, graph has {case.graph.p}")
        t0 = time.perf_counter()
        try:
            cx = fn(case)
        except SizeGuardError:
            raise
        except Exception as err:  # noqa: BLE001 - any crash is a failed check
            cx = f"{type(err).__name__}: {err}"
        report.results.append(CheckResult(name, case.name, cx is None, cx, time.perf_counter() - t0, info))
    return report


def run_corpus(names=ACCEPTANCE_CORPUS, seed=0, tiebreak="reference", only=None, max_edges=None):
    report = VerificationReport()
    for name in names:
        g, lab = builtin(name)
        run_case(Case(name, g, lab, seed, tiebreak), only, report, max_edges)
    return report
