"""Acceptance gate: eight criteria, each exact, each printing one PASS/FAIL line."""
import time
from fractions import Fraction

import pytest

from fourtutte.corpus import ACCEPTANCE_CORPUS, builtin
from fourtutte.expansions import (EdgeWeights, convolution_lambda_check, normal_identity_check,
                                  theorem_main_lhs, theorem_main_rhs, tutte_at)
from fourtutte.fourientation import Fourientation
from fourtutte.oracles import named_count
from fourtutte.phi import full_activities, key_lemma_status
from fourtutte.subgraph import hat_activities_dct, hat_activities_direct
from fourtutte.verify import Case, run_case

from test_phi import K4_PHI
from test_subgraph import K3_HAT

BUDGET_SECONDS = 10.0


def report(capsys, n, title, failures):
    line = f"{'PASS' if not failures else 'FAIL'} criterion {n}: {title}"
    if failures:
        line += " | " + "; ".join(failures[:3])
    with capsys.disabled():
        print("\n" + line)
    assert not failures, line


def run_checks(names, checks):
    out = []
    for name in names:
        g, lab = builtin(name)
        rep = run_case(Case(name, g, lab), only=set(checks))
        out += [f"{r.graph} {r.name}: {r.counterexample}" for r in rep.failures()]
    return out


def test_criterion_1_main_identity(capsys):
    # given labels plus 3 random label sets under 2 reference orientations each
    t0 = time.perf_counter()
    failures = run_checks(ACCEPTANCE_CORPUS, ["theorem-main"])
    took = time.perf_counter() - t0
    if took >= BUDGET_SECONDS:
        failures.append(f"took {took:.1f}s")
    report(capsys, 1, f"main identity on the corpus ({took:.1f}s)", failures)


def test_criterion_2_specializations(capsys):
    report(capsys, 2, "(1,1,0,0) and (0,0,1,1) restrictions",
           run_checks(ACCEPTANCE_CORPUS, ["specializations", "las-vergnas", "gordon-traldi"]))


def test_criterion_3_goldens(capsys):
    failures = []
    g, lab = builtin("K4")
    for o, s in K4_PHI.items():
        fa = full_activities(g, Fourientation.from_string(o), lab)
        if (fa.phi, fa.I, fa.L) != (s, 0, 1):
            failures.append(f"K4 {o}")
    for o in ("+---++", "+---+-"):
        st = key_lemma_status(g, Fourientation.from_string(o), lab)
        if not (st.cond1 and st.cond2):
            failures.append(f"K4 key conditions at {o}")
    k3, _ = builtin("K3")
    for s, (i, l) in K3_HAT.items():
        for fn in (hat_activities_dct, hat_activities_direct):
            h = fn(k3, s)
            if (h.i_hat, h.l_hat) != (i, l):
                failures.append(f"K3 {fn.__name__} S={s:03b}")
    report(capsys, 3, "K4 phi/activity goldens, K3 hat columns, key conditions", failures)


def test_criterion_4_phi_structure(capsys):
    report(capsys, 4, "phi fibers, bijection, placement and compatibility on K3 and K4",
           run_checks(("K3", "K4"), ["phi-fibers", "phi-placement", "compatibility", "phi-inverse"]))


def test_criterion_5_named_counts(capsys):
    failures = []
    g, lab = builtin("K3")
    rhs = theorem_main_rhs(g, lab)
    ones = dict.fromkeys(rhs.vars, 1)
    want = {
        "acyclic-orientations": (6, tutte_at(g, 2, 0)),
        "strongly-connected-orientations": (2, tutte_at(g, 0, 2)),
        "acyclic-partial": (25, 2 * tutte_at(g, 3, Fraction(1, 2))),
        "i-minus-u-free": (32, 8 * tutte_at(g, 1, 2)),
        "fourientations": (64, rhs.evaluate(ones)),
    }
    for cls, (value, poly_value) in want.items():
        got = named_count(g, cls, lab)
        if not got == value == poly_value:
            failures.append(f"K3 {cls}: oracle {got}, polynomial {poly_value}, expected {value}")
    failures += run_checks(("K3", "K4"), ["named-counts"])
    report(capsys, 5, "named counts, oracle against polynomial", failures)


def test_criterion_6_lemmas(capsys):
    report(capsys, 6, "key, isthmus/loop, interval, rank, path lemmas; hat and reachability oracles",
           run_checks(ACCEPTANCE_CORPUS, ["key-lemma", "isthmus-loop-lemmas", "crapo-intervals",
                                          "rank-activities", "preliminary-path", "hat-methods",
                                          "reachability-oracle"]))


def test_criterion_7_identities(capsys):
    failures = []
    for name in ("K3", "K4"):
        g, _ = builtin(name)
        for lam in (Fraction(1), Fraction(1, 2)):
            if not convolution_lambda_check(g, lam):
                failures.append(f"{name} convolution at {lam}")
    g, lab = builtin("K3")
    if not normal_identity_check(g, lab, EdgeWeights.unit(3)):
        failures.append("K3 normal identity, unit weights")
    if not normal_identity_check(g, lab, EdgeWeights((1, 2, 3), (1, 1, 2), (0, 1, 1), (2, 0, 1))):
        failures.append("K3 normal identity, fixed weights")
    failures += run_checks(("K3",), ["normal-identity"])
    report(capsys, 7, "convolution and normal function identities", failures)


def test_criterion_8_toggles(capsys):
    report(capsys, 8, "six toggles are involutions with the documented swaps on K3",
           run_checks(("K3",), ["toggles"]))


def test_lhs_is_label_free(capsys):
    # sanity for criterion 1: the left side never sees labels
    g, _ = builtin("K3")
    assert theorem_main_lhs(g) == theorem_main_lhs(g.reoriented(0b101))
