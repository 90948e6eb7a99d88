import json

import pytest

from fourtutte.corpus import builtin
from fourtutte.errors import SizeGuardError
from fourtutte.graph import Graph, SignLabels
from fourtutte.verify import CHECK_NAMES, Case, run_case, run_corpus


@pytest.fixture(scope="module")
def corpus_report():
    return run_corpus()


def test_corpus_passes(corpus_report):
    assert corpus_report.passed, corpus_report.to_text()
    assert len(corpus_report.results) == 6 * len(CHECK_NAMES)


def test_report_text_shape(corpus_report):
    lines = corpus_report.to_text().splitlines()
    assert lines[0].startswith("PASS K3 ")
    assert lines[-1] == f"{len(corpus_report.results)} checks, 0 failed"


def test_report_is_deterministic(corpus_report):
    again = run_corpus(("K3", "P3"), only={"theorem-main", "phi-fibers", "toggles"})
    twice = run_corpus(("K3", "P3"), only={"theorem-main", "phi-fibers", "toggles"})
    assert again.to_json() == twice.to_json()
    assert "seconds" not in again.to_json()
    assert "seconds" in again.to_json(timing=True)


def test_mutation_caught_on_k4():
    g, lab = builtin("K4")
    rep = run_case(Case("K4", g, lab, tiebreak="always-contract"),
                   only={"phi-fibers", "theorem-main", "phi-placement"})
    assert not rep.passed
    bad = {r.name for r in rep.failures()}
    assert {"phi-fibers", "theorem-main"} <= bad
    assert all(r.counterexample for r in rep.failures())
    d = json.loads(rep.to_json())
    assert d["pass"] is False


def test_mutation_invisible_on_k3():
    # K3 never has both branch conditions at once, so the tiebreak is never consulted
    g, lab = builtin("K3")
    rep = run_case(Case("K3", g, lab, tiebreak="always-contract"), only={"phi-fibers", "theorem-main"})
    assert rep.passed


def test_size_guard():
    g = Graph(2, ((0, 1),) * 9)
    with pytest.raises(SizeGuardError):
        run_case(Case("big", g, SignLabels.default(9)), only={"theorem-main"})


def test_crash_becomes_failure(monkeypatch):
    import fourtutte.verify as v

    def boom(case):
        raise RuntimeError("kaboom")

    monkeypatch.setattr(v, "CHECKS", (("boom", boom, 5, False),))
    g, lab = builtin("K3")
    rep = v.run_case(Case("K3", g, lab))
    assert not rep.passed
    assert "kaboom" in rep.results[0].counterexample
