"""The surjection phi from fourientations to spanning subgraphs.

phi is defined by deletion-contraction on the largest alive edge ``e``:

* ``e`` an isthmus: contract iff ``e^+`` is present, otherwise delete;
* ``e`` a loop: contract iff ``e^-`` is present, otherwise delete;
* otherwise the two key-lemma conditions decide: if condition (2) fails
  the fourientation goes to the contraction, if (1) fails to the deletion,
  and if both hold the status of ``e`` breaks the tie (bioriented or
  ``e^+`` contracts, unoriented or ``e^-`` deletes).

Going to the contraction puts ``e`` into phi(O).  All recursion is memoised
on ``(minor, fwd, bwd, labels)``.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache

from .errors import InputError, InvariantViolation
from .fourientation import Fourientation, _intrinsic, all_fourientations
from .graph import as_minor, bit, is_isthmus, members, minor_contract, minor_delete
from .subgraph import hat_activities

TIEBREAKS = ("reference", "always-contract")

CONDITION_FIELDS = ("i_o", "i_u", "l_o", "l_b")


@dataclass(frozen=True)
class KeyLemmaStatus:
    cond1: bool
    cond2: bool
    detail: dict

    def failures(self, which):
        return [k for k, (a, b) in self.detail[which].items() if a != b]


@dataclass(frozen=True)
class FullActivities:
    phi: int
    I: int
    L: int
    i_plus: int
    i_minus: int
    i_u: int
    i_b: int
    l_plus: int
    l_minus: int
    l_u: int
    l_b: int

    def exponents(self, o, alive):
        """Exponent vector in (k1, k2, l, m, x, w, xh, wh, y, z, yh, zh)."""
        ori = o.oriented & alive
        return (
            (ori & self.phi).bit_count(),
            (ori & ~self.phi).bit_count(),
            o.unoriented(alive).bit_count(),
            (o.bioriented & alive).bit_count(),
            self.i_plus.bit_count(),
            self.i_minus.bit_count(),
            self.i_b.bit_count(),
            self.i_u.bit_count(),
            self.l_plus.bit_count(),
            self.l_minus.bit_count(),
            self.l_u.bit_count(),
            self.l_b.bit_count(),
        )

    def to_dict(self):
        return {k: members(getattr(self, k)) for k in
                ("phi", "I", "L", "i_plus", "i_minus", "i_u", "i_b", "l_plus", "l_minus", "l_u", "l_b")}


def _four_sides(m, fwd, bwd, labels):
    e = m.max_edge()
    be = bit(e)
    su, sb = labels.sigma_u, labels.sigma_b
    mc, md = minor_contract(m, e), minor_delete(m, e)
    rf, rb = fwd & ~be, bwd & ~be
    return (_intrinsic(m, fwd, bwd, su, sb),
            _intrinsic(m, fwd ^ be, bwd ^ be, su, sb),
            _intrinsic(mc, rf, rb, su, sb),
            _intrinsic(md, rf, rb, su, sb))


@lru_cache(maxsize=1 << 18)
def _conditions(m, fwd, bwd, labels):
    here, toggled, con, dele = _four_sides(m, fwd, bwd, labels)
    cond1 = here == con and toggled == dele
    cond2 = toggled == con and here == dele
    return cond1, cond2


def _classify(m, e):
    a, b = m.endpoints(e)
    if a == b:
        return "loop"
    if is_isthmus(m, e):
        return "isthmus"
    return "ordinary"


def key_lemma_status(g, o, labels):
    m = as_minor(g)
    if m.alive == 0:
        raise InputError("graph has no edges")
    e = m.max_edge()
    if _classify(m, e) != "ordinary":
        raise InputError(f"largest edge e{e + 1} is an isthmus or a loop")
    fwd, bwd = o.fwd & m.alive, o.bwd & m.alive
    here, toggled, con, dele = _four_sides(m, fwd, bwd, labels)

    def pairs(x, y):
        return {k: (getattr(x, k), getattr(y, k)) for k in CONDITION_FIELDS}

    detail = {
        "cond1": {**{f"O={k}/contract": v for k, v in pairs(here, con).items()},
                  **{f"eO={k}/delete": v for k, v in pairs(toggled, dele).items()}},
        "cond2": {**{f"eO={k}/contract": v for k, v in pairs(toggled, con).items()},
                  **{f"O={k}/delete": v for k, v in pairs(here, dele).items()}},
    }
    cond1 = here == con and toggled == dele
    cond2 = toggled == con and here == dele
    if not (cond1 or cond2):
        raise InvariantViolation(
            f"key lemma fails for {o.to_string(m)}: neither condition holds")
    return KeyLemmaStatus(cond1, cond2, detail)


def _goes_to_contraction(m, fwd, bwd, labels, tiebreak):
    e = m.max_edge()
    kind = _classify(m, e)
    if kind == "isthmus":
        return bool(fwd >> e & 1)
    if kind == "loop":
        return bool(bwd >> e & 1)
    cond1, cond2 = _conditions(m, fwd, bwd, labels)
    if not (cond1 or cond2):
        raise InvariantViolation(
            f"key lemma fails for {Fourientation(fwd, bwd).to_string(m)}: neither condition holds")
    if not cond2:
        return True
    if not cond1:
        return False
    if tiebreak == "always-contract":
        return True
    # both conditions hold: b or e^+ contracts; u or e^- deletes
    return bool(fwd >> e & 1)


@lru_cache(maxsize=1 << 18)
def _phi(m, fwd, bwd, labels, tiebreak):
    if m.alive == 0:
        return 0
    e = m.max_edge()
    be = bit(e)
    rf, rb = fwd & ~be, bwd & ~be
    if _goes_to_contraction(m, fwd, bwd, labels, tiebreak):
        return be | _phi(minor_contract(m, e), rf, rb, labels, tiebreak)
    return _phi(minor_delete(m, e), rf, rb, labels, tiebreak)


def phi(g, o, labels, tiebreak="reference"):
    if tiebreak not in TIEBREAKS:
        raise InputError(f"unknown tiebreak {tiebreak!r}")
    m = as_minor(g)
    return _phi(m, o.fwd & m.alive, o.bwd & m.alive, labels, tiebreak)


def full_activities(g, o, labels, tiebreak="reference"):
    m = as_minor(g)
    s = phi(m, o, labels, tiebreak)
    h = hat_activities(m, s)
    I, L = h.i_hat, h.l_hat
    plus, minus = o.plus & m.alive, o.minus & m.alive
    un, bi = o.unoriented(m.alive), o.bioriented & m.alive
    return FullActivities(s, I, L, I & plus, I & minus, I & un, I & bi,
                          L & plus, L & minus, L & un, L & bi)


def phi_fibers(g, labels, tiebreak="reference"):
    """``{S: sorted fourientation strings}`` over every fourientation."""
    m = as_minor(g)
    fibers = defaultdict(list)
    for o in all_fourientations(m):
        fibers[phi(m, o, labels, tiebreak)].append(o.to_string(m))
    return {s: sorted(v) for s, v in sorted(fibers.items())}


@lru_cache(maxsize=1 << 16)
def _inverse(m, s, so, labels, tiebreak):
    if m.alive == 0:
        return 0, 0
    e = m.max_edge()
    be = bit(e)
    in_s = bool(s >> e & 1)
    sub = minor_contract(m, e) if in_s else minor_delete(m, e)
    rf, rb = _inverse(sub, s & ~be, so & ~be, labels, tiebreak)
    if so >> e & 1:
        candidates = ((rf | be, rb), (rf, rb | be))
    else:
        candidates = ((rf, rb), (rf | be, rb | be))
    hits = [c for c in candidates if _goes_to_contraction(m, c[0], c[1], labels, tiebreak) == in_s]
    if len(hits) != 1:
        raise InvariantViolation("toggle pair does not split between contraction and deletion")
    return hits[0]


def phi_tilde_inverse(g, s, so, labels, tiebreak="reference"):
    """The unique fourientation with phi(O) = s and oriented edges so."""
    m = as_minor(g)
    if (s | so) & ~m.alive:
        raise InputError("subsets must lie inside the alive edges")
    return Fourientation(*_inverse(m, s, so, labels, tiebreak))


def phi_tilde_inverse_search(g, s, so, labels, tiebreak="reference"):
    """Fiber search; independent of the replay in :func:`phi_tilde_inverse`."""
    m = as_minor(g)
    for o in all_fourientations(m):
        if o.oriented & m.alive == so and phi(m, o, labels, tiebreak) == s:
            return o
    raise InvariantViolation("no fourientation with the requested (phi, oriented) pair")


TOGGLES = ("cut-hat", "cut-plain", "cut-cross", "cycle-hat", "cycle-plain", "cycle-cross")


def activity_toggle(g, o, labels, which):
    """Involutions on fourientations obtained by toggling active edges through phi.

    ``*-hat`` toggles the active non-oriented edges in phi(O), ``*-plain``
    the active oriented edges in phi(O), and ``*-cross`` flips active
    edges of phi(O) between oriented and non-oriented.
    """
    if which not in TOGGLES:
        raise InputError(f"unknown toggle {which!r}")
    m = as_minor(g)
    s = phi(m, o, labels)
    so = o.oriented & m.alive
    h = hat_activities(m, s)
    act = h.i_hat if which.startswith("cut") else h.l_hat
    if which.endswith("hat"):
        return phi_tilde_inverse(m, s ^ (act & ~so), so, labels)
    if which.endswith("plain"):
        return phi_tilde_inverse(m, s ^ (act & so), so, labels)
    return phi_tilde_inverse(m, s, so ^ (act & s), labels)


# ---------------------------------------------------------------------------
# Runtime-checkable statements about the largest edge.


def isthmus_lemma_holds(g, o, labels):
    m = as_minor(g)
    e = m.max_edge()
    if _classify(m, e) != "isthmus":
        raise InputError("largest edge is not an isthmus")
    be = bit(e)
    fwd, bwd = o.fwd & m.alive, o.bwd & m.alive
    here = _intrinsic(m, fwd, bwd, labels.sigma_u, labels.sigma_b)
    dele = _intrinsic(minor_delete(m, e), fwd & ~be, bwd & ~be, labels.sigma_u, labels.sigma_b)
    st = o.status(e)
    ok = here.l_o == dele.l_o and here.l_b == dele.l_b
    if st in "+-":
        ok = ok and here.i_o == be | dele.i_o and here.i_u == dele.i_u
    elif st == "u":
        ok = ok and here.i_o == dele.i_o and here.i_u == be | dele.i_u
    return ok


def loop_lemma_holds(g, o, labels):
    m = as_minor(g)
    e = m.max_edge()
    if _classify(m, e) != "loop":
        raise InputError("largest edge is not a loop")
    be = bit(e)
    fwd, bwd = o.fwd & m.alive, o.bwd & m.alive
    su, sb = labels.sigma_u, labels.sigma_b
    here = _intrinsic(m, fwd, bwd, su, sb)
    con = _intrinsic(minor_contract(m, e), fwd & ~be, bwd & ~be, su, sb)
    dele = _intrinsic(minor_delete(m, e), fwd & ~be, bwd & ~be, su, sb)
    st = o.status(e)
    ok = here.i_o == con.i_o and here.i_u == con.i_u
    if st in "+-":
        ok = ok and here.l_o == be | dele.l_o and here.l_b == dele.l_b
    elif st == "b":
        ok = ok and here.l_o == dele.l_o and here.l_b == be | dele.l_b
    return ok
