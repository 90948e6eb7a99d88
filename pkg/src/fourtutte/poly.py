"""Sparse exact polynomials with integer or rational coefficients.

A :class:`Poly` lives over a fixed tuple of variable names and stores a
dict from exponent tuples to nonzero coefficients.  Coefficients are
Python ``int`` (arbitrary precision) or :class:`fractions.Fraction`;
nothing here ever touches floating point.
"""
from __future__ import annotations

import json
from fractions import Fraction

# Exponent order for the twelve-variable fourientation expansion.
# "xh" is x-hat and so on.
VARS12 = ("k1", "k2", "l", "m", "x", "w", "xh", "wh", "y", "z", "yh", "zh")
XY = ("x", "y")


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class Poly:
    __slots__ = ("vars", "terms")

    def __init__(self, vars, terms=None):
        self.vars = tuple(vars)
        clean = {}
        if terms:
            k = len(self.vars)
            for exp, c in terms.items():
                exp = tuple(exp)
                if len(exp) != k or any(x < 0 for x in exp):
                    raise ValueError(f"bad exponent vector {exp} for variables {self.vars}")
                if c:
                    clean[exp] = _norm(c)
        self.terms = clean

    # construction -------------------------------------------------------
    @classmethod
    def const(cls, vars, c):
        return cls(vars, {(0,) * len(vars): c})

    @classmethod
    def var(cls, vars, name):
        exp = [0] * len(vars)
        exp[vars.index(name)] = 1
        return cls(vars, {tuple(exp): 1})

    @classmethod
    def gens(cls, vars):
        return tuple(cls.var(vars, v) for v in vars)

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.vars != self.vars:
                raise ValueError(f"variable mismatch {self.vars} vs {other.vars}")
            return other
        return Poly.const(self.vars, other)

    # ring operations ----------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Poly(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Poly(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers")
        result = Poly.const(self.vars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.vars == other.vars and self.terms == other.terms
        return self.terms == Poly.const(self.vars, other).terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"Poly({self.to_text()})"

    # inspection ---------------------------------------------------------
    def degree(self, name):
        i = self.vars.index(name)
        return max((e[i] for e in self.terms), default=0)

    def coefficient(self, **exps):
        exp = tuple(exps.get(v, 0) for v in self.vars)
        return self.terms.get(exp, 0)

    def is_integral(self):
        return all(isinstance(c, int) for c in self.terms.values())

    # evaluation ---------------------------------------------------------
    def evaluate(self, assignment):
        """Exact value at a full assignment ``{name: number}``."""
        vals = []
        for i, v in enumerate(self.vars):
            if v in assignment:
                vals.append(Fraction(assignment[v]))
            elif any(e[i] for e in self.terms):
                raise ValueError(f"no value for variable {v}")
            else:
                vals.append(Fraction(0))
        total = Fraction(0)
        for e, c in self.terms.items():
            t = Fraction(c)
            for x, k in zip(vals, e):
                if k:
                    t *= x ** k
            total += t
        return _norm(total)

    def partial(self, assignment):
        """Substitute numbers for some variables; result keeps the same variable tuple."""
        idx = {self.vars.index(v): Fraction(x) for v, x in assignment.items()}
        out = {}
        for e, c in self.terms.items():
            t = Fraction(c)
            e2 = list(e)
            for i, x in idx.items():
                if e[i]:
                    t *= x ** e[i]
                    e2[i] = 0
            key = tuple(e2)
            out[key] = out.get(key, 0) + t
        return Poly(self.vars, out)

    def substitute(self, images, vars=None):
        """Replace each variable by a polynomial (all images share ``vars``)."""
        vars = tuple(vars) if vars is not None else next(iter(images.values())).vars
        imgs = [images[v] if v in images else Poly.var(vars, v) for v in self.vars]
        cache = {}

        def power(i, k):
            key = (i, k)
            if key not in cache:
                cache[key] = imgs[i] ** k
            return cache[key]

        total = Poly(vars)
        for e, c in self.terms.items():
            t = Poly.const(vars, c)
            for i, k in enumerate(e):
                if k:
                    t = t * power(i, k)
            total = total + t
        return total

    def project(self, vars):
        """Re-express over ``vars``; every variable actually used must be kept."""
        vars = tuple(vars)
        pos = []
        for i, v in enumerate(self.vars):
            if v in vars:
                pos.append((i, vars.index(v)))
            elif any(e[i] for e in self.terms):
                raise ValueError(f"variable {v} still occurs")
        out = {}
        for e, c in self.terms.items():
            e2 = [0] * len(vars)
            for i, j in pos:
                e2[j] = e[i]
            out[tuple(e2)] = out.get(tuple(e2), 0) + c
        return Poly(vars, out)

    # serialisation ------------------------------------------------------
    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    def to_text(self):
        if not self.terms:
            return "0"
        pieces = []
        for e, c in self.sorted_terms():
            mono = "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip(self.vars, e) if k)
            neg = c < 0
            a = -c if neg else c
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            if not pieces:
                pieces.append(("-" if neg else "") + body)
            else:
                pieces.append((" - " if neg else " + ") + body)
        return "".join(pieces)

    def to_dict(self):
        return {"vars": list(self.vars),
                "terms": [{"e": list(e), "c": str(c)} for e, c in self.sorted_terms()]}

    def to_json(self):
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data):
        terms = {}
        for t in data["terms"]:
            c = Fraction(t["c"])
            terms[tuple(t["e"])] = c
        return cls(data["vars"], terms)


def multipoly(terms=None):
    return Poly(VARS12, terms)


def from_counts(vars, counts):
    """Poly from a ``{exponent tuple: count}`` mapping (e.g. a ``Counter``)."""
    return Poly(vars, dict(counts))
