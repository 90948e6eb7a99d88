"""Ordered multigraphs with a reference orientation, and their minors.

Edge sets are plain ``int`` bitmasks throughout the package: bit ``i`` is
edge ``e_{i+1}`` (edges are 0-indexed internally and 1-indexed on display).
An edge ``(tail, head)`` is oriented tail -> head in the reference
orientation, so ``e^+`` is that direction and ``e^-`` its reverse.

A :class:`Minor` never renumbers edges.  Deleting or contracting only
shrinks the ``alive`` mask and coarsens the vertex partition, so the edge
order and reference orientation carry over to every minor unchanged.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .errors import InputError, check_size

PLUS, MINUS = 1, -1

MAX_ORACLE_EDGES = 16
MAX_ORACLE_CLASSES = 16


def mask(edges):
    """Bitmask of an iterable of edge indices."""
    m = 0
    for e in edges:
        m |= 1 << e
    return m


def members(m):
    """Ascending edge indices of a bitmask."""
    out = []
    i = 0
    while m:
        if m & 1:
            out.append(i)
        m >>= 1
        i += 1
    return out


def bit(e):
    return 1 << e


def fmt_edges(m):
    """Human-readable ``{e1,e3}`` form of a mask."""
    return "{" + ",".join(f"e{i + 1}" for i in members(m)) + "}"


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: tuple
    _hash: int = field(default=0, init=False, repr=False, compare=False)

    def __post_init__(self):
        edges = tuple((int(t), int(h)) for t, h in self.edges)
        if self.vertex_count < 0:
            raise InputError("vertex_count must be nonnegative")
        for i, (t, h) in enumerate(edges):
            if not (0 <= t < self.vertex_count and 0 <= h < self.vertex_count):
                raise InputError(f"edge e{i + 1} = ({t}, {h}) out of range for {self.vertex_count} vertices")
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "_hash", hash((self.vertex_count, edges)))

    def __hash__(self):
        return self._hash

    @property
    def p(self):
        return len(self.edges)

    @property
    def all_edges(self):
        return (1 << len(self.edges)) - 1

    def reoriented(self, flip):
        """Same graph with the reference orientation reversed on the edges in ``flip``."""
        return Graph(self.vertex_count, tuple((h, t) if flip >> i & 1 else (t, h)
                                              for i, (t, h) in enumerate(self.edges)))

    def disjoint_union(self, other):
        n = self.vertex_count
        return Graph(n + other.vertex_count,
                     self.edges + tuple((t + n, h + n) for t, h in other.edges))


@dataclass(frozen=True)
class SignLabels:
    """Per-edge signs (+1/-1) used to provisionally orient unoriented (``sigma_u``)
    and bioriented (``sigma_b``) edges when testing activity."""
    sigma_u: tuple
    sigma_b: tuple

    @classmethod
    def default(cls, p):
        return cls((MINUS,) * p, (PLUS,) * p)

    @classmethod
    def from_strings(cls, su, sb):
        return cls(_parse_signs(su, len(su)), _parse_signs(sb, len(sb)))

    def to_strings(self):
        def enc(s):
            return "".join("+" if x > 0 else "-" for x in s)
        return enc(self.sigma_u), enc(self.sigma_b)


def _parse_signs(text, p):
    if len(text) != p:
        raise InputError(f"sign label string {text!r} has length {len(text)}, expected {p}")
    out = []
    for ch in text:
        if ch == "+":
            out.append(PLUS)
        elif ch in "-−":
            out.append(MINUS)
        else:
            raise InputError(f"bad sign character {ch!r} in {text!r}")
    return tuple(out)


def parse_graph(text):
    """Parse the line-oriented graph format.

    Returns ``(graph, labels)``.  Unspecified labels default to
    ``sigma_u = -`` and ``sigma_b = +`` on every edge.
    """
    n = None
    edges = []
    su = sb = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        key = parts[0]
        try:
            if key == "vertices" and len(parts) == 2:
                if n is not None:
                    raise InputError("duplicate 'vertices' line")
                n = int(parts[1])
                if n < 0:
                    raise InputError("negative vertex count")
            elif key == "edge" and len(parts) == 3:
                if n is None:
                    raise InputError("'edge' before 'vertices'")
                t, h = int(parts[1]), int(parts[2])
                if not (0 <= t < n and 0 <= h < n):
                    raise InputError(f"vertex index out of range in 'edge {t} {h}' (vertices {n})")
                edges.append((t, h))
            elif key == "sigma_u" and len(parts) == 2:
                su = parts[1]
            elif key == "sigma_b" and len(parts) == 2:
                sb = parts[1]
            else:
                raise InputError(f"unrecognised line {raw.strip()!r}")
        except InputError as exc:
            raise InputError(f"line {lineno}: {exc}") from None
        except ValueError:
            raise InputError(f"line {lineno}: malformed integer in {raw.strip()!r}") from None
    if n is None:
        raise InputError("missing 'vertices' line")
    p = len(edges)
    labels = SignLabels(
        _parse_signs(su, p) if su is not None else (MINUS,) * p,
        _parse_signs(sb, p) if sb is not None else (PLUS,) * p,
    )
    return Graph(n, tuple(edges)), labels


def format_graph(graph, labels=None):
    lines = [f"vertices {graph.vertex_count}"]
    lines += [f"edge {t} {h}" for t, h in graph.edges]
    if labels is not None and graph.p:
        su, sb = labels.to_strings()
        lines += [f"sigma_u {su}", f"sigma_b {sb}"]
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Minor:
    """A minor of ``graph``: the surviving edges plus a vertex quotient.

    ``classes[v]`` is the representative (smallest vertex) of ``v``'s class.
    """
    graph: Graph
    alive: int
    classes: tuple
    _hash: int = field(default=0, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_hash", hash((self.graph, self.alive, self.classes)))

    def __hash__(self):
        return self._hash

    @classmethod
    def of(cls, graph):
        return cls(graph, graph.all_edges, tuple(range(graph.vertex_count)))

    @property
    def p(self):
        return self.alive.bit_count()

    @property
    def vertex_classes(self):
        return sorted(set(self.classes))

    @property
    def n(self):
        return len(set(self.classes))

    def endpoints(self, e):
        t, h = self.graph.edges[e]
        return self.classes[t], self.classes[h]

    def edge_list(self):
        return members(self.alive)

    def max_edge(self):
        return self.alive.bit_length() - 1

    def _require(self, e):
        if not (0 <= e < self.graph.p) or not self.alive >> e & 1:
            raise InputError(f"edge e{e + 1} is not alive in this minor")


def as_minor(g):
    return g if isinstance(g, Minor) else Minor.of(g)


def minor_delete(m, e):
    m = as_minor(m)
    m._require(e)
    return Minor(m.graph, m.alive & ~(1 << e), m.classes)


def minor_contract(m, e):
    """Contract ``e``; a loop is simply removed."""
    m = as_minor(m)
    m._require(e)
    a, b = m.endpoints(e)
    alive = m.alive & ~(1 << e)
    if a == b:
        return Minor(m.graph, alive, m.classes)
    keep, drop = min(a, b), max(a, b)
    return Minor(m.graph, alive, tuple(keep if c == drop else c for c in m.classes))


def restrict(m, s):
    """The spanning subgraph with edge set ``s`` (all other alive edges deleted)."""
    m = as_minor(m)
    if s & ~m.alive:
        raise InputError("restriction set is not a subset of the alive edges")
    return Minor(m.graph, s, m.classes)


def contract_set(m, s):
    m = as_minor(m)
    for e in members(s):
        m = minor_contract(m, e)
    return m


def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def kappa(m, s=None):
    """Number of connected components of (vertex classes, ``s``)."""
    m = as_minor(m)
    if s is None:
        s = m.alive
    elif s & ~m.alive:
        raise InputError("edge set is not a subset of the alive edges")
    reps = set(m.classes)
    parent = {r: r for r in reps}
    comps = len(reps)
    edges = m.graph.edges
    cls = m.classes
    e = 0
    while s:
        if s & 1:
            t, h = edges[e]
            a, b = _find(parent, cls[t]), _find(parent, cls[h])
            if a != b:
                parent[a] = b
                comps -= 1
        s >>= 1
        e += 1
    return comps


def cyclomatic(m):
    m = as_minor(m)
    return m.p - m.n + kappa(m)


def is_loop(m, e):
    m = as_minor(m)
    m._require(e)
    a, b = m.endpoints(e)
    return a == b


def is_isthmus(m, e):
    m = as_minor(m)
    m._require(e)
    return kappa(m, m.alive & ~(1 << e)) > kappa(m)


# ---------------------------------------------------------------------------
# Oracle-grade enumeration of bonds and circuits.


@dataclass(frozen=True)
class Witness:
    """A directed bond ("cut") or directed circuit ("cycle").

    ``arcs`` is a sorted tuple of ``(edge, sign)``: the member arcs
    ``e^sign`` of the chosen consistent orientation.  For cuts ``side`` is the
    set of vertex-class representatives the arcs point away from.
    """
    kind: str
    edges: int
    arcs: tuple
    side: frozenset = None

    @property
    def min_edge(self):
        return (self.edges & -self.edges).bit_length() - 1


def _crossing(m, side):
    cut = 0
    for e in m.edge_list():
        a, b = m.endpoints(e)
        if (a in side) != (b in side):
            cut |= 1 << e
    return cut


@lru_cache(maxsize=4096)
def enumerate_bonds(m, max_classes=MAX_ORACLE_CLASSES):
    """Every bond of ``m`` in both consistent directions (brute force over vertex sides)."""
    m = as_minor(m)
    reps = m.vertex_classes
    check_size(len(reps), max_classes, "bond enumeration vertex classes")
    cuts = {}
    for r in range(1, len(reps)):
        for side in combinations(reps, r):
            side = frozenset(side)
            c = _crossing(m, side)
            if c and c not in cuts:
                cuts[c] = side
    bonds = [c for c in cuts if not any(d != c and d & c == d for d in cuts)]
    out = []
    for c in sorted(bonds):
        side = cuts[c]
        arcs = []
        for e in members(c):
            t, _ = m.endpoints(e)
            arcs.append((e, PLUS if t in side else MINUS))
        w = Witness("cut", c, tuple(arcs), side)
        comp = frozenset(reps) - side
        out.append(w)
        out.append(Witness("cut", c, tuple((e, -s) for e, s in arcs), comp))
    return tuple(out)


def _is_circuit(m, s):
    deg = {}
    for e in members(s):
        a, b = m.endpoints(e)
        deg[a] = deg.get(a, 0) + 1
        deg[b] = deg.get(b, 0) + 1
    if any(d != 2 for d in deg.values()):
        return False
    # connected on the touched classes
    touched = set(deg)
    return kappa(Minor(m.graph, s, m.classes), s) - (m.n - len(touched)) == 1


def _circuit_arcs(m, s):
    es = members(s)
    first = es[0]
    a, b = m.endpoints(first)
    arcs = [(first, PLUS)]
    used = {first}
    cur = b
    while len(used) < len(es):
        for f in es:
            if f in used:
                continue
            x, y = m.endpoints(f)
            if x == cur:
                arcs.append((f, PLUS))
                cur = y
                break
            if y == cur:
                arcs.append((f, MINUS))
                cur = x
                break
        else:  # pragma: no cover - _is_circuit guarantees a closed walk
            raise AssertionError("not a closed walk")
        used.add(f)
    return tuple(sorted(arcs))


@lru_cache(maxsize=4096)
def enumerate_circuits(m, max_edges=MAX_ORACLE_EDGES):
    """Every circuit of ``m`` in both directions (brute force over edge subsets)."""
    m = as_minor(m)
    es = m.edge_list()
    check_size(len(es), max_edges, "circuit enumeration edges")
    out = []
    for r in range(1, len(es) + 1):
        for combo in combinations(es, r):
            s = mask(combo)
            if _is_circuit(m, s):
                arcs = _circuit_arcs(m, s)
                out.append(Witness("cycle", s, arcs))
                out.append(Witness("cycle", s, tuple((e, -d) for e, d in arcs)))
    return tuple(out)


def submasks(m):
    """All submasks of ``m`` (including 0 and ``m`` itself)."""
    s = m
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & m
