"""Crystallographic root systems of types A, B, C, D and their oriented matroids."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

import networkx as nx

from . import linalg
from .matroid import Matroid, MatroidError, from_rational_matrix
from .oriented import OrientedMatroid

MAX_RANK = 6
_M_OF_COS2 = {Fraction(0): 2, Fraction(1, 4): 3, Fraction(1, 2): 4, Fraction(3, 4): 6}


@dataclass(frozen=True)
class CoxeterDiagram:
    """Nodes ``s1..sn`` and labelled edges ``{frozenset({s, t}): m}`` with m >= 3."""

    nodes: tuple
    edges: dict = field(hash=False, compare=True)
    family: str | None = None
    n: int | None = None

    def __post_init__(self):
        for pair, m in self.edges.items():
            if len(pair) != 2 or not pair <= set(self.nodes):
                raise ValueError(f"bad diagram edge {sorted(pair)}")
            if m not in (3, 4, 6):
                raise ValueError(f"edge label {m} not in {{3, 4, 6}}")

    @property
    def type_name(self) -> str | None:
        return f"{self.family}{self.n}" if self.family else None

    def m(self, s: str, t: str) -> int:
        if s == t:
            return 1
        return self.edges.get(frozenset((s, t)), 2)

    def graph(self) -> nx.Graph:
        G = nx.Graph()
        G.add_nodes_from(self.nodes)
        G.add_edges_from(tuple(sorted(p)) for p in self.edges)
        return G

    def is_connected_subset(self, J) -> bool:
        J = list(J)
        return bool(J) and nx.is_connected(self.graph().subgraph(J))


def parse_type(name: str) -> tuple[str, int]:
    m = re.fullmatch(r"\s*([ABCD])\s*(\d+)\s*", name)
    if not m:
        raise ValueError(f"unsupported Coxeter type {name!r}")
    family, n = m.group(1), int(m.group(2))
    minimum = {"A": 1, "B": 2, "C": 2, "D": 4}[family]
    if n < minimum:
        raise ValueError(f"{family}{n} is not a valid type (need n >= {minimum})")
    if n > MAX_RANK:
        raise ValueError(f"rank guard: n <= {MAX_RANK}")
    return family, n


def _e(i: int, dim: int, c: int = 1) -> list:
    v = [0] * dim
    v[i] = c
    return v


def _add(u, v, c=1):
    return [a + c * b for a, b in zip(u, v)]


def _standard_roots(family: str, n: int) -> tuple[list, list]:
    """(simple roots, positive roots) as integer vectors."""
    if family == "A":
        dim = n + 1
        simple = [_add(_e(i, dim), _e(i + 1, dim), -1) for i in range(n)]
        positive = [_add(_e(i, dim), _e(j, dim), -1) for i, j in combinations(range(dim), 2)]
        return simple, positive
    dim = n
    pairs = [_add(_e(i, dim), _e(j, dim), s) for i, j in combinations(range(dim), 2) for s in (-1, 1)]
    simple = [_add(_e(i, dim), _e(i + 1, dim), -1) for i in range(n - 1)]
    if family == "B":
        short = [_e(i, dim) for i in range(dim)]
        return simple + [_e(n - 1, dim)], pairs + short
    if family == "C":
        long = [_e(i, dim, 2) for i in range(dim)]
        return simple + [_e(n - 1, dim, 2)], pairs + long
    return simple + [_add(_e(n - 2, dim), _e(n - 1, dim))], pairs


def _diagram_of(simple: list, family: str | None = None, n: int | None = None) -> CoxeterDiagram:
    nodes = tuple(f"s{i + 1}" for i in range(len(simple)))
    edges = {}
    for (i, a), (j, b) in combinations(enumerate(simple), 2):
        ab = linalg.dot(a, b)
        cos2 = ab * ab / (linalg.dot(a, a) * linalg.dot(b, b))
        m = _M_OF_COS2[cos2]
        if m > 2:
            edges[frozenset((nodes[i], nodes[j]))] = m
    return CoxeterDiagram(nodes, edges, family, n)


def coxeter_diagram(name: str) -> CoxeterDiagram:
    family, n = parse_type(name)
    return _diagram_of(_standard_roots(family, n)[0], family, n)


@dataclass
class RootSystem:
    diagram: CoxeterDiagram
    simple: dict  # node -> vector
    labels: tuple  # ground labels "1".."N" in canonical order
    vectors: dict  # label -> vector
    coefficients: dict  # label -> tuple of simple-root coefficients
    simple_label: dict  # node -> label

    @property
    def name(self) -> str | None:
        return self.diagram.type_name

    def root_name(self, label: str) -> str:
        terms = []
        for i, c in enumerate(self.vectors[label]):
            if c:
                sign = "-" if c < 0 else "+"
                mag = "" if abs(c) == 1 else str(abs(c))
                terms.append(f"{sign}{mag}e{i + 1}")
        return "".join(terms).lstrip("+")

    def parabolic(self, J) -> frozenset:
        """Labels of the positive roots supported inside J."""
        J = frozenset(J)
        return frozenset(b for b in self.labels if support(self, b) <= J)

    def label_of(self, v) -> str | None:
        v = tuple(linalg.vec(v))
        for b in self.labels:
            if self.vectors[b] == v:
                return b
        return None


def reflect(alpha, v) -> tuple:
    c = 2 * linalg.dot(v, alpha) / linalg.dot(alpha, alpha)
    return tuple(a - c * b for a, b in zip(linalg.vec(v), linalg.vec(alpha)))


def build_root_system(diagram: CoxeterDiagram | str) -> RootSystem:
    """Positive roots in the standard integer realization, with exact checks.

    Each root is expanded in the simple roots (coefficients must be
    nonnegative), the set of roots is checked to be closed under every simple
    reflection, and every support is checked to be connected.
    """
    if isinstance(diagram, str):
        diagram = coxeter_diagram(diagram)
    if diagram.family is None:
        raise ValueError("root generation needs a typed diagram (A/B/C/D)")
    family, n = parse_type(diagram.type_name)
    simple_vecs, positive = _standard_roots(family, n)
    if _diagram_of(simple_vecs).edges != diagram.edges:
        raise ValueError("diagram does not match its type")
    simple_vecs = [linalg.vec(v) for v in simple_vecs]
    positive = [linalg.vec(v) for v in positive]

    coeffs = {}
    for v in positive:
        c = linalg.solve(simple_vecs, v)
        if c is None or any(x < 0 for x in c):
            raise AssertionError(f"{v} is not a nonnegative combination of simple roots")
        coeffs[v] = c

    def order(v):
        c = coeffs[v]
        return (tuple(i for i, x in enumerate(c) if x), c)

    positive.sort(key=order)
    labels = tuple(str(i + 1) for i in range(len(positive)))
    vectors = dict(zip(labels, positive))
    coefficients = {b: coeffs[v] for b, v in vectors.items()}
    simple = dict(zip(diagram.nodes, simple_vecs))
    rs = RootSystem(diagram, simple, labels, vectors, coefficients, {})
    rs.simple_label = {s: rs.label_of(v) for s, v in simple.items()}

    everything = set(positive) | {tuple(-x for x in v) for v in positive}
    for a in simple_vecs:
        for v in positive:
            if reflect(a, v) not in everything:
                raise AssertionError("root set not closed under reflections")
    for b in labels:
        if not diagram.is_connected_subset(support(rs, b)):
            raise AssertionError(f"root {b} has disconnected support")
    return rs


def support(rs: RootSystem, label: str) -> frozenset:
    if label not in rs.coefficients:
        raise KeyError(f"unknown root label {label!r}")
    return frozenset(s for s, c in zip(rs.diagram.nodes, rs.coefficients[label]) if c != 0)


def coxeter_matroid(rs: RootSystem) -> Matroid:
    return from_rational_matrix([rs.vectors[b] for b in rs.labels], list(rs.labels))


def coxeter_oriented_matroid(rs: RootSystem) -> OrientedMatroid:
    """Oriented matroid of the positive roots.

    Every positive root is positive on the fundamental chamber, so the all-+
    sign vector is a tope and the positive flats are the parabolic ones.
    """
    return OrientedMatroid(coxeter_matroid(rs))


def weyl_generators(rs: RootSystem, M: Matroid | None = None) -> dict:
    """``{node: permutation of labels}`` induced by the simple reflections.

    A root sent to a negative root is identified with its negative (the same
    hyperplane).  Each permutation is checked to be a matroid automorphism.
    """
    from .bergman import is_automorphism

    if M is None:
        M = coxeter_matroid(rs)
    out = {}
    for s, a in rs.simple.items():
        perm = {}
        for b in rs.labels:
            w = reflect(a, rs.vectors[b])
            target = rs.label_of(w) or rs.label_of(tuple(-x for x in w))
            if target is None:
                raise AssertionError("reflection left the root system")
            perm[b] = target
        if not is_automorphism(M, perm):
            raise MatroidError(f"reflection {s} is not a matroid automorphism")
        out[s] = perm
    return out
