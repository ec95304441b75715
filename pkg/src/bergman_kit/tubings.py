"""Tubes and tubings of a graph, and the face poset of its graph associahedron.

Two disjoint tubes are treated as adjacent when their union induces a
connected subgraph.  Passing ``literal=True`` additionally requires the union
to be a proper subset of the nodes, which is the weaker alternative reading.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable

import networkx as nx

from .posets import FinitePoset

MAX_TUBES = 20


class SimpleGraph:
    def __init__(self, nodes: Iterable, edges: Iterable = ()):
        self.nodes = tuple(nodes)
        if len(set(self.nodes)) != len(self.nodes):
            raise ValueError("duplicate nodes")
        es = set()
        for a, b in edges:
            if a == b:
                raise ValueError("self-loops are not allowed")
            if a not in self.nodes or b not in self.nodes:
                raise ValueError(f"edge ({a}, {b}) has an unknown endpoint")
            e = frozenset((a, b))
            if e in es:
                raise ValueError("multi-edges are not allowed")
            es.add(e)
        self.edges = frozenset(es)
        self.nx = nx.Graph()
        self.nx.add_nodes_from(self.nodes)
        self.nx.add_edges_from(tuple(e) for e in self.edges)
        self._order = {v: i for i, v in enumerate(self.nodes)}

    def __repr__(self) -> str:
        return f"SimpleGraph({len(self.nodes)} nodes, {len(self.edges)} edges)"

    @classmethod
    def from_json(cls, data: dict) -> "SimpleGraph":
        return cls([str(v) for v in data["nodes"]], [(str(e[0]), str(e[1])) for e in data.get("edges", [])])

    @classmethod
    def from_diagram(cls, diagram) -> "SimpleGraph":
        return cls(diagram.nodes, [tuple(sorted(p)) for p in diagram.edges])

    def connected(self, nodes: Iterable) -> bool:
        nodes = list(nodes)
        return bool(nodes) and nx.is_connected(self.nx.subgraph(nodes))

    def sort_key(self, t: Iterable):
        idx = sorted(self._order[v] for v in t)
        return (len(idx), idx)

    def fmt(self, t: Iterable) -> str:
        return "{" + ",".join(sorted(t, key=self._order.__getitem__)) + "}"


def path_graph(n: int) -> SimpleGraph:
    nodes = [str(i + 1) for i in range(n)]
    return SimpleGraph(nodes, zip(nodes, nodes[1:]))


def cycle_graph(n: int) -> SimpleGraph:
    nodes = [str(i + 1) for i in range(n)]
    return SimpleGraph(nodes, list(zip(nodes, nodes[1:])) + [(nodes[-1], nodes[0])])


def star_graph(center: str, leaves: Iterable[str]) -> SimpleGraph:
    leaves = list(leaves)
    return SimpleGraph([center] + leaves, [(center, v) for v in leaves])


def is_tube(G: SimpleGraph, t: Iterable) -> bool:
    t = frozenset(t)
    return bool(t) and t < frozenset(G.nodes) and G.connected(t)


def tubes(G: SimpleGraph) -> list[frozenset]:
    """All proper nonempty node sets inducing a connected subgraph."""
    out = []
    for k in range(1, len(G.nodes)):
        for c in combinations(G.nodes, k):
            if G.connected(c):
                out.append(frozenset(c))
    return out


def are_compatible(G: SimpleGraph, t1: Iterable, t2: Iterable, literal: bool = False) -> bool:
    t1, t2 = frozenset(t1), frozenset(t2)
    if t1 <= t2 or t2 <= t1:
        return True
    if t1 & t2:
        return False
    union = t1 | t2
    adjacent = G.connected(union)
    if literal and union == frozenset(G.nodes):
        adjacent = False
    return not adjacent


def is_tubing(G: SimpleGraph, ts: Iterable[Iterable], literal: bool = False) -> bool:
    ts = [frozenset(t) for t in ts]
    return all(is_tube(G, t) for t in ts) and all(
        are_compatible(G, a, b, literal) for a, b in combinations(ts, 2)
    )


def tubings(G: SimpleGraph, literal: bool = False) -> list[frozenset]:
    """Every tubing (the empty one included), in a canonical order."""
    ts = tubes(G)
    if len(ts) > MAX_TUBES:
        raise ValueError(f"tube guard: {len(ts)} tubes > {MAX_TUBES}")
    C = nx.Graph()
    C.add_nodes_from(range(len(ts)))
    C.add_edges_from((i, j) for i, j in combinations(range(len(ts)), 2) if are_compatible(G, ts[i], ts[j], literal))
    out = [frozenset()] + [frozenset(ts[i] for i in clique) for clique in nx.enumerate_all_cliques(C)]
    out.sort(key=lambda T: tubing_sort_key(G, T))
    return out


def tubing_sort_key(G: SimpleGraph, T: Iterable[frozenset]):
    return (len(T), sorted(G.sort_key(t) for t in T))


def face_poset(G: SimpleGraph, literal: bool = False) -> FinitePoset:
    """Tubings under reverse containment; the empty tubing is the top."""
    return FinitePoset(tubings(G, literal), leq=lambda a, b: a >= b)


def face_dimension(G: SimpleGraph, T) -> int:
    return len(G.nodes) - 1 - len(T)


def f_vector(G: SimpleGraph, literal: bool = False) -> tuple[int, ...]:
    """Face counts by dimension 0..n-1; the last entry is the polytope itself."""
    n = len(G.nodes)
    counts = [0] * n
    for T in tubings(G, literal):
        d = face_dimension(G, T)
        if d >= 0:
            counts[d] += 1
    return tuple(counts)
