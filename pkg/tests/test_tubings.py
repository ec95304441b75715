from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _fixtures import coxeter
from bergman_kit.nested import connected_flats, is_nested
from bergman_kit.tubings import (
    SimpleGraph,
    are_compatible,
    cycle_graph,
    f_vector,
    face_poset,
    is_tubing,
    path_graph,
    star_graph,
    tubes,
    tubings,
)

S = frozenset


def test_tubes_examples():
    assert set(tubes(path_graph(3))) == {S("1"), S("2"), S("3"), S("12"), S("23")}
    D4 = star_graph("c", "abd")
    ts = tubes(D4)
    assert len(ts) == 10
    assert sum(1 for t in ts if len(t) == 1) == 4
    assert all("c" in t for t in ts if len(t) > 1)
    K3 = SimpleGraph("123", [("1", "2"), ("2", "3"), ("1", "3")])
    assert len(tubes(K3)) == 6


def test_compatibility_examples():
    P3 = path_graph(3)
    assert are_compatible(P3, "1", "3")
    assert not are_compatible(P3, "1", "23")
    assert are_compatible(P3, "2", "12")
    # the literal reading ignores adjacency when the union is everything
    assert are_compatible(P3, "1", "23", literal=True)


def test_graph_validation():
    with pytest.raises(ValueError):
        SimpleGraph("12", [("1", "1")])
    with pytest.raises(ValueError):
        SimpleGraph("12", [("1", "2"), ("2", "1")])
    with pytest.raises(ValueError):
        SimpleGraph("12", [("1", "3")])


def test_pentagon():
    P3 = path_graph(3)
    vertices = {T for T in tubings(P3) if len(T) == 2}
    assert vertices == {
        S({S("1"), S("12")}),
        S({S("2"), S("12")}),
        S({S("2"), S("23")}),
        S({S("3"), S("23")}),
        S({S("1"), S("3")}),
    }
    assert f_vector(P3) == (5, 5, 1)


def test_literal_reading_breaks_the_pentagon():
    P3 = path_graph(3)
    ts = tubings(P3, literal=True)
    assert sum(1 for T in ts if len(T) == 2) == 7
    assert max(len(T) for T in ts) == 3


def test_f_vectors():
    assert f_vector(path_graph(4)) == (14, 21, 9, 1)
    assert f_vector(cycle_graph(4)) == (20, 30, 12, 1)
    D4 = star_graph("c", "abd")
    fv = f_vector(D4)
    assert fv[2] == 10
    assert fv[0] - fv[1] + fv[2] == 2


def test_single_node_graph():
    G = SimpleGraph(["x"])
    assert tubings(G) == [S()]
    assert len(face_poset(G)) == 1
    assert f_vector(G) == (1,)


def test_face_poset_order_is_reverse_containment():
    P = face_poset(path_graph(3))
    assert P.maximum() == S()
    assert P.minimum() is None
    a = S({S("1")})
    b = S({S("1"), S("12")})
    assert P.leq(b, a) and not P.leq(a, b)


def test_tube_guard():
    with pytest.raises(ValueError):
        tubings(path_graph(7))


# --- invariants ------------------------------------------------------------------------------

@st.composite
def small_graphs(draw):
    n = draw(st.integers(1, 5))
    nodes = [str(i) for i in range(n)]
    pairs = list(combinations(nodes, 2))
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return SimpleGraph(nodes, edges)


@pytest.mark.property
@settings(max_examples=60, deadline=None)
@given(small_graphs())
def test_compatibility_is_symmetric_and_nested_tubes_are_compatible(G):
    ts = tubes(G)
    for a in ts:
        for b in ts:
            assert are_compatible(G, a, b) == are_compatible(G, b, a)
            if a <= b:
                assert are_compatible(G, a, b)


def _connected_fixtures():
    out = {"P3": path_graph(3), "P4": path_graph(4), "C4": cycle_graph(4), "star": star_graph("c", "abd")}
    out["K3"] = SimpleGraph("123", [("1", "2"), ("2", "3"), ("1", "3")])
    for name in ("A2", "A3", "A4", "B3", "D4"):
        out[name] = SimpleGraph.from_diagram(coxeter(name)[0].diagram)
    return out


@pytest.mark.property
@pytest.mark.parametrize("name", sorted(_connected_fixtures()))
def test_maximal_tubings_have_n_minus_one_tubes(name):
    G = _connected_fixtures()[name]
    assert nx.is_connected(G.nx)
    ts = tubings(G)
    maximal = [T for T in ts if not any(T < U for U in ts)]
    assert {len(T) for T in maximal} == {len(G.nodes) - 1}


@pytest.mark.property
@pytest.mark.parametrize("name", ["A2", "A3", "A4", "B2", "B3", "C3", "D4"])
def test_tubings_are_the_nested_sets_of_parabolic_flats(name):
    rs, OM = coxeter(name)
    M = OM.matroid
    L = M.flats_lattice()
    irr = connected_flats(M)
    G = SimpleGraph.from_diagram(rs.diagram)
    ts = tubes(G)
    flat_of = {t: rs.parabolic(t) for t in ts}
    for k in range(len(ts) + 1):
        for X in combinations(ts, k):
            assert is_tubing(G, X) == is_nested(L, [flat_of[t] for t in X], irr), X
