from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _fixtures import a3, coxeter, matroid_fixtures, oriented_fixtures
from bergman_kit.matroid import from_rational_matrix, mu
from bergman_kit.posets import (
    FinitePoset,
    NotComparable,
    SimplicialComplex,
    boolean_lattice,
    chain,
    check_anti_isomorphism,
    order_complex,
    reduced_euler_characteristic,
)
from bergman_kit.tubings import cycle_graph, face_poset, path_graph


def test_mobius_small_cases():
    C = chain(2)
    assert C.mobius(0, 1) == -1
    B = boolean_lattice([1, 2])
    assert B.mobius(frozenset(), frozenset({1, 2})) == 1


def test_mobius_of_partition_lattice_of_four():
    # K4 graphic matroid; its flats are the 15 set partitions of a 4-set
    L = a3().matroid.flats_lattice()
    assert len(L) == 15
    assert L.mobius(L.minimum(), L.maximum()) == -6


def test_mobius_rejects_incomparable():
    B = boolean_lattice([1, 2])
    with pytest.raises(NotComparable):
        B.mobius(frozenset({1}), frozenset({2}))


def test_order_complex_examples():
    K = order_complex(chain(3), strip_bounds=True)
    assert K.vertices == {1} and K.f_vector() == (1,)
    K = order_complex(boolean_lattice([1, 2]), strip_bounds=True)
    assert K.facets == {frozenset({frozenset({1})}), frozenset({frozenset({2})})}
    K = order_complex(a3().matroid.flats_lattice(), strip_bounds=True)
    assert K.f_vector() == (13, 18)


def test_order_complex_needs_bounds():
    P = FinitePoset(["a", "b"], relations=[])
    with pytest.raises(ValueError):
        order_complex(P, strip_bounds=True)


def test_reduced_euler_characteristic_examples():
    assert reduced_euler_characteristic(SimplicialComplex([])) == -1
    triangle = SimplicialComplex([{1, 2}, {2, 3}, {1, 3}])
    assert triangle.f_vector() == (3, 3)
    assert reduced_euler_characteristic(triangle) == -1
    K = order_complex(a3().matroid.flats_lattice(), strip_bounds=True)
    assert reduced_euler_characteristic(K) == -6


def test_simplicial_complex_keeps_maximal_facets():
    K = SimplicialComplex([{1, 2}, {1}, {2, 3}])
    assert K.facets == {frozenset({1, 2}), frozenset({2, 3})}
    with pytest.raises(ValueError):
        SimplicialComplex([{1}], vertices=[1, 2])


def test_antisymmetry_is_enforced():
    with pytest.raises(ValueError):
        FinitePoset("ab", relations=[("a", "b"), ("b", "a")])


def test_anti_isomorphism_examples():
    one = FinitePoset(["x"], relations=[])
    assert check_anti_isomorphism(one, one, {"x": "x"})
    two = chain(2)
    verdict = check_anti_isomorphism(two, two, {0: 0, 1: 1})
    assert not verdict
    assert verdict.witness[0] == "order mismatch"
    assert check_anti_isomorphism(two, two, {0: 1, 1: 0})


def test_lattice_operations():
    B = boolean_lattice("abc")
    a, b = frozenset("a"), frozenset("b")
    assert B.join(a, b) == frozenset("ab")
    assert B.meet(frozenset("ab"), frozenset("bc")) == b
    assert B.is_lattice()
    assert not FinitePoset("xy", relations=[]).is_lattice()


# --- invariants ---------------------------------------------------------------------------

def _test_posets():
    out = {"boolean3": boolean_lattice("abc"), "chain4": chain(4)}
    for name, M in matroid_fixtures().items():
        out[f"flats:{name}"] = M.flats_lattice()
    for name, OM in oriented_fixtures().items():
        out[f"positive:{name}"] = OM.las_vergnas_lattice()
    out["tubings:P3"] = face_poset(path_graph(3))
    out["tubings:C4"] = face_poset(cycle_graph(4))
    return out


@pytest.mark.property
@pytest.mark.parametrize("name", sorted(_test_posets()))
def test_mobius_sums_vanish_on_proper_intervals(name):
    P = _test_posets()[name]
    for x in P.elements:
        for y in P.upset(x):
            if x != y:
                assert sum(P.mobius(x, z) for z in P.interval(x, y)) == 0


@st.composite
def random_posets(draw):
    n = draw(st.integers(1, 7))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return FinitePoset(range(n), relations=chosen)


@pytest.mark.property
@settings(max_examples=80, deadline=None)
@given(random_posets())
def test_mobius_sums_vanish_on_random_posets(P):
    for x in P.elements:
        for y in P.upset(x):
            if x != y:
                assert sum(P.mobius(x, z) for z in P.interval(x, y)) == 0


@settings(max_examples=50, deadline=None)
@given(random_posets())
def test_covers_generate_the_order(P):
    Q = FinitePoset(P.elements, relations=P.covers())
    assert Q.relations() == P.relations()


@pytest.mark.property
@pytest.mark.parametrize("k", [0, 1, 2])
def test_sphere_boundaries_have_alternating_reduced_euler_characteristic(k):
    simplex = range(k + 2)
    boundary = SimplicialComplex(combinations(simplex, k + 1))
    assert reduced_euler_characteristic(boundary) == (-1) ** k


def _all_test_matroids():
    ms = dict(matroid_fixtures())
    for name in ("A3", "A4", "B3", "C3", "D4"):
        ms[name] = coxeter(name)[1].matroid
    ms["parallel"] = from_rational_matrix([(1, 0), (2, 0), (0, 1), (1, 1)])
    return ms


@pytest.mark.property
@pytest.mark.parametrize("name", sorted(_all_test_matroids()))
def test_order_complex_of_flats_has_reduced_euler_characteristic_mu(name):
    M = _all_test_matroids()[name]
    K = order_complex(M.flats_lattice(), strip_bounds=True)
    assert reduced_euler_characteristic(K) == mu(M)
