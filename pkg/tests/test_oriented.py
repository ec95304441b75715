from itertools import permutations

import pytest

from _fixtures import (
    A3_COLUMNS,
    U23_COLUMNS,
    a3,
    coxeter,
    oriented_fixtures,
    rank1,
    sampled_sign_vectors,
    square,
    u23,
)
from bergman_kit import linalg
from bergman_kit.matroid import MatroidError, beta, from_rational_matrix, mu
from bergman_kit.oriented import (
    LCG,
    OrientedMatroid,
    bounded_topes,
    compose,
    from_str,
    generic_extension,
    is_generic,
    negate,
    to_str,
)

S = frozenset
A3_POSITIVE = {S(), S("1"), S("4"), S("6"), S("16"), S("124"), S("456"), S("123456")}


def test_sign_vector_strings_round_trip():
    assert to_str(from_str("+-0")) == "+-0"
    assert compose(from_str("0+-"), from_str("--+")) == from_str("-+-")


def test_cocircuits_of_u23():
    cc = u23().cocircuits()
    assert len(cc) == 6
    assert from_str("+-0") in cc and from_str("-+0") in cc


def test_cocircuit_counts():
    assert len(a3().cocircuits()) == 14
    assert rank1().cocircuits() == {(1,), (-1,)}


def test_covectors_rank1_and_u23():
    assert rank1().covectors() == {(0,), (1,), (-1,)}
    cov = u23().covectors()
    assert len(cov) == 13
    assert cov == sampled_sign_vectors(U23_COLUMNS, 3)


def test_covectors_of_a3_match_sampled_points():
    assert a3().covectors() == sampled_sign_vectors(A3_COLUMNS, 3)


def test_a3_topes_are_the_permutation_regions():
    pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    expected = set()
    for perm in permutations(range(4)):
        expected.add(tuple(1 if perm[i] > perm[j] else -1 for i, j in pairs))
    assert a3().topes() == expected
    assert len(expected) == 24


def test_covector_guard():
    M = from_rational_matrix([(1, i) for i in range(15)])
    with pytest.raises(MatroidError):
        OrientedMatroid(M).covectors()


def test_oriented_needs_matrix():
    from bergman_kit.matroid import uniform

    with pytest.raises(MatroidError):
        OrientedMatroid(uniform(2, 3))


def test_chirotope_is_alternating_and_matches_determinants():
    OM = a3()
    assert OM.chirotope("146") == -OM.chirotope("416")
    assert OM.chirotope("124") == 0
    # reorientation flips the sign of any basis containing the flipped element
    assert OM.reorient_set("1").chirotope("146") == -OM.chirotope("146")


def test_a3_positive_flats():
    assert a3().positive_flats() == A3_POSITIVE
    assert a3().positive_flats_fm() == A3_POSITIVE


def test_totally_cyclic_u23():
    OM = OrientedMatroid(from_rational_matrix([(1, 0), (0, 1), (-1, -1)]))
    assert not OM.is_acyclic()
    assert OM.positive_flats() == {OM.matroid.E}
    with pytest.raises(MatroidError):
        OM.las_vergnas_lattice()


def test_square_positive_flats_and_face_lattice():
    OM = square()
    expected = {S(), S("1"), S("2"), S("3"), S("4"), S("12"), S("23"), S("34"), S("14"), S("1234")}
    assert OM.positive_flats() == expected
    assert OM.positive_flats_fm() == expected
    assert len(OM.las_vergnas_lattice()) == 10


def test_las_vergnas_lattice_examples():
    L = a3().las_vergnas_lattice()
    assert set(L.elements) == A3_POSITIVE
    assert L.is_lattice()
    assert len(rank1().las_vergnas_lattice()) == 2


def test_reorient_examples():
    OM = a3()
    plus = (1,) * 6
    assert OM.reorient(plus).positive_flats() == OM.positive_flats()
    # region x2 > x1 > x3 > x4: only e1 - e2 changes sign
    T = (-1, 1, 1, 1, 1, 1)
    swapped = OM.reorient(T).positive_flats()
    swap = {"1": "1", "2": "4", "3": "5", "4": "2", "5": "3", "6": "6"}
    assert swapped == {S(swap[e] for e in F) for F in OM.positive_flats()}
    twice = OM.reorient(T)
    back = twice.reorient((1,) * 6)
    assert back.reorientation == twice.reorientation
    assert twice.reorient(T).reorientation == S()
    with pytest.raises(MatroidError):
        OM.reorient((1, -1, 1, 1, 1, 1))


def test_lcg_is_deterministic():
    a, b = LCG(7), LCG(7)
    assert [a.next() for _ in range(5)] == [b.next() for _ in range(5)]


def test_generic_extension_examples():
    ext = generic_extension(rank1(), seed=3)
    assert ext.g != (0,)
    ext = generic_extension(a3(), seed=0)
    assert len(ext.certificate) == 13
    assert not is_generic(u23(), u23().coords["1"])
    assert generic_extension(a3(), 5).g == generic_extension(a3(), 5).g


def test_bounded_tope_counts():
    assert len(bounded_topes(generic_extension(a3(), 0))) == 6
    ext = generic_extension(u23(), 0)
    assert len(bounded_topes(ext)) == 2 == beta(ext.matroid())
    assert len(bounded_topes(generic_extension(rank1(), 0))) == 1


# --- invariants ------------------------------------------------------------------------------

@pytest.mark.property
@pytest.mark.parametrize("name", sorted(oriented_fixtures()))
def test_covectors_closed_under_composition_and_negation(name):
    cov = oriented_fixtures()[name].covectors()
    assert (0,) * len(next(iter(cov))) in cov
    for X in cov:
        assert negate(X) in cov
        for Y in cov:
            assert compose(X, Y) in cov


@pytest.mark.property
@pytest.mark.parametrize("name", sorted(oriented_fixtures()))
def test_components_of_positive_flats_are_positive(name):
    OM = oriented_fixtures()[name]
    pos = OM.positive_flats()
    for F in pos:
        if F:
            for C in OM.matroid.restrict(F).connected_components():
                assert C in pos


def _bounded_cases():
    fixtures = dict(oriented_fixtures())
    fixtures["A4"] = coxeter("A4")[1]
    return fixtures


@pytest.mark.property
@pytest.mark.parametrize("name", sorted(_bounded_cases()))
@pytest.mark.parametrize("seed", [0, 1, 2])
def test_bounded_tope_count_equals_beta_and_mu(name, seed):
    OM = _bounded_cases()[name]
    ext = generic_extension(OM, seed)
    assert is_generic(OM, ext.g)
    count = len(bounded_topes(ext))
    assert count == beta(ext.matroid()) == abs(mu(OM.matroid))


@pytest.mark.property
@pytest.mark.parametrize("name", sorted(oriented_fixtures()))
def test_reorientation_positivity_matches_conformal_zero_sets(name):
    OM = oriented_fixtures()[name]
    for T in OM.topes():
        assert OM.reorient(T).positive_flats() == OM.conformal_zero_sets(T)


@pytest.mark.parametrize("name", sorted(oriented_fixtures()))
def test_positive_flats_match_feasibility_oracle(name):
    OM = oriented_fixtures()[name]
    assert OM.positive_flats() == OM.positive_flats_fm()


@pytest.mark.parametrize("name", sorted(oriented_fixtures()))
def test_all_plus_is_a_tope_iff_acyclic(name):
    OM = oriented_fixtures()[name]
    assert ((1,) * len(OM.ground) in OM.topes()) == OM.is_acyclic()
