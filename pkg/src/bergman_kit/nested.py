"""Irreducibles, nested sets and the nested set complex for the minimal building set."""

from __future__ import annotations

from itertools import combinations
from typing import Iterable

from .bergman import CoarseSubdivision, all_flags, bergman_coarse, forest_of_flag
from .matroid import Matroid, MatroidError, minor
from .oriented import OrientedMatroid
from .posets import FinitePoset, SimplicialComplex, Verdict

MAX_LATTICE = 400


def _bottom(L: FinitePoset):
    lo = L.minimum()
    if lo is None:
        raise ValueError("lattice has no bottom element")
    return lo


def is_irreducible(L: FinitePoset, y) -> bool:
    """Is ``[0, y]`` free of a decomposition ``[0, a] x [0, b]`` with a, b < y?

    A decomposition is witnessed by a complementary pair (a meet b = 0,
    a join b = y) for which ``z -> (z meet a, z meet b)`` is a bijection onto
    the product.  The bottom element is never irreducible.
    """
    lo = _bottom(L)
    if y == lo:
        return False
    below = L.interval(lo, y)
    size = len(below)
    for a, b in combinations(below, 2):
        if a in (lo, y) or b in (lo, y):
            continue
        if L.meet(a, b) != lo or L.join(a, b) != y:
            continue
        if len(L.interval(lo, a)) * len(L.interval(lo, b)) != size:
            continue
        if all(L.join(L.meet(z, a), L.meet(z, b)) == z for z in below):
            return False
    return True


def irreducibles(L: FinitePoset) -> list:
    if len(L) > MAX_LATTICE:
        raise ValueError(f"lattice guard: {len(L)} > {MAX_LATTICE} elements")
    if not L.is_lattice():
        raise ValueError("not a lattice")
    return [y for y in L.elements if is_irreducible(L, y)]


def connected_flats(M: Matroid) -> list[frozenset]:
    """Irreducibles of the lattice of flats, i.e. nonempty connected flats."""
    return [F for F in M.flats() if F and M.restrict(F).is_connected()]


class _Joins:
    def __init__(self, L: FinitePoset):
        self.L = L
        self.memo: dict = {}

    def __call__(self, xs) -> object:
        key = frozenset(xs)
        if key not in self.memo:
            self.memo[key] = self.L.join(*key)
        return self.memo[key]


def is_nested(L: FinitePoset, X: Iterable, irr: Iterable | None = None) -> bool:
    """Every antichain of size >= 2 in X has a reducible join."""
    X = list(X)
    irr = set(irreducibles(L) if irr is None else irr)
    if not set(X) <= irr:
        return False
    join = _Joins(L)
    for k in range(2, len(X) + 1):
        for A in combinations(X, k):
            if L.is_antichain(A) and join(A) in irr:
                return False
    return True


def nested_sets(L: FinitePoset, irr: Iterable | None = None) -> list[frozenset]:
    """All nested sets, the empty set included.

    Nested sets are closed under taking subsets, so they are grown one
    irreducible at a time, checking only antichains through the new element.
    """
    irr = list(irreducibles(L) if irr is None else irr)
    irr_set = set(irr)
    join = _Joins(L)
    out = []

    def ok_with(X: list, x) -> bool:
        free = [y for y in X if not L.comparable(x, y)]
        for k in range(1, len(free) + 1):
            for A in combinations(free, k):
                if L.is_antichain(A) and join(A + (x,)) in irr_set:
                    return False
        return True

    def grow(X: list, start: int) -> None:
        out.append(frozenset(X))
        for i in range(start, len(irr)):
            if ok_with(X, irr[i]):
                grow(X + [irr[i]], i + 1)

    grow([], 0)
    return out


def nested_complex(L: FinitePoset, irr: Iterable | None = None) -> SimplicialComplex:
    irr = list(irreducibles(L) if irr is None else irr)
    return SimplicialComplex(nested_sets(L, irr), vertices=irr)


def matroid_nested_sets(M: Matroid) -> list[frozenset]:
    return nested_sets(M.flats_lattice(), connected_flats(M))


def rooted_nested_sets(M: Matroid) -> set[frozenset]:
    """Nested sets of the lattice of flats containing every component of M."""
    comps = frozenset(M.connected_components())
    return {X for X in matroid_nested_sets(M) if comps <= X}


def _require_loopless(M: Matroid) -> None:
    if M.loops():
        raise MatroidError("matroid has loops: no flags of flats")


def forest_label_sets(M: Matroid) -> set[frozenset]:
    """Node labels of the forests of all flags of flats."""
    _require_loopless(M)
    return {forest_of_flag(M, f, check=False).nodes for f in all_flags(M)}


def positive_forest_label_sets(OM: OrientedMatroid) -> set[frozenset]:
    M = OM.matroid
    _require_loopless(M)
    pos = OM.positive_flats()
    members = [F for F in pos if F and F != M.E]
    return {forest_of_flag(M, f, check=False).nodes for f in all_flags(M, members)}


def fs_criterion(M: Matroid) -> Verdict:
    """G/F is connected for every pair of flats F < G with G connected.

    The witness is a failing pair ``(F, G)``.
    """
    flats = M.flats()
    for G in connected_flats(M):
        for F in flats:
            if F < G and not minor(M, G, F).is_connected():
                return Verdict(False, (F, G))
    return Verdict(True)


def coarse_equals_nested(M: Matroid, coarse: CoarseSubdivision | None = None) -> Verdict:
    """Do the coarse cells match the nested sets, as posets?

    Each cell must carry a single forest; dropping the components of M from
    its labels must give a bijection onto the nested sets avoiding the
    components, with cell order matching inclusion.
    """
    _require_loopless(M)
    if coarse is None:
        coarse = bergman_coarse(M)
    comps = frozenset(M.connected_components())
    image = {}
    for i, cell in enumerate(coarse.cells):
        labels = {forest_of_flag(M, f, check=False).nodes for f in cell.flags}
        if len(labels) != 1:
            return Verdict(False, ("cell with several forests", i))
        image[i] = next(iter(labels)) - comps
    nested = {X - comps for X in rooted_nested_sets(M)}
    if len(set(image.values())) != len(image):
        return Verdict(False, ("two cells share a nested set",))
    extra = set(image.values()) ^ nested
    if extra:
        return Verdict(False, ("unmatched nested set", min(extra, key=len)))
    for i in image:
        for j in image:
            if coarse.poset.leq(i, j) != (image[i] <= image[j]):
                return Verdict(False, ("order mismatch", i, j))
    return Verdict(True, details={"cells": len(image)})
