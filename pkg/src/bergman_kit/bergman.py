"""Flags of flats, flag matroids, forests, and the fine/coarse Bergman complexes.

A flag is a tuple ``(F_1, ..., F_k)`` of frozensets, strictly increasing,
each a proper nonempty subset of the ground set.  The implicit ends
``F_0 = {}`` and ``F_{k+1} = E`` are never stored.  The empty tuple is the
trivial flag.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .matroid import Matroid, MatroidError, direct_sum, minor
from .oriented import OrientedMatroid, conforms, to_str
from .posets import FinitePoset, SimplicialComplex, Verdict, order_complex

Flag = tuple


def normalize_flag(chain: Iterable[Iterable[str]]) -> Flag:
    flag = tuple(frozenset(F) for F in chain)
    for a, b in zip(flag, flag[1:]):
        if not a < b:
            raise ValueError("flag members must be strictly increasing")
    return flag


def flag_of_weight(weights: Mapping[str, object]) -> Flag:
    """The chain of sublevel sets of ``weights`` (ground label -> number).

    ``F_i`` collects the elements carrying the ``i`` smallest weight values;
    the whole ground set is left implicit.
    """
    levels: dict = {}
    for e, w in weights.items():
        levels.setdefault(w, set()).add(e)
    out = []
    acc: set = set()
    for w in sorted(levels)[:-1]:
        acc |= levels[w]
        out.append(frozenset(acc))
    return tuple(out)


def is_valid_flag(M: Matroid, chain: Iterable[Iterable[str]]) -> bool:
    """Every member of ``{} < F_1 < ... < F_k < E`` is a flat of M.

    The empty set is included, so matroids with loops have no valid flags.
    """
    flag = normalize_flag(chain)
    return all(M.is_flat(F) for F in (frozenset(),) + flag)


def _require_valid(M: Matroid, flag: Flag) -> None:
    if not is_valid_flag(M, flag):
        raise MatroidError("not a flag of flats")


def flag_intervals(M: Matroid, flag: Flag) -> list[tuple[frozenset, frozenset]]:
    chain = [frozenset()] + list(flag) + [M.E]
    return list(zip(chain, chain[1:]))


def matroid_of_flag(M: Matroid, flag: Iterable[Iterable[str]], check: bool = True) -> Matroid:
    """Direct sum of the interval minors ``F_i / F_{i-1}``, on the labels of M."""
    flag = normalize_flag(flag)
    if check:
        _require_valid(M, flag)
    return direct_sum([minor(M, hi, lo) for lo, hi in flag_intervals(M, flag)])


class FlagKeys:
    """Memoised canonical keys of flag matroids for one matroid."""

    def __init__(self, M: Matroid):
        self.M = M
        self._parts: dict = {}

    def interval(self, lo: frozenset, hi: frozenset) -> frozenset:
        k = (lo, hi)
        if k not in self._parts:
            self._parts[k] = minor(self.M, hi, lo).canonical_key()
        return self._parts[k]

    def __call__(self, flag: Flag) -> frozenset:
        return frozenset().union(*(self.interval(lo, hi) for lo, hi in flag_intervals(self.M, flag)))


# --- forests ------------------------------------------------------------------

@dataclass(frozen=True)
class LabeledForest:
    """Forest of connected flats; ``edges`` holds ``(child, parent)`` pairs."""

    nodes: frozenset
    edges: frozenset

    @property
    def roots(self) -> frozenset:
        children = {c for c, _ in self.edges}
        return frozenset(self.nodes - children)

    def children(self, node: frozenset) -> frozenset:
        return frozenset(c for c, p in self.edges if p == node)

    def to_dot(self, M: Matroid, name: str = "forest") -> str:
        def key(F):
            return (-len(F), [M.index[e] for e in M.sorted(F)])

        lines = [f"digraph {name} {{"]
        for F in sorted(self.nodes, key=key):
            lines.append(f'  "{M.fmt(F)}";')
        for c, p in sorted(self.edges, key=lambda cp: (key(cp[1]), key(cp[0]))):
            lines.append(f'  "{M.fmt(p)}" -> "{M.fmt(c)}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _components(M: Matroid, F: frozenset) -> list[frozenset]:
    return M.restrict(F).connected_components() if F else []


def forest_of_flag(M: Matroid, flag: Iterable[Iterable[str]], check: bool = True) -> LabeledForest:
    """The forest of connected components of the flag members.

    Built recursively (children of a node are the components of the next
    smaller flag member strictly inside it) and, independently, as the Hasse
    diagram of all components under inclusion; the two must agree.
    """
    flag = normalize_flag(flag)
    if check:
        _require_valid(M, flag)
    chain = [frozenset()] + list(flag) + [M.E]
    comps = [_components(M, F) for F in chain]

    nodes: set = set()
    edges: set = set()

    def grow(label: frozenset, j: int) -> None:
        # j is the smallest index with label a component of chain[j]
        nodes.add(label)
        for child in comps[j - 1]:
            if child < label:
                jc = min(i for i in range(j) if child in comps[i])
                edges.add((child, label))
                grow(child, jc)

    for root in comps[-1]:
        grow(root, min(i for i in range(len(chain)) if root in comps[i]))
    recursive = LabeledForest(frozenset(nodes), frozenset(edges))

    labels = {C for cs in comps for C in cs}
    hasse = set()
    for c in labels:
        above = [p for p in labels if c < p]
        hasse.update((c, p) for p in above if not any(c < q < p for q in above))
    listed = LabeledForest(frozenset(labels), frozenset(hasse))
    if recursive != listed:
        raise AssertionError("forest constructions disagree")
    return recursive


# --- complexes ---------------------------------------------------------------

def all_flags(M: Matroid, members: Iterable[frozenset] | None = None) -> list[Flag]:
    """Every flag whose members come from ``members`` (default: the proper
    nonempty flats), the trivial flag included.  Empty if M has loops."""
    if M.loops():
        return []
    if members is None:
        members = [F for F in M.flats() if F and F != M.E]
    members = list(members)
    P = FinitePoset(members, leq=lambda a, b: a <= b)
    out: list[Flag] = [()]
    for K in order_complex(P).faces():
        out.append(tuple(sorted(K, key=len)))
    out.sort(key=lambda f: flag_sort_key(M, f))
    return out


def flag_sort_key(M: Matroid, flag: Flag):
    return (len(flag), [[M.index[e] for e in M.sorted(F)] for F in flag])


def bergman_fine(M: Matroid) -> SimplicialComplex:
    """Order complex of the proper part of the lattice of flats."""
    return order_complex(M.flats_lattice(), strip_bounds=True)


@dataclass
class CoarseCell:
    key: frozenset
    flags: tuple

    @property
    def dim(self) -> int:
        return max(len(f) for f in self.flags) - 1

    def forests(self, M: Matroid) -> set[LabeledForest]:
        return {forest_of_flag(M, f, check=False) for f in self.flags}


@dataclass
class CoarseSubdivision:
    """Coarse cells (grouped flags) and their face order on cell indices.

    The cell holding the trivial flag is included; for a connected matroid
    it is the bottom element (the empty face, dimension -1).
    """

    matroid: Matroid
    cells: list
    poset: FinitePoset
    cell_of: dict = field(repr=False)

    def f_vector(self) -> tuple[int, ...]:
        dims = [c.dim for c in self.cells if c.dim >= 0]
        return tuple(dims.count(d) for d in range(max(dims, default=-1) + 1))

    def euler_characteristic(self) -> int:
        return sum((-1) ** c.dim for c in self.cells if c.dim >= 0)


def _subdivision(M: Matroid, flags: Sequence[Flag], keys: FlagKeys) -> CoarseSubdivision:
    groups: dict = {}
    for f in flags:
        groups.setdefault(keys(f), []).append(f)
    cells = [CoarseCell(k, tuple(fs)) for k, fs in groups.items()]
    cells.sort(key=lambda c: (c.dim, flag_sort_key(M, c.flags[0])))
    cell_of = {f: i for i, c in enumerate(cells) for f in c.flags}
    rel = set()
    for i, c in enumerate(cells):
        for f in c.flags:
            for k in range(len(f)):
                for sub in combinations(f, k):
                    if sub in cell_of:
                        rel.add((cell_of[sub], i))
    poset = FinitePoset(range(len(cells)), relations=rel)
    return CoarseSubdivision(M, cells, poset, cell_of)


def bergman_coarse(M: Matroid) -> CoarseSubdivision:
    """Group all flags of flats by their flag matroid (literal equality of
    rank functions on the shared ground set)."""
    return _subdivision(M, all_flags(M), FlagKeys(M))


@dataclass
class PositiveBergman:
    fine: SimplicialComplex
    coarse: CoarseSubdivision
    positive_flats: frozenset


def positive_bergman(OM: OrientedMatroid, coarse: CoarseSubdivision | None = None) -> PositiveBergman:
    """Restriction of both subdivisions to flags of positive flats.

    Raises if some coarse cell is only partly positive.
    """
    if not OM.is_acyclic():
        raise MatroidError("positive Bergman complex needs an acyclic orientation")
    M = OM.matroid
    pos = frozenset(OM.positive_flats())
    fine = order_complex(OM.las_vergnas_lattice(), strip_bounds=True)
    if coarse is None:
        coarse = bergman_coarse(M)
    keep = []
    for i, c in enumerate(coarse.cells):
        inside = [all(F in pos for F in f) for f in c.flags]
        if any(inside) and not all(inside):
            raise AssertionError(f"coarse cell {i} straddles the positive complex")
        if all(inside):
            keep.append(i)
    keep_set = set(keep)
    cells = [coarse.cells[i] for i in keep]
    renum = {old: new for new, old in enumerate(keep)}
    rel = [(renum[a], renum[b]) for a, b in coarse.poset.relations() if a in keep_set and b in keep_set]
    poset = FinitePoset(range(len(cells)), relations=rel)
    cell_of = {f: renum[i] for f, i in coarse.cell_of.items() if i in keep_set}
    return PositiveBergman(fine, CoarseSubdivision(M, cells, poset, cell_of), pos)


# --- covering by positive complexes ------------------------------------------------

def positive_wrt(OM: OrientedMatroid, T: Sequence[int]) -> set[frozenset]:
    """Flats positive for the tope T, via conformal covectors."""
    return OM.conformal_zero_sets(tuple(T))


def positive_wrt_by_reorientation(OM: OrientedMatroid, T: Sequence[int]) -> set[frozenset]:
    return OM.reorient(tuple(T)).positive_flats()


def covers(OM: OrientedMatroid, topes: Iterable[Sequence[int]]) -> Verdict:
    """Does every flag of flats consist of flats positive for one of ``topes``?

    Only maximal flags need checking.  The witness is an uncovered flag.
    """
    M = OM.matroid
    topes = [tuple(T) for T in topes]
    pos = [positive_wrt(OM, T) for T in topes]
    proper = M.flats_lattice().subposet(F for F in M.flats() if F and F != M.E)
    maximal = [tuple(c) for c in proper.maximal_chains()] or [()]
    for flag in maximal:
        if not any(all(F in P for F in flag) for P in pos):
            return Verdict(False, flag)
    return Verdict(True, details={"maximal_flags": len(maximal), "topes": [to_str(T) for T in topes]})


# --- Weyl group action -----------------------------------------------------------

def is_automorphism(M: Matroid, perm: Mapping[str, str]) -> bool:
    if set(perm) != set(M.E) or set(perm.values()) != set(M.E):
        return False
    bases = set(M.bases())
    return all(frozenset(perm[e] for e in B) in bases for B in bases)


def generate_group(generators: Sequence[Mapping[str, str]], ground: Sequence[str]) -> list[dict]:
    """All products of the generators, as label permutations."""
    ground = list(ground)
    gens = [tuple(g[e] for e in ground) for g in generators]
    pos = {e: i for i, e in enumerate(ground)}
    ident = tuple(ground)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                # (g . w)(e) = g(w(e))
                gw = tuple(g[pos[w[i]]] for i in range(len(ground)))
                if gw not in seen:
                    seen.add(gw)
                    nxt.append(gw)
        frontier = nxt
    return [dict(zip(ground, w)) for w in sorted(seen)]


def apply_to_flag(perm: Mapping[str, str], flag: Flag) -> Flag:
    return tuple(frozenset(perm[e] for e in F) for F in flag)


def tevelev_check(
    OM: OrientedMatroid,
    generators: Sequence[Mapping[str, str]],
    coarse: CoarseSubdivision | None = None,
) -> Verdict:
    """Is every coarse cell of B(M) carried into B+(M) by some group element?

    Each generator must be a matroid automorphism; the check also confirms
    every group element maps coarse cells onto coarse cells.  The witness is
    a cell index with no such group element.
    """
    M = OM.matroid
    for g in generators:
        if not is_automorphism(M, g):
            raise MatroidError("generator is not a matroid automorphism")
    if coarse is None:
        coarse = bergman_coarse(M)
    pos = OM.positive_flats()
    group = generate_group(generators, M.ground)
    positive_cells = {i for i, c in enumerate(coarse.cells) if all(F in pos for F in c.flags[0])}
    for w in group:
        for i, c in enumerate(coarse.cells):
            image = {apply_to_flag(w, f) for f in c.flags}
            j = coarse.cell_of.get(next(iter(image)))
            if j is None or set(coarse.cells[j].flags) != image:
                return Verdict(False, ("not cellular", i))
    for i, c in enumerate(coarse.cells):
        f = c.flags[0]
        if not any(coarse.cell_of[apply_to_flag(w, f)] in positive_cells for w in group):
            return Verdict(False, i)
    return Verdict(True, details={"group_order": len(group), "cells": len(coarse.cells), "positive_cells": len(positive_cells)})


# --- flags of positive flats to tubings ------------------------------------------

def psi(rs, M: Matroid, flag: Iterable[Iterable[str]]) -> frozenset:
    """Tubing of the Coxeter diagram read off a flag of positive flats.

    Each connected component of a flag member is a parabolic flat; its tube
    is the set of diagram nodes whose simple roots it contains.  ``rs`` is a
    root system labelling the ground set of ``M``.
    """
    flag = normalize_flag(flag)
    tubes = set()
    for F in flag:
        JF = frozenset(s for s, b in rs.simple_label.items() if b in F)
        if rs.parabolic(JF) != F:
            raise ValueError(f"{M.fmt(F)} is not a positive flat")
        for C in _components(M, F):
            J = frozenset(s for s, b in rs.simple_label.items() if b in C)
            if rs.parabolic(J) != C:
                raise ValueError(f"{M.fmt(C)} is not a positive flat")
            tubes.add(J)
    return frozenset(tubes)
