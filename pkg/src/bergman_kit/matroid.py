"""Matroids on labelled ground sets with exact rank oracles."""

from __future__ import annotations

import threading
from itertools import combinations
from typing import Callable, Iterable, Sequence

from . import linalg
from .posets import FinitePoset, Verdict

MAX_FLAT_GROUND = 20
MAX_CIRCUIT_GROUND = 10


class MatroidError(ValueError):
    pass


class Matroid:
    """A matroid given by an ordered tuple of string labels and a rank oracle.

    ``rank_fn`` receives frozensets of labels.  Ranks are memoised; the memo
    is guarded by a lock so a matroid can be shared between threads.
    """

    def __init__(
        self,
        ground: Sequence[str],
        rank_fn: Callable[[frozenset], int],
        provenance: str = "custom",
        columns: dict | None = None,
    ):
        self.ground: tuple[str, ...] = tuple(ground)
        self.index = {e: i for i, e in enumerate(self.ground)}
        if len(self.index) != len(self.ground):
            raise MatroidError("duplicate labels")
        self.E = frozenset(self.ground)
        self._rank_fn = rank_fn
        self.provenance = provenance
        self.columns = columns
        self._memo: dict = {}
        self._lock = threading.Lock()
        self._flats: list | None = None
        self._lattice: FinitePoset | None = None

    def __repr__(self) -> str:
        return f"Matroid(n={len(self.ground)}, r={self.r}, {self.provenance})"

    def __len__(self) -> int:
        return len(self.ground)

    # --- basic oracles ------------------------------------------------------

    def _check(self, S) -> frozenset:
        S = frozenset(S)
        if not S <= self.E:
            raise MatroidError(f"not a subset of the ground set: {sorted(S - self.E)}")
        return S

    def rank(self, S: Iterable[str] = ()) -> int:
        S = self._check(S)
        with self._lock:
            if S in self._memo:
                return self._memo[S]
        val = self._rank_fn(S)
        with self._lock:
            self._memo[S] = val
        return val

    @property
    def r(self) -> int:
        return self.rank(self.E)

    def sorted(self, S: Iterable[str]) -> tuple[str, ...]:
        return tuple(sorted(S, key=self.index.__getitem__))

    def fmt(self, S: Iterable[str]) -> str:
        """Canonical string for a subset, e.g. ``"{1,2,4}"``."""
        return "{" + ",".join(self.sorted(S)) + "}"

    def closure(self, S: Iterable[str]) -> frozenset:
        S = self._check(S)
        rS = self.rank(S)
        return S | frozenset(e for e in self.E - S if self.rank(S | {e}) == rS)

    def is_flat(self, S: Iterable[str]) -> bool:
        S = self._check(S)
        return self.closure(S) == S

    def is_independent(self, S: Iterable[str]) -> bool:
        S = self._check(S)
        return self.rank(S) == len(S)

    def is_basis(self, S: Iterable[str]) -> bool:
        S = self._check(S)
        return len(S) == self.r and self.rank(S) == self.r

    def bases(self) -> list[frozenset]:
        return [frozenset(B) for B in combinations(self.ground, self.r) if self.rank(B) == self.r]

    def circuits(self) -> list[frozenset]:
        """Brute-force circuit enumeration (minimal dependent sets)."""
        out: list[frozenset] = []
        for k in range(1, self.r + 2):
            for C in combinations(self.ground, k):
                C = frozenset(C)
                if self.rank(C) == k - 1 and not any(D < C for D in out):
                    out.append(C)
        return out

    def loops(self) -> frozenset:
        return frozenset(e for e in self.ground if self.rank({e}) == 0)

    def coloops(self) -> frozenset:
        return frozenset(e for e in self.ground if self.rank(self.E - {e}) < self.r)

    def rank_table(self) -> dict:
        """The full rank function; exponential, for tests and small fixtures."""
        return {
            frozenset(S): self.rank(S)
            for k in range(len(self.ground) + 1)
            for S in combinations(self.ground, k)
        }

    # --- flats ------------------------------------------------------------------

    def flats(self) -> list[frozenset]:
        """All flats, sorted by rank and then canonically."""
        if self._flats is None:
            if len(self.ground) > MAX_FLAT_GROUND:
                raise MatroidError(f"flat enumeration guard: |E| > {MAX_FLAT_GROUND}")
            bottom = self.closure(())
            seen = {bottom}
            frontier = [bottom]
            while frontier:
                nxt = []
                for F in frontier:
                    for e in self.ground:
                        if e not in F:
                            G = self.closure(F | {e})
                            if G not in seen:
                                seen.add(G)
                                nxt.append(G)
                frontier = nxt
            self._flats = sorted(seen, key=lambda F: (self.rank(F), [self.index[e] for e in self.sorted(F)]))
        return list(self._flats)

    def flats_lattice(self) -> FinitePoset:
        if self._lattice is None:
            self._lattice = FinitePoset(self.flats(), leq=lambda a, b: a <= b)
        return self._lattice

    def hyperplanes(self) -> list[frozenset]:
        return [F for F in self.flats() if self.rank(F) == self.r - 1]

    # --- structure ----------------------------------------------------------

    def basis(self) -> frozenset:
        """Greedy basis in ground order."""
        B: set = set()
        for e in self.ground:
            if self.rank(B | {e}) > len(B):
                B.add(e)
        return frozenset(B)

    def basic_circuit(self, B: Iterable[str], e: str) -> frozenset:
        """The unique circuit inside ``B + e``."""
        B = self._check(B)
        if not self.is_basis(B):
            raise MatroidError(f"{self.fmt(B)} is not a basis")
        if e in B:
            raise MatroidError(f"{e} lies in the basis")
        self._check({e})
        return frozenset({e} | {b for b in B if self.rank((B - {b}) | {e}) == self.r})

    def connected_components(self) -> list[frozenset]:
        """Classes of the 'share a circuit' relation.

        Uses the fact that the basic circuits of any one basis already
        generate the relation.
        """
        B = self.basis()
        parent = {e: e for e in self.ground}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in self.ground:
            if e in B:
                continue
            C = self.basic_circuit(B, e)
            root = find(e)
            for c in C:
                parent[find(c)] = root
        groups: dict = {}
        for e in self.ground:
            groups.setdefault(find(e), set()).add(e)
        comps = [frozenset(g) for g in groups.values()]
        comps.sort(key=lambda C: min(self.index[e] for e in C))
        return comps

    def is_connected(self) -> bool:
        return len(self.connected_components()) <= 1

    def restrict(self, S: Iterable[str]) -> "Matroid":
        return minor(self, S, ())

    def delete(self, S: Iterable[str]) -> "Matroid":
        return minor(self, self.E - frozenset(S), ())

    def contract(self, S: Iterable[str]) -> "Matroid":
        return minor(self, self.E, S)

    def canonical_key(self) -> frozenset:
        """A hashable value that is equal for two matroids on the same labelled
        ground set iff their rank functions agree.

        The matroid is the direct sum of its connected components, so the
        components together with their bases pin it down.
        """
        parts = []
        for C in self.connected_components():
            k = self.rank(C)
            bases = frozenset(frozenset(B) for B in combinations(self.sorted(C), k) if self.rank(B) == k)
            parts.append((C, bases))
        return frozenset(parts)

    def same_as(self, other: "Matroid") -> bool:
        return self.E == other.E and self.canonical_key() == other.canonical_key()


# --- constructors -------------------------------------------------------------

def from_rational_matrix(columns: Sequence[Sequence], labels: Sequence | None = None) -> Matroid:
    """The vector matroid of ``columns`` (one vector per ground element)."""
    cols = [linalg.vec(c) for c in columns]
    if labels is None:
        labels = [str(i + 1) for i in range(len(cols))]
    labels = [str(x) for x in labels]
    if len(labels) != len(cols):
        raise MatroidError("label count differs from column count")
    if len(set(labels)) != len(labels):
        raise MatroidError("duplicate labels")
    if cols and len({len(c) for c in cols}) != 1:
        raise MatroidError("columns have different dimensions")
    colmap = dict(zip(labels, cols))

    def rank_fn(S):
        return linalg.rank([colmap[e] for e in S])

    return Matroid(labels, rank_fn, provenance="matrix", columns=colmap)


def _complete_circuits(ground: Sequence[str], circuits: Iterable[Iterable[str]]) -> list[frozenset]:
    # close under circuit elimination: for C1 != C2 sharing e, (C1 | C2) - e
    # must contain a circuit; if it does not, it is added as a dependent set
    deps = {frozenset(c) for c in circuits}
    changed = True
    while changed:
        changed = False
        minimal = [C for C in deps if not any(D < C for D in deps)]
        for C1, C2 in combinations(minimal, 2):
            for e in C1 & C2:
                U = (C1 | C2) - {e}
                if not any(D <= U for D in deps):
                    deps.add(U)
                    changed = True
    return sorted((C for C in deps if not any(D < C for D in deps)), key=lambda C: sorted(C))


def from_circuits(labels: Sequence, circuits: Iterable[Iterable]) -> Matroid:
    """Matroid whose circuits are (the elimination closure of) ``circuits``.

    Rank is computed greedily from independence testing, so this is meant for
    small hand-made fixtures only.
    """
    labels = [str(x) for x in labels]
    if len(labels) > MAX_CIRCUIT_GROUND:
        raise MatroidError(f"circuit provenance guard: |E| > {MAX_CIRCUIT_GROUND}")
    if len(set(labels)) != len(labels):
        raise MatroidError("duplicate labels")
    circs = [frozenset(str(x) for x in c) for c in circuits]
    for c in circs:
        if not c or not c <= set(labels):
            raise MatroidError(f"bad circuit {sorted(c)}")
    circs = _complete_circuits(labels, circs)

    def independent(S):
        return not any(C <= S for C in circs)

    def rank_fn(S):
        I: set = set()
        for e in sorted(S, key=labels.index):
            if independent(frozenset(I | {e})):
                I.add(e)
        return len(I)

    m = Matroid(labels, rank_fn, provenance="circuits")
    m.listed_circuits = circs
    return m


def uniform(r: int, n: int, labels: Sequence | None = None) -> Matroid:
    labels = [str(i + 1) for i in range(n)] if labels is None else [str(x) for x in labels]
    return Matroid(labels, lambda S: min(len(S), r), provenance=f"U({r},{n})")


def minor(M: Matroid, restrict_to: Iterable[str], contract: Iterable[str] = ()) -> Matroid:
    """``(M | restrict_to) / contract`` on the ground set ``restrict_to - contract``."""
    R = M._check(restrict_to)
    C = M._check(contract)
    if not C <= R:
        raise MatroidError("contract set must lie inside the restriction")
    rC = M.rank(C)
    ground = [e for e in M.ground if e in R and e not in C]
    return Matroid(ground, lambda S: M.rank(S | C) - rC, provenance="minor")


def direct_sum(ms: Sequence[Matroid]) -> Matroid:
    ground: list[str] = []
    owner: dict[str, Matroid] = {}
    for m in ms:
        for e in m.ground:
            if e in owner:
                raise MatroidError(f"label collision on {e!r}")
            owner[e] = m
            ground.append(e)

    def rank_fn(S):
        return sum(m.rank(S & m.E) for m in ms)

    return Matroid(ground, rank_fn, provenance="direct-sum")


# --- invariants ---------------------------------------------------------------

def mu(M: Matroid) -> int:
    """Möbius value mu(0, 1) of the lattice of flats."""
    L = M.flats_lattice()
    return L.mobius(L.minimum(), L.maximum())


def beta(M: Matroid) -> int:
    """Crapo's beta invariant (-1)^r sum_X mu(0, X) r(X) over flats X.

    The flat-sum form is valid for loopless matroids; a matroid with loops
    has beta = 0.
    """
    if M.loops():
        return 0
    L = M.flats_lattice()
    bottom = L.minimum()
    total = sum(L.mobius(bottom, X) * M.rank(X) for X in L.elements)
    return (-1) ** M.r * total


def beta_by_subsets(M: Matroid) -> int:
    """beta via (-1)^r sum_{S subset E} (-1)^|S| r(S); exponential oracle."""
    total = 0
    for k in range(len(M.ground) + 1):
        for S in combinations(M.ground, k):
            total += (-1) ** k * M.rank(S)
    return (-1) ** M.r * total


# --- circuitous bases -----------------------------------------------------------

def spanned_connected_flats(M: Matroid, B: Iterable[str], min_rank: int = 1) -> list[frozenset]:
    """Connected flats of rank >= ``min_rank`` spanned by a subset of ``B``."""
    B = M.sorted(B)
    out = []
    for k in range(max(min_rank, 1), len(B) + 1):
        for I in combinations(B, k):
            F = M.closure(I)
            if M.restrict(F).is_connected():
                out.append(F)
    return out


def is_circuitous(M: Matroid, B: Iterable[str], min_rank: int = 2) -> Verdict:
    """Is every connected flat spanned by a subset of ``B`` (of rank at least
    ``min_rank``) the closure of a basic circuit C(B, e)?

    ``min_rank=1`` gives the literal reading including singleton flats, which
    no basis of a simple matroid can satisfy.
    On failure the witness is the offending flat.
    """
    B = frozenset(B)
    if not M.is_basis(B):
        raise MatroidError(f"{M.fmt(B)} is not a basis")
    spans = {}
    for e in M.ground:
        if e not in B:
            spans.setdefault(M.closure(M.basic_circuit(B, e)), []).append(e)
    certificate = {}
    for F in spanned_connected_flats(M, B, min_rank):
        if F not in spans:
            return Verdict(False, F)
        certificate[F] = spans[F][0]
    return Verdict(True, details={"certificate": certificate})
