"""Realizable oriented matroids: sign vectors, covectors, positive flats.

Sign vectors are tuples over {+1, -1, 0} aligned with the ground order of
the underlying matroid; :func:`to_str` / :func:`from_str` convert to the
``"+-0"`` text form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import linalg
from .matroid import Matroid, MatroidError, beta, from_rational_matrix, mu
from .posets import FinitePoset, Verdict

MAX_COVECTOR_GROUND = 14

_CHARS = {1: "+", -1: "-", 0: "0"}
_SIGNS = {"+": 1, "-": -1, "0": 0}


def to_str(X: Sequence[int]) -> str:
    return "".join(_CHARS[x] for x in X)


def from_str(s: str) -> tuple[int, ...]:
    return tuple(_SIGNS[c] for c in s)


def compose(X: Sequence[int], Y: Sequence[int]) -> tuple[int, ...]:
    return tuple(x if x else y for x, y in zip(X, Y))


def negate(X: Sequence[int]) -> tuple[int, ...]:
    return tuple(-x for x in X)


def conforms(Y: Sequence[int], T: Sequence[int]) -> bool:
    """``Y <= T`` in the face order: every entry of Y is 0 or agrees with T."""
    return all(y == 0 or y == t for y, t in zip(Y, T))


class OrientedMatroid:
    """Oriented matroid of a rational vector configuration, possibly reoriented.

    Internally the columns are rewritten in the coordinates of a basis of
    their span, which keeps all sign data and makes the ambient dimension
    equal to the rank.
    """

    def __init__(self, matroid: Matroid, reorientation: Iterable[str] = ()):
        if matroid.columns is None:
            raise MatroidError("oriented matroids need matrix provenance")
        self.matroid = matroid
        self.ground = matroid.ground
        self.reorientation = frozenset(reorientation)
        if not self.reorientation <= matroid.E:
            raise MatroidError("reorientation outside the ground set")
        B = matroid.sorted(matroid.basis())
        self.frame = B
        basis_cols = [matroid.columns[b] for b in B]
        self.coords = {}
        for e in self.ground:
            c = linalg.solve(basis_cols, matroid.columns[e])
            flip = -1 if e in self.reorientation else 1
            self.coords[e] = tuple(flip * x for x in c)
        self._covectors: frozenset | None = None

    def __repr__(self) -> str:
        return f"OrientedMatroid(n={len(self.ground)}, r={self.matroid.r}, flipped={sorted(self.reorientation)})"

    @property
    def r(self) -> int:
        return self.matroid.r

    def zero_set(self, X: Sequence[int]) -> frozenset:
        return frozenset(e for e, x in zip(self.ground, X) if x == 0)

    def negative_set(self, X: Sequence[int]) -> frozenset:
        return frozenset(e for e, x in zip(self.ground, X) if x < 0)

    def signs_of(self, y: Sequence) -> tuple[int, ...]:
        """Sign vector of the linear functional ``y`` (frame coordinates)."""
        return tuple(linalg.sign(linalg.dot(y, self.coords[e])) for e in self.ground)

    def chirotope(self, ordered: Sequence[str]) -> int:
        if len(ordered) != self.r:
            raise MatroidError("chirotope takes r elements")
        return linalg.sign(linalg.det([list(self.coords[e]) for e in ordered]))

    def cocircuits(self) -> frozenset:
        out = set()
        for H in self.matroid.hyperplanes():
            rows = [self.coords[e] for e in H]
            (y,) = linalg.nullspace(rows, self.r)
            X = self.signs_of(y)
            out.add(X)
            out.add(negate(X))
        return frozenset(out)

    def covectors(self) -> frozenset:
        """Composition closure of the cocircuits together with 0."""
        if self._covectors is None:
            if len(self.ground) > MAX_COVECTOR_GROUND:
                raise MatroidError(f"covector enumeration guard: |E| > {MAX_COVECTOR_GROUND}")
            zero = (0,) * len(self.ground)
            cocirc = list(self.cocircuits())
            seen = {zero}
            frontier = [zero]
            while frontier:
                nxt = []
                for X in frontier:
                    for C in cocirc:
                        Y = compose(X, C)
                        if Y not in seen:
                            seen.add(Y)
                            nxt.append(Y)
                frontier = nxt
            self._covectors = frozenset(seen)
        return self._covectors

    def topes(self) -> frozenset:
        loops = self.matroid.loops()
        return frozenset(X for X in self.covectors() if self.zero_set(X) == loops)

    def is_acyclic(self) -> bool:
        return (1,) * len(self.ground) in self.covectors()

    def positive_flats(self) -> set[frozenset]:
        """Zero sets of covectors with all entries in {+, 0}.

        The zero covector counts, so E is always positive.
        """
        return {self.zero_set(X) for X in self.covectors() if all(x >= 0 for x in X)}

    def is_positive_flat_fm(self, F: Iterable[str]) -> bool:
        """Exact feasibility oracle: is there ``y`` vanishing on F and
        strictly positive on every other element?"""
        F = frozenset(F)
        eqs = [(self.coords[e], 0) for e in self.ground if e in F]
        ineqs = [(self.coords[e], 0, True) for e in self.ground if e not in F]
        return linalg.fm_feasible(eqs, ineqs, nvars=self.r)

    def positive_flats_fm(self) -> set[frozenset]:
        return {F for F in self.matroid.flats() if self.is_positive_flat_fm(F)}

    def conformal_zero_sets(self, T: Sequence[int]) -> set[frozenset]:
        """Flats positive with respect to the tope ``T``."""
        return {self.zero_set(X) for X in self.covectors() if conforms(X, T)}

    def las_vergnas_lattice(self) -> FinitePoset:
        if not self.is_acyclic():
            raise MatroidError("Las Vergnas lattice needs an acyclic orientation")
        flats = sorted(self.positive_flats(), key=lambda F: (self.matroid.rank(F), [self.matroid.index[e] for e in self.matroid.sorted(F)]))
        return FinitePoset(flats, leq=lambda a, b: a <= b)

    def reorient_set(self, A: Iterable[str]) -> "OrientedMatroid":
        return OrientedMatroid(self.matroid, self.reorientation ^ frozenset(A))

    def reorient(self, T: Sequence[int]) -> "OrientedMatroid":
        """Flip the negative part of the tope ``T``; T becomes the all-+ tope."""
        T = tuple(T)
        if T not in self.topes():
            raise MatroidError(f"{to_str(T)} is not a tope")
        return self.reorient_set(self.negative_set(T))

    # --- minors -------------------------------------------------------------

    def minor_covectors(self, restrict_to: Iterable[str], contract: Iterable[str] = ()) -> set[tuple]:
        """Covectors of ``(OM | restrict_to) / contract`` on the ground
        ``restrict_to - contract`` (in ground order)."""
        R = frozenset(restrict_to)
        C = frozenset(contract)
        keep = [i for i, e in enumerate(self.ground) if e in R and e not in C]
        zero_idx = [i for i, e in enumerate(self.ground) if e in C]
        return {tuple(X[i] for i in keep) for X in self.covectors() if all(X[i] == 0 for i in zero_idx)}

    def flag_is_acyclic(self, flag: Sequence[Iterable[str]]) -> bool:
        """Is the inherited orientation of the flag matroid acyclic?

        The flag matroid is the direct sum of the interval minors, so it is
        acyclic iff each interval minor has an all-+ covector.
        """
        chain = [frozenset()] + [frozenset(F) for F in flag] + [self.matroid.E]
        for lo, hi in zip(chain, chain[1:]):
            cov = self.minor_covectors(hi, lo)
            if (1,) * len(hi - lo) not in cov:
                return False
        return True


def from_matrix(columns: Sequence[Sequence], labels: Sequence | None = None) -> OrientedMatroid:
    return OrientedMatroid(from_rational_matrix(columns, labels))


# --- generic extensions and bounded topes --------------------------------------

class LCG:
    """Deterministic integer generator x -> (a x + c) mod 2^31.

    Used instead of a library PRNG so the sampled extensions are pinned by the
    seed alone, independent of Python version.
    """

    A = 1103515245
    C = 12345
    M = 2 ** 31

    def __init__(self, seed: int):
        self.state = (int(seed) * 2654435761 + 1) % self.M

    def next(self) -> int:
        self.state = (self.A * self.state + self.C) % self.M
        return self.state >> 8

    def integer(self, lo: int, hi: int) -> int:
        return lo + self.next() % (hi - lo + 1)


@dataclass
class AffineExtension:
    base: OrientedMatroid
    g: tuple
    seed: int
    label: str
    certificate: list = field(default_factory=list)
    attempts: int = 0

    def matroid(self) -> Matroid:
        cols = [self.base.coords[e] for e in self.base.ground] + [self.g]
        return from_rational_matrix(cols, list(self.base.ground) + [self.label])

    def oriented(self) -> OrientedMatroid:
        return OrientedMatroid(self.matroid())


def is_generic(OM: OrientedMatroid, g: Sequence) -> Verdict:
    """``g`` avoids the span of every flat of rank < r.

    The certificate lists each proper nonempty flat checked; the empty flat
    amounts to ``g != 0``.
    """
    g = linalg.vec(g)
    if len(g) != OM.r:
        raise MatroidError("g must be given in frame coordinates")
    if all(x == 0 for x in g):
        return Verdict(False, frozenset())
    M = OM.matroid
    checked = []
    for F in M.flats():
        if M.rank(F) >= M.r:
            continue
        vs = [OM.coords[e] for e in F]
        if linalg.rank(vs + [g]) == linalg.rank(vs):
            return Verdict(False, F)
        if F:
            checked.append(F)
    return Verdict(True, details={"certificate": checked})


def generic_extension(OM: OrientedMatroid, seed: int = 0, max_attempts: int = 64) -> AffineExtension:
    """Seeded rejection sampling of a generic element g.

    Coordinates are drawn from [-R, R]; after ``max_attempts`` rejections R
    doubles.
    """
    rng = LCG(seed)
    radius = 8
    attempts = 0
    label = "g"
    while label in OM.matroid.E:
        label += "'"
    while True:
        for _ in range(max_attempts):
            attempts += 1
            g = tuple(Fraction(rng.integer(-radius, radius)) for _ in range(OM.r))
            verdict = is_generic(OM, g)
            if verdict:
                return AffineExtension(OM, g, seed, label, verdict.details["certificate"], attempts)
        radius *= 2


def bounded_topes(ext: AffineExtension) -> set[tuple]:
    """Topes of the base that are bounded with respect to g.

    A tope T' of the extension with T'_g = + is bounded when every nonzero
    covector below it still has a + on g.  Returned with g deleted,
    deduplicated.
    """
    N = ext.oriented()
    gi = N.ground.index(ext.label)
    cov = N.covectors()
    nonzero_below = [Y for Y in cov if any(Y)]
    out = set()
    for T in N.topes():
        if T[gi] != 1:
            continue
        if all(Y[gi] == 1 for Y in nonzero_below if conforms(Y, T)):
            out.add(T[:gi] + T[gi + 1:])
    return out


def bounded_tope_report(OM: OrientedMatroid, seed: int = 0) -> dict:
    ext = generic_extension(OM, seed)
    topes = bounded_topes(ext)
    N = ext.matroid()
    return {
        "seed": seed,
        "g": [str(x) for x in ext.g],
        "bounded_topes": sorted(to_str(T) for T in topes),
        "count": len(topes),
        "beta_extension": beta(N),
        "mu": mu(OM.matroid),
    }

