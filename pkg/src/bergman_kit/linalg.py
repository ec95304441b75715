"""Exact linear algebra over the rationals.

Everything here works on plain lists/tuples of :class:`fractions.Fraction`
(ints are accepted and promoted).  Vectors are sequences, matrices are lists
of rows.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple


def frac(x) -> Fraction:
    """Parse ``x`` (int, Fraction, or a string such as ``"-3/4"``) exactly."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass a string or Fraction")
    return Fraction(x)


def vec(xs: Iterable) -> tuple:
    return tuple(frac(x) for x in xs)


def dot(u: Sequence, v: Sequence) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def row_reduce(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form.  Returns ``(rref_rows, pivot_columns)``;
    zero rows are dropped."""
    m = [list(map(frac, r)) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        if piv != 1:
            m[r] = [x / piv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(vectors: Sequence[Sequence]) -> int:
    """Rank of a family of vectors (row or column rank coincide)."""
    if not vectors:
        return 0
    return len(row_reduce(vectors)[1])


def nullspace(rows: Sequence[Sequence], ncols: int | None = None) -> list[tuple]:
    """Basis of ``{x : rows . x = 0}``."""
    if ncols is None:
        if not rows:
            raise ValueError("ncols required for an empty system")
        ncols = len(rows[0])
    red, pivots = row_reduce(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in zip(red, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis


def solve(columns: Sequence[Sequence], target: Sequence) -> tuple | None:
    """Coefficients ``c`` with ``sum c_i columns[i] == target``, or ``None``.

    When the columns are dependent the returned solution sets free
    coefficients to zero."""
    n = len(columns)
    dim = len(target)
    aug = [[frac(columns[j][i]) for j in range(n)] + [frac(target[i])] for i in range(dim)]
    red, pivots = row_reduce(aug)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for row, p in zip(red, pivots):
        x[p] = row[n]
    return tuple(x)


def det(square: Sequence[Sequence]) -> Fraction:
    m = [list(map(frac, r)) for r in square]
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("matrix is not square")
    d = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            d = -d
        piv = m[c][c]
        d *= piv
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] / piv
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return d


def sign(x) -> int:
    return (x > 0) - (x < 0)


# --- Fourier-Motzkin -------------------------------------------------------

def _normalize(coeffs: tuple, rhs: Fraction, strict: bool):
    # scale so the first nonzero coefficient has absolute value 1; keeps the
    # constraint set small enough to dedupe
    lead = next((c for c in coeffs if c != 0), None)
    if lead is None:
        return coeffs, rhs, strict
    s = abs(lead)
    return tuple(c / s for c in coeffs), rhs / s, strict


def fm_feasible(
    equalities: Sequence[tuple[Sequence, object]] = (),
    inequalities: Sequence[tuple[Sequence, object, bool]] = (),
    nvars: int | None = None,
) -> bool:
    """Decide exactly whether a rational linear system has a real solution.

    ``equalities`` are pairs ``(a, b)`` meaning ``a . x == b``.
    ``inequalities`` are triples ``(a, b, strict)`` meaning ``a . x > b`` when
    ``strict`` and ``a . x >= b`` otherwise.

    Equalities are eliminated by Gaussian substitution, then the remaining
    variables by Fourier-Motzkin elimination with strictness tracking.
    """
    rows = [(vec(a), frac(b)) for a, b in equalities]
    ineqs = [(vec(a), frac(b), bool(s)) for a, b, s in inequalities]
    if nvars is None:
        sample = rows[0][0] if rows else (ineqs[0][0] if ineqs else ())
        nvars = len(sample)

    # x = x0 + N z parametrises the affine solution space of the equalities
    if rows:
        aug = [list(a) + [b] for a, b in rows]
        red, pivots = row_reduce(aug)
        if nvars in pivots:
            return False
        x0 = [Fraction(0)] * nvars
        for row, p in zip(red, pivots):
            x0[p] = row[nvars]
        basis = nullspace([list(a) for a, _ in rows], nvars)
    else:
        x0 = [Fraction(0)] * nvars
        basis = [tuple(Fraction(int(i == j)) for j in range(nvars)) for i in range(nvars)]

    k = len(basis)
    system = set()
    for a, b, s in ineqs:
        coeffs = tuple(dot(a, basis[j]) for j in range(k))
        system.add(_normalize(coeffs, b - dot(a, x0), s))

    for var in range(k):
        pos, neg, rest = [], [], []
        for c, b, s in system:
            if c[var] > 0:
                pos.append((c, b, s))
            elif c[var] < 0:
                neg.append((c, b, s))
            else:
                rest.append((c, b, s))
        new = set(rest)
        for cp, bp, sp in pos:
            for cn, bn, sn in neg:
                lp, ln = -cn[var], cp[var]
                coeffs = tuple(lp * x + ln * y for x, y in zip(cp, cn))
                new.add(_normalize(coeffs, lp * bp + ln * bn, sp or sn))
        system = new

    for _, b, s in system:
        # remaining constraints read 0 > b or 0 >= b
        if (s and not 0 > b) or (not s and not 0 >= b):
            return False
    return True
