"""Finite posets, lattices, Möbius functions and order complexes."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Callable, Hashable, Iterable, Mapping


@dataclass
class Verdict:
    """Outcome of a check.  Truthy iff ``ok``; ``witness`` explains a failure."""

    ok: bool
    witness: Any = None
    details: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.ok


class NotComparable(ValueError):
    pass


class FinitePoset:
    """A finite partial order.

    Built either from ``relations`` (pairs ``(a, b)`` meaning ``a <= b``; the
    reflexive-transitive closure is taken) or from a ``leq`` predicate.
    Instances are immutable after construction.
    """

    def __init__(
        self,
        elements: Iterable[Hashable],
        relations: Iterable[tuple[Hashable, Hashable]] | None = None,
        leq: Callable[[Hashable, Hashable], bool] | None = None,
    ):
        self.elements: tuple = tuple(elements)
        self._index = {x: i for i, x in enumerate(self.elements)}
        if len(self._index) != len(self.elements):
            raise ValueError("duplicate poset elements")
        if (relations is None) == (leq is None):
            raise ValueError("pass exactly one of relations / leq")

        if leq is not None:
            up = {x: frozenset(y for y in self.elements if x == y or leq(x, y)) for x in self.elements}
        else:
            succ: dict = {x: set() for x in self.elements}
            for a, b in relations:
                if a not in self._index or b not in self._index:
                    raise KeyError(f"relation ({a!r}, {b!r}) mentions an unknown element")
                if a != b:
                    succ[a].add(b)
            up = {}
            for x in self.elements:
                seen = {x}
                stack = [x]
                while stack:
                    for y in succ[stack.pop()]:
                        if y not in seen:
                            seen.add(y)
                            stack.append(y)
                up[x] = frozenset(seen)
        self._up: dict = up
        self._down: dict = {x: set() for x in self.elements}
        for x, ys in up.items():
            for y in ys:
                self._down[y].add(x)
        self._down = {x: frozenset(v) for x, v in self._down.items()}
        for x in self.elements:
            for y in up[x]:
                if y != x and x in up[y]:
                    raise ValueError(f"antisymmetry violated by {x!r} and {y!r}")
        self._mobius: dict = {}
        self._covers: list | None = None

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x) -> bool:
        return x in self._index

    def __iter__(self):
        return iter(self.elements)

    def __repr__(self) -> str:
        return f"FinitePoset({len(self)} elements, {len(self.covers())} covers)"

    def leq(self, x, y) -> bool:
        return y in self._up[x]

    def lt(self, x, y) -> bool:
        return x != y and y in self._up[x]

    def comparable(self, x, y) -> bool:
        return self.leq(x, y) or self.leq(y, x)

    def upset(self, x) -> frozenset:
        return self._up[x]

    def downset(self, x) -> frozenset:
        return self._down[x]

    def interval(self, x, y) -> list:
        return [z for z in self.elements if z in self._up[x] and z in self._down[y]]

    def covers(self) -> list[tuple]:
        """Cover relations ``(a, b)`` with ``a < b`` and nothing strictly between."""
        if self._covers is None:
            out = []
            for a in self.elements:
                above = self._up[a] - {a}
                for b in above:
                    if not any(c != b and b in self._up[c] for c in above):
                        out.append((a, b))
            out.sort(key=lambda p: (self._index[p[0]], self._index[p[1]]))
            self._covers = out
        return list(self._covers)

    def relations(self) -> set[tuple]:
        return {(x, y) for x in self.elements for y in self._up[x]}

    def minimum(self):
        lows = [x for x in self.elements if len(self._up[x]) == len(self.elements)]
        return lows[0] if lows else None

    def maximum(self):
        highs = [x for x in self.elements if len(self._down[x]) == len(self.elements)]
        return highs[0] if highs else None

    def minimal_elements(self, subset: Iterable | None = None) -> list:
        s = set(self.elements if subset is None else subset)
        return [x for x in self.elements if x in s and not any(y != x and y in s for y in self._down[x])]

    def maximal_elements(self, subset: Iterable | None = None) -> list:
        s = set(self.elements if subset is None else subset)
        return [x for x in self.elements if x in s and not any(y != x and y in s for y in self._up[x])]

    def is_antichain(self, xs: Iterable) -> bool:
        xs = list(xs)
        return all(not self.comparable(a, b) for a, b in combinations(xs, 2))

    def subposet(self, keep: Iterable) -> "FinitePoset":
        keep = set(keep)
        elems = [x for x in self.elements if x in keep]
        return FinitePoset(elems, relations=[(x, y) for x in elems for y in self._up[x] if y in keep])

    def dual(self) -> "FinitePoset":
        return FinitePoset(self.elements, relations=[(y, x) for x, y in self.relations()])

    # --- lattice operations -------------------------------------------------

    def join(self, *xs):
        if not xs:
            return self._require(self.minimum(), "minimum")
        common = frozenset.intersection(*(self._up[x] for x in xs))
        least = self.minimal_elements(common)
        if len(least) != 1:
            raise ValueError(f"no unique join for {xs!r}: not a lattice")
        return least[0]

    def meet(self, *xs):
        if not xs:
            return self._require(self.maximum(), "maximum")
        common = frozenset.intersection(*(self._down[x] for x in xs))
        greatest = self.maximal_elements(common)
        if len(greatest) != 1:
            raise ValueError(f"no unique meet for {xs!r}: not a lattice")
        return greatest[0]

    def is_lattice(self) -> bool:
        try:
            for a, b in combinations(self.elements, 2):
                self.join(a, b)
                self.meet(a, b)
        except ValueError:
            return False
        return self.minimum() is not None and self.maximum() is not None

    @staticmethod
    def _require(x, what):
        if x is None:
            raise ValueError(f"poset has no {what}")
        return x

    # --- Möbius function ------------------------------------------------------

    def mobius(self, x, y) -> int:
        """Möbius function via sum_{x <= z <= y} mu(x, z) = delta(x, y)."""
        if not self.leq(x, y):
            raise NotComparable(f"{x!r} and {y!r} are not comparable (need x <= y)")
        key = (x, y)
        if key not in self._mobius:
            if x == y:
                val = 1
            else:
                val = -sum(self.mobius(x, z) for z in self.interval(x, y) if z != y)
            self._mobius[key] = val
        return self._mobius[key]

    def rank_function(self) -> dict:
        """Length of the longest chain from a minimal element to each element."""
        order = sorted(self.elements, key=lambda x: len(self._down[x]))
        rk = {}
        for x in order:
            below = [rk[y] for y in self._down[x] if y != x]
            rk[x] = 1 + max(below) if below else 0
        return rk

    def maximal_chains(self) -> list[tuple]:
        cover_up: dict = {x: [] for x in self.elements}
        for a, b in self.covers():
            cover_up[a].append(b)
        out = []

        def extend(chain):
            nxt = cover_up[chain[-1]]
            if not nxt:
                out.append(tuple(chain))
                return
            for b in nxt:
                extend(chain + [b])

        for m in self.minimal_elements():
            extend([m])
        return out


class SimplicialComplex:
    """A finite abstract simplicial complex given by its facets."""

    def __init__(self, facets: Iterable[Iterable], vertices: Iterable | None = None):
        fs = {frozenset(f) for f in facets}
        fs.discard(frozenset())
        self.facets: frozenset = frozenset(f for f in fs if not any(f < g for g in fs))
        covered = frozenset().union(*self.facets) if self.facets else frozenset()
        if vertices is None:
            self.vertices = covered
        else:
            self.vertices = frozenset(vertices)
            if self.vertices != covered:
                raise ValueError("every vertex must lie in some facet")

    def __eq__(self, other) -> bool:
        return isinstance(other, SimplicialComplex) and self.facets == other.facets

    def __hash__(self):
        return hash(self.facets)

    def __repr__(self) -> str:
        return f"SimplicialComplex(f={self.f_vector()})"

    @property
    def dim(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    def faces(self) -> set[frozenset]:
        """All nonempty faces."""
        out = set()
        for f in self.facets:
            items = sorted(f, key=repr)
            for k in range(1, len(items) + 1):
                out.update(frozenset(c) for c in combinations(items, k))
        return out

    def f_vector(self) -> tuple[int, ...]:
        counts: dict[int, int] = {}
        for face in self.faces():
            counts[len(face) - 1] = counts.get(len(face) - 1, 0) + 1
        return tuple(counts.get(d, 0) for d in range(self.dim + 1))

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * n for d, n in enumerate(self.f_vector()))

    def reduced_euler_characteristic(self) -> int:
        return self.euler_characteristic() - 1


def reduced_euler_characteristic(K: SimplicialComplex) -> int:
    """sum_d (-1)^d f_d - 1.  The empty complex gives -1."""
    return K.reduced_euler_characteristic()


def order_complex(P: FinitePoset, strip_bounds: bool = False) -> SimplicialComplex:
    """Complex of chains of ``P`` (of its proper part when ``strip_bounds``)."""
    if strip_bounds:
        lo, hi = P.minimum(), P.maximum()
        if lo is None or hi is None:
            raise ValueError("strip_bounds needs a unique minimum and maximum")
        P = P.subposet(x for x in P.elements if x != lo and x != hi)
    if len(P) == 0:
        return SimplicialComplex([])
    return SimplicialComplex(P.maximal_chains(), vertices=P.elements)


def check_anti_isomorphism(P: FinitePoset, Q: FinitePoset, f: Mapping) -> Verdict:
    """True iff ``f`` is a bijection P -> Q with x <= y  <=>  f(y) <= f(x)."""
    missing = [x for x in P.elements if x not in f]
    if missing:
        return Verdict(False, ("not total", missing[0]))
    image = [f[x] for x in P.elements]
    if any(y not in Q for y in image):
        return Verdict(False, ("image outside Q", next(y for y in image if y not in Q)))
    if len(set(image)) != len(image) or len(image) != len(Q):
        return Verdict(False, ("not a bijection", len(set(image)), len(Q)))
    for x in P.elements:
        for y in P.elements:
            if P.leq(x, y) != Q.leq(f[y], f[x]):
                return Verdict(False, ("order mismatch", x, y))
    return Verdict(True)


def boolean_lattice(ground: Iterable) -> FinitePoset:
    ground = list(ground)
    subsets = [frozenset(c) for k in range(len(ground) + 1) for c in combinations(ground, k)]
    return FinitePoset(subsets, leq=lambda a, b: a <= b)


def chain(n: int) -> FinitePoset:
    return FinitePoset(range(n), leq=lambda a, b: a <= b)
