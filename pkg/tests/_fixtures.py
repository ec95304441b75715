"""Shared test matroids and independent oracles."""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations, product

from bergman_kit import linalg
from bergman_kit.coxeter import build_root_system, coxeter_oriented_matroid
from bergman_kit.matroid import from_circuits, from_rational_matrix, uniform
from bergman_kit.oriented import OrientedMatroid

A3_COLUMNS = [
    (1, -1, 0, 0),
    (1, 0, -1, 0),
    (1, 0, 0, -1),
    (0, 1, -1, 0),
    (0, 1, 0, -1),
    (0, 0, 1, -1),
]
SQUARE_COLUMNS = [(0, 0, 1), (1, 0, 1), (1, 1, 1), (0, 1, 1)]
U23_COLUMNS = [(1, 0), (0, 1), (1, 1)]
NON_FANO_COLUMNS = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 0, 1), (0, 1, 1), (1, 1, 1)]
U35_COLUMNS = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, 2, 3)]
# U_{2,3} plus a separate parallel pair: a disconnected matroid
SPLIT_COLUMNS = [(1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1), (0, 0, 2)]
RANK1_COLUMNS = [(1,)]


@lru_cache(maxsize=None)
def a3():
    return OrientedMatroid(from_rational_matrix(A3_COLUMNS))


@lru_cache(maxsize=None)
def square():
    return OrientedMatroid(from_rational_matrix(SQUARE_COLUMNS))


@lru_cache(maxsize=None)
def u23():
    return OrientedMatroid(from_rational_matrix(U23_COLUMNS))


@lru_cache(maxsize=None)
def rank1():
    return OrientedMatroid(from_rational_matrix(RANK1_COLUMNS))


@lru_cache(maxsize=None)
def circuit_fixture():
    """Rank 3 on 1..5 with circuits 123, 145, 2345."""
    return from_circuits("12345", ["123", "145", "2345"])


@lru_cache(maxsize=None)
def coxeter(name: str):
    rs = build_root_system(name)
    return rs, coxeter_oriented_matroid(rs)


@lru_cache(maxsize=None)
def oriented_fixtures() -> dict:
    """Acyclic realizable fixtures with at most 8 elements."""
    out = {
        "A3": a3(),
        "square": square(),
        "U23": u23(),
        "rank1": rank1(),
        "non-Fano": OrientedMatroid(from_rational_matrix(NON_FANO_COLUMNS)),
        "U35": OrientedMatroid(from_rational_matrix(U35_COLUMNS)),
        "split": OrientedMatroid(from_rational_matrix(SPLIT_COLUMNS)),
    }
    for name in ("A2", "B2"):
        out[name] = coxeter(name)[1]
    return out


@lru_cache(maxsize=None)
def matroid_fixtures() -> dict:
    """Loopless fixtures with at most 8 elements."""
    out = {k: OM.matroid for k, OM in oriented_fixtures().items()}
    out["circuits"] = circuit_fixture()
    out["U24"] = uniform(2, 4)
    return out


def random_matroid(seed: int):
    """Connected rank 3 or 4 matroid on 5..7 elements with small integer columns."""
    rng = random.Random(seed)
    n = rng.randint(5, 7)
    r = rng.choice([3, 3, 4])
    while True:
        cols = []
        while len(cols) < n:
            c = [rng.randint(-1, 2) for _ in range(r)]
            if any(c):
                cols.append(c)
        M = from_rational_matrix(cols)
        if M.is_connected() and M.r == r:
            return M


# --- oracles ------------------------------------------------------------------------

def brute_rank(columns, S, labels):
    return linalg.rank([columns[labels.index(e)] for e in S])


def sampled_sign_vectors(columns, radius: int) -> set[tuple]:
    """Sign vectors of all integer functionals in a box, evaluated on columns."""
    dim = len(columns[0])
    out = set()
    for y in product(range(-radius, radius + 1), repeat=dim):
        out.add(tuple(linalg.sign(linalg.dot(y, c)) for c in columns))
    return out


def set_partitions(items):
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [part[i] | {first}] + part[i + 1:]
        yield part + [frozenset({first})]


def ordered_chains(ground):
    """Every chain of proper nonempty subsets (as increasing tuples)."""
    ground = frozenset(ground)

    def grow(current):
        yield ()
        rest = ground - current
        for k in range(1, len(rest)):
            for add in combinations(sorted(rest), k):
                nxt = current | frozenset(add)
                for tail in grow(nxt):
                    yield (nxt,) + tail

    yield from grow(frozenset())


def beta_recursive(M):
    """Deletion-contraction recursion, independent of the flat formula."""
    if M.loops():
        return 0
    for e in M.ground:
        if e not in M.coloops():
            return beta_recursive(M.delete({e})) + beta_recursive(M.contract({e}))
    return 1 if len(M.ground) == 1 else 0
