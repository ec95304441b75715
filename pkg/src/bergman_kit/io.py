"""JSON and DOT serialization.  Output is canonical: identical inputs give
byte-identical text."""

from __future__ import annotations

import json
from typing import Callable

from . import linalg
from .bergman import CoarseSubdivision, LabeledForest, forest_of_flag
from .matroid import Matroid, MatroidError, from_circuits, from_rational_matrix
from .posets import FinitePoset, SimplicialComplex
from .tubings import SimpleGraph


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


# --- posets and complexes ---------------------------------------------------

def poset_to_json(P: FinitePoset, fmt: Callable = str) -> dict:
    return {
        "elements": [fmt(x) for x in P.elements],
        "covers": [[fmt(a), fmt(b)] for a, b in P.covers()],
    }


def poset_to_dot(P: FinitePoset, fmt: Callable = str, name: str = "poset") -> str:
    """Hasse diagram, bottom to top, with each node annotated by its rank."""
    rank = P.rank_function()
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for x in P.elements:
        lines.append(f'  "{fmt(x)}" [rank={rank[x]}];')
    for a, b in P.covers():
        lines.append(f'  "{fmt(a)}" -> "{fmt(b)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def complex_to_json(K: SimplicialComplex, fmt: Callable = str) -> dict:
    verts = sorted(K.vertices, key=lambda v: (len(fmt(v)), fmt(v)))
    order = {v: i for i, v in enumerate(verts)}
    facets = sorted((sorted(f, key=order.__getitem__) for f in K.facets), key=lambda f: (len(f), [order[v] for v in f]))
    return {"vertices": [fmt(v) for v in verts], "facets": [[fmt(v) for v in f] for f in facets]}


def flat_sort_key(M: Matroid, F) -> tuple:
    return (len(F), [M.index[e] for e in M.sorted(F)])


def bergman_to_json(M: Matroid, fine: SimplicialComplex, coarse: CoarseSubdivision) -> dict:
    """``{fine: {vertices, facets}, coarse: {cells: [...], covers: [...]}}``.

    A cell's ``forest`` lists the node labels of the forest of its first
    member flag.
    """
    flat_order = sorted(fine.vertices, key=lambda F: flat_sort_key(M, F))
    pos = {F: i for i, F in enumerate(flat_order)}
    cells = []
    for i, c in enumerate(coarse.cells):
        forest = forest_of_flag(M, c.flags[0], check=False)
        cells.append({
            "id": i,
            "dim": c.dim,
            "forest": [M.fmt(F) for F in sorted(forest.nodes, key=lambda F: flat_sort_key(M, F))],
            "member_flags": [[M.fmt(F) for F in f] for f in c.flags],
        })
    facets = sorted((sorted(f, key=pos.__getitem__) for f in fine.facets), key=lambda f: (len(f), [pos[F] for F in f]))
    return {
        "fine": {"vertices": [M.fmt(F) for F in flat_order], "facets": [[M.fmt(F) for F in f] for f in facets]},
        "coarse": {"cells": cells, "covers": [list(p) for p in coarse.poset.covers()]},
    }


def forest_to_dot(M: Matroid, forest: LabeledForest) -> str:
    return forest.to_dot(M)


# --- parsing ----------------------------------------------------------------

def parse_set(text: str) -> frozenset:
    """``"1,2,4"`` or ``"{1,2,4}"`` -> ``frozenset({"1", "2", "4"})``."""
    body = text.strip().strip("{}").strip()
    return frozenset(x.strip() for x in body.split(",") if x.strip())


def parse_flag(text: str) -> tuple:
    """Flag members separated by ``|``, e.g. ``"1|1,2,4"``."""
    if not text.strip():
        return ()
    return tuple(parse_set(part) for part in text.split("|"))


def matroid_from_json(data: dict) -> Matroid:
    kind = data.get("type")
    labels = [str(x) for x in data["labels"]] if "labels" in data else None
    if kind == "matrix":
        cols = [[linalg.frac(x) for x in col] for col in data["columns"]]
        if labels is not None and len(labels) != len(cols):
            raise MatroidError("labels and columns differ in length")
        return from_rational_matrix(cols, labels)
    if kind == "circuits":
        if labels is None:
            raise MatroidError("circuit input needs labels")
        return from_circuits(labels, [[str(x) for x in c] for c in data["circuits"]])
    raise MatroidError(f"unknown matroid type {kind!r}")


def matroid_to_json(M: Matroid) -> dict:
    if M.columns is not None:
        return {
            "type": "matrix",
            "labels": list(M.ground),
            "columns": [[str(x) for x in M.columns[e]] for e in M.ground],
        }
    return {"type": "circuits", "labels": list(M.ground), "circuits": [M.sorted(C) for C in M.circuits()]}


def graph_from_json(data: dict) -> SimpleGraph:
    """Plain graphs ``[a, b]`` and labelled diagrams ``[s, t, m]`` alike;
    edge labels are dropped."""
    return SimpleGraph([str(v) for v in data["nodes"]], [(str(e[0]), str(e[1])) for e in data.get("edges", [])])
