"""``bergman-kit`` command line.

Exit codes: 0 verified, 2 verification failed (the report carries a
witness), 3 bad input or a size guard tripped.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import io, verify
from .bergman import bergman_coarse, bergman_fine, forest_of_flag
from .coxeter import build_root_system, coxeter_oriented_matroid
from .matroid import MatroidError
from .nested import connected_flats, matroid_nested_sets
from .oriented import OrientedMatroid
from .tubings import SimpleGraph, face_poset, tubing_sort_key

EXIT_OK, EXIT_FAILED, EXIT_INPUT = 0, 2, 3
EMIT_OBJECTS = ("lattice", "face-poset", "forest", "bergman", "nested", "positive-flats")


class InputError(Exception):
    pass


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group()
    src.add_argument("--type", help="Coxeter type such as A3, B3, C3, D4")
    src.add_argument("--matroid", type=Path, help="matroid JSON file")
    src.add_argument("--graph", type=Path, help="graph or diagram JSON file")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", type=Path, help="directory for output files (default: stdout)")
    common.add_argument("--format", choices=("json", "dot"), default="json")
    common.add_argument("--literal-adjacency", action="store_true",
                        help="count disjoint tubes as adjacent only when their union is a proper tube")

    p = argparse.ArgumentParser(prog="bergman-kit", description="Bergman complexes, tubings and nested sets.")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("verify-thm1", parents=[common], help="positive Bergman complex vs graph associahedron")
    sub.add_parser("verify-thm2", parents=[common], help="coarse Bergman complex vs nested set complex")
    sub.add_parser("verify-cover", parents=[common], help="bounded topes cover the Bergman complex")
    sub.add_parser("verify-tevelev", parents=[common], help="Weyl group moves every cell into the positive part")
    emit = sub.add_parser("emit", parents=[common], help="write a lattice, poset, forest or complex")
    emit.add_argument("object", choices=EMIT_OBJECTS)
    emit.add_argument("--flag", default="", help='flag members separated by "|", e.g. "1|1,2,4"')
    return p


def _load_json(path: Path) -> dict:
    try:
        return json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _matroid_input(args):
    """(matroid, oriented matroid or None, root system or None, name)."""
    if args.type:
        rs = build_root_system(args.type)
        OM = coxeter_oriented_matroid(rs)
        return OM.matroid, OM, rs, rs.name
    if args.matroid:
        M = io.matroid_from_json(_load_json(args.matroid))
        OM = OrientedMatroid(M) if M.columns is not None else None
        return M, OM, None, args.matroid.stem
    raise InputError("give --type or --matroid")


def _graph_input(args) -> tuple[SimpleGraph, str]:
    if args.graph:
        return io.graph_from_json(_load_json(args.graph)), args.graph.stem
    if args.type:
        rs = build_root_system(args.type)
        return SimpleGraph.from_diagram(rs.diagram), rs.name
    raise InputError("give --graph or --type")


def _require_type(args) -> str:
    if not args.type:
        raise InputError(f"{args.command} needs --type")
    return args.type


def _write(args, name: str, text: str) -> None:
    if args.out is None:
        sys.stdout.write(text)
        return
    args.out.mkdir(parents=True, exist_ok=True)
    (args.out / name).write_text(text)


def _emit(args) -> str:
    obj, fmt = args.object, args.format
    if obj == "face-poset":
        G, _ = _graph_input(args)
        P = face_poset(G, args.literal_adjacency)

        def show(T):
            return "{" + ",".join(G.fmt(t) for t in sorted(T, key=G.sort_key)) + "}"

        return io.poset_to_dot(P.dual(), show, "face_poset") if fmt == "dot" else io.dumps(io.poset_to_json(P, show))

    M, OM, _, _ = _matroid_input(args)
    if obj == "lattice":
        L = M.flats_lattice()
        return io.poset_to_dot(L, M.fmt, "flats") if fmt == "dot" else io.dumps(io.poset_to_json(L, M.fmt))
    if obj == "forest":
        forest = forest_of_flag(M, io.parse_flag(args.flag))
        if fmt == "dot":
            return forest.to_dot(M)
        return io.dumps({
            "nodes": [M.fmt(F) for F in sorted(forest.nodes, key=lambda F: io.flat_sort_key(M, F))],
            "edges": sorted([M.fmt(c), M.fmt(p)] for c, p in forest.edges),
        })
    if fmt == "dot":
        raise InputError(f"{obj} has no DOT form")
    if obj == "bergman":
        return io.dumps(io.bergman_to_json(M, bergman_fine(M), bergman_coarse(M)))
    if obj == "nested":
        key = lambda X: (len(X), sorted(io.flat_sort_key(M, F) for F in X))
        sets = sorted(matroid_nested_sets(M), key=key)
        verts = sorted(connected_flats(M), key=lambda F: io.flat_sort_key(M, F))
        return io.dumps({
            "vertices": [M.fmt(F) for F in verts],
            "faces": [[M.fmt(F) for F in sorted(X, key=lambda F: io.flat_sort_key(M, F))] for X in sets],
        })
    if OM is None:
        raise InputError("positive flats need a matrix-given matroid")
    flats = sorted(OM.positive_flats(), key=lambda F: io.flat_sort_key(M, F))
    return io.dumps({"positive_flats": [M.fmt(F) for F in flats]})


def run(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        if args.command == "emit":
            ext = "dot" if args.format == "dot" else "json"
            _write(args, f"{args.object}.{ext}", _emit(args))
            return EXIT_OK
        if args.command == "verify-thm1":
            ok, report = verify.thm1(_require_type(args), args.literal_adjacency)
        elif args.command == "verify-thm2":
            M, _, _, name = _matroid_input(args)
            ok, report = verify.thm2(M, name)
        elif args.command == "verify-cover":
            M, OM, _, name = _matroid_input(args)
            if OM is None:
                raise InputError("verify-cover needs a matrix-given matroid")
            ok, report = verify.cover(OM, name, args.seed)
        else:
            ok, report = verify.tevelev(_require_type(args))
    except (InputError, MatroidError, ValueError, KeyError) as exc:
        print(f"bergman-kit: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    tag = report.get("type") or report.get("input")
    _write(args, f"{args.command}-{tag}.json", io.dumps(report))
    print(f"{args.command} {tag}: {'PASS' if ok else 'FAIL'}", file=sys.stderr)
    return EXIT_OK if ok else EXIT_FAILED


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
