"""Command-line front end.

Every command prints a single JSON document.  ``-`` stands for stdin or
stdout.  Exit codes: 0 success, 1 bad input or violated precondition,
2 an analysis that ended Unclassified.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence

from .analyzer import (
    UNCLASSIFIED,
    ClassificationError,
    analyze,
    classify_edge_transitive,
    edge_color_table,
    graph_type,
)
from .catalog import CatalogError, generate, parse_name
from .graph import Graph, GraphError, dumps, loads
from .isomorphism import isomorphic
from .wl import coloring_to_json, disc, wl1, wl2

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_UNCLASSIFIED = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # keep exit code 2 for Unclassified; usage problems are input errors
    def error(self, message: str) -> None:
        raise UsageError(message)


def _read(path: str) -> Graph:
    if path == "-":
        return loads(sys.stdin.read())
    try:
        with open(path, encoding="utf-8") as fp:
            return loads(fp.read())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _write(text: str, path: str = "-") -> None:
    if path == "-":
        sys.stdout.write(text + "\n")
        return
    try:
        with open(path, "w", encoding="utf-8") as fp:
            fp.write(text + "\n")
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror}") from None


def _vertex_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"bad vertex list {text!r}") from None


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def _cmd_gen(args) -> int:
    _write(dumps(generate(parse_name(args.family))), args.output)
    return EXIT_OK


def _cmd_wl(args) -> int:
    g = _read(args.file)
    col = wl1(g) if args.k == 1 else wl2(g)
    _write(json.dumps(coloring_to_json(col)))
    return EXIT_OK


def _cmd_types(args) -> int:
    g = _read(args.file)
    table = edge_color_table(g, wl2(g))
    _write(json.dumps({"graph_type": graph_type(table), "edge_colors": [info.to_json() for info in table]}))
    return EXIT_OK


def _cmd_analyze(args) -> int:
    report = analyze(_read(args.file))
    _write(report.dumps())
    return EXIT_UNCLASSIFIED if report.outcome == UNCLASSIFIED else EXIT_OK


def _cmd_classify_et(args) -> int:
    cid = classify_edge_transitive(_read(args.file))
    _write(json.dumps(cid.to_json()))
    return EXIT_OK


def _cmd_iso(args) -> int:
    phi = isomorphic(_read(args.file1), _read(args.file2))
    _write(json.dumps({"mapping": phi} if phi is not None else "non-isomorphic"))
    return EXIT_OK


def _cmd_disc(args) -> int:
    g = _read(args.file)
    vs = _vertex_list(args.vertices)
    _write(json.dumps({"individualized": vs, "disc": sorted(disc(g, wl2(g), vs))}))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="planar-wl", description="2-WL tools for planar graphs")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("gen", help="generate a catalog graph, e.g. prism:5 or truncated:cube")
    s.add_argument("family")
    s.add_argument("-o", "--output", default="-")
    s.set_defaults(func=_cmd_gen)

    s = sub.add_parser("wl", help="dump the stable 1-WL or 2-WL coloring")
    s.add_argument("-k", type=int, choices=(1, 2), required=True)
    s.add_argument("file")
    s.set_defaults(func=_cmd_wl)

    s = sub.add_parser("types", help="edge-color table with types")
    s.add_argument("file")
    s.set_defaults(func=_cmd_types)

    s = sub.add_parser("analyze", help="classify a 3-connected planar graph")
    s.add_argument("file")
    s.set_defaults(func=_cmd_analyze)

    s = sub.add_parser("classify-et", help="name an edge-transitive planar graph")
    s.add_argument("file")
    s.set_defaults(func=_cmd_classify_et)

    s = sub.add_parser("iso", help="isomorphism test")
    s.add_argument("file1")
    s.add_argument("file2")
    s.set_defaults(func=_cmd_iso)

    s = sub.add_parser("disc", help="Disc of individualized vertices")
    s.add_argument("file")
    s.add_argument("-v", "--vertices", required=True, help="comma-separated vertex list")
    s.set_defaults(func=_cmd_disc)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.command == "iso" and args.file1 == "-" and args.file2 == "-":
            raise UsageError("only one input can come from stdin")
        return args.func(args)
    except (UsageError, GraphError, CatalogError, ClassificationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
