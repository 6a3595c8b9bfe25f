"""Command line interface.

Exit codes: 0 success, 1 input error, 2 input outside the graph class,
3 negative verdict. stdout is machine-readable; diagnostics go to stderr.
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Iterator, TextIO

from .canonizer import NotInterval, canonical_form
from .graph_core import Graph, GraphFormatError, parse_edge_list, parse_graph6, write_graph6
from .oracle import random_interval_graph
from .recognizer import IntervalRepresentation, recognize, verify_representation
from .transforms import (
    NotAnIncidenceGraph,
    NotASplitIncidenceGraph,
    incidence_graph,
    reconstruct_from_incidence,
    reconstruct_from_split,
    split_incidence_graph,
    wl_distinguishes,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NOT_IN_CLASS = 2
EXIT_NEGATIVE = 3


class InputError(Exception):
    pass


def _open(path: str | None) -> TextIO:
    if path is None or path == "-":
        return sys.stdin
    try:
        return open(path, encoding="ascii")
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def read_graphs(path: str | None, fmt: str) -> Iterator[Graph]:
    """Stream graphs: one per non-blank line for graph6, one per file for edges."""
    fh = _open(path)
    name = path or "<stdin>"
    try:
        if fmt == "edges":
            try:
                yield parse_edge_list(fh.read())
            except GraphFormatError as exc:
                raise InputError(f"{name}: {exc}") from None
            return
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                g = parse_graph6(line)
            except GraphFormatError as exc:
                raise InputError(f"{name}: line {lineno}: {exc}") from None
            yield g
    finally:
        if fh is not sys.stdin:
            fh.close()


def read_one(path: str, fmt: str) -> Graph:
    for g in read_graphs(path, fmt):
        return g
    raise InputError(f"{path}: no graph found")


def _canon_one(item: tuple[Graph, str]) -> tuple[bool, str]:
    g, emit = item
    try:
        form = canonical_form(g)
    except NotInterval as exc:
        return False, str(exc)
    if emit == "graph6":
        return True, form.graph6
    if emit == "digest":
        return True, form.digest
    return True, json.dumps(
        {"graph6": form.graph6, "digest": form.digest, "bijection": list(form.bijection)},
        separators=(",", ":"),
    )


def cmd_canon(args) -> int:
    items = ((g, args.emit) for g in read_graphs(args.input, args.format))
    if args.jobs > 1:
        pool = ProcessPoolExecutor(args.jobs)
        results = pool.map(_canon_one, items, chunksize=16)
    else:
        pool = None
        results = map(_canon_one, items)
    status = EXIT_OK
    try:
        for index, (ok, text) in enumerate(results, start=1):
            if ok:
                print(text)
            else:
                print("!")
                print(f"graph {index}: not an interval graph: {text}", file=sys.stderr)
                status = EXIT_NOT_IN_CLASS
    finally:
        if pool is not None:
            pool.shutdown()
    return status


def cmd_iso(args) -> int:
    g = read_one(args.first, args.format)
    h = read_one(args.second, args.format)
    try:
        fg, fh = canonical_form(g), canonical_form(h)
    except NotInterval as exc:
        print(f"not an interval graph: {exc}", file=sys.stderr)
        return EXIT_NOT_IN_CLASS
    if fg.n == fh.n and fg.bits == fh.bits:
        print("isomorphic")
        return EXIT_OK
    print("non-isomorphic")
    return EXIT_NEGATIVE


def cmd_recognize(args) -> int:
    graphs = list(read_graphs(args.input, args.format))
    if args.verify:
        if len(graphs) != 1:
            raise InputError("--verify needs exactly one input graph")
        try:
            with open(args.verify, encoding="ascii") as fh:
                rep = IntervalRepresentation.from_text(fh.read())
            ok = verify_representation(graphs[0], rep)
        except (OSError, ValueError) as exc:
            raise InputError(f"{args.verify}: {exc}") from None
        print("certificate-valid" if ok else "certificate-invalid")
        return EXIT_OK if ok else EXIT_NEGATIVE
    if args.certificate and len(graphs) != 1:
        raise InputError("--certificate needs exactly one input graph")
    status = EXIT_OK
    for g in graphs:
        result = recognize(g)
        if result.accepted:
            print("interval")
            if args.certificate:
                with open(args.certificate, "w", encoding="ascii") as fh:
                    fh.write(result.certificate.to_text())
        else:
            print(f"not-interval: {result.reason}")
            print(result.detail, file=sys.stderr)
            status = EXIT_NEGATIVE
    return status


def cmd_gen(args) -> int:
    if args.n < 0:
        raise InputError("--n must be non-negative")
    for i in range(args.count):
        g, _ = random_interval_graph(args.n, args.seed + i, args.max_coordinate)
        print(write_graph6(g))
    return EXIT_OK


_TRANSFORMS = {
    "incidence": lambda g: incidence_graph(g)[0],
    "split": split_incidence_graph,
    "un-incidence": reconstruct_from_incidence,
    "un-split": reconstruct_from_split,
}


def cmd_transform(args) -> int:
    status = EXIT_OK
    fn = _TRANSFORMS[args.kind]
    for index, g in enumerate(read_graphs(args.input, args.format), start=1):
        try:
            print(write_graph6(fn(g)))
        except (NotAnIncidenceGraph, NotASplitIncidenceGraph) as exc:
            print("!")
            print(f"graph {index}: {exc}", file=sys.stderr)
            status = EXIT_NOT_IN_CLASS
    return status


def _pairs(args) -> Iterator[tuple[Graph, Graph]]:
    if args.second is not None:
        left = read_graphs(args.first, "graph6")
        right = read_graphs(args.second, "graph6")
        sentinel = object()
        while True:
            a, b = next(left, sentinel), next(right, sentinel)
            if a is sentinel and b is sentinel:
                return
            if a is sentinel or b is sentinel:
                raise InputError("the two files hold different numbers of graphs")
            yield a, b
        return
    fh = _open(args.first)
    for lineno, line in enumerate(fh, start=1):
        parts = line.split()
        if not parts:
            continue
        if len(parts) != 2:
            raise InputError(f"line {lineno}: expected two graph6 strings")
        try:
            yield parse_graph6(parts[0]), parse_graph6(parts[1])
        except GraphFormatError as exc:
            raise InputError(f"line {lineno}: {exc}") from None


def cmd_wl_compare(args) -> int:
    tally = {"distinguished": 0, "indistinguishable": 0}
    for g, h in _pairs(args):
        verdict = "distinguished" if wl_distinguishes(g, h, args.k) else "indistinguishable"
        tally[verdict] += 1
        print(verdict)
    for key in ("distinguished", "indistinguishable"):
        print(f"# {key} {tally[key]}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="intervalcanon", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p):
        p.add_argument("--format", choices=("graph6", "edges"), default="graph6")

    p = sub.add_parser("canon", help="canonical form of each input graph")
    p.add_argument("input", nargs="?", help="input file (default stdin)")
    fmt(p)
    p.add_argument("--emit", choices=("graph6", "digest", "bijection"), default="graph6")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_canon)

    p = sub.add_parser("iso", help="isomorphism test for two interval graphs")
    p.add_argument("first")
    p.add_argument("second")
    fmt(p)
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("recognize", help="interval graph recognition")
    p.add_argument("input", nargs="?")
    fmt(p)
    p.add_argument("--certificate", metavar="PATH", help="write the interval model here")
    p.add_argument("--verify", metavar="CERT", help="check a certificate against the graph instead")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("gen", help="random interval graphs as graph6")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--max-coordinate", type=int, default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("transform", help="incidence / split incidence constructions")
    p.add_argument("input", nargs="?")
    fmt(p)
    p.add_argument("--kind", choices=tuple(_TRANSFORMS), required=True)
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("wl-compare", help="Weisfeiler-Lehman comparison of graph pairs")
    p.add_argument("first", help="file of pairs, or first of two parallel files")
    p.add_argument("second", nargs="?")
    p.add_argument("--k", type=int, choices=(1, 2), default=1)
    p.set_defaults(func=cmd_wl_compare)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
