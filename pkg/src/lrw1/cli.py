"""Command line surface: recognise, decompose, exact width, fixture sweeps.

Exit codes are stable across flags: 0 means linear rank-width <= 1 (or plain
success), 1 means an obstruction was found (or the input was not distance
hereditary where that was required), 2 means a usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import oracle
from . import recognizer
from .dh import pruning_sequence
from .errors import LrwError, ParseError, TooLarge
from .graph import Graph, connected_components, parse_graph, serialize_graph
from .recognizer import (
    Certificate,
    ObstructionCertificate,
    OrderingCertificate,
    verify_certificate,
)
from .splitdec import (
    canonical_decomposition_dh,
    decomposition_to_dot,
    split_tree,
    split_tree_to_dot,
)

EXIT_OK = 0
EXIT_OBSTRUCTION = 1
EXIT_ERROR = 2


# -- input handling -----------------------------------------------------------


def detect_format(text: str) -> str:
    stripped = text.lstrip()
    if not stripped:
        return "edge-list"
    first = stripped[0]
    if first == ">":
        return "graph6"
    if first == "#" or first.isdigit():
        return "edge-list"
    return "graph6"


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def _load_graph(args) -> Graph:
    text = _read_text(args.input)
    fmt = args.format or detect_format(text)
    return parse_graph(text, fmt)


# -- certificate JSON ------------------------------------------------------------


def certificate_to_json(graph: Graph, certificate: Certificate) -> dict:
    if isinstance(certificate, OrderingCertificate):
        return {
            "status": "lrw_le_1",
            "ordering": [graph.labels[v] for v in certificate.order],
        }
    obstruction = {
        "vertices": [graph.labels[v] for v in certificate.vertices],
        "family": certificate.family,
    }
    if certificate.family == "dh_star3":
        obstruction["catalog_index"] = certificate.catalog_index
    return {"status": "lrw_ge_2", "obstruction": obstruction}


def certificate_from_json(graph: Graph, payload: dict) -> Certificate:
    ids = {label: v for v, label in enumerate(graph.labels)}
    if payload["status"] == "lrw_le_1":
        return OrderingCertificate(tuple(ids[l] for l in payload["ordering"]))
    obstruction = payload["obstruction"]
    vertices = tuple(sorted(ids[l] for l in obstruction["vertices"]))
    family = obstruction["family"]
    return ObstructionCertificate(
        vertices,
        family,
        hole_length=len(vertices) if family == "hole" else None,
        catalog_index=obstruction.get("catalog_index"),
    )


# -- subcommands --------------------------------------------------------------------


def _cmd_recognize(args) -> int:
    graph = _load_graph(args)
    certificate = recognizer.recognize(graph)
    if args.verify:
        outcome = verify_certificate(graph, certificate)
        if not outcome:
            print(f"certificate failed verification: {outcome.reason}", file=sys.stderr)
            return EXIT_ERROR
    if args.json:
        print(json.dumps(certificate_to_json(graph, certificate)))
    elif isinstance(certificate, OrderingCertificate):
        order = " ".join(str(graph.labels[v]) for v in certificate.order)
        print(f"linear rank-width <= 1; ordering: {order}")
    else:
        vs = " ".join(str(graph.labels[v]) for v in certificate.vertices)
        family = certificate.family
        if family == "hole":
            family = f"hole({certificate.hole_length})"
        print(f"linear rank-width >= 2; obstruction [{family}]: {vs}")
    return EXIT_OK if isinstance(certificate, OrderingCertificate) else EXIT_OBSTRUCTION


def _write_maybe(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="ascii") as fh:
            fh.write(text)


def _cmd_decompose(args) -> int:
    graph = _load_graph(args)
    if graph.n == 0 or len(connected_components(graph)) != 1:
        print("decompose requires a connected input graph", file=sys.stderr)
        return EXIT_ERROR
    seq = pruning_sequence(graph)
    if seq is None:
        cert = recognizer.recognize(graph)
        assert isinstance(cert, ObstructionCertificate)
        vs = " ".join(str(graph.labels[v]) for v in cert.vertices)
        print(f"not distance hereditary; obstruction [{cert.family}]: {vs}")
        return EXIT_OBSTRUCTION
    decomposition = canonical_decomposition_dh(graph, seq)
    tree = split_tree(decomposition)
    for block in decomposition.blocks:
        own = ", ".join(str(graph.labels[v]) for v in block.own_vertices)
        detail = block.kind
        if block.kind == "star":
            centre = block.centre
            detail += " centred at " + ("a marker" if centre < 0 else str(graph.labels[centre]))
        print(f"block {block.id}: {detail}; vertices [{own}]; size {len(block.vertices)}")
    print(f"split tree is a path: {'yes' if tree.is_path() else 'no'}")
    if args.dot_sd:
        _write_maybe(args.dot_sd, decomposition_to_dot(decomposition))
    if args.dot_tree:
        _write_maybe(args.dot_tree, split_tree_to_dot(tree))
    return EXIT_OK


def _cmd_lrw_exact(args) -> int:
    graph = _load_graph(args)
    guard = min(args.max_n, 10)
    if graph.n > guard:
        print(f"exact width is capped at {guard} vertices; got n={graph.n}", file=sys.stderr)
        return EXIT_ERROR
    value, order = oracle.brute_lrw_ordering(graph)
    print(f"linear rank-width = {value}")
    print("optimal ordering: " + " ".join(str(graph.labels[v]) for v in order))
    return EXIT_OK


def _cmd_crosscheck(args) -> int:
    directory = oracle.fixtures_dir()
    for n in range(1, args.max_n + 1):
        path = directory / f"n{n}.g6"
        if not path.is_file():
            print(f"missing fixture file: {path}", file=sys.stderr)
            return EXIT_ERROR
        count = 0
        for graph in oracle.load_fixture_file(path):
            if n > 1 and len(connected_components(graph)) != 1:
                continue
            certificate = recognizer.recognize(graph)
            accepted = isinstance(certificate, OrderingCertificate)
            expected = oracle.brute_lrw(graph) <= 1
            verified = verify_certificate(graph, certificate)
            if accepted != expected or not verified:
                print(f"disagreement on {serialize_graph(graph, 'graph6').strip()}")
                return EXIT_OBSTRUCTION
            count += 1
        print(f"{count} connected graphs on {n} vertices checked")
    return EXIT_OK


# -- entry point ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lrw1",
        description="Certified recognition of graphs of linear rank-width at most 1.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("input", nargs="?", default="-", help="input file or - for stdin")
        p.add_argument("--format", choices=["edge-list", "graph6"], default=None,
                       help="input format (default: auto-detect)")

    p = sub.add_parser("recognize", help="decide width <= 1 and print a certificate")
    add_input(p)
    p.add_argument("--json", action="store_true", help="emit the certificate as JSON")
    p.add_argument("--verify", action="store_true",
                   help="independently verify the certificate before printing")
    p.set_defaults(func=_cmd_recognize)

    p = sub.add_parser("decompose", help="canonical split decomposition of a connected DH graph")
    add_input(p)
    p.add_argument("--dot-sd", metavar="PATH", help="write DOT of the block system (- for stdout)")
    p.add_argument("--dot-tree", metavar="PATH", help="write DOT of the split tree (- for stdout)")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("lrw-exact", help="exact linear rank-width by exhaustion (small graphs)")
    add_input(p)
    p.add_argument("--max-n", type=int, default=10, help="refuse graphs larger than this")
    p.set_defaults(func=_cmd_lrw_exact)

    p = sub.add_parser("crosscheck", help="sweep the fixture corpus against the brute-force oracle")
    p.add_argument("--max-n", type=int, default=7, help="largest vertex count to sweep")
    p.set_defaults(func=_cmd_crosscheck)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, TooLarge, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except LrwError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
