# app.py — command-line entry point for the chordal-cut and competition-number tools
# Usage:
#   python app.py analyze house.g [--csv pairs.csv] [--dot house.dot] [--json]
#   python app.py find-cut house.g
#   python app.py build house.g [-o house.d]
#   python app.py verify house.g house.d
#   python app.py exact-k c4.g [--kmax 4]
#   python app.py gen --seed 2 --holes 2 [--style mixed] [-o g.g]
#
# Notes:
# - Reports go to stdout, logs to stderr (-v INFO, -vv DEBUG).
# - Exit codes: 0 success, 1 negative result, 2 input or usage error.
# - A file argument of "-" reads standard input.

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Any, Dict, List, Optional

from competition_builder import CompetitionCertificate, build_bounded_digraph, verify_certificate
from competition_number import exact_competition_number
from config import load_config
from cut_checker import find_chordal_cut, has_chordal_property, hole_with_enough_separating_edges
from errors import (
    DocumentError,
    GenerationError,
    GraphError,
    PreconditionError,
    SizeBoundError,
)
from graph_core import Graph
from graph_documents import (
    parse_certificate,
    parse_graph,
    serialize_certificate,
    serialize_graph,
    to_dot,
)
from graph_generator import STYLES, GenParams, generate
from hole_analysis import cut_table, enumerate_holes, find_k222, shared_hole_edge
from reports import build_trace_frame, cut_table_frame, fmt_edge, fmt_set, summary_line, write_csv

log = logging.getLogger("chordalcut.app")

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT = 0, 1, 2
INPUT_ERRORS = (
    GraphError, DocumentError, PreconditionError, SizeBoundError, GenerationError, OSError, UnicodeError,
)


# ---------- Helpers ----------
def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "rb") as f:
        data = f.read()
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        line = data.count(b"\n", 0, exc.start) + 1
        raise DocumentError(f"{path}: not valid UTF-8 (byte offset {exc.start})", line) from exc


def _write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(text)


def _load_graph(path: str) -> Graph:
    return parse_graph(_read_text(path))


def _setup_logging(cfg: Dict, verbose: int) -> None:
    level = getattr(logging, str(cfg["logging"]["level"]).upper(), logging.WARNING)
    if verbose == 1:
        level = logging.INFO
    elif verbose >= 2:
        level = logging.DEBUG
    logging.basicConfig(stream=sys.stderr, level=level, format="%(levelname)s %(name)s: %(message)s")
    logging.getLogger("chordalcut").setLevel(level)


def _emit(args, results: Dict[str, Any], ok: bool, lines: List[str]) -> None:
    if args.json:
        report = {"command": args.command, "input": getattr(args, "file", None),
                  "results": results, "verified": ok}
        print(json.dumps(report, indent=2, default=str))
    else:
        for line in lines:
            print(line)


def _tf(flag: bool) -> str:
    return "true" if flag else "false"


# ---------- Commands ----------
def cmd_analyze(args, cfg) -> int:
    G = _load_graph(args.file)
    holes = enumerate_holes(G)
    witness = find_k222(G)
    shared = shared_hole_edge(G, holes)
    ok = witness is None and shared is None

    results: Dict[str, Any] = {
        "vertices": len(G),
        "edges": len(G.edges),
        "h": holes.count,
        "holes": [str(C) for C in holes],
        "k222_free": witness is None,
        "k222_witness": list(witness) if witness else None,
        "hole_edge_disjoint": shared is None,
        "shared_edge": None if shared is None else [str(shared[0]), str(shared[1]), fmt_edge(shared[2])],
    }
    lines = [
        f"vertices={len(G)} edges={len(G.edges)}",
        f"h={holes.count}",
        f"k222_free={_tf(witness is None)}" + ("" if witness is None else f" witness={fmt_set(witness)}"),
        f"hole_edge_disjoint={_tf(shared is None)}"
        + ("" if shared is None else f" ({shared[0]} and {shared[1]} share {fmt_edge(shared[2])})"),
    ]
    lines += [f"hole {C}" for C in holes]

    if ok and holes.count:
        table = cut_table(G, holes, bound=cfg["analysis"]["exhaustive_path_bound"])
        df = cut_table_frame(G, table)
        separating = hole_with_enough_separating_edges(G)
        results["pairs"] = df.to_dict(orient="records")
        results["chordal_property"] = has_chordal_property(G)
        results["separating_hole"] = None if separating is None else str(separating)
        lines += ["", df.to_string(index=False), summary_line(df)]
        lines.append(f"chordal_property={_tf(results['chordal_property'])}")
        if args.csv:
            write_csv(df, args.csv)
    if args.dot:
        _write_text(args.dot, to_dot(G, holes))

    _emit(args, results, ok, lines)
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_find_cut(args, cfg) -> int:
    G = _load_graph(args.file)
    cert = find_chordal_cut(G)
    separating = hole_with_enough_separating_edges(G)
    if args.dot:
        _write_text(args.dot, to_dot(G, enumerate_holes(G)))
    if cert is None:
        message = "no chordal cut found; existence hypothesis not satisfied"
        _emit(args, {"found": False, "message": message}, False, [message])
        return EXIT_NEGATIVE

    results = {
        "found": True,
        "hole": str(cert.hole),
        "edge": fmt_edge(cert.edge),
        "x": fmt_set(cert.x_ce),
        "u": fmt_set(cert.u_ce),
        "peo": [str(v) for v in cert.peo.order],
        "separating_hole": None if separating is None else str(separating),
    }
    lines = [
        f"hole={results['hole']}",
        f"edge={results['edge']}",
        f"X={results['x']}",
        f"U={results['u']}",
        "peo=" + " ".join(results["peo"]),
    ]
    _emit(args, results, True, lines)
    return EXIT_OK


def cmd_build(args, cfg) -> int:
    G = _load_graph(args.file)
    cert = build_bounded_digraph(
        G,
        check_invariants=cfg["analysis"]["check_invariants"],
        prefix=cfg["competition"]["fresh_prefix"],
    )
    ok, why = verify_certificate(G, cert)
    doc = serialize_certificate(cert.digraph, cert.added_vertices)
    trace = build_trace_frame(cert)
    if args.csv:
        write_csv(trace, args.csv)
    if args.dot:
        _write_text(args.dot, to_dot(G, digraph=cert.digraph, added=cert.added_vertices))

    results = {
        "h": cert.claimed_k - 1,
        "added": [str(z) for z in cert.added_vertices],
        "arcs": len(cert.digraph.arcs),
        "steps": trace.to_dict(orient="records"),
        "diagnostic": why,
    }
    if args.output:
        _write_text(args.output, doc)
        results["output"] = args.output
        lines = [trace.to_string(index=False), f"added={len(cert.added_vertices)}", f"verified: {_tf(ok)}"]
    else:
        results["certificate"] = doc
        lines = [doc.rstrip("\n"), f"# verified: {_tf(ok)}"]
    _emit(args, results, ok, lines)
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_verify(args, cfg) -> int:
    G = _load_graph(args.file)
    doc = parse_certificate(_read_text(args.certificate))
    added = frozenset(doc.added)
    cert = CompetitionCertificate(
        doc.digraph,
        frozenset(v for v in doc.digraph.vertices if v not in added),
        doc.added,
    )
    ok, why = verify_certificate(G, cert)
    line = "verified: true" if ok else f"verified: false ({why})"
    _emit(args, {"claimed_k": cert.claimed_k, "diagnostic": why}, ok, [line])
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_exact_k(args, cfg) -> int:
    G = _load_graph(args.file)
    limit = cfg["competition"]["exact_max_vertices"]
    if len(G) > limit:
        raise SizeBoundError(f"exact search is limited to {limit} vertices (graph has {len(G)})")
    kmax = args.kmax if args.kmax is not None else cfg["competition"]["default_kmax"]
    k = exact_competition_number(G, kmax=kmax, max_vertices=limit)
    if k is None:
        _emit(args, {"k": None, "kmax": kmax}, False, [f"k(G) > {kmax}"])
        return EXIT_NEGATIVE
    _emit(args, {"k": k, "kmax": kmax}, True, [f"k={k}"])
    return EXIT_OK


def cmd_gen(args, cfg) -> int:
    params = GenParams(args.seed, args.n_min, args.n_max, args.holes, args.style)
    G = generate(params, cfg)
    text = serialize_graph(G, name=f"gen{args.seed}")
    if args.output:
        _write_text(args.output, text)
    if args.dot:
        _write_text(args.dot, to_dot(G, enumerate_holes(G)))
    lines = [f"wrote {args.output} ({len(G)} vertices)"] if args.output else [text.rstrip("\n")]
    results = {"seed": args.seed, "vertices": len(G), "edges": len(G.edges), "holes": args.holes}
    if not args.output:
        results["graph"] = text
    _emit(args, results, True, lines)
    return EXIT_OK


COMMANDS = {
    "analyze": cmd_analyze,
    "find-cut": cmd_find_cut,
    "build": cmd_build,
    "verify": cmd_verify,
    "exact-k": cmd_exact_k,
    "gen": cmd_gen,
}


# ---------- Parser ----------
def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable report")
    common.add_argument("--dot", metavar="PATH", help="write a DOT rendering")
    common.add_argument("--csv", metavar="PATH", help="export the report table")
    common.add_argument("--config", metavar="PATH", help="JSON config overrides")
    common.add_argument("-v", "--verbose", action="count", default=0)

    parser = argparse.ArgumentParser(
        prog="chordalcut",
        description="Chordal cuts and competition-number certificates for hole-edge-disjoint graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, text in (("analyze", "hole and (hole, edge) report"),
                       ("find-cut", "search for a chordal cut"),
                       ("exact-k", "exact competition number (tiny graphs)")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("file")
        if name == "exact-k":
            p.add_argument("--kmax", type=int, default=None)

    p = sub.add_parser("build", parents=[common], help="build a verified acyclic digraph")
    p.add_argument("file")
    p.add_argument("-o", "--output", metavar="PATH")

    p = sub.add_parser("verify", parents=[common], help="check a certificate against a graph")
    p.add_argument("file")
    p.add_argument("certificate")

    p = sub.add_parser("gen", parents=[common], help="generate a random graph of the class")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--holes", type=int, default=0)
    p.add_argument("--style", choices=STYLES, default="mixed")
    p.add_argument("--n-min", type=int, default=8)
    p.add_argument("--n-max", type=int, default=20)
    p.add_argument("-o", "--output", metavar="PATH")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    cfg = load_config(args.config)
    _setup_logging(cfg, args.verbose)
    log.debug("command %s with %s", args.command, vars(args))
    try:
        return COMMANDS[args.command](args, cfg)
    except INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
