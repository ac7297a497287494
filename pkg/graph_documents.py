# graph_documents.py — text formats for graphs and competition certificates, DOT export
# Usage:
#   from graph_documents import parse_graph, serialize_graph
#   G = parse_graph(open("house.g").read())
#   text = serialize_graph(G, name="house")
#
# Formats:
#   structured graph:      graph <name> / v <label> / e <a> <b>
#   whitespace edge list:  "<a> <b>" per line ("<a>" alone adds an isolated vertex)
#   certificate:           digraph <name> / v <label> / arc <a> <b> / added <label>
#   Lines starting with '#' and blank lines are ignored.
#   A file is structured when "graph <name>" is followed by a v/e line or by nothing;
#   otherwise a leading "graph x" line is an edge.
#   Tokens written as canonical integers ("0", "17", "-3") are read back as ints.

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from errors import DocumentError, GraphError
from graph_core import INT_TOKEN_RE, Digraph, Graph, VertexId, make_digraph, make_graph


# ---------- Data models ----------
@dataclass
class GraphDocument:
    name: str
    vertices: List[VertexId]
    edges: List[Tuple[VertexId, VertexId]]

    def to_graph(self) -> Graph:
        return make_graph(self.vertices, self.edges)

    @staticmethod
    def from_graph(G: Graph, name: str = "G") -> "GraphDocument":
        return GraphDocument(name, list(G.vertices), list(G.edges))


@dataclass
class CertificateDocument:
    name: str
    digraph: Digraph
    added: Tuple[VertexId, ...]


# ---------- Helpers ----------
def _label(token: str) -> VertexId:
    return int(token) if INT_TOKEN_RE.match(token) else token


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield lineno, raw, stripped.split()


def _column(raw: str, token: str) -> int:
    return raw.find(token) + 1


class _EdgeCollector:
    """Edges with their source lines; duplicates and self-loops are rejected."""

    def __init__(self, kind: str = "edge", directed: bool = False):
        self.kind = kind
        self.directed = directed
        self.seen: Dict[Tuple, int] = {}
        self.items: List[Tuple[VertexId, VertexId]] = []

    def add(self, a: VertexId, b: VertexId, lineno: int, raw: str, token: str) -> None:
        if a == b:
            raise DocumentError(f"self-loop on {a}", lineno, _column(raw, token))
        key = (a, b) if self.directed else frozenset((a, b))
        if key in self.seen:
            raise DocumentError(
                f"duplicate {self.kind} {a}-{b} (first at line {self.seen[key]})", lineno
            )
        self.seen[key] = lineno
        self.items.append((a, b))


# ---------- Graph documents ----------
def _is_structured(rows) -> bool:
    if not rows or rows[0][2][0] != "graph":
        return False
    return len(rows) == 1 or rows[1][2][0] in ("v", "e")


def parse_graph_document(text: str, default_name: str = "G") -> GraphDocument:
    rows = list(_lines(text))
    if _is_structured(rows):
        return _parse_structured(rows)
    return _parse_edge_list(rows, default_name)


def _parse_structured(rows) -> GraphDocument:
    lineno, raw, tokens = rows[0]
    if len(tokens) != 2:
        raise DocumentError("header must be 'graph <name>'", lineno, 1)
    name = tokens[1]
    vertices: List[VertexId] = []
    known = set()
    edges = _EdgeCollector()
    for lineno, raw, tokens in rows[1:]:
        kind = tokens[0]
        if kind == "v" and len(tokens) == 2:
            label = _label(tokens[1])
            if label in known:
                raise DocumentError(f"duplicate vertex {label}", lineno, _column(raw, tokens[1]))
            known.add(label)
            vertices.append(label)
        elif kind == "e" and len(tokens) == 3:
            a, b = _label(tokens[1]), _label(tokens[2])
            for tok, x in ((tokens[1], a), (tokens[2], b)):
                if x not in known:
                    raise DocumentError(f"unknown vertex {x} in edge list", lineno, _column(raw, tok))
            edges.add(a, b, lineno, raw, tokens[2])
        else:
            raise DocumentError(f"syntax error near {kind!r}", lineno, _column(raw, kind))
    return GraphDocument(name, vertices, edges.items)


def _parse_edge_list(rows, name: str) -> GraphDocument:
    vertices: List[VertexId] = []
    known = set()
    edges = _EdgeCollector()

    def note(x: VertexId) -> None:
        if x not in known:
            known.add(x)
            vertices.append(x)

    for lineno, raw, tokens in rows:
        if len(tokens) == 1:
            note(_label(tokens[0]))
        elif len(tokens) == 2:
            a, b = _label(tokens[0]), _label(tokens[1])
            edges.add(a, b, lineno, raw, tokens[1])
            note(a)
            note(b)
        else:
            raise DocumentError("expected '<a> <b>'", lineno, _column(raw, tokens[2]))
    return GraphDocument(name, vertices, edges.items)


def parse_graph(text: str) -> Graph:
    try:
        return parse_graph_document(text).to_graph()
    except GraphError as exc:
        raise DocumentError(str(exc)) from exc


def serialize_graph(G: Graph, name: str = "G") -> str:
    lines = [f"graph {name}"]
    lines += [f"v {v}" for v in G.vertices]
    lines += [f"e {a} {b}" for a, b in G.edges]
    return "\n".join(lines) + "\n"


# ---------- Certificate documents ----------
def serialize_certificate(digraph: Digraph, added: Sequence[VertexId], name: str = "D") -> str:
    lines = [f"digraph {name}"]
    lines += [f"v {v}" for v in digraph.vertices]
    lines += [f"arc {a} {b}" for a, b in digraph.arcs]
    lines += [f"added {z}" for z in added]
    return "\n".join(lines) + "\n"


def parse_certificate(text: str) -> CertificateDocument:
    rows = list(_lines(text))
    if not rows or rows[0][2][0] != "digraph" or len(rows[0][2]) != 2:
        line = rows[0][0] if rows else 1
        raise DocumentError("header must be 'digraph <name>'", line, 1)
    name = rows[0][2][1]
    vertices: List[VertexId] = []
    known = set()
    arcs = _EdgeCollector("arc", directed=True)
    added: List[VertexId] = []
    for lineno, raw, tokens in rows[1:]:
        kind = tokens[0]
        if kind == "v" and len(tokens) == 2:
            label = _label(tokens[1])
            if label in known:
                raise DocumentError(f"duplicate vertex {label}", lineno, _column(raw, tokens[1]))
            known.add(label)
            vertices.append(label)
        elif kind == "arc" and len(tokens) == 3:
            a, b = _label(tokens[1]), _label(tokens[2])
            for tok, x in ((tokens[1], a), (tokens[2], b)):
                if x not in known:
                    raise DocumentError(f"unknown vertex {x} in arc", lineno, _column(raw, tok))
            arcs.add(a, b, lineno, raw, tokens[2])
        elif kind == "added" and len(tokens) == 2:
            label = _label(tokens[1])
            if label not in known:
                raise DocumentError(f"unknown added vertex {label}", lineno, _column(raw, tokens[1]))
            added.append(label)
        else:
            raise DocumentError(f"syntax error near {kind!r}", lineno, _column(raw, kind))
    try:
        D = make_digraph(vertices, arcs.items)
    except GraphError as exc:
        raise DocumentError(str(exc)) from exc
    return CertificateDocument(name, D, tuple(added))


# ---------- DOT export ----------
def _q(v: VertexId) -> str:
    return '"' + str(v).replace('"', '\\"') + '"'


def graph_to_dot(G: Graph, holes: Iterable = (), name: str = "G") -> str:
    """Undirected DOT; edges on holes drawn bold red, hole vertices filled."""
    hole_edges = set()
    hole_vertices = set()
    for hole in holes:
        hole_edges.update(hole.edge_set)
        hole_vertices.update(hole.vertex_set)
    out = [f"graph {_q(name)} {{"]
    for v in G.vertices:
        style = ' [style=filled, fillcolor="#ffd7d7"]' if v in hole_vertices else ""
        out.append(f"  {_q(v)}{style};")
    for a, b in G.edges:
        style = " [color=red, penwidth=2]" if (a, b) in hole_edges else ""
        out.append(f"  {_q(a)} -- {_q(b)}{style};")
    out.append("}")
    return "\n".join(out) + "\n"


def certificate_to_dot(digraph: Digraph, added: Sequence[VertexId], name: str = "D") -> str:
    """Directed DOT; added vertices dashed."""
    added = set(added)
    out = [f"digraph {_q(name)} {{"]
    for v in digraph.vertices:
        style = " [style=dashed]" if v in added else ""
        out.append(f"  {_q(v)}{style};")
    for a, b in digraph.arcs:
        out.append(f"  {_q(a)} -> {_q(b)};")
    out.append("}")
    return "\n".join(out) + "\n"


def to_dot(G: Graph, holes: Iterable = (), added: Sequence[VertexId] = (),
           digraph: Optional[Digraph] = None, name: Optional[str] = None) -> str:
    """DOT for a certificate when a digraph is given, otherwise for the graph."""
    if digraph is not None:
        return certificate_to_dot(digraph, added, name or "D")
    return graph_to_dot(G, holes, name or "G")
