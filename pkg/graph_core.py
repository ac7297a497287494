# graph_core.py — immutable simple graphs / digraphs over stable vertex labels
# Usage:
#   from graph_core import make_graph, connected_components, induced_subgraph
#   G = make_graph(["u", "v", "a", "b"], [("u", "v"), ("v", "a"), ("a", "b"), ("b", "u")])
#   blocks = connected_components(G)
#
# Notes:
# - Vertices are labels (int or str); subgraphs keep the labels of their host.
# - Every value is frozen; edits return a new value.
# - Iteration order is always sorted by vertex_key.

from __future__ import annotations

import itertools
import re
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple, Union

import networkx as nx

from errors import GraphError

VertexId = Union[int, str]
Edge = Tuple[VertexId, VertexId]
Arc = Tuple[VertexId, VertexId]

# canonical int spelling; str labels of this form are rejected
INT_TOKEN_RE = re.compile(r"^-?(0|[1-9][0-9]*)$")

# ---------- Ordering ----------
def vertex_key(v: VertexId) -> Tuple[int, int, str]:
    """Total order over mixed labels: ints first (numerically), then strings."""
    if isinstance(v, int):
        return (0, v, "")
    return (1, 0, str(v))


def sort_vertices(vs: Iterable[VertexId]) -> List[VertexId]:
    return sorted(vs, key=vertex_key)


def edge_ref(a: VertexId, b: VertexId) -> Edge:
    """Normalized unordered pair; endpoints must differ."""
    if a == b:
        raise GraphError(f"edge endpoints must be distinct, got {a!r} twice")
    return (a, b) if vertex_key(a) <= vertex_key(b) else (b, a)


def edge_key(e: Edge) -> Tuple:
    return (vertex_key(e[0]), vertex_key(e[1]))


def _check_label(v) -> None:
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        raise GraphError(f"vertex label must be int or str, got {v!r}")
    if isinstance(v, str) and (not v or any(ch.isspace() for ch in v)):
        raise GraphError(f"vertex label must be non-empty and whitespace-free, got {v!r}")
    if isinstance(v, str) and INT_TOKEN_RE.match(v):
        raise GraphError(f"string label {v!r} looks like an integer; use the int {v}")


# ---------- Data models ----------
class Graph:
    """Finite simple undirected graph backed by a frozen networkx graph."""

    __slots__ = ("_g", "_vertices", "_edges", "_adj")

    def __init__(self, g: nx.Graph):
        self._g = nx.freeze(g)
        self._vertices: Tuple[VertexId, ...] = tuple(sort_vertices(g.nodes))
        self._edges: Tuple[Edge, ...] = tuple(
            sorted((edge_ref(a, b) for a, b in g.edges), key=edge_key)
        )
        self._adj: Dict[VertexId, FrozenSet[VertexId]] = {v: frozenset(g[v]) for v in g.nodes}

    @property
    def nx(self) -> nx.Graph:
        return self._g

    @property
    def vertices(self) -> Tuple[VertexId, ...]:
        return self._vertices

    @property
    def vertex_set(self) -> FrozenSet[VertexId]:
        return frozenset(self._vertices)

    @property
    def edges(self) -> Tuple[Edge, ...]:
        return self._edges

    @property
    def edge_set(self) -> FrozenSet[Edge]:
        return frozenset(self._edges)

    def neighbors(self, v: VertexId) -> FrozenSet[VertexId]:
        try:
            return self._adj[v]
        except KeyError:
            raise GraphError(f"unknown vertex {v!r}") from None

    def has_edge(self, a: VertexId, b: VertexId) -> bool:
        return a in self._adj and b in self._adj[a]

    def __contains__(self, v) -> bool:
        return v in self._adj

    def __len__(self) -> int:
        return len(self._vertices)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._vertices, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={len(self._vertices)}, m={len(self._edges)})"


class Digraph:
    """Finite simple directed graph backed by a frozen networkx digraph."""

    __slots__ = ("_g", "_vertices", "_arcs")

    def __init__(self, g: nx.DiGraph):
        self._g = nx.freeze(g)
        self._vertices: Tuple[VertexId, ...] = tuple(sort_vertices(g.nodes))
        self._arcs: Tuple[Arc, ...] = tuple(sorted(g.edges, key=edge_key))

    @property
    def nx(self) -> nx.DiGraph:
        return self._g

    @property
    def vertices(self) -> Tuple[VertexId, ...]:
        return self._vertices

    @property
    def vertex_set(self) -> FrozenSet[VertexId]:
        return frozenset(self._vertices)

    @property
    def arcs(self) -> Tuple[Arc, ...]:
        return self._arcs

    def predecessors(self, v: VertexId) -> Tuple[VertexId, ...]:
        if v not in self._g:
            raise GraphError(f"unknown vertex {v!r}")
        return tuple(sort_vertices(self._g.predecessors(v)))

    def successors(self, v: VertexId) -> Tuple[VertexId, ...]:
        if v not in self._g:
            raise GraphError(f"unknown vertex {v!r}")
        return tuple(sort_vertices(self._g.successors(v)))

    def has_arc(self, a: VertexId, b: VertexId) -> bool:
        return self._g.has_edge(a, b)

    def with_vertices(self, vertices: Iterable[VertexId]) -> "Digraph":
        g = nx.DiGraph(self._g)
        for v in vertices:
            _check_label(v)
            if v in g:
                raise GraphError(f"vertex {v!r} already present")
            g.add_node(v)
        return Digraph(g)

    def with_arcs(self, arcs: Iterable[Arc]) -> "Digraph":
        g = nx.DiGraph(self._g)
        for a, b in arcs:
            _check_arc(g, a, b)
            g.add_edge(a, b)
        return Digraph(g)

    def without_arcs(self, arcs: Iterable[Arc]) -> "Digraph":
        g = nx.DiGraph(self._g)
        for a, b in arcs:
            if not g.has_edge(a, b):
                raise GraphError(f"arc ({a!r}, {b!r}) not present")
            g.remove_edge(a, b)
        return Digraph(g)

    def __contains__(self, v) -> bool:
        return v in self._g

    def __len__(self) -> int:
        return len(self._vertices)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self._vertices == other._vertices and self._arcs == other._arcs

    def __hash__(self) -> int:
        return hash((self._vertices, self._arcs))

    def __repr__(self) -> str:
        return f"Digraph(n={len(self._vertices)}, arcs={len(self._arcs)})"


def _check_arc(g: nx.DiGraph, a, b) -> None:
    if a == b:
        raise GraphError(f"self-loop on {a!r}")
    for x in (a, b):
        if x not in g:
            raise GraphError(f"arc endpoint {x!r} is not a vertex")


# ---------- Constructors ----------
def make_graph(vertices: Sequence[VertexId], edges: Iterable[Tuple[VertexId, VertexId]]) -> Graph:
    g = nx.Graph()
    for v in vertices:
        _check_label(v)
        g.add_node(v)
    for a, b in edges:
        if a == b:
            raise GraphError(f"self-loop on {a!r}")
        for x in (a, b):
            if x not in g:
                raise GraphError(f"edge endpoint {x!r} is not in the vertex list")
        g.add_edge(a, b)
    return Graph(g)


def make_digraph(vertices: Sequence[VertexId], arcs: Iterable[Arc]) -> Digraph:
    g = nx.DiGraph()
    for v in vertices:
        _check_label(v)
        g.add_node(v)
    for a, b in arcs:
        _check_arc(g, a, b)
        g.add_edge(a, b)
    return Digraph(g)


# ---------- Queries ----------
def _require_vertices(G: Graph, S: Iterable[VertexId]) -> FrozenSet[VertexId]:
    S = frozenset(S)
    unknown = [v for v in S if v not in G]
    if unknown:
        raise GraphError(f"unknown vertex {sort_vertices(unknown)[0]!r}")
    return S


def connected_components(G: Graph) -> List[FrozenSet[VertexId]]:
    blocks = [frozenset(c) for c in nx.connected_components(G.nx)]
    blocks.sort(key=lambda b: vertex_key(min(b, key=vertex_key)))
    return blocks


def component_count(G: Graph) -> int:
    return nx.number_connected_components(G.nx) if len(G) else 0


def induced_subgraph(G: Graph, S: Iterable[VertexId]) -> Graph:
    S = _require_vertices(G, S)
    return Graph(G.nx.subgraph(S).copy())


def remove_vertices(G: Graph, S: Iterable[VertexId]) -> Graph:
    S = _require_vertices(G, S)
    return Graph(G.nx.subgraph(G.vertex_set - S).copy())


def delete_edge(G: Graph, e: Edge) -> Graph:
    a, b = e
    if not G.has_edge(a, b):
        raise GraphError(f"{a!r}-{b!r} is not an edge")
    g = nx.Graph(G.nx)
    g.remove_edge(a, b)
    return Graph(g)


def add_edge(G: Graph, a: VertexId, b: VertexId) -> Graph:
    _require_vertices(G, (a, b))
    edge_ref(a, b)
    g = nx.Graph(G.nx)
    g.add_edge(a, b)
    return Graph(g)


def is_clique(G: Graph, X: Iterable[VertexId]) -> bool:
    X = _require_vertices(G, X)
    return all(G.has_edge(a, b) for a, b in itertools.combinations(X, 2))


def common_neighbors(G: Graph, u: VertexId, v: VertexId) -> FrozenSet[VertexId]:
    _require_vertices(G, (u, v))
    if u == v:
        raise GraphError("common_neighbors needs two distinct vertices")
    return frozenset(nx.common_neighbors(G.nx, u, v))
