# competition_builder.py — competition graphs and the k(G) <= h(G)+1 construction
# Usage:
#   from competition_builder import build_bounded_digraph, verify_certificate
#   cert = build_bounded_digraph(G)          # h(G)+1 added vertices, acyclic digraph
#   ok, why = verify_certificate(G, cert)
#
# Notes:
# - Arcs point from predator to prey; C(D) joins two vertices sharing a prey.
# - Added (isolated) vertices are named from a reserved prefix ("z#1", "z#2", ...).
# - The builder recurses: no holes -> chordal base; some hole edge with T empty ->
#   delete it and add one prey; otherwise split off a chordal side along a chordal
#   cut and glue it back with one prey.
# - Every glue is re-verified from scratch against its graph.

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field, replace
from typing import FrozenSet, Iterable, List, Optional, Set, Tuple

import networkx as nx

from chordality import find_peo, peo_ending_with_clique, is_chordal
from config import DEFAULT_CONFIG
from cut_checker import chordal_cut_from_split, find_chordal_cut
from errors import GraphError, PreconditionError, SoundnessError
from graph_core import (
    Arc,
    Digraph,
    Edge,
    Graph,
    VertexId,
    delete_edge,
    edge_ref,
    induced_subgraph,
    is_clique,
    make_digraph,
    make_graph,
    sort_vertices,
    vertex_key,
)
from hole_analysis import (
    Hole,
    check_preconditions,
    enumerate_holes,
    s_nonempty,
    t_ce,
)

log = logging.getLogger("chordalcut.competition")

DEFAULT_FRESH_PREFIX = DEFAULT_CONFIG["competition"]["fresh_prefix"]

# ---------- Data models ----------
@dataclass(frozen=True)
class BuildStep:
    branch: str                       # chordal-base | edge-deletion | chordal-glue | pad
    hole: Optional[Hole] = None
    edge: Optional[Edge] = None
    holes_before: int = 0
    added_after: int = 0


@dataclass(frozen=True)
class CompetitionCertificate:
    digraph: Digraph
    base_vertices: FrozenSet[VertexId]
    added_vertices: Tuple[VertexId, ...]
    steps: Tuple[BuildStep, ...] = field(default=(), compare=False)

    @property
    def claimed_k(self) -> int:
        return len(self.added_vertices)


class FreshNames:
    """Fresh labels over a reserved prefix, never reusing a taken label."""

    def __init__(self, taken: Iterable[VertexId] = (), prefix: str = DEFAULT_FRESH_PREFIX):
        self.prefix = prefix
        self.taken: Set[VertexId] = set(taken)
        self.counter = 0

    def reserve(self, labels: Iterable[VertexId]) -> None:
        self.taken.update(labels)

    def next(self) -> str:
        while True:
            self.counter += 1
            name = f"{self.prefix}{self.counter}"
            if name not in self.taken:
                self.taken.add(name)
                return name


def _names_for(taken: Iterable[VertexId], names: Optional[FreshNames]) -> FreshNames:
    if names is None:
        return FreshNames(taken)
    names.reserve(taken)
    return names


# ---------- Competition graphs ----------
def competition_graph(D: Digraph) -> Graph:
    edges = []
    for x in D.vertices:
        edges.extend(itertools.combinations(D.predecessors(x), 2))
    return make_graph(D.vertices, edges)


def is_acyclic(D: Digraph) -> Tuple[bool, Tuple[VertexId, ...]]:
    """(True, topological order) or (False, vertices of one directed cycle)."""
    if nx.is_directed_acyclic_graph(D.nx):
        return True, tuple(nx.lexicographical_topological_sort(D.nx, key=vertex_key))
    cycle = nx.find_cycle(D.nx)
    return False, tuple(a for a, _b in cycle)


# ---------- Builders ----------
def roberts_chordal_digraph(G: Graph, names: Optional[FreshNames] = None) -> CompetitionCertificate:
    """One prey per PEO position: F_1 -> z and F_i -> v_{i-1}."""
    peo = find_peo(G)
    if peo is None:
        raise PreconditionError("the chordal construction needs a chordal graph")
    names = _names_for(G.vertices, names)
    z = names.next()
    order = peo.order
    arcs: List[Arc] = []
    for i, v in enumerate(order):
        clique = {v} | peo.later_neighbors(G, i)
        prey = z if i == 0 else order[i - 1]
        arcs.extend((f, prey) for f in sort_vertices(clique))
    D = make_digraph(list(G.vertices) + [z], arcs)
    step = BuildStep("chordal-base", holes_before=0, added_after=1)
    log.debug("chordal base on %d vertices, prey %s", len(G), z)
    return CompetitionCertificate(D, G.vertex_set, (z,), (step,))


def pad_certificate(
    cert: CompetitionCertificate, target_k: int, names: Optional[FreshNames] = None
) -> CompetitionCertificate:
    if cert.claimed_k > target_k:
        raise GraphError(f"certificate already has {cert.claimed_k} > {target_k} added vertices")
    if cert.claimed_k == target_k:
        return cert
    names = _names_for(cert.digraph.vertices, names)
    extra = [names.next() for _ in range(target_k - cert.claimed_k)]
    step = BuildStep("pad", added_after=target_k)
    return CompetitionCertificate(
        cert.digraph.with_vertices(extra),
        cert.base_vertices,
        cert.added_vertices + tuple(extra),
        cert.steps + (step,),
    )


def extend_after_edge_deletion(
    cert: CompetitionCertificate, e: Edge, names: Optional[FreshNames] = None
) -> CompetitionCertificate:
    """Certificate for G from one for G - uv: a new prey z with arcs (u, z), (v, z)."""
    u, v = edge_ref(*e)
    for x in (u, v):
        if x not in cert.base_vertices:
            raise GraphError(f"{x!r} is not a base vertex of the certificate")
    names = _names_for(cert.digraph.vertices, names)
    z = names.next()
    D = cert.digraph.with_vertices([z]).with_arcs([(u, z), (v, z)])
    step = BuildStep("edge-deletion", edge=(u, v), added_after=cert.claimed_k + 1)
    return CompetitionCertificate(
        D, cert.base_vertices, cert.added_vertices + (z,), cert.steps + (step,)
    )


def glue_chordal_part(
    cert1: CompetitionCertificate,
    G2: Graph,
    X: Iterable[VertexId],
    names: Optional[FreshNames] = None,
) -> CompetitionCertificate:
    """Attach the chordal graph G2 along the clique X = V(G1) ∩ V(G2).

    With a PEO u_1..u_m of G2 ending in X and r = m - |X|: F_1 -> z', F_i -> u_{i-1}
    for 2 <= i <= r, and X -> u_r. All new prey are fresh, so C(D) gains exactly E(G2).
    """
    X = frozenset(X)
    if X != cert1.base_vertices & G2.vertex_set:
        raise PreconditionError("X must equal the overlap of the two vertex sets")
    if not is_chordal(G2):
        raise PreconditionError("the glued part must be chordal")
    if not is_clique(G2, X):
        raise PreconditionError("the overlap is not a clique of the glued part")
    r = len(G2) - len(X)
    if r == 0:
        raise PreconditionError("nothing to glue: the chordal part is the clique itself")
    clash = [v for v in G2.vertex_set - X if v in cert1.digraph]
    if clash:
        raise GraphError(f"glued vertex {clash[0]!r} already used by the certificate")

    covered = competition_graph(cert1.digraph)
    missing = [p for p in itertools.combinations(sort_vertices(X), 2) if not covered.has_edge(*p)]
    if len(missing) > 1:
        raise PreconditionError(
            f"{len(missing)} edges inside the overlap are absent from the first part (at most 1 allowed)"
        )

    names = _names_for(cert1.digraph.vertices, names)
    names.reserve(G2.vertices)
    order = peo_ending_with_clique(G2, X).order
    pos = {v: i for i, v in enumerate(order)}
    z = names.next()
    arcs: List[Arc] = []
    for i in range(r):
        clique = {order[i]} | {w for w in G2.neighbors(order[i]) if pos[w] > i}
        prey = z if i == 0 else order[i - 1]
        arcs.extend((f, prey) for f in sort_vertices(clique))
    arcs.extend((x, order[r - 1]) for x in sort_vertices(X))

    D = cert1.digraph.with_vertices(list(order[:r]) + [z]).with_arcs(arcs)
    step = BuildStep("chordal-glue", added_after=cert1.claimed_k + 1)
    return CompetitionCertificate(
        D,
        cert1.base_vertices | G2.vertex_set,
        cert1.added_vertices + (z,),
        cert1.steps + (step,),
    )


# ---------- Verification ----------
def verify_certificate(G: Graph, cert: CompetitionCertificate) -> Tuple[bool, str]:
    """Recompute everything; the diagnostic names the first violated condition."""
    try:
        D = cert.digraph
        added = tuple(cert.added_vertices)
        if set(cert.base_vertices) != set(G.vertices):
            return False, "base vertex set mismatch: base vertices differ from V(G)"
        if len(set(added)) != len(added) or set(added) & set(cert.base_vertices):
            return False, "vertex set mismatch: added vertices repeat or overlap V(G)"
        if set(D.vertices) != set(G.vertices) | set(added):
            return False, "vertex set mismatch: digraph vertices differ from V(G) plus added vertices"

        ok, witness = is_acyclic(D)
        if not ok:
            return False, "cycle found: " + " -> ".join(map(str, witness + witness[:1]))

        CD = competition_graph(D)
        for a, b in G.edges:
            if not CD.has_edge(a, b):
                return False, f"missing competition edge {a}-{b}"
        for a, b in CD.edges:
            if a in G and b in G and not G.has_edge(a, b):
                return False, f"spurious competition edge {a}-{b}"
        for z in added:
            if CD.neighbors(z):
                other = sort_vertices(CD.neighbors(z))[0]
                return False, f"added vertex {z} is not isolated (adjacent to {other})"
        return True, "ok"
    except Exception as exc:  # malformed certificates must not escape as exceptions
        return False, f"malformed certificate: {exc}"


# ---------- Bounded construction ----------
def build_bounded_digraph(
    G: Graph,
    names: Optional[FreshNames] = None,
    check_invariants: bool = DEFAULT_CONFIG["analysis"]["check_invariants"],
    prefix: str = DEFAULT_FRESH_PREFIX,
) -> CompetitionCertificate:
    """Acyclic digraph D with C(D) = G ∪ I_{h(G)+1} for the graph class of interest."""
    holes = check_preconditions(G)
    names = names if names is not None else FreshNames(G.vertices, prefix)
    names.reserve(G.vertices)
    cert = _build(G, names, check_invariants)
    cert = pad_certificate(cert, holes.count + 1, names)
    ok, why = verify_certificate(G, cert)
    if not ok:
        raise SoundnessError(f"built certificate fails verification: {why}")
    log.info("built certificate: h=%d, %d added vertices, %d arcs",
             holes.count, cert.claimed_k, len(cert.digraph.arcs))
    return cert


def _require_fewer_holes(sub: Graph, h: int, check_invariants: bool, what: str) -> int:
    h_sub = enumerate_holes(sub).count
    if h_sub > h - 1:
        raise SoundnessError(f"{what} has {h_sub} holes, expected at most {h - 1}")
    if check_invariants:
        try:
            check_preconditions(sub)
        except PreconditionError as exc:
            raise SoundnessError(f"{what} left the graph class: {exc}") from exc
    return h_sub


def _build(G: Graph, names: FreshNames, check_invariants: bool) -> CompetitionCertificate:
    holes = enumerate_holes(G)
    h = holes.count
    if h == 0:
        return roberts_chordal_digraph(G, names)

    # some hole edge without a C-avoiding path: drop it
    for C in holes:
        for e in C.edges():
            if t_ce(G, C, e):
                continue
            smaller = delete_edge(G, e)
            _require_fewer_holes(smaller, h, check_invariants, f"G - {e[0]}{e[1]}")
            log.debug("h=%d: deleting edge %s-%s of hole %s", h, e[0], e[1], C)
            sub = pad_certificate(_build(smaller, names, check_invariants), h, names)
            cert = extend_after_edge_deletion(sub, e, names)
            return replace(cert, steps=cert.steps[:-1] + (
                BuildStep("edge-deletion", C, e, h, cert.claimed_k),))

    # every hole edge has a C-avoiding path: split along a chordal cut
    cut = find_chordal_cut(G, verify_class=False)
    if cut is None:
        raise SoundnessError("all T sets are non-empty but no chordal cut was found")
    X, U = cut.x_ce, cut.u_ce
    rest = induced_subgraph(G, G.vertex_set - U)
    if s_nonempty(rest, cut.hole, cut.edge):
        raise SoundnessError(f"G - U still has a C-avoiding path for {cut.hole}")
    first = delete_edge(rest, cut.edge)
    _require_fewer_holes(first, h, check_invariants, "G[V - U] - e*")
    second = induced_subgraph(G, U | X)
    if check_invariants and not chordal_cut_from_split(G, first.vertex_set, second.vertex_set):
        raise SoundnessError(f"overlap {sort_vertices(X)} of the split is not a chordal cut")

    log.debug("h=%d: chordal cut at hole %s edge %s-%s, |U|=%d", h, cut.hole, *cut.edge, len(U))
    sub = pad_certificate(_build(first, names, check_invariants), h, names)
    cert = glue_chordal_part(sub, second, X, names)
    ok, why = verify_certificate(G, cert)
    if not ok:
        raise SoundnessError(f"glue produced an invalid certificate: {why}")
    return replace(cert, steps=cert.steps[:-1] + (
        BuildStep("chordal-glue", cut.hole, cut.edge, h, cert.claimed_k),))
