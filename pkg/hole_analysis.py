# hole_analysis.py — holes, graph-class checks and the per-(hole, edge) cut sets
# Usage:
#   from hole_analysis import enumerate_holes, check_preconditions, cut_analysis
#   holes = enumerate_holes(G)
#   check_preconditions(G)                 # raises PreconditionError with a witness
#   info = cut_analysis(G, holes.holes[0], holes.holes[0].edges()[0])
#
# Notes:
# - A hole is a chordless cycle of length >= 4, stored in canonical rotation/reflection.
# - "blocked" below always means V(C) ∪ X_C for the hole C under study.
# - S emptiness is decided through components of G - blocked; the full S set is an
#   exponential oracle kept for small graphs.

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import networkx as nx

from config import DEFAULT_CONFIG
from errors import GraphError, PreconditionError, SizeBoundError, SoundnessError
from graph_core import (
    Edge,
    Graph,
    VertexId,
    common_neighbors,
    connected_components,
    edge_ref,
    induced_subgraph,
    remove_vertices,
    sort_vertices,
    vertex_key,
)

log = logging.getLogger("chordalcut.holes")

DEFAULT_EXHAUSTIVE_BOUND = DEFAULT_CONFIG["analysis"]["exhaustive_path_bound"]

# ---------- Data models ----------
@dataclass(frozen=True)
class Hole:
    cycle: Tuple[VertexId, ...]

    def __post_init__(self):
        if len(self.cycle) < 4:
            raise GraphError(f"a hole has at least 4 vertices, got {len(self.cycle)}")
        if len(set(self.cycle)) != len(self.cycle):
            raise GraphError(f"hole repeats a vertex: {self.cycle!r}")

    @staticmethod
    def canonical(seq: Sequence[VertexId]) -> "Hole":
        """Least rotation/reflection of the cyclic sequence under vertex_key."""
        seq = list(seq)
        n = len(seq)
        variants = []
        for s in (seq, seq[::-1]):
            for i in range(n):
                variants.append(tuple(s[i:] + s[:i]))
        best = min(variants, key=lambda t: tuple(vertex_key(v) for v in t))
        return Hole(best)

    @property
    def vertex_set(self) -> FrozenSet[VertexId]:
        return frozenset(self.cycle)

    def edges(self) -> List[Edge]:
        n = len(self.cycle)
        return [edge_ref(self.cycle[i], self.cycle[(i + 1) % n]) for i in range(n)]

    @property
    def edge_set(self) -> FrozenSet[Edge]:
        return frozenset(self.edges())

    def sort_key(self) -> Tuple:
        return tuple(vertex_key(v) for v in self.cycle)

    def __len__(self) -> int:
        return len(self.cycle)

    def __str__(self) -> str:
        return "(" + ",".join(str(v) for v in self.cycle) + ")"


@dataclass(frozen=True)
class HoleSet:
    holes: Tuple[Hole, ...]

    @property
    def count(self) -> int:
        return len(self.holes)

    def __iter__(self):
        return iter(self.holes)

    def __len__(self) -> int:
        return len(self.holes)


@dataclass(frozen=True)
class CutAnalysis:
    hole: Hole
    edge: Edge
    x_c: FrozenSet[VertexId]
    x_ce: FrozenSet[VertexId]
    t_ce: FrozenSet[VertexId]
    s_nonempty: bool
    s_ce: Optional[FrozenSet[VertexId]]
    q_ce: FrozenSet[VertexId]
    u_ce: FrozenSet[VertexId]


# ---------- Hole enumeration ----------
def enumerate_holes(G: Graph) -> HoleSet:
    """All chordless cycles of length >= 4.

    Paths are grown from their smallest vertex s through larger vertices only; an
    extension x must not touch any path vertex other than the tip (and s, which
    closes the cycle).
    """
    found: Dict[Tuple[VertexId, ...], Hole] = {}
    for s in G.vertices:
        sk = vertex_key(s)
        stack: List[List[VertexId]] = [
            [s, p] for p in sort_vertices(G.neighbors(s)) if vertex_key(p) > sk
        ]
        while stack:
            path = stack.pop()
            tip = path[-1]
            inner = path[1:-1]
            on_path = set(path)
            for x in sort_vertices(G.neighbors(tip)):
                if x in on_path or vertex_key(x) <= sk:
                    continue
                nbrs = G.neighbors(x)
                if any(p in nbrs for p in inner):
                    continue
                if s in nbrs:
                    if len(path) >= 3:
                        hole = Hole.canonical(path + [x])
                        found.setdefault(hole.cycle, hole)
                    continue
                stack.append(path + [x])
    holes = tuple(sorted(found.values(), key=Hole.sort_key))
    log.debug("enumerated %d hole(s) on %d vertices", len(holes), len(G))
    return HoleSet(holes)


def shared_hole_edge(G: Graph, holes: Optional[HoleSet] = None) -> Optional[Tuple[Hole, Hole, Edge]]:
    holes = holes if holes is not None else enumerate_holes(G)
    owner: Dict[Edge, Hole] = {}
    for hole in holes:
        for e in hole.edges():
            if e in owner:
                return owner[e], hole, e
            owner[e] = hole
    return None


def is_hole_edge_disjoint(G: Graph) -> bool:
    return shared_hole_edge(G) is None


# ---------- K_{2,2,2} detection ----------
def _is_octahedron(G: Graph, six: Sequence[VertexId]) -> bool:
    """Induced K_{2,2,2}: the complement on the six vertices is a perfect matching."""
    missing = [(a, b) for a, b in itertools.combinations(six, 2) if not G.has_edge(a, b)]
    if len(missing) != 3:
        return False
    covered = {v for pair in missing for v in pair}
    return len(covered) == 6


def find_k222(G: Graph) -> Optional[Tuple[VertexId, ...]]:
    """Six vertices inducing K_{2,2,2}, or None.

    Candidate 6-sets are grown from a non-adjacent pair {a, b}: the other four
    vertices must all be common neighbours of a and b.
    """
    for a, b in itertools.combinations(G.vertices, 2):
        if G.has_edge(a, b):
            continue
        w = sort_vertices(G.neighbors(a) & G.neighbors(b))
        for c, d in itertools.combinations(w, 2):
            if G.has_edge(c, d):
                continue
            rest = [x for x in w if x not in (c, d) and G.has_edge(x, c) and G.has_edge(x, d)]
            for e, f in itertools.combinations(rest, 2):
                six = (a, b, c, d, e, f)
                if _is_octahedron(G, six):
                    return tuple(sort_vertices(six))
    return None


def is_k222_free(G: Graph) -> bool:
    return find_k222(G) is None


def check_preconditions(G: Graph, holes: Optional[HoleSet] = None) -> HoleSet:
    """Raise PreconditionError unless G is K_{2,2,2}-free and hole-edge-disjoint."""
    witness = find_k222(G)
    if witness is not None:
        names = ", ".join(str(v) for v in witness)
        raise PreconditionError(f"graph contains an induced K_{{2,2,2}} on {{{names}}}", witness)
    holes = holes if holes is not None else enumerate_holes(G)
    shared = shared_hole_edge(G, holes)
    if shared is not None:
        h1, h2, e = shared
        raise PreconditionError(
            f"holes {h1} and {h2} share the edge {e[0]}-{e[1]}", shared
        )
    return holes


# ---------- Per-hole sets ----------
def _require_hole(G: Graph, C: Hole) -> None:
    n = len(C.cycle)
    for v in C.cycle:
        if v not in G:
            raise GraphError(f"{C} is not a hole of G: unknown vertex {v!r}")
    for i, j in itertools.combinations(range(n), 2):
        consecutive = (j - i == 1) or (i == 0 and j == n - 1)
        if G.has_edge(C.cycle[i], C.cycle[j]) != consecutive:
            raise GraphError(f"{C} is not a hole of G")


def _require_hole_edge(C: Hole, e: Edge) -> Edge:
    e = edge_ref(*e)
    if e not in C.edge_set:
        raise GraphError(f"{e[0]}-{e[1]} is not an edge of the hole {C}")
    return e


def x_c(G: Graph, C: Hole) -> FrozenSet[VertexId]:
    """Vertices adjacent to every vertex of C."""
    _require_hole(G, C)
    common = None
    for v in C.cycle:
        common = G.neighbors(v) if common is None else common & G.neighbors(v)
    return frozenset(common)


def _blocked(G: Graph, C: Hole) -> FrozenSet[VertexId]:
    return C.vertex_set | x_c(G, C)


def is_c_avoiding_path(G: Graph, C: Hole, P: Sequence[VertexId]) -> bool:
    P = list(P)
    if len(set(P)) != len(P) or any(v not in G for v in P):
        raise GraphError(f"{P!r} is not a path of G")
    if any(not G.has_edge(a, b) for a, b in zip(P, P[1:])):
        raise GraphError(f"{P!r} is not a path of G")
    blocked = _blocked(G, C)
    if any(v in blocked for v in P[1:-1]):
        return False
    if len(P) == 2:
        return P[0] not in blocked or P[1] not in blocked
    return True


def t_ce(G: Graph, C: Hole, e: Edge) -> FrozenSet[VertexId]:
    """Middle vertices w of C-avoiding paths u w v."""
    u, v = _require_hole_edge(C, e)
    return common_neighbors(G, u, v) - _blocked(G, C)


def s_nonempty(G: Graph, C: Hole, e: Edge) -> bool:
    """Whether a C-avoiding (u, v)-path exists.

    Such a path exists iff one component of G - blocked touches both u and v.
    """
    u, v = _require_hole_edge(C, e)
    rest = remove_vertices(G, _blocked(G, C))
    nu, nv = G.neighbors(u), G.neighbors(v)
    return any(block & nu and block & nv for block in connected_components(rest))


def s_ce_exhaustive(
    G: Graph, C: Hole, e: Edge, bound: int = DEFAULT_EXHAUSTIVE_BOUND
) -> FrozenSet[VertexId]:
    """Union of the inner vertices of every C-avoiding (u, v)-path (exponential)."""
    u, v = _require_hole_edge(C, e)
    if len(G) > bound:
        raise SizeBoundError(
            f"exhaustive path enumeration is limited to {bound} vertices (graph has {len(G)}); "
            "use s_nonempty instead"
        )
    blocked = _blocked(G, C)
    # inner vertices must avoid blocked; u and v appear only as endpoints
    room = induced_subgraph(G, (G.vertex_set - blocked) | {u, v})
    found = set()
    for path in nx.all_simple_paths(room.nx, u, v):
        if is_c_avoiding_path(G, C, path):
            found.update(path[1:-1])
    return frozenset(found)


def cut_analysis(
    G: Graph,
    C: Hole,
    e: Edge,
    bound: int = DEFAULT_EXHAUSTIVE_BOUND,
    exhaustive: bool = True,
) -> CutAnalysis:
    """X_{C,e}, T, Q and U for one hole edge; s_ce only when the path oracle may run."""
    u, v = _require_hole_edge(C, e)
    xc = x_c(G, C)
    xce = xc | {u, v}
    t = t_ce(G, C, (u, v))
    blocks = connected_components(remove_vertices(G, xce))

    rest_of_hole = [w for w in C.cycle if w not in (u, v)]
    q = next(b for b in blocks if rest_of_hole[0] in b)
    if not all(w in q for w in rest_of_hole):
        raise SoundnessError(f"V(C) - {{{u},{v}}} of {C} is split across components")

    u_ce = frozenset().union(*[b for b in blocks if b != q and b & t])
    s_full = s_ce_exhaustive(G, C, (u, v), bound) if exhaustive and len(G) <= bound else None
    return CutAnalysis(
        hole=C,
        edge=(u, v),
        x_c=xc,
        x_ce=frozenset(xce),
        t_ce=t,
        s_nonempty=s_nonempty(G, C, (u, v)),
        s_ce=s_full,
        q_ce=q,
        u_ce=u_ce,
    )


def cut_table(
    G: Graph,
    holes: Optional[HoleSet] = None,
    bound: int = DEFAULT_EXHAUSTIVE_BOUND,
    exhaustive: bool = True,
) -> List[CutAnalysis]:
    """Every (hole, edge) analysis in scan order: holes canonical, edges in cycle order."""
    holes = holes if holes is not None else enumerate_holes(G)
    return [cut_analysis(G, C, e, bound, exhaustive) for C in holes for e in C.edges()]
