# competition_number.py — exact competition number of very small graphs
# Usage:
#   from competition_number import exact_competition_number
#   exact_competition_number(G, kmax=4)    # int, or None when unknown
#
# Notes:
# - G ∪ I_k is C(D) for an acyclic D iff the vertices can be ordered w_1..w_n so that
#   each w_j receives a clique F_j of G drawn from earlier vertices, the k extra prey
#   receive arbitrary cliques, and the F's cover E(G).
# - Within one slot a maximal clique of the allowed vertex set covers at least as much
#   as any of its subsets, so only those are tried.
# - Search states (placed set, uncovered edges) are memoized; hard cap of 7 vertices.

from __future__ import annotations

import itertools
import logging
from functools import lru_cache
from typing import FrozenSet, Optional, Tuple

import networkx as nx

from config import DEFAULT_CONFIG, EXACT_MAX_VERTICES_HARD
from graph_core import Edge, Graph, VertexId, edge_key, edge_ref

log = logging.getLogger("chordalcut.exact")

DEFAULT_KMAX = DEFAULT_CONFIG["competition"]["default_kmax"]


def _pairs(clique) -> FrozenSet[Edge]:
    return frozenset(edge_ref(a, b) for a, b in itertools.combinations(clique, 2))


def _realizable(G: Graph, k: int) -> bool:
    vertices = G.vertices
    all_cliques = [frozenset(c) for c in nx.find_cliques(G.nx)]
    omega = max((len(c) for c in all_cliques), default=1)
    max_pairs = omega * (omega - 1) // 2

    @lru_cache(maxsize=None)
    def slot_cliques(placed: FrozenSet[VertexId]) -> Tuple[FrozenSet[Edge], ...]:
        if len(placed) < 2:
            return ()
        sub = G.nx.subgraph(placed)
        return tuple(_pairs(c) for c in nx.find_cliques(sub) if len(c) >= 2)

    @lru_cache(maxsize=None)
    def coverable(uncovered: FrozenSet[Edge], budget: int) -> bool:
        if not uncovered:
            return True
        if budget == 0 or len(uncovered) > budget * max_pairs:
            return False
        a, b = min(uncovered, key=edge_key)
        for c in all_cliques:
            if a in c and b in c and coverable(uncovered - _pairs(c), budget - 1):
                return True
        return False

    @lru_cache(maxsize=None)
    def search(placed: FrozenSet[VertexId], uncovered: FrozenSet[Edge]) -> bool:
        if not uncovered:
            return True
        slots_left = len(vertices) - len(placed) + k
        if len(uncovered) > slots_left * max_pairs:
            return False
        if len(placed) == len(vertices):
            return coverable(uncovered, k)
        options = slot_cliques(placed) or (frozenset(),)
        for v in vertices:
            if v in placed:
                continue
            for covered in options:
                if search(placed | {v}, uncovered - covered):
                    return True
        return False

    return search(frozenset(), G.edge_set)


def exact_competition_number(
    G: Graph, kmax: int = DEFAULT_KMAX, max_vertices: int = EXACT_MAX_VERTICES_HARD
) -> Optional[int]:
    """Least k <= kmax with G ∪ I_k an acyclic competition graph; None when unknown."""
    max_vertices = min(max_vertices, EXACT_MAX_VERTICES_HARD)
    if len(G) > max_vertices:
        log.info("exact competition number skipped: %d vertices > %d", len(G), max_vertices)
        return None
    for k in range(0, kmax + 1):
        if _realizable(G, k):
            log.debug("k(G) = %d", k)
            return k
    return None
