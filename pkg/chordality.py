# chordality.py — chordal recognition and perfect elimination orderings
# Usage:
#   from chordality import find_peo, is_chordal, peo_ending_with_clique
#   peo = find_peo(G)                       # None when G has a hole
#   order = peo_ending_with_clique(G2, X)   # X occupies the last |X| slots
#
# Notes:
# - Recognition runs maximum cardinality search and then verifies the order;
#   a failed verification means "not chordal".
# - Ties are broken by the smallest vertex label.

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from errors import PreconditionError, SoundnessError
from graph_core import Graph, VertexId, induced_subgraph, is_clique, sort_vertices, vertex_key

log = logging.getLogger("chordalcut.chordality")


@dataclass(frozen=True)
class PEO:
    order: Tuple[VertexId, ...]

    def position(self) -> Dict[VertexId, int]:
        return {v: i for i, v in enumerate(self.order)}

    def later_neighbors(self, G: Graph, i: int) -> FrozenSet[VertexId]:
        pos = self.position()
        return frozenset(w for w in G.neighbors(self.order[i]) if pos[w] > i)

    def __len__(self) -> int:
        return len(self.order)


# ---------- Verification ----------
def verify_peo(G: Graph, order: Sequence[VertexId]) -> bool:
    """Each vertex's later neighbours are pairwise adjacent and the order covers V(G)."""
    order = tuple(order)
    if len(order) != len(G) or set(order) != set(G.vertices):
        return False
    pos = {v: i for i, v in enumerate(order)}
    for i, v in enumerate(order):
        later = [w for w in G.neighbors(v) if pos[w] > i]
        if not is_clique(G, later):
            return False
    return True


# ---------- Recognition ----------
def _mcs_order(G: Graph) -> List[VertexId]:
    """Maximum cardinality search; the reverse visiting order is the candidate PEO."""
    weight = {v: 0 for v in G.vertices}
    unnumbered = set(G.vertices)
    visited: List[VertexId] = []
    while unnumbered:
        z = min(unnumbered, key=lambda v: (-weight[v], vertex_key(v)))
        unnumbered.remove(z)
        visited.append(z)
        for y in G.neighbors(z):
            if y in unnumbered:
                weight[y] += 1
    visited.reverse()
    return visited


def find_peo(G: Graph) -> Optional[PEO]:
    order = _mcs_order(G)
    if verify_peo(G, order):
        return PEO(tuple(order))
    log.debug("maximum cardinality search order fails verification: graph is not chordal")
    return None


def is_chordal(G: Graph) -> bool:
    return find_peo(G) is not None


def simplicial_vertices(G: Graph) -> List[VertexId]:
    return [v for v in G.vertices if is_clique(G, G.neighbors(v))]


def peo_ending_with_clique(G: Graph, X: Iterable[VertexId]) -> PEO:
    """A PEO whose last |X| entries are exactly X (in label order).

    Repeatedly removes the smallest simplicial vertex outside X; a chordal graph
    that is not complete has two non-adjacent simplicial vertices, so one of them
    always lies outside the clique X.
    """
    X = frozenset(X)
    if not is_chordal(G):
        raise PreconditionError("peo_ending_with_clique needs a chordal graph")
    if not is_clique(G, X):
        raise PreconditionError(f"{{{', '.join(map(str, sort_vertices(X)))}}} is not a clique")

    remaining = set(G.vertices)
    order: List[VertexId] = []
    while remaining - X:
        current = induced_subgraph(G, remaining)
        candidates = [v for v in simplicial_vertices(current) if v not in X]
        if not candidates:
            raise SoundnessError("chordal graph without a simplicial vertex outside the clique")
        order.append(candidates[0])
        remaining.remove(candidates[0])
    order.extend(sort_vertices(X))

    if not verify_peo(G, order):
        raise SoundnessError(f"constructed order {order!r} is not a perfect elimination ordering")
    return PEO(tuple(order))
