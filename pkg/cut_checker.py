# cut_checker.py — clique cuts, chordal cuts and the chordal-property scan
# Usage:
#   from cut_checker import find_chordal_cut, is_chordal_cut
#   cert = find_chordal_cut(G)            # ChordalCutCertificate or None
#   ok, U = is_chordal_cut(G, {"u", "v"})
#
# Notes:
# - The scan visits holes in canonical order and each hole's edges in cycle order,
#   and only pairs whose T set is non-empty.
# - When every hole edge has a C-avoiding path the scan is guaranteed to find a cut;
#   coming back empty-handed there raises SoundnessError.

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Optional, Tuple

from chordality import PEO, find_peo, verify_peo
from errors import SoundnessError
from graph_core import (
    Edge,
    Graph,
    VertexId,
    component_count,
    connected_components,
    induced_subgraph,
    is_clique,
    remove_vertices,
)
from hole_analysis import CutAnalysis, Hole, check_preconditions, cut_table, s_nonempty

log = logging.getLogger("chordalcut.cuts")


@dataclass(frozen=True)
class ChordalCutCertificate:
    hole: Hole
    edge: Edge
    x_ce: FrozenSet[VertexId]
    u_ce: FrozenSet[VertexId]
    peo: PEO


# ---------- Cut predicates ----------
def is_clique_cut(G: Graph, X: Iterable[VertexId]) -> bool:
    X = frozenset(X)
    if not is_clique(G, X):
        return False
    return component_count(remove_vertices(G, X)) > component_count(G)


def is_chordal_cut(G: Graph, X: Iterable[VertexId]) -> Tuple[bool, FrozenSet[VertexId]]:
    """(is chordal cut, union of every component K with G[K ∪ X] chordal).

    Components of G - X meet only through the clique X, so a union of components
    is chordal together with X exactly when each member is.
    """
    X = frozenset(X)
    if not is_clique_cut(G, X):
        return False, frozenset()
    good = [
        block
        for block in connected_components(remove_vertices(G, X))
        if find_peo(induced_subgraph(G, block | X)) is not None
    ]
    witness = frozenset().union(*good)
    return bool(good), witness


# ---------- Scans ----------
def _certify(G: Graph, info: CutAnalysis) -> Optional[ChordalCutCertificate]:
    side = induced_subgraph(G, info.u_ce | info.x_ce)
    peo = find_peo(side)
    if peo is None:
        return None
    return ChordalCutCertificate(info.hole, info.edge, info.x_ce, info.u_ce, peo)


def find_chordal_cut(
    G: Graph, hole: Optional[Hole] = None, verify_class: bool = True
) -> Optional[ChordalCutCertificate]:
    """First (hole, edge) pair with T non-empty whose side G[U ∪ X] is chordal."""
    holes = check_preconditions(G) if verify_class else None
    table = cut_table(G, holes, exhaustive=False)
    scan = table if hole is None else [info for info in table if info.hole == hole]

    for info in scan:
        if not info.t_ce:
            continue
        cert = _certify(G, info)
        if cert is not None:
            log.info("chordal cut at hole %s edge %s-%s", info.hole, *info.edge)
            return cert

    if hole is None and table and all(info.s_nonempty for info in table):
        raise SoundnessError(
            "every hole edge has a C-avoiding path but no (hole, edge) side is chordal"
        )
    log.info("no chordal cut found by the (hole, edge) scan")
    return None


def hole_with_enough_separating_edges(G: Graph) -> Optional[Hole]:
    """A hole C with |{e in E(C) : S_{C,e} non-empty}| >= h(G), or None."""
    holes = check_preconditions(G)
    for C in holes:
        count = sum(1 for e in C.edges() if s_nonempty(G, C, e))
        if count >= holes.count:
            return C
    return None


def has_chordal_property(G: Graph) -> bool:
    """Some (hole, edge) pair has a chordal G[V(U) ∪ X]; T may be empty here."""
    for info in cut_table(G, exhaustive=False):
        if find_peo(induced_subgraph(G, info.u_ce | info.x_ce)) is not None:
            return True
    return False


def chordal_cut_from_split(
    G: Graph, first: Iterable[VertexId], second: Iterable[VertexId]
) -> bool:
    """Whether the overlap of a glue split is a chordal cut.

    Only meaningful when both sides own a vertex the other lacks.
    """
    first, second = frozenset(first), frozenset(second)
    if not (first - second) or not (second - first):
        return False
    return is_chordal_cut(G, first & second)[0]


def certificate_problems(G: Graph, cert: ChordalCutCertificate) -> List[str]:
    """Re-check a certificate from scratch; an empty list means it holds."""
    problems = []
    if not is_clique_cut(G, cert.x_ce):
        problems.append("x_ce is not a clique cut")
    side = induced_subgraph(G, cert.u_ce | cert.x_ce)
    if not verify_peo(side, cert.peo.order):
        problems.append("peo does not verify on G[U ∪ X]")
    blocks = connected_components(remove_vertices(G, cert.x_ce))
    if frozenset().union(*[b for b in blocks if b & cert.u_ce]) != cert.u_ce:
        problems.append("u_ce is not a union of components of G - x_ce")
    return problems
