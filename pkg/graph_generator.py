# graph_generator.py — seeded random graphs inside the K_{2,2,2}-free hole-edge-disjoint class
# Usage:
#   from graph_generator import GenParams, generate, generate_corpus
#   G = generate(GenParams(seed=2, n_holes=2))
#   for seed, G in generate_corpus(range(500), max_holes=4): ...
#
# Notes:
# - Chordal growth: each new vertex is joined to a random non-empty part of a clique
#   already in the pool, so the new vertex is simplicial and the graph stays chordal.
# - Cycles of length min_cycle_len..max_cycle_len are glued at one vertex each, at
#   distinct anchors, so hole edges never coincide.
# - Style "mixed" also adds ears (a vertex joined to both ends of a hole edge) and,
#   now and then, one hub joined to every vertex of a short hole.
# - Every attempt is re-checked (both preconditions, exact hole count); a failed
#   attempt is retried with the same random stream.

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Set, Tuple

from config import DEFAULT_CONFIG
from errors import GenerationError, GraphError, PreconditionError
from graph_core import Graph, make_graph
from hole_analysis import check_preconditions

log = logging.getLogger("chordalcut.generator")

STYLES = ("chordal", "holes-glued", "mixed")
SEED_LIMIT = 2 ** 64

EAR_ALL_EDGES_PROB = 0.5
EAR_EDGE_PROB = 0.3
HUB_PROB = 0.2


@dataclass(frozen=True)
class GenParams:
    seed: int
    n_min: int = 8
    n_max: int = 20
    n_holes: int = 0
    style: str = "mixed"

    def validate(self) -> None:
        if not 0 <= self.seed < SEED_LIMIT:
            raise GraphError(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        if self.n_holes < 0:
            raise GraphError("n_holes must be >= 0")
        if self.style not in STYLES:
            raise GraphError(f"unknown style {self.style!r} (expected one of {', '.join(STYLES)})")
        if self.style == "chordal" and self.n_holes:
            raise GraphError("style 'chordal' cannot carry holes")
        if not 1 <= self.n_min <= self.n_max:
            raise GraphError(f"bad vertex range [{self.n_min}, {self.n_max}]")


class _Builder:
    """Mutable scratch graph with integer labels and a pool of known cliques."""

    def __init__(self, rng: random.Random):
        self.rng = rng
        self.adj: Dict[int, Set[int]] = {}
        self.cliques: List[FrozenSet[int]] = []
        self.hole_cycles: List[List[int]] = []

    def new_vertex(self) -> int:
        v = len(self.adj)
        self.adj[v] = set()
        return v

    def join(self, a: int, b: int) -> None:
        self.adj[a].add(b)
        self.adj[b].add(a)

    def __len__(self) -> int:
        return len(self.adj)

    # ---------- chordal growth ----------
    def grow_simplicial(self) -> int:
        v = self.new_vertex()
        if not self.cliques:
            self.cliques.append(frozenset({v}))
            return v
        clique = sorted(self.rng.choice(self.cliques))
        part = self.rng.sample(clique, self.rng.randint(1, len(clique)))
        for w in part:
            self.join(v, w)
        self.cliques.append(frozenset(part) | {v})
        return v

    # ---------- holes ----------
    def glue_cycle(self, anchor: int, length: int) -> List[int]:
        cycle = [anchor] + [self.new_vertex() for _ in range(length - 1)]
        for i in range(length):
            self.join(cycle[i], cycle[(i + 1) % length])
        for i in range(length):
            self.cliques.append(frozenset({cycle[i], cycle[(i + 1) % length]}))
        self.hole_cycles.append(cycle)
        return cycle

    def add_ear(self, a: int, b: int) -> int:
        y = self.new_vertex()
        self.join(y, a)
        self.join(y, b)
        self.cliques.append(frozenset({a, b, y}))
        return y

    def add_hub(self, cycle: List[int]) -> int:
        x = self.new_vertex()
        for w in cycle:
            self.join(x, w)
        for i in range(len(cycle)):
            self.cliques.append(frozenset({x, cycle[i], cycle[(i + 1) % len(cycle)]}))
        return x

    def to_graph(self) -> Graph:
        edges = [(a, b) for a in self.adj for b in self.adj[a] if a < b]
        return make_graph(sorted(self.adj), edges)


def _cycle_lengths(rng: random.Random, n: int, n_holes: int, lo: int, hi: int) -> List[int]:
    lengths = [rng.randint(lo, hi) for _ in range(n_holes)]
    # at least one vertex besides the glued cycles
    while 1 + sum(L - 1 for L in lengths) > n:
        longer = [i for i, L in enumerate(lengths) if L > 4]
        lengths[rng.choice(longer)] -= 1
    return lengths


def _attempt(rng: random.Random, params: GenParams, lo: int, hi: int) -> Graph:
    need = 1 + 3 * params.n_holes
    n = rng.randint(max(params.n_min, need), params.n_max)
    lengths = _cycle_lengths(rng, n, params.n_holes, lo, hi)
    spare = n - sum(L - 1 for L in lengths)

    b = _Builder(rng)
    base = spare if params.style != "mixed" else rng.randint(1, spare)
    for _ in range(base):
        b.grow_simplicial()

    anchors_used: Set[int] = set()
    for L in lengths:
        anchor = rng.choice([v for v in sorted(b.adj) if v not in anchors_used])
        anchors_used.add(anchor)
        b.glue_cycle(anchor, L)

    if params.style == "mixed":
        for cycle in b.hole_cycles:
            all_edges = rng.random() < EAR_ALL_EDGES_PROB
            for i in range(len(cycle)):
                if len(b) >= n:
                    break
                if all_edges or rng.random() < EAR_EDGE_PROB:
                    b.add_ear(cycle[i], cycle[(i + 1) % len(cycle)])
            if len(cycle) <= 5 and len(b) < n and rng.random() < HUB_PROB:
                b.add_hub(cycle)
        while len(b) < n:
            b.grow_simplicial()
    return b.to_graph()


def generate(params: GenParams, cfg: Optional[Dict] = None) -> Graph:
    """A graph with exactly params.n_holes holes that passes both preconditions."""
    params.validate()
    gen_cfg = (cfg or DEFAULT_CONFIG)["generator"]
    lo, hi = max(4, gen_cfg["min_cycle_len"]), gen_cfg["max_cycle_len"]
    if 1 + 3 * params.n_holes > params.n_max:
        raise GenerationError(
            f"{params.n_holes} holes need at least {1 + 3 * params.n_holes} vertices, "
            f"n_max is {params.n_max}"
        )

    rng = random.Random(params.seed)
    for attempt in range(1, gen_cfg["max_retries"] + 1):
        G = _attempt(rng, params, lo, hi)
        try:
            holes = check_preconditions(G)
        except PreconditionError as exc:
            log.debug("seed %d attempt %d rejected: %s", params.seed, attempt, exc)
            continue
        if holes.count != params.n_holes:
            log.debug("seed %d attempt %d rejected: %d holes, wanted %d",
                      params.seed, attempt, holes.count, params.n_holes)
            continue
        log.debug("seed %d: %d vertices, %d holes after %d attempt(s)",
                  params.seed, len(G), holes.count, attempt)
        return G
    raise GenerationError(
        f"retry budget exhausted after {gen_cfg['max_retries']} attempts "
        f"(seed {params.seed}, {params.n_holes} holes)"
    )


def generate_corpus(
    seeds: Iterable[int],
    n_min: int = 8,
    n_max: int = 20,
    max_holes: int = 4,
    style: str = "mixed",
    cfg: Optional[Dict] = None,
) -> Iterator[Tuple[int, Graph]]:
    """(seed, graph) pairs; the hole count cycles through 0..max_holes with the seed."""
    for seed in seeds:
        holes = 0 if style == "chordal" else seed % (max_holes + 1)
        yield seed, generate(GenParams(seed, n_min, n_max, holes, style), cfg)
