import itertools

import networkx as nx
import pytest

from graph_core import Graph, make_graph
from graph_generator import generate_corpus

CORPUS_SIZE = 500


def cycle_edges(cycle):
    return [(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))]


def graph_from_edges(edges, extra=()):
    vertices = []
    for a, b in edges:
        for x in (a, b):
            if x not in vertices:
                vertices.append(x)
    vertices += [x for x in extra if x not in vertices]
    return make_graph(vertices, edges)


def brute_force_holes(G: Graph):
    """Vertex sets of induced cycles of length >= 4, by checking every subset."""
    found = set()
    for r in range(4, len(G) + 1):
        for subset in itertools.combinations(G.vertices, r):
            sub = G.nx.subgraph(subset)
            if all(d == 2 for _, d in sub.degree()) and nx.is_connected(sub):
                found.add(frozenset(subset))
    return found


def oracle_holes(G: Graph):
    return {frozenset(c) for c in nx.chordless_cycles(nx.Graph(G.nx)) if len(c) >= 4}


@pytest.fixture
def c4():
    return graph_from_edges(cycle_edges(["u", "v", "a", "b"]))


@pytest.fixture
def house():
    return graph_from_edges(cycle_edges(["u", "v", "a", "b"]) + [("w", "u"), ("w", "v")])


@pytest.fixture
def house_with_y():
    edges = cycle_edges(["u", "v", "a", "b"]) + [("w", "u"), ("w", "v"), ("y", "w"), ("y", "u")]
    return graph_from_edges(edges)


@pytest.fixture
def w4():
    return graph_from_edges(cycle_edges(["u", "v", "a", "b"]) + [("x", c) for c in "uvab"])


@pytest.fixture
def two_holes():
    return graph_from_edges(cycle_edges(["u", "v", "a", "b"]) + cycle_edges(["u", "p", "q", "r"]))


@pytest.fixture
def eared_c4():
    """C4 with one ear on every edge: every hole edge has a C-avoiding path."""
    edges = cycle_edges(["u", "v", "a", "b"])
    for i, (a, b) in enumerate(list(edges), 1):
        edges += [(f"e{i}", a), (f"e{i}", b)]
    return graph_from_edges(edges)


@pytest.fixture
def octahedron():
    non_edges = {frozenset((0, 1)), frozenset((2, 3)), frozenset((4, 5))}
    edges = [(a, b) for a, b in itertools.combinations(range(6), 2) if frozenset((a, b)) not in non_edges]
    return make_graph(range(6), edges)


@pytest.fixture
def triangle():
    return graph_from_edges([("a", "b"), ("b", "c"), ("a", "c")])


@pytest.fixture
def c6_long_chord():
    return graph_from_edges(cycle_edges(list(range(6))) + [(0, 3)])


@pytest.fixture
def c5_chord():
    return graph_from_edges(cycle_edges(list(range(5))) + [(0, 2)])


@pytest.fixture(scope="session")
def corpus():
    """Generated graphs, 8-20 vertices and 0-4 holes."""
    return list(generate_corpus(range(CORPUS_SIZE), n_min=8, n_max=20, max_holes=4))


@pytest.fixture(scope="session")
def small_corpus():
    """Generated graphs with at most 12 vertices, for the exponential oracles."""
    return list(generate_corpus(range(150), n_min=6, n_max=12, max_holes=3))


@pytest.fixture(scope="session")
def tiny_corpus():
    """Graphs small enough for the exact competition-number search."""
    return list(generate_corpus(range(60), n_min=4, n_max=7, max_holes=2))
