import itertools
import random

import pytest

from errors import GraphError
from graph_core import (
    add_edge,
    common_neighbors,
    component_count,
    connected_components,
    delete_edge,
    edge_ref,
    induced_subgraph,
    is_clique,
    make_digraph,
    make_graph,
    remove_vertices,
    sort_vertices,
)


def _random_graph(rng, n, p):
    edges = [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < p]
    return make_graph(range(n), edges)


def _random_graphs(count, max_n, seed=0):
    rng = random.Random(seed)
    for _ in range(count):
        yield rng, _random_graph(rng, rng.randint(0, max_n), rng.choice([0.15, 0.3, 0.5, 0.7]))


def test_vertex_order_puts_ints_before_strings():
    assert sort_vertices(["b", 10, "a", 2]) == [2, 10, "a", "b"]
    assert edge_ref("v", "u") == ("u", "v")
    assert edge_ref("a", 3) == (3, "a")


def test_make_graph_rejects_self_loop_and_unknown_endpoint():
    with pytest.raises(GraphError, match="self-loop"):
        make_graph(["u"], [("u", "u")])
    with pytest.raises(GraphError, match="not in the vertex list"):
        make_graph(["u"], [("u", "v")])


def test_labels_must_be_int_or_plain_str():
    with pytest.raises(GraphError):
        make_graph([1.5], [])
    with pytest.raises(GraphError):
        make_graph(["a b"], [])
    with pytest.raises(GraphError):
        make_graph([True], [])
    with pytest.raises(GraphError, match="looks like an integer"):
        make_graph(["12"], [])


def test_edges_sorted_and_normalized(c4):
    assert c4.edges == (("a", "b"), ("a", "v"), ("b", "u"), ("u", "v"))
    assert c4.vertices == ("a", "b", "u", "v")
    assert c4.has_edge("v", "u")
    assert not c4.has_edge("u", "a")


def test_equality_ignores_insertion_order(c4):
    other = make_graph(["v", "b", "a", "u"], [("b", "a"), ("u", "b"), ("v", "u"), ("a", "v")])
    assert other == c4
    assert hash(other) == hash(c4)


def test_connected_components_edgeless():
    G = make_graph([3, 1, 2], [])
    assert connected_components(G) == [frozenset({1}), frozenset({2}), frozenset({3})]
    assert component_count(make_graph([], [])) == 0


def test_induced_subgraph_of_house(house):
    sub = induced_subgraph(house, {"u", "v", "w"})
    assert set(sub.edges) == {("u", "v"), ("u", "w"), ("v", "w")}
    assert is_clique(house, {"u", "v", "w"})
    assert not is_clique(house, {"u", "a"})


def test_induced_subgraph_unknown_vertex(house):
    with pytest.raises(GraphError, match="unknown vertex"):
        induced_subgraph(house, {"u", "zz"})


def test_delete_then_add_edge_restores_graph(house):
    smaller = delete_edge(house, ("u", "v"))
    assert not smaller.has_edge("u", "v")
    assert add_edge(smaller, "u", "v") == house
    with pytest.raises(GraphError, match="is not an edge"):
        delete_edge(smaller, ("u", "v"))


def test_remove_vertices_splits_house(house):
    rest = remove_vertices(house, {"u", "v"})
    assert connected_components(rest) == [frozenset({"a", "b"}), frozenset({"w"})]


def test_common_neighbors(house):
    assert common_neighbors(house, "u", "v") == frozenset({"w"})
    assert common_neighbors(house, "a", "u") == frozenset({"b", "v"})
    with pytest.raises(GraphError):
        common_neighbors(house, "u", "u")


def test_digraph_values_are_immutable():
    D = make_digraph(["a", "b", "c"], [("a", "b")])
    D2 = D.with_arcs([("b", "c")])
    assert not D.has_arc("b", "c")
    assert D2.arcs == (("a", "b"), ("b", "c"))
    assert D2.predecessors("c") == ("b",)
    assert D2.successors("a") == ("b",)
    assert D2.without_arcs([("a", "b")]).arcs == (("b", "c"),)
    with pytest.raises(GraphError, match="already present"):
        D.with_vertices(["a"])
    with pytest.raises(GraphError, match="self-loop"):
        D.with_arcs([("a", "a")])


def test_no_edge_joins_two_components():
    for _, G in _random_graphs(200, 14, seed=11):
        blocks = connected_components(G)
        block_of = {v: i for i, block in enumerate(blocks) for v in block}
        assert sorted(block_of) == sorted(G.vertices)
        assert sum(len(b) for b in blocks) == len(G)
        for a, b in G.edges:
            assert block_of[a] == block_of[b]


def test_induced_subgraph_restricts_consistently():
    for rng, G in _random_graphs(200, 12, seed=12):
        A = {v for v in G.vertices if rng.random() < 0.6}
        B = {v for v in G.vertices if rng.random() < 0.6}
        direct = induced_subgraph(G, A & B)
        assert direct == induced_subgraph(induced_subgraph(G, A), A & B)
        assert direct == induced_subgraph(induced_subgraph(G, B), A & B)


def test_is_clique_matches_pair_enumeration():
    for _, G in _random_graphs(40, 8, seed=13):
        edges = {frozenset(e) for e in G.edges}
        for r in range(len(G) + 1):
            for X in itertools.combinations(G.vertices, r):
                expected = all(frozenset(p) in edges for p in itertools.combinations(X, 2))
                assert is_clique(G, X) == expected, X
