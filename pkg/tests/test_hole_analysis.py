import itertools

import networkx as nx
import pytest

from conftest import brute_force_holes, oracle_holes
from errors import GraphError, PreconditionError, SizeBoundError
from graph_core import delete_edge, induced_subgraph, is_clique, make_graph
from hole_analysis import (
    Hole,
    check_preconditions,
    cut_analysis,
    cut_table,
    enumerate_holes,
    find_k222,
    is_c_avoiding_path,
    is_hole_edge_disjoint,
    is_k222_free,
    s_ce_exhaustive,
    s_nonempty,
    shared_hole_edge,
    t_ce,
    x_c,
)


def test_canonical_hole_is_least_rotation_or_reflection():
    assert Hole.canonical(["u", "v", "a", "b"]).cycle == ("a", "b", "u", "v")
    assert Hole.canonical(["b", "a", "v", "u"]) == Hole.canonical(["u", "v", "a", "b"])
    assert str(Hole.canonical(["u", "v", "a", "b"])) == "(a,b,u,v)"


def test_hole_edges_follow_the_cycle():
    hole = Hole.canonical(["u", "v", "a", "b"])
    assert hole.edges() == [("a", "b"), ("b", "u"), ("u", "v"), ("a", "v")]


def test_hole_rejects_short_or_repeating_cycles():
    with pytest.raises(GraphError):
        Hole(("a", "b", "c"))
    with pytest.raises(GraphError):
        Hole(("a", "b", "a", "c"))


def test_enumerate_holes_fixtures(c4, house, w4, two_holes, triangle, c5_chord):
    assert [h.cycle for h in enumerate_holes(c4)] == [("a", "b", "u", "v")]
    assert enumerate_holes(house).count == 1
    assert enumerate_holes(w4).count == 1
    assert [h.cycle for h in enumerate_holes(two_holes)] == [("a", "b", "u", "v"), ("p", "q", "r", "u")]
    assert enumerate_holes(triangle).count == 0
    assert [h.cycle for h in enumerate_holes(c5_chord)] == [(0, 2, 3, 4)]


def test_enumerate_holes_matches_subset_oracle(small_corpus):
    for seed, G in small_corpus[:60]:
        found = {h.vertex_set for h in enumerate_holes(G)}
        assert found == brute_force_holes(G), seed


def test_enumerate_holes_matches_networkx(corpus):
    for seed, G in corpus[:200]:
        found = {h.vertex_set for h in enumerate_holes(G)}
        assert found == oracle_holes(G), seed


def test_hole_edge_disjoint(c6_long_chord, two_holes):
    assert is_hole_edge_disjoint(two_holes)
    assert not is_hole_edge_disjoint(c6_long_chord)
    first, second, edge = shared_hole_edge(c6_long_chord)
    assert edge == (0, 3)
    assert first != second


def test_find_k222_names_the_octahedron(octahedron, w4):
    assert find_k222(octahedron) == (0, 1, 2, 3, 4, 5)
    assert not is_k222_free(octahedron)
    assert is_k222_free(w4)


def test_find_k222_inside_larger_graph(octahedron):
    edges = list(octahedron.edges) + [(0, 6), (6, 7), (7, 2)]
    G = make_graph(range(8), edges)
    assert find_k222(G) == (0, 1, 2, 3, 4, 5)


def test_check_preconditions_reports_witnesses(octahedron, c6_long_chord, two_holes):
    with pytest.raises(PreconditionError, match=r"K_\{2,2,2\}") as info:
        check_preconditions(octahedron)
    assert info.value.witness == (0, 1, 2, 3, 4, 5)
    with pytest.raises(PreconditionError, match="share the edge 0-3"):
        check_preconditions(c6_long_chord)
    assert check_preconditions(two_holes).count == 2


def test_x_c(house, w4):
    hole = enumerate_holes(house).holes[0]
    assert x_c(house, hole) == frozenset()
    assert x_c(w4, enumerate_holes(w4).holes[0]) == frozenset({"x"})


def test_x_c_rejects_non_hole(house):
    with pytest.raises(GraphError, match="not a hole"):
        x_c(house, Hole(("u", "v", "w", "a")))


def test_is_c_avoiding_path(house):
    hole = enumerate_holes(house).holes[0]
    assert is_c_avoiding_path(house, hole, ["u", "w", "v"])
    assert not is_c_avoiding_path(house, hole, ["u", "v"])
    assert is_c_avoiding_path(house, hole, ["w", "u"])
    assert not is_c_avoiding_path(house, hole, ["w", "u", "b"])
    with pytest.raises(GraphError):
        is_c_avoiding_path(house, hole, ["w", "a"])


def test_t_ce_and_s_on_house(house, c4):
    hole = enumerate_holes(house).holes[0]
    assert t_ce(house, hole, ("u", "v")) == frozenset({"w"})
    assert t_ce(house, hole, ("a", "b")) == frozenset()
    assert s_nonempty(house, hole, ("u", "v"))
    assert not s_nonempty(house, hole, ("a", "b"))
    c4_hole = enumerate_holes(c4).holes[0]
    assert all(not s_nonempty(c4, c4_hole, e) for e in c4_hole.edges())


def test_t_ce_excludes_common_neighbours_of_the_whole_hole(w4):
    hole = enumerate_holes(w4).holes[0]
    assert all(t_ce(w4, hole, e) == frozenset() for e in hole.edges())


def test_t_ce_rejects_edge_off_the_hole(house):
    hole = enumerate_holes(house).holes[0]
    with pytest.raises(GraphError, match="is not an edge of the hole"):
        t_ce(house, hole, ("u", "w"))


def test_s_ce_exhaustive_collects_long_paths(house_with_y):
    hole = enumerate_holes(house_with_y).holes[0]
    assert s_ce_exhaustive(house_with_y, hole, ("u", "v")) == frozenset({"w", "y"})
    assert t_ce(house_with_y, hole, ("u", "v")) == frozenset({"w"})


def test_s_ce_exhaustive_bound(house):
    hole = enumerate_holes(house).holes[0]
    with pytest.raises(SizeBoundError):
        s_ce_exhaustive(house, hole, ("u", "v"), bound=4)


def test_cut_analysis_house(house):
    hole = enumerate_holes(house).holes[0]
    info = cut_analysis(house, hole, ("v", "u"))
    assert info.edge == ("u", "v")
    assert info.x_ce == frozenset({"u", "v"})
    assert info.q_ce == frozenset({"a", "b"})
    assert info.u_ce == frozenset({"w"})
    assert info.s_ce == frozenset({"w"})
    assert info.s_nonempty


def test_cut_table_scan_order(house):
    table = cut_table(house)
    assert [info.edge for info in table] == [("a", "b"), ("b", "u"), ("u", "v"), ("a", "v")]
    assert cut_table(house, exhaustive=False)[2].s_ce is None


def test_t_nonempty_iff_s_nonempty(corpus):
    for seed, G in corpus:
        for info in cut_table(G, exhaustive=False):
            assert info.s_nonempty == bool(info.t_ce), (seed, info.hole, info.edge)
            assert info.t_ce <= info.u_ce


def test_s_matches_path_oracle_on_small_graphs(small_corpus):
    for seed, G in small_corpus:
        for info in cut_table(G, bound=12):
            assert info.s_ce is not None
            assert info.s_nonempty == bool(info.s_ce), (seed, info.hole, info.edge)


def test_x_c_is_clique_and_no_avoiding_path_between_distant_hole_vertices(small_corpus):
    for seed, G in small_corpus:
        for hole in enumerate_holes(G):
            blocked = hole.vertex_set | x_c(G, hole)
            assert is_clique(G, x_c(G, hole))
            n = len(hole.cycle)
            for i, j in itertools.combinations(range(n), 2):
                if j - i in (1, n - 1):
                    continue
                a, b = hole.cycle[i], hole.cycle[j]
                room = induced_subgraph(G, (G.vertex_set - blocked) | {a, b})
                assert not nx.has_path(room.nx, a, b), (seed, hole, a, b)


def test_deleting_edge_without_avoiding_path_keeps_class_and_drops_a_hole(corpus):
    for seed, G in corpus[:200]:
        holes = enumerate_holes(G)
        for info in cut_table(G, holes, exhaustive=False):
            if info.s_nonempty:
                continue
            smaller = delete_edge(G, info.edge)
            assert check_preconditions(smaller).count <= holes.count - 1, (seed, info.hole, info.edge)
