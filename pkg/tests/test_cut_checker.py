import itertools

import networkx as nx
import pytest

from chordality import is_chordal
from conftest import graph_from_edges
from cut_checker import (
    ChordalCutCertificate,
    certificate_problems,
    chordal_cut_from_split,
    find_chordal_cut,
    has_chordal_property,
    hole_with_enough_separating_edges,
    is_chordal_cut,
    is_clique_cut,
)
from errors import PreconditionError
from graph_core import connected_components, induced_subgraph, remove_vertices
from hole_analysis import Hole, cut_table


def test_cycle_has_no_clique_cut(c4):
    for r in (1, 2):
        for X in itertools.combinations(c4.vertices, r):
            assert not is_clique_cut(c4, X)


def test_house_clique_cut(house):
    assert is_clique_cut(house, {"u", "v"})
    assert is_chordal_cut(house, {"u", "v"}) == (True, frozenset({"w"}))
    assert is_chordal_cut(house, {"a", "b"}) == (False, frozenset())


def test_every_clique_cut_of_a_chordal_graph_is_chordal():
    G = graph_from_edges([("a", "b"), ("b", "c"), ("b", "d"), ("c", "d"), ("d", "e")])
    assert is_chordal(G)
    for r in (1, 2):
        for X in itertools.combinations(G.vertices, r):
            if is_clique_cut(G, X):
                assert is_chordal_cut(G, X)[0], X


def test_find_chordal_cut_on_house(house):
    cert = find_chordal_cut(house)
    assert cert.hole == Hole.canonical(["u", "v", "a", "b"])
    assert cert.edge == ("u", "v")
    assert cert.x_ce == frozenset({"u", "v"})
    assert cert.u_ce == frozenset({"w"})
    assert set(cert.peo.order) == {"u", "v", "w"}
    assert certificate_problems(house, cert) == []


def test_find_chordal_cut_none_on_c4_and_w4(c4, w4):
    assert find_chordal_cut(c4) is None
    assert find_chordal_cut(w4) is None


def test_find_chordal_cut_checks_the_class(octahedron):
    with pytest.raises(PreconditionError):
        find_chordal_cut(octahedron)


def test_find_chordal_cut_restricted_to_one_hole(two_holes):
    G = graph_from_edges(list(two_holes.edges) + [("s", "p"), ("s", "q")])
    second = Hole.canonical(["u", "p", "q", "r"])
    cert = find_chordal_cut(G, hole=second)
    assert cert.hole == second
    assert cert.edge == ("p", "q")
    assert find_chordal_cut(G, hole=Hole.canonical(["u", "v", "a", "b"])) is None


def test_hole_with_enough_separating_edges(house, c4, two_holes):
    assert hole_with_enough_separating_edges(house) == Hole.canonical(["u", "v", "a", "b"])
    assert hole_with_enough_separating_edges(c4) is None
    assert hole_with_enough_separating_edges(two_holes) is None


def test_chordal_property(house, c4, triangle):
    assert has_chordal_property(house)
    # U is empty for every pair of C4, so G[X] is a single edge
    assert has_chordal_property(c4)
    assert not has_chordal_property(triangle)


def test_chordal_cut_from_split(house):
    assert chordal_cut_from_split(house, {"u", "v", "a", "b"}, {"u", "v", "w"})
    assert not chordal_cut_from_split(house, house.vertices, {"u", "v", "w"})


def test_certificate_problems_detects_tampering(house):
    cert = find_chordal_cut(house)
    bad = ChordalCutCertificate(cert.hole, cert.edge, frozenset({"a", "b"}), cert.u_ce, cert.peo)
    assert "x_ce is not a clique cut" in certificate_problems(house, bad)


def test_existence_when_every_edge_has_avoiding_path(corpus):
    hits = 0
    for seed, G in corpus:
        table = cut_table(G, exhaustive=False)
        if table and all(info.s_nonempty for info in table):
            hits += 1
            cert = find_chordal_cut(G)
            assert cert is not None, seed
            assert certificate_problems(G, cert) == [], seed
    assert hits > 0


def test_enough_separating_edges_implies_cut(corpus):
    for seed, G in corpus:
        if hole_with_enough_separating_edges(G) is not None:
            assert find_chordal_cut(G) is not None, seed


def test_returned_cut_is_a_chordal_cut(small_corpus):
    for seed, G in small_corpus:
        cert = find_chordal_cut(G)
        if cert is None:
            continue
        ok, witness = is_chordal_cut(G, cert.x_ce)
        assert ok, seed
        assert cert.u_ce <= witness, seed


def test_per_component_check_matches_union_scan(small_corpus):
    checked = 0
    for seed, G in small_corpus:
        for X in nx.enumerate_all_cliques(G.nx):
            X = frozenset(X)
            blocks = connected_components(remove_vertices(G, X))
            if not is_clique_cut(G, X) or len(blocks) > 5:
                continue
            ok, witness = is_chordal_cut(G, X)
            chordal_unions = []
            for r in range(1, len(blocks) + 1):
                for chosen in itertools.combinations(blocks, r):
                    union = frozenset().union(*chosen)
                    if nx.is_chordal(induced_subgraph(G, union | X).nx):
                        chordal_unions.append(union)
                    else:
                        assert not union <= witness, (seed, X, union)
            assert ok == bool(chordal_unions), (seed, X)
            assert witness == frozenset().union(*chordal_unions), (seed, X)
            checked += 1
    assert checked > 0


def test_avoiding_path_makes_x_ce_a_clique_cut(small_corpus):
    pairs = 0
    for seed, G in small_corpus:
        for info in cut_table(G, exhaustive=False):
            if info.s_nonempty:
                pairs += 1
                assert is_clique_cut(G, info.x_ce), (seed, info.hole, info.edge)
    assert pairs > 0
