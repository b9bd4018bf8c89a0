# Copyright (c) iasikit authors. All rights reserved.
from math import comb

import pytest

from iasikit import (ElementCorrespondence, Graph, InvalidArgumentError,
                     NotFoundError, PreconditionError, apply_transform,
                     contract, contraction_vertex_id, cycle_graph,
                     edge_vertex_id, line_graph, path_graph,
                     same_up_to_relabel, small_graph_family, star_graph,
                     subdivide, subdivision_vertex_id, subgraph,
                     topological_reduction, total_graph)

P3 = Graph(edges=[("u", "v"), ("v", "w")])
K2 = Graph(edges=[("u", "v")])
TRIANGLE = cycle_graph(3)


def test_vertex_ids():
    assert edge_vertex_id("v", "u") == "e:u-v"
    assert contraction_vertex_id("v", "u") == "c:u+v"
    assert subdivision_vertex_id(P3) == "s:1"
    assert subdivision_vertex_id(Graph(edges=[("s:1", "a")])) == "s:2"


def test_line_graph():
    L, corr = line_graph(P3)
    assert L.canonical_edges() == [("e:u-v", "e:v-w")]
    assert corr.origin("e:u-v") == ("u", "v")
    assert sorted(corr.from_edges()) == ["e:u-v", "e:v-w"]

    L, _ = line_graph(TRIANGLE)
    assert L.number_of_vertices() == 3 and L.number_of_edges() == 3

    L, _ = line_graph(star_graph(3))
    assert L.number_of_edges() == 3
    assert all(L.degree(v) == 2 for v in L.vertices)

    L, _ = line_graph(K2)
    assert L.vertices == ("e:u-v", ) and L.number_of_edges() == 0

    with pytest.raises(InvalidArgumentError):
        line_graph(Graph(["a"], allow_isolated=True))


def test_line_graph_counts():
    for _, G in small_graph_family(6, bipartite_only=False):
        L, _ = line_graph(G)
        assert L.number_of_vertices() == G.number_of_edges()
        assert L.number_of_edges() == sum(
            comb(G.degree(v), 2) for v in G.vertices)


def test_line_graph_edge_id_clash():
    # a-b|c and a|b-c both render as e:a-b-c
    G = Graph(edges=[("a-b", "c"), ("a", "b-c"), ("c", "a")])
    with pytest.raises(InvalidArgumentError, match="names both edge"):
        line_graph(G)
    with pytest.raises(InvalidArgumentError, match="names both edge"):
        total_graph(G)

    L, lc = line_graph(Graph(edges=[("a-b", "c"), ("c", "a")]))
    assert L.number_of_vertices() == 2
    assert lc.vertex_origin["e:a-b-c"] == ("a-b", "c")


def test_total_graph():
    T, corr = total_graph(K2)
    assert set(T.vertices) == {"u", "v", "e:u-v"}
    assert T.number_of_edges() == 3

    T, corr = total_graph(P3)
    assert T.number_of_vertices() == 5
    assert T.number_of_edges() == 7
    assert sorted(corr.from_vertices()) == ["u", "v", "w"]
    assert corr.origin("e:v-w") == ("v", "w")

    for _, G in small_graph_family(5, bipartite_only=False):
        T, corr = total_graph(G)
        assert T.number_of_vertices() == G.number_of_vertices() + \
            G.number_of_edges()
        on_vertices = subgraph(T, G.vertices,
                               [e for e in T.edges if set(e) <= set(G.vertices)])
        assert on_vertices == G
        L, _ = line_graph(G)
        edge_vertices = corr.from_edges()
        on_edges = subgraph(
            T, edge_vertices,
            [e for e in T.edges if set(e) <= set(edge_vertices)])
        assert on_edges == L


def test_subdivide():
    H, w = subdivide(K2, ("v", "u"))
    assert w == "s:1"
    assert H.canonical_edges() == [("s:1", "u"), ("s:1", "v")]

    H, w = subdivide(TRIANGLE, ("v0", "v1"))
    assert H.number_of_vertices() == 4 and H.number_of_edges() == 4
    assert all(H.degree(v) == 2 for v in H.vertices)

    H, w = subdivide(P3, ("u", "v"))
    assert same_up_to_relabel(path_graph(4), H, {
        "v0": "u",
        "v1": w,
        "v2": "v",
        "v3": "w"
    })

    with pytest.raises(NotFoundError):
        subdivide(P3, ("u", "w"))


def test_contract():
    H, w = contract(K2, ("u", "v"))
    assert H.vertices == ("c:u+v", )
    assert H.isolated_vertices() == ["c:u+v"]

    H, w = contract(TRIANGLE, ("v0", "v1"))
    assert H.canonical_edges() == [("c:v0+v1", "v2")]

    H, w = contract(cycle_graph(4), ("v1", "v2"))
    assert H.number_of_vertices() == 3 and H.number_of_edges() == 3

    with pytest.raises(NotFoundError):
        contract(P3, ("u", "w"))


def test_topological_reduction():
    H = topological_reduction(P3, "v")
    assert H == K2.relabel({"v": "w"})
    with pytest.raises(PreconditionError):
        topological_reduction(TRIANGLE, "v0")
    with pytest.raises(PreconditionError):
        topological_reduction(star_graph(3), "x0")


def test_round_trips():
    for name, G in small_graph_family(6, bipartite_only=False):
        for u, v in G.edges:
            H, w = subdivide(G, (u, v))
            back, c = contract(H, (u, w))
            assert same_up_to_relabel(G, back, {u: c}), (name, u, v)
            assert topological_reduction(H, w) == G, (name, u, v)


def test_subgraph():
    H = subgraph(TRIANGLE, ["v0", "v1"], [("v0", "v1")])
    assert H == Graph(edges=[("v0", "v1")])
    assert subgraph(TRIANGLE, TRIANGLE.vertices, TRIANGLE.edges) == TRIANGLE
    with pytest.raises(InvalidArgumentError):
        subgraph(TRIANGLE, ["v0"], [("v0", "v1")])
    with pytest.raises(InvalidArgumentError):
        subgraph(TRIANGLE, ["v0", "x"], [])
    with pytest.raises(InvalidArgumentError):
        subgraph(P3, ["u", "w"], [("u", "w")])
    assert subgraph(P3, ["u", "w"], []).isolated_vertices() == ["u", "w"]


def test_apply_transform():
    H, corr = apply_transform("reduce", P3, vertex="v")
    assert corr == ElementCorrespondence.identity(H)
    H, corr = apply_transform("subdivide", P3, edge=("v", "u"))
    assert corr.origin("s:1") == ("u", "v")
    H, corr = apply_transform("contract", P3, edge=("u", "v"))
    assert corr.origin("c:u+v") == ("u", "v")
    assert corr.origin("w") == "w"
    with pytest.raises(InvalidArgumentError):
        apply_transform("contract", P3)
    with pytest.raises(InvalidArgumentError):
        apply_transform("reduce", P3)
    with pytest.raises(InvalidArgumentError):
        apply_transform("flip", P3)
