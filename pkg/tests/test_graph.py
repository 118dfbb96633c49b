from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strategies import graphs
from cyclesat.graph import (
    Graph,
    Graph6Error,
    GraphError,
    add_edge,
    bfs_distances,
    build_graph,
    decode_graph6,
    encode_graph6,
    is_connected,
    remove_edge,
    to_dot,
)


def test_build_and_query():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    assert g.m == 3
    assert g.degrees() == [1, 2, 2, 1]
    assert g.neighbors(1) == [0, 2]
    assert g.has_edge(2, 1) and not g.has_edge(0, 3)
    assert g.edges() == [(0, 1), (1, 2), (2, 3)]
    assert g.non_edges() == [(0, 2), (0, 3), (1, 3)]
    assert not g.is_complete()


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 5)], [(-1, 2)]])
def test_build_rejects_bad_edges(edges):
    with pytest.raises(GraphError):
        build_graph(3, edges)


def test_graph_rejects_asymmetric_rows():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0))


def test_add_remove_edge():
    g = build_graph(3, [(0, 1)])
    h = add_edge(g, 1, 2)
    assert h.m == 2 and g.m == 1
    assert remove_edge(h, 2, 1) == g
    with pytest.raises(GraphError):
        add_edge(g, 0, 1)
    with pytest.raises(GraphError):
        remove_edge(g, 1, 2)


def test_connectivity_and_distances():
    p = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    assert is_connected(p)
    assert bfs_distances(p, 0) == [0, 1, 2, 3]
    assert not is_connected(build_graph(3, [(0, 1)]))
    assert is_connected(build_graph(1, []))
    with pytest.raises(GraphError):
        is_connected(build_graph(0, []))


def test_relabel_moves_edges():
    g = build_graph(3, [(0, 1)])
    h = g.relabel([2, 0, 1])  # new vertex i is old vertex order[i]
    assert h.edges() == [(1, 2)]


def test_graph6_small_known():
    assert encode_graph6(build_graph(3, [(0, 1), (1, 2), (0, 2)])) == b"Bw"
    assert encode_graph6(build_graph(1, [])) == b"@"
    assert encode_graph6(build_graph(0, [])) == b"?"


@settings(max_examples=200, deadline=None)
@given(graphs(min_n=0, max_n=12))
def test_graph6_matches_networkx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    ref = nx.to_graph6_bytes(h, header=False).strip()
    assert encode_graph6(g) == ref
    assert decode_graph6(ref) == g


@pytest.mark.parametrize("n", [62, 63, 64, 100, 300])
def test_graph6_long_headers(n):
    edges = [(v, (v + 1) % n) for v in range(n)]
    g = build_graph(n, edges)
    ref = nx.to_graph6_bytes(nx.cycle_graph(n), header=False).strip()
    assert encode_graph6(g) == ref
    assert decode_graph6(ref) == g


def test_graph6_header_and_str_input():
    assert decode_graph6(">>graph6<<Bw\n") == build_graph(3, [(0, 1), (1, 2), (0, 2)])


@pytest.mark.parametrize("bad", ["", "B", "Bww", "B~", "B\x1f", "Bx"])
def test_graph6_rejects_malformed(bad):
    with pytest.raises(Graph6Error):
        decode_graph6(bad)


def test_to_dot_lists_every_edge():
    dot = to_dot(build_graph(3, [(0, 1), (1, 2)]), "P3")
    assert dot.startswith("graph P3 {")
    assert "0 -- 1;" in dot and "1 -- 2;" in dot
