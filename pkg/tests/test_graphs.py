"""Graph representation and graph6 interchange."""

import random

import pytest

from spexplanar import (
    Graph,
    add_edge,
    connected_components,
    cycle,
    degree,
    disjoint_union,
    h_partition,
    is_connected,
    join_k2,
    k2_bipartite,
    new_graph,
    parse_graph6,
    path,
    realize_partition,
    to_graph6,
)


def test_new_graph_empty():
    g = new_graph(0)
    assert g.n == 0 and g.edge_count == 0


def test_new_graph_isolated():
    g = new_graph(3)
    assert g.n == 3 and g.edge_count == 0
    assert new_graph(5).edge_count == 0


def test_new_graph_rejects_negative():
    with pytest.raises(ValueError):
        new_graph(-1)


def test_add_edge_k2():
    g, added = add_edge(new_graph(2), 0, 1)
    assert added and g.edge_count == 1 and g.has_edge(0, 1) and g.has_edge(1, 0)


def test_add_edge_duplicate_flag():
    g, _ = add_edge(new_graph(2), 0, 1)
    g2, added = add_edge(g, 1, 0)
    assert not added and g2.edge_count == 1


def test_add_edge_rejects_self_loop_and_range():
    g = new_graph(3)
    with pytest.raises(ValueError):
        add_edge(g, 0, 0)
    with pytest.raises(ValueError):
        add_edge(g, 0, 3)


def test_degree_examples():
    assert degree(path(2), 0) == 1
    c4 = cycle(4)
    assert all(degree(c4, v) == 2 for v in range(4))
    # dominating side of K_{2,4} carries the top ids
    assert degree(k2_bipartite(6), 5) == 4
    with pytest.raises(ValueError):
        degree(c4, 9)


def test_is_connected():
    assert is_connected(path(3))
    assert not is_connected(disjoint_union(path(2), path(2)))
    host = join_k2(realize_partition(h_partition(10, 1, 1)))
    assert host.n == 10 and is_connected(host)
    with pytest.raises(ValueError):
        is_connected(new_graph(0))


def test_connected_components():
    g = disjoint_union(cycle(3), path(2))
    assert connected_components(g) == [[0, 1, 2], [3, 4]]


def test_adjacency_symmetry_after_construction():
    rng = random.Random(7)
    for _ in range(25):
        n = rng.randrange(2, 12)
        g = new_graph(n)
        for _ in range(rng.randrange(0, 2 * n)):
            u, v = rng.randrange(n), rng.randrange(n)
            if u != v:
                g, _ = add_edge(g, u, v)
        for u in range(n):
            for v in g.neighbors(u):
                assert g.has_edge(v, u)


def test_graph6_k2_and_k1():
    assert to_graph6(path(2)) == "A_"
    assert parse_graph6("A_") == path(2)
    assert to_graph6(new_graph(1)) == "@"


def test_graph6_header_accepted():
    assert parse_graph6(">>graph6<<A_") == path(2)
    assert parse_graph6(b"A_\n") == path(2)


def test_graph6_round_trip_random():
    rng = random.Random(20240601)
    for _ in range(100):
        n = rng.randrange(0, 21)
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.4]
        g = Graph.from_edges(n, edges)
        assert parse_graph6(to_graph6(g)) == g


def test_graph6_round_trip_canonical_string():
    rng = random.Random(99)
    for _ in range(50):
        n = rng.randrange(1, 15)
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5]
        s = to_graph6(Graph.from_edges(n, edges))
        assert to_graph6(parse_graph6(s)) == s


def test_graph6_long_form_size():
    g = new_graph(100)
    s = to_graph6(g)
    assert s.startswith("~")
    assert parse_graph6(s) == g


def test_graph6_rejects_bad_input():
    with pytest.raises(ValueError):
        parse_graph6("")
    with pytest.raises(ValueError):
        parse_graph6("D")  # truncated body for n=5
    with pytest.raises(ValueError):
        parse_graph6("A_X")  # trailing garbage
    with pytest.raises(ValueError):
        parse_graph6(":Fa@x^")  # sparse6
    with pytest.raises(ValueError):
        parse_graph6("A" + chr(20))


def test_disjoint_union():
    g = disjoint_union(path(2), path(2))
    assert g.n == 4 and g.edge_count == 2
    assert disjoint_union(path(3), new_graph(0)) == path(3)
    two_triangles = disjoint_union(cycle(3), cycle(3))
    assert two_triangles.n == 6 and two_triangles.edge_count == 6
    assert len(connected_components(two_triangles)) == 2


def test_disjoint_union_preserves_counts():
    rng = random.Random(3)
    for _ in range(20):
        n1, n2 = rng.randrange(0, 8), rng.randrange(0, 8)
        e1 = [(i, j) for i in range(n1) for j in range(i + 1, n1) if rng.random() < 0.5]
        e2 = [(i, j) for i in range(n2) for j in range(i + 1, n2) if rng.random() < 0.5]
        g1, g2 = Graph.from_edges(n1, e1), Graph.from_edges(n2, e2)
        u = disjoint_union(g1, g2)
        assert u.n == n1 + n2
        assert u.edge_count == g1.edge_count + g2.edge_count
