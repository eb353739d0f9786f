"""Graph representation and basic structural queries."""

import pytest
from hypothesis import given, strategies as st

from colorlab.graph import (
    GraphError,
    apex,
    components,
    corner,
    degree_histogram,
    delete_vertices,
    hub,
    is_bipartite,
    is_connected,
    make_graph,
    parse_vertex,
    plain,
)


def path(n):
    vs = [plain(i) for i in range(n)]
    return make_graph(vs, [(vs[i], vs[i + 1]) for i in range(n - 1)])


def cycle(n):
    vs = [plain(i) for i in range(n)]
    return make_graph(vs, [(vs[i], vs[(i + 1) % n]) for i in range(n)])


def test_empty_graph():
    g = make_graph([], [])
    assert g.n == 0 and g.m == 0
    assert components(g) == []


def test_triangle_degrees():
    g = cycle(3)
    assert g.n == 3 and g.m == 3
    assert [g.degree(v) for v in g.vertices] == [2, 2, 2]


def test_duplicate_edges_collapse():
    a, b = plain(0), plain(1)
    g = make_graph([a, b], [(a, b), (b, a), (a, b)])
    assert g.m == 1


def test_loop_rejected():
    with pytest.raises(GraphError, match="loop"):
        make_graph([plain(0)], [(plain(0), plain(0))])


def test_unknown_endpoint_rejected():
    with pytest.raises(GraphError, match="outside the vertex set"):
        make_graph([plain(0)], [(plain(0), plain(1))])


def test_vertex_total_order():
    vs = sorted([plain(0), corner(1, -1), hub(0, 0), apex(), corner(-1, 1)])
    assert vs == [apex(), hub(0, 0), corner(-1, 1), corner(1, -1), plain(0)]


def test_corner_requires_odd_coordinates():
    with pytest.raises(GraphError, match="odd"):
        corner(2, 1)


def test_parse_vertex_round_trip():
    for v in (apex(), hub(3, -1), corner(-5, 1), plain(17)):
        assert parse_vertex(str(v)) == v
    with pytest.raises(GraphError):
        parse_vertex("nonsense:1,2,3")


def test_delete_vertices():
    g = cycle(5)
    h = delete_vertices(g, [plain(0)])
    assert h.n == 4 and h.m == 3
    assert delete_vertices(g, []).adj == g.adj
    with pytest.raises(GraphError):
        delete_vertices(g, [plain(99)])


def test_delete_drops_layout():
    a, b = plain(0), plain(1)
    g = make_graph([a, b], [(a, b)], layout={a: (0, 0), b: (1, 0)})
    h = delete_vertices(g, [a])
    assert set(h.layout) == {b}


def test_components_partition():
    g = make_graph(
        [plain(i) for i in range(5)],
        [(plain(0), plain(1)), (plain(2), plain(3))],
    )
    comps = components(g)
    assert comps == [(plain(0), plain(1)), (plain(2), plain(3)), (plain(4),)]
    assert not is_connected(g)
    assert is_connected(cycle(4))


def test_degree_histogram():
    assert degree_histogram(path(4)) == {1: 2, 2: 2}


def test_bipartite():
    assert is_bipartite(cycle(4)).bipartite
    res = is_bipartite(cycle(5))
    assert not res.bipartite
    assert len(res.odd_cycle) % 2 == 1


@given(
    st.integers(1, 9),
    st.lists(st.tuples(st.integers(0, 8), st.integers(0, 8)), max_size=20),
)
def test_invariants_hold_for_random_graphs(n, raw_edges):
    vs = [plain(i) for i in range(n)]
    edges = [(plain(a % n), plain(b % n)) for a, b in raw_edges if a % n != b % n]
    g = make_graph(vs, edges)
    # adjacency is symmetric and sorted, no loops, m = half the degree sum
    for v in g.vertices:
        assert list(g.adj[v]) == sorted(g.adj[v])
        assert v not in g.adj[v]
        for u in g.adj[v]:
            assert v in g.adj[u]
    assert 2 * g.m == sum(g.degree(v) for v in g.vertices)
    # components partition the vertex set
    comps = components(g)
    flat = [v for comp in comps for v in comp]
    assert sorted(flat) == list(g.vertices)
