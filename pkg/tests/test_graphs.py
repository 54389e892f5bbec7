import networkx as nx
import pytest
from hypothesis import given, strategies as st

from localantimagic.graphs import (
    Graph, coconut_tree, complete_bipartite, complete_tripartite, cycle, family,
    join_empty, make_graph, path, star, wheel,
)


def as_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from(g.edges)
    return h


def test_make_graph_normalizes_and_sorts():
    g = make_graph(3, [(2, 1), (0, 1)])
    assert g.edges == ((0, 1), (1, 2))
    assert make_graph(1, []).size == 0


@pytest.mark.parametrize("edges", [[(1, 0), (0, 1)], [(0, 0)], [(0, 3)], [(-1, 0)]])
def test_make_graph_rejects_bad_pairs(edges):
    with pytest.raises(ValueError):
        make_graph(3, edges)


def test_graph_rejects_unsorted_edges():
    with pytest.raises(ValueError):
        Graph(3, ((1, 2), (0, 1)))


@pytest.mark.parametrize("g, order, size", [
    (wheel(4), 5, 8),
    (wheel(12), 13, 24),
    (coconut_tree(5, 3), 8, 7),
    (complete_tripartite(1, 2, 7), 10, 2 + 7 + 14),
    (complete_bipartite(3, 4), 7, 12),
    (star(5), 6, 5),
    (path(4), 4, 3),
    (cycle(6), 6, 6),
])
def test_family_sizes(g, order, size):
    assert (g.order, g.size) == (order, size)


def test_families_match_networkx():
    assert nx.is_isomorphic(as_nx(wheel(6)), nx.wheel_graph(7))
    assert nx.is_isomorphic(as_nx(complete_bipartite(3, 5)), nx.complete_bipartite_graph(3, 5))
    assert nx.is_isomorphic(as_nx(complete_tripartite(1, 2, 4)), nx.complete_multipartite_graph(1, 2, 4))
    assert nx.is_isomorphic(as_nx(coconut_tree(4, 1)), nx.path_graph(5))


def test_join_empty_of_star_is_tripartite():
    for r in range(2, 8):
        assert nx.is_isomorphic(as_nx(join_empty(star(r), 2)), as_nx(complete_tripartite(1, 2, r)))


def test_family_dispatch_and_errors():
    assert family("wheel", 4) == wheel(4)
    with pytest.raises(ValueError):
        family("torus", 3)
    for bad in [lambda: path(1), lambda: cycle(2), lambda: wheel(2), lambda: coconut_tree(1, 1),
                lambda: complete_tripartite(1, 3, 2), lambda: star(0)]:
        with pytest.raises(ValueError):
            bad()


def test_vertex_names():
    w = wheel(4)
    assert w.vertex_name(0) == "u_1" and w.vertex_name(4) == "v"
    assert make_graph(2, [(0, 1)]).vertex_name(1) == "v_2"


@given(st.integers(2, 9), st.data())
def test_degree_sum_and_bipartition(n, data):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = data.draw(st.lists(st.sampled_from(pairs), unique=True))
    g = make_graph(n, chosen)
    assert sum(g.degrees) == 2 * g.size
    h = as_nx(g)
    assert g.is_connected() == nx.is_connected(h)
    parts = g.bipartition()
    assert (parts is not None) == nx.is_bipartite(h)
    if parts:
        a = set(parts[0])
        assert all((u in a) != (v in a) for u, v in g.edges)
