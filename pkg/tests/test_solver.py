import itertools

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from localantimagic.graphs import (
    coconut_tree, complete_bipartite, complete_tripartite, cycle, make_graph, path, star, wheel,
)
from localantimagic.labeling import verify_local_antimagic
from localantimagic.solver import (
    SearchLimits, canonical_form, connected_graphs, exact_chi_la, exhaustive_min_colors,
    exists_labeling_with_colors, lower_bound, scan_order,
)


def atlas_connected(n):
    return [h for h in nx.graph_atlas_g() if h.number_of_nodes() == n and nx.is_connected(h)]


@pytest.mark.parametrize("n, count", [(1, 1), (2, 1), (3, 2), (4, 6), (5, 21), (6, 112)])
def test_enumeration_counts(n, count):
    assert len(connected_graphs(n)) == count == len(atlas_connected(n))


def test_enumeration_is_iso_free_for_order_five():
    gs = [nx.Graph(list(g.edges)) for g in connected_graphs(5)]
    for a, b in itertools.combinations(gs, 2):
        assert not nx.is_isomorphic(a, b)


@given(st.integers(3, 7), st.integers(0, 10**6))
@settings(max_examples=40, deadline=None)
def test_canonical_form_is_relabel_invariant(n, seed):
    h = nx.gnp_random_graph(n, 0.5, seed=seed)
    perm = list(range(n))
    __import__("random").Random(seed).shuffle(perm)
    relabeled = [(perm[u], perm[v]) for u, v in h.edges()]
    assert canonical_form(n, list(h.edges())) == canonical_form(n, relabeled)


@pytest.mark.parametrize("g, value", [
    (complete_tripartite(1, 2, 2), 3),
    (complete_tripartite(1, 2, 3), 3),
    (wheel(4), 3),
    (cycle(4), 3),
    (cycle(5), 3),
    (path(4), 3),
    (path(3), 3),
    (complete_bipartite(2, 2), 3),
    (complete_bipartite(2, 4), 2),
] + [(star(q), q + 1) for q in range(2, 6)])
def test_exact_values(g, value):
    cert = exact_chi_la(g)
    assert cert.exhausted and cert.value == value
    assert verify_local_antimagic(g, cert.witness).color_count == value


@pytest.mark.parametrize("m, t", [(m, t) for m in range(2, 8) for t in range(1, 5) if m + t - 1 <= 9])
def test_coconut_trees_agree_with_search(m, t):
    assert exact_chi_la(coconut_tree(m, t)).value == t + 2


def test_lower_bound_components():
    assert lower_bound(cycle(5)) == 3
    assert lower_bound(coconut_tree(4, 3)) == 5
    assert lower_bound(complete_bipartite(2, 4)) == 2
    assert lower_bound(complete_bipartite(3, 3)) == 3


def test_two_color_gate_short_circuits():
    out = exists_labeling_with_colors(cycle(3), 2)
    assert out.gated and out.exhausted and out.feasible is False and out.nodes == 0


def test_rejects_disconnected_and_oversized():
    with pytest.raises(ValueError):
        exists_labeling_with_colors(make_graph(4, [(0, 1), (2, 3)]), 3)
    with pytest.raises(ValueError):
        exact_chi_la(wheel(8))
    with pytest.raises(ValueError):
        exact_chi_la(path(2))
    with pytest.raises(ValueError):
        SearchLimits(time_budget=0)


def test_node_budget_yields_bracket():
    cert = exact_chi_la(wheel(5), SearchLimits(max_edges=10, node_budget=50))
    assert not cert.exhausted and cert.value is None


def test_witness_is_deterministic():
    a = exists_labeling_with_colors(wheel(4), 3).witness
    b = exists_labeling_with_colors(wheel(4), 3).witness
    assert a == b


def test_parallel_mode_agrees():
    for g, c in [(wheel(4), 3), (cycle(5), 2), (cycle(6), 3), (complete_tripartite(1, 2, 2), 3)]:
        single = exists_labeling_with_colors(g, c).feasible
        multi = exists_labeling_with_colors(g, c, SearchLimits(workers=2)).feasible
        assert single == multi


def small_connected(max_edges):
    for n in range(3, max_edges + 2):
        for g in connected_graphs(n, max_edges=max_edges):
            if g.size <= max_edges:
                yield g


def test_pruned_matches_exhaustive_up_to_six_edges():
    for g in small_connected(6):
        best = exhaustive_min_colors(g)
        for c in range(2, g.order + 1):
            assert exists_labeling_with_colors(g, c).feasible == (best is not None and best <= c), (g, c)


def test_scan_small_orders():
    assert scan_order(5, 2).found == []
    rep = scan_order(6, 2)
    assert rep.complete and len(rep.found) == 2
    found = [nx.Graph(list(g.edges)) for g, _ in rep.found]
    assert any(nx.is_isomorphic(h, nx.complete_bipartite_graph(2, 4)) for h in found)
    for g, f in rep.found:
        assert verify_local_antimagic(g, f).color_count == 2


def test_scan_counts_add_up():
    rep = scan_order(5, 3)
    assert rep.total == 21 and rep.gated_out + rep.searched == rep.total
