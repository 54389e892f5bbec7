import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from localantimagic.graphs import coconut_tree, complete_bipartite, cycle, make_graph, path, star, wheel
from localantimagic.labeling import (
    EdgeLabeling, LabelingMatrix, chromatic_number, graph_from_labeling_matrix, matrix_sums,
    pendant_lower_bound, two_color_certificate_check, validate_tripartite_properties,
    verify_local_antimagic,
)


def test_verifier_accepts_and_counts_colors():
    rep = verify_local_antimagic(cycle(3), [1, 2, 3])
    assert rep.valid and rep.color_count == 3 and rep.colors == (3, 4, 5)


def test_verifier_reports_clash():
    g = path(3)
    rep = verify_local_antimagic(g, [1, 2])
    assert rep.valid
    # u_0 carries 4+3 and u_1 carries 4+1+2
    rep = verify_local_antimagic(make_graph(5, [(0, 1), (0, 2), (1, 3), (1, 4)]), [4, 3, 1, 2])
    assert rep.valid is False and "share the sum" in rep.first_violation


def test_verifier_rejects_non_bijection():
    rep = verify_local_antimagic(cycle(3), [1, 1, 3])
    assert not rep.valid and "permutation" in rep.first_violation
    with pytest.raises(ValueError):
        verify_local_antimagic(cycle(3), [1, 2])


def test_verifier_detects_stale_cached_sums():
    f = EdgeLabeling((1, 2, 3), (0, 0, 0))
    with pytest.raises(AssertionError):
        verify_local_antimagic(cycle(3), f)


def test_pendant_bound():
    assert pendant_lower_bound(coconut_tree(5, 3)) == 5
    assert pendant_lower_bound(star(4)) == 5
    assert pendant_lower_bound(cycle(5)) == 1
    with pytest.raises(ValueError):
        pendant_lower_bound(path(2))
    with pytest.raises(ValueError):
        pendant_lower_bound(make_graph(4, [(0, 1), (2, 3)]))


def test_two_color_gate():
    # K_{2,4}: 8 edges, total 36 = 4*9 = 2*18
    assert two_color_certificate_check(complete_bipartite(2, 4)) == [(4, 2, 9, 18)]
    assert two_color_certificate_check(cycle(3)) == []
    assert two_color_certificate_check(complete_bipartite(3, 3)) == []
    assert two_color_certificate_check(path(5)) == []


@given(st.integers(3, 8), st.floats(0.2, 0.9), st.integers(0, 10**6))
@settings(max_examples=60, deadline=None)
def test_chromatic_number_matches_brute_force(n, p, seed):
    h = nx.gnp_random_graph(n, p, seed=seed)
    g = make_graph(n, h.edges())
    best = None
    for k in range(1, n + 1):
        for coloring in itertools.product(range(k), repeat=n):
            if all(coloring[u] != coloring[v] for u, v in g.edges):
                best = k
                break
        if best:
            break
    assert chromatic_number(g) == max(best, 2 if g.size else 1)


@given(st.integers(3, 9), st.integers(0, 10**9))
def test_handshake_identity(n, seed):
    rng = random.Random(seed)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    g = make_graph(n, rng.sample(pairs, rng.randint(1, len(pairs))))
    labels = list(range(1, g.size + 1))
    rng.shuffle(labels)
    f = EdgeLabeling.on(g, labels)
    assert sum(f.sums) == g.size * (g.size + 1)
    rep = verify_local_antimagic(g, f)
    clash = any(f.sums[u] == f.sums[v] for u, v in g.edges)
    assert rep.valid == (not clash)


def test_bordered_matrix_round_trip():
    rows = [[None, 1, 5], [6, 7, 2], [8, 3, 4]]
    m = LabelingMatrix.of(rows, bordered=True)
    assert validate_tripartite_properties(m)
    g, f = graph_from_labeling_matrix(m, "tripartite")
    rep = verify_local_antimagic(g, f)
    assert rep.valid and rep.colors == (11, 15, 20)
    sums = matrix_sums(m)
    assert sums.hub == 20 and sums.rows[1:] == (15, 15) and sums.columns[1:] == (11, 11)


def test_matrix_rules():
    with pytest.raises(ValueError):
        LabelingMatrix.of([[1, 1], [2, 3]])
    with pytest.raises(ValueError):
        graph_from_labeling_matrix(LabelingMatrix.of([[1, 2], [None, None]]))
    with pytest.raises(ValueError):
        graph_from_labeling_matrix(LabelingMatrix.of([[1, 5]]))
    with pytest.raises(ValueError):
        graph_from_labeling_matrix(LabelingMatrix.of([[1, 2], [3, None]], bordered=True), "tripartite")
    assert not validate_tripartite_properties(LabelingMatrix.of([[None, 1, 2], [3, 4, 5], [6, 7, 8]], True))


def test_bipartite_matrix_builds_kpq():
    g, f = graph_from_labeling_matrix(LabelingMatrix.of([[1, 4], [3, 2], [5, 6]]))
    assert g.order == 5 and g.size == 6 and g.roles == ("a",) * 3 + ("b",) * 2
    assert f.sums[:3] == (5, 5, 11)


def test_wheel_labeling_from_list_is_checked():
    g = wheel(4)
    assert verify_local_antimagic(g, [7, 3, 1, 2, 6, 4, 5, 8]).color_count == 3
