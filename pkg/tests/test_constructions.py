import warnings

import pytest
from hypothesis import given, strategies as st

from localantimagic.constructions import (
    chi2_graph, kpq_color_count, k12r_colors, label_coconut,
    label_join_general, label_join_regular, label_k12r, label_kpq, label_star, label_wheel,
    wheel_pairs, wheel_rim_sequence,
)
from localantimagic.graphs import complete_bipartite, complete_tripartite, cycle, make_graph, wheel
from localantimagic.labeling import (
    matrix_sums, validate_tripartite_properties, verify_local_antimagic,
)

N = None

K55 = [[17, 24, 7, 8, 15], [23, 5, 13, 14, 16], [4, 6, 19, 20, 22], [10, 12, 25, 21, 3], [11, 18, 1, 2, 9]]
K47 = [[1, 3, 5, 7, 9, 18, 13], [28, 26, 24, 22, 20, 11, 16],
       [2, 4, 6, 8, 10, 12, 14], [27, 25, 23, 21, 19, 17, 15]]
K45 = [[2, 3, 5, 7, 12], [19, 18, 16, 14, 9], [1, 4, 6, 8, 10], [20, 17, 15, 13, 11]]

CHI2_PRINTED = {
    11: [[1, 3, 4, 5, 6, 8, 13, N], [N, 12, N, 10, 9, 7, 2, N], [14, N, 11, N, N, N, N, 15]],
    13: [[N, 2, 18, 4, 16, 6, 14, N, N, 10], [1, N, 3, 17, 5, 15, 7, 13, 9, N],
         [20, 19, N, N, N, N, N, 8, 12, 11]],
    15: [[1, 23, 22, 4, 20, 6, 7, 17, N, N, N, N], [N, N, N, N, 5, 19, 18, 8, 16, 10, 11, 13],
         [24, 2, 3, 21, N, N, N, N, 9, 15, 14, 12]],
    17: [[N, 2, 24, 4, 22, 6, 20, 8, 18, 10, N, 12, N, N], [1, N, N, 23, 5, 21, 7, 19, 9, 17, 11, N, 13, N],
         [26, 25, 3, N, N, N, N, N, N, N, 16, 15, 14, 27]],
    19: [[N, 2, 30, 4, 28, 6, 26, 8, 24, 10, 22, N, N, N, N, 16],
         [1, N, N, N, 5, 27, 7, 25, 9, 23, 11, 21, 13, 19, 15, N],
         [32, 31, 3, 29, N, N, N, N, N, N, N, 12, 20, 14, 18, 17]],
    21: [[1, 35, 34, 4, 5, 31, 30, 8, 9, 27, 26, 12, N, N, N, N, N, N],
         [N, N, N, N, N, N, 7, 29, 28, 10, 11, 25, 24, 14, 15, 21, 20, 18],
         [36, 2, 3, 33, 32, 6, N, N, N, N, N, N, 13, 23, 22, 16, 17, 19]],
}


def k12r_closed_form(r):
    """Hub, v and w sums written out per residue class of r."""
    if r == 2:
        return 20, 15, 11
    if r == 3:
        return 30, 27, 16
    if r % 2 == 0:
        return (r + 4) * (3 * r + 4) // 2 - 6 * (r + 1), (r + 1) * (3 * r + 4) // 2, 3 * (3 * r + 4) // 2
    if r % 4 == 1:
        s = (r - 1) // 4
        return 8 * s * s + 36 * s + 12, 32 * s * s + 27 * s + 6, 18 * s + 6
    s = (r - 3) // 4
    return 8 * s * s + 44 * s + 49, 32 * s * s + 59 * s + 19, 18 * s + 15


@pytest.mark.parametrize("r", range(2, 41))
def test_k12r(r):
    c = label_k12r(r)
    assert c.graph == complete_tripartite(1, 2, r)
    assert validate_tripartite_properties(c.matrix)
    hub, v, w = k12r_closed_form(r)
    assert k12r_colors(r) == (hub, v, w)
    sums = c.labeling.sums
    assert sums[0] == hub and set(sums[1:3]) == {v} and set(sums[3:]) == {w}


def test_k12r_small_matrices():
    assert label_k12r(2).matrix.as_lists() == [[N, 1, 5], [6, 7, 2], [8, 3, 4]]
    assert label_k12r(3).color_count == 3
    with pytest.raises(ValueError):
        label_k12r(1)


def test_wheel_rim_sequence_for_k3():
    assert wheel_rim_sequence(3) == (1, 9, 5, 7, 8, 3, 10, 6, 2, 12, 4, 11)
    assert label_wheel(3).colors == (29, 34, 222)


@pytest.mark.parametrize("k", range(3, 25))
def test_wheel_colors_and_pairs(k):
    c = label_wheel(k)
    assert set(c.colors) == {11 * k + 1, 9 * k + 2, 2 * k * (12 * k + 1)}
    hub = c.graph.order - 1
    assert c.labeling.sums[hub] == 2 * k * (12 * k + 1)
    pairs = wheel_pairs(k)
    assert sorted(a for a, _ in pairs) == list(range(1, 4 * k + 1))
    assert sorted(b for _, b in pairs) == list(range(1, 4 * k + 1))
    assert all(pairs[i][1] == pairs[(i + 1) % len(pairs)][0] for i in range(len(pairs)))


@pytest.mark.parametrize("k", [1, 2])
def test_small_wheels(k):
    c = label_wheel(k)
    assert c.graph == wheel(4 * k) and c.color_count == 3


def test_coconut_five_three_values():
    c = label_coconut(5, 3)
    assert c.labeling.labels == (1, 4, 2, 3, 5, 6, 7)
    assert c.labeling.sums[4] == 21
    assert c.colors == (1, 5, 6, 7, 21)


def test_coconut_interior_parity():
    # even interior index gives m, odd interior index gives m + 1
    m = 9
    sums = label_coconut(m, 2).labeling.sums
    assert [sums[i - 1] for i in range(2, m)] == [m if i % 2 == 0 else m + 1 for i in range(2, m)]


@given(st.integers(2, 30), st.integers(1, 30))
def test_coconut_color_count(m, t):
    assert label_coconut(m, t).color_count == t + 2


def test_kpq_goldens():
    c = label_kpq(5, 5)
    assert c.matrix.as_lists() == K55
    assert matrix_sums(c.matrix).rows == (71, 71, 71, 71, 41)
    c = label_kpq(4, 7)
    assert c.matrix.as_lists() == K47
    assert matrix_sums(c.matrix) [:2] == ((56, 147, 56, 147), (58,) * 7)
    c = label_kpq(4, 5)
    assert c.matrix.as_lists() == K45
    assert matrix_sums(c.matrix)[:2] == ((29, 76, 29, 76), (42,) * 5)


@pytest.mark.parametrize("p", range(1, 13))
def test_kpq_color_counts(p):
    for q in range(max(p, 2), 16):
        c = label_kpq(p, q)
        assert c.graph == complete_bipartite(p, q)
        assert c.color_count == kpq_color_count(p, q)


def test_kpq_rejects_k11():
    with pytest.raises(ValueError):
        label_kpq(1, 1)


@pytest.mark.parametrize("n", sorted(CHI2_PRINTED))
def test_chi2_printed_matrices(n):
    c = chi2_graph(n)
    assert c.matrix.as_lists() == CHI2_PRINTED[n]
    assert c.graph.order == n and c.color_count == 2


@pytest.mark.parametrize("n", [3, 4, 5, 7])
def test_chi2_rejects_impossible_orders(n):
    with pytest.raises(ValueError, match="no graph of order"):
        chi2_graph(n)


def test_chi2_even_orders_use_two_part_graphs():
    c = chi2_graph(10)
    assert c.graph == complete_bipartite(2, 8) and c.color_count == 2


def test_star():
    assert label_star(4).color_count == 5


def test_join_general_triangle():
    c = label_join_general(cycle(3), [1, 2, 3], 3)
    assert c.color_count == 4
    sums = c.labeling.sums
    assert sums[3:] == (24, 24, 24)
    assert sums[:3] == (27, 28, 29)


def test_join_general_warns_outside_hypotheses():
    g = cycle(5)
    with pytest.warns(UserWarning, match="neither"):
        c = label_join_general(g, [1, 2, 3, 4, 5], 3)
    assert c.report.valid


def test_join_general_parity_gate():
    with pytest.raises(ValueError):
        label_join_general(cycle(3), [1, 2, 3], 2)


K4 = make_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def test_join_regular_k4():
    c = label_join_regular(K4, [1, 2, 3, 4, 5, 6], 2)
    assert c.color_count == 5
    assert set(c.labeling.sums[4:]) == {18}


def test_join_regular_gates():
    with pytest.raises(ValueError):
        label_join_regular(cycle(6), [1, 2, 3, 4, 5, 6], 2)
    with pytest.raises(ValueError):
        label_join_regular(K4, [1, 2, 3, 4, 5, 6], 4)
    with pytest.raises(ValueError):
        label_join_regular(make_graph(4, [(0, 1), (1, 2), (2, 3)]), [1, 2, 3], 2)


def test_invalid_base_labeling_is_rejected():
    with pytest.raises(ValueError):
        label_join_general(cycle(3), [1, 1, 3], 3)


def test_constructions_do_not_warn_inside_hypotheses():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        label_join_general(cycle(3), [1, 2, 3], 5)
