"""Explicit local antimagic labelings for the families with known χ_la.

Every generator builds its labeling, runs the verifier, compares the
induced colors with the closed forms it expects and only then returns.
A mismatch raises :class:`ConstructionError`; it means a bug, never an
acceptable outcome.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Iterable

from .graphs import Graph, coconut_tree, complete_bipartite, complete_tripartite, join_empty, star, wheel
from .labeling import (
    EdgeLabeling,
    LabelingMatrix,
    VerificationReport,
    graph_from_labeling_matrix,
    verify_local_antimagic,
)
from .magic import magic_rectangle, shift_column_up, siamese_square


class ConstructionError(RuntimeError):
    """A generator produced something that failed verification."""


@dataclass(frozen=True)
class Construction:
    graph: Graph
    labeling: EdgeLabeling
    report: VerificationReport
    matrix: LabelingMatrix | None = None

    @property
    def colors(self) -> tuple[int, ...]:
        return self.report.colors

    @property
    def color_count(self) -> int:
        return self.report.color_count


def _finish(graph: Graph, labeling: EdgeLabeling, expected: Iterable[int] | None = None,
            matrix: LabelingMatrix | None = None) -> Construction:
    report = verify_local_antimagic(graph, labeling)
    if not report.valid:
        raise ConstructionError(f"construction failed verification: {report.first_violation}")
    if expected is not None and set(expected) != set(report.classes):
        raise ConstructionError(f"colors {sorted(report.classes)} differ from expected {sorted(set(expected))}")
    return Construction(graph, labeling, report, matrix)


def _from_matrix(rows, mode: str = "bipartite", expected=None) -> Construction:
    m = LabelingMatrix.of(rows, bordered=(mode == "tripartite"))
    graph, labeling = graph_from_labeling_matrix(m, mode)
    return _finish(graph, labeling, expected, m)


# ---- K(1,2,r) ---------------------------------------------------------------

_K122 = [[None, 1, 5], [6, 7, 2], [8, 3, 4]]
_K123 = [[None, 2, 4, 6], [8, 5, 11, 3], [10, 9, 1, 7]]


def _k12r_even(r: int) -> list[list[int | None]]:
    a = magic_rectangle(3, r + 1).as_lists()
    top = 3 * (r + 1)
    i, j = next((i, j) for i in range(3) for j in range(r + 1) if a[i][j] == top)
    a[0], a[i] = a[i], a[0]
    for row in a:
        row[0], row[j] = row[j], row[0]
    a[0][0] = None
    return a


def _k12r_one_mod_four(s: int) -> list[list[int | None]]:
    pr = [2 * c - 1 for c in range(1, 2 * s + 1)] + [10 * s + 3] + [2 * e for e in range(1, 2 * s + 1)]
    v1, v2 = [], []
    for i in range(1, s + 1):
        v1 += [12 * s + 5 - 2 * i, 6 * s + 3 - 2 * i]
        v2 += [6 * s + 4 - 2 * i, 12 * s + 4 - 2 * i]
    v1.append(4 * s + 1)
    v2.append(4 * s + 2)
    for i in range(1, s + 1):
        v1 += [10 * s + 4 - 2 * i, 8 * s + 3 - 2 * i]
        v2 += [8 * s + 4 - 2 * i, 10 * s + 3 - 2 * i]
    return [[None] + pr, [12 * s + 5] + v1, [12 * s + 4] + v2]


def _k12r_three_mod_four(s: int) -> list[list[int | None]]:
    r = 4 * s + 3
    pr, v1, v2 = [], [], []
    for k in range(1, r + 1):
        pr.append(2 * k - 1 if k <= 2 * s + 2 else 2 * k - 4 * s - 4)
        low = k <= 2 * s + 2
        if k % 2:
            v1.append(6 * s + 6 - k if low else 10 * s + 9 - k)
            v2.append(12 * s + 10 - k)
        else:
            v1.append(12 * s + 10 - k)
            v2.append(6 * s + 6 - k if low else 10 * s + 9 - k)
    rows = [[None] + pr, [12 * s + 10] + v1, [12 * s + 11] + v2]
    swap = {}
    for a, b in ((4 * s - 1, 4 * s + 6), (4 * s - 2, 6 * s + 8), (4 * s + 2, 8 * s + 7)):
        swap[a], swap[b] = b, a
    return [[swap.get(x, x) if x is not None else None for x in row] for row in rows]


def k12r_colors(r: int) -> tuple[int, int, int]:
    """(hub, v-row, w-column) sums produced by :func:`label_k12r`."""
    if r == 2:
        return 20, 15, 11
    if r == 3:
        return 30, 27, 16
    if r % 2 == 0:
        return (r + 4) * (3 * r + 4) // 2 - 6 * (r + 1), (r + 1) * (3 * r + 4) // 2, 3 * (3 * r + 4) // 2
    s = (r - 1) // 4 if r % 4 == 1 else (r - 3) // 4
    if r % 4 == 1:
        return 8 * s * s + 36 * s + 12, 32 * s * s + 27 * s + 6, 18 * s + 6
    return 8 * s * s + 44 * s + 49, 32 * s * s + 59 * s + 19, 18 * s + 15


def label_k12r(r: int) -> Construction:
    """3-coloring of K(1,2,r) from a bordered labeling matrix."""
    if r < 2:
        raise ValueError("K(1,2,r) needs r >= 2")
    if r == 2:
        rows = _K122
    elif r == 3:
        rows = _K123
    elif r % 2 == 0:
        rows = _k12r_even(r)
    elif r % 4 == 1:
        rows = _k12r_one_mod_four((r - 1) // 4)
    else:
        rows = _k12r_three_mod_four((r - 3) // 4)
    out = _from_matrix(rows, "tripartite", k12r_colors(r))
    assert out.graph == complete_tripartite(1, 2, r)
    return out


# ---- joins with O_n -----------------------------------------------------------

def _checked_base(g: Graph, f: EdgeLabeling | Iterable[int]) -> EdgeLabeling:
    f = f if isinstance(f, EdgeLabeling) else EdgeLabeling.on(g, list(f))
    report = verify_local_antimagic(g, f)
    if not report.valid:
        raise ValueError(f"base labeling is not local antimagic: {report.first_violation}")
    return f


def label_join_general(g: Graph, f: EdgeLabeling | Iterable[int], n: int) -> Construction:
    """Label G ∨ O_n: keep f and give u_i v_j the label |E(G)| + a_ij.

    ``a`` is an m x n magic rectangle, m = |V(G)|.  The result gains one
    color when n >= m, or when m >= n^2/2 and n >= 4; outside those ranges
    a warning is issued and the labeling is still verified.
    """
    f = _checked_base(g, f)
    m, e = g.order, g.size
    if m < 3:
        raise ValueError("the base graph needs at least 3 vertices")
    if (m - n) % 2 or n < 2:
        raise ValueError(f"no {m}x{n} magic rectangle: need n >= 2 and n = m (mod 2)")
    if not (n >= m or (2 * m >= n * n and n >= 4)):
        warnings.warn(f"join with m={m}, n={n}: neither n >= m nor (m >= n^2/2, n >= 4) holds; "
                      "the color count is only checked a posteriori", stacklevel=2)
    a = magic_rectangle(m, n)
    h = join_empty(g, n)
    lab = dict(zip(g.edges, f.labels))
    for i in range(m):
        for j in range(n):
            lab[(i, m + j)] = e + a.grid[i][j]
    labeling = EdgeLabeling.on(h, [lab[x] for x in h.edges])
    return _finish(h, labeling)


def label_join_regular(g: Graph, f: EdgeLabeling | Iterable[int], n: int) -> Construction:
    """Label G ∨ O_n for r-regular G: old labels shift by mn, join edges take a_ij.

    Requires m > n, m = n (mod 2) and r >= (m-n)(mn+1)/(2mn).
    """
    f = _checked_base(g, f)
    m = g.order
    degs = set(g.degrees)
    if len(degs) != 1:
        raise ValueError("the base graph is not regular")
    r = degs.pop()
    if m <= n:
        raise ValueError(f"regular join needs m > n (got m={m}, n={n})")
    if (m - n) % 2 or n < 2:
        raise ValueError(f"no {m}x{n} magic rectangle: need n >= 2 and n = m (mod 2)")
    if 2 * m * n * r < (m - n) * (m * n + 1):
        raise ValueError(f"degree {r} is below (m-n)(mn+1)/(2mn) = {(m - n) * (m * n + 1) / (2 * m * n):.3f}")
    a = magic_rectangle(m, n)
    h = join_empty(g, n)
    lab = {x: y + m * n for x, y in zip(g.edges, f.labels)}
    for i in range(m):
        for j in range(n):
            lab[(i, m + j)] = a.grid[i][j]
    labeling = EdgeLabeling.on(h, [lab[x] for x in h.edges])
    expected = {s + m * n * r + n * (m * n + 1) // 2 for s in f.sums} | {m * (m * n + 1) // 2}
    return _finish(h, labeling, expected)


# ---- wheels W_4k --------------------------------------------------------------

# W_4 and W_8: found by the exact solver; labels in canonical edge order.
_WHEEL_GOLDENS: dict[int, tuple[int, ...]] = {
    1: (7, 3, 1, 2, 6, 4, 5, 8),
    2: (16, 10, 1, 11, 2, 13, 3, 12, 4, 6, 9, 15, 8, 5, 7, 14),
}


def wheel_tables(k: int) -> tuple[list[tuple[int, int, int]], list[tuple[int, int, int]]]:
    """Columns (row1, row2, row3) of the two 3 x 2k tables used for W_4k, k >= 3.

    Columns of the first table sum to 11k+1, of the second to 9k+2.
    """
    first = [(2 * c - 1, 3 * k + 1 - c, 8 * k + 1 - c) for c in range(1, k + 1)]
    first += [(2 * d, 4 * k + 1 - d, 7 * k - d) for d in range(1, k + 1)]
    second = [(3 * k + 3 - c, 2 * c - 1, 6 * k - c) for c in range(1, k + 2)]
    second.append((2 * k, 2, 7 * k))
    second += [(4 * k + 1 - d, 2 * (d + 1), 5 * k - 1 - d) for d in range(1, k - 1)]
    return first, second


def wheel_pairs(k: int) -> list[tuple[int, int]]:
    """The ordered pairs T = (a) + (b) + (c) for k >= 3."""
    if k % 2 == 0:
        a = []
        for j in range(k // 2):
            a += [(4 * j + 1, 3 * k - 2 * j), (3 * k - 2 * j, 4 * j + 5)]
        b = []
        for j in range(k // 2):
            b += [(2 * k + 1 + 2 * j, 2 * k - 1 - 4 * j), (2 * k - 1 - 4 * j, 2 * k + 3 + 2 * j)]
    else:
        a = []
        for j in range((k - 1) // 2):
            a += [(4 * j + 1, 3 * k - 2 * j), (3 * k - 2 * j, 4 * j + 5)]
        b = [(2 * k - 1, 2 * k + 1), (2 * k + 1, 2 * k + 2)]
        for j in range((k - 1) // 2):
            b += [(2 * k + 2 + 2 * j, 2 * k - 3 - 4 * j), (2 * k - 3 - 4 * j, 2 * k + 4 + 2 * j)]
    c = [(3 * k + 1, 2 * k), (2 * k, 2)]
    for j in range(1, k - 1):
        c += [(2 * j, 4 * k + 1 - j), (4 * k + 1 - j, 2 * j + 2)]
    c += [(2 * k - 2, 3 * k + 2), (3 * k + 2, 1)]
    return a + b + c


def _wheel_from_tables(k: int) -> list[int]:
    n = 4 * k
    first, second = wheel_tables(k)
    pairs = wheel_pairs(k)
    if len(pairs) != n:
        raise ConstructionError(f"sequence T has {len(pairs)} pairs, expected {n}")
    for i in range(n):
        if pairs[i][1] != pairs[(i + 1) % n][0]:
            raise ConstructionError(f"pairs {i + 1} and {i + 2} of T do not chain")
    spoke_of: list[int] = []
    for i, (x, y) in enumerate(pairs):
        table = first if i % 2 == 0 else second
        col = next((c for c in table if {c[0], c[1]} == {x, y}), None)
        if col is None:
            raise ConstructionError(f"pair {(x, y)} is not a column of table {1 + i % 2}")
        spoke_of.append(col[2])
    rim = [x for x, _ in pairs]
    g = wheel(n)
    lab = {}
    for i in range(n):
        lab[tuple(sorted((i, (i + 1) % n)))] = rim[i]
        lab[((i + 1) % n, n)] = spoke_of[i]
    return [lab[e] for e in g.edges]


def wheel_rim_sequence(k: int) -> tuple[int, ...]:
    """Left entries S of T: the labels of e_1, ..., e_4k."""
    return tuple(x for x, _ in wheel_pairs(k))


def label_wheel(k: int) -> Construction:
    """3-coloring of W_4k."""
    if k < 1:
        raise ValueError("W_4k needs k >= 1")
    g = wheel(4 * k)
    if k in _WHEEL_GOLDENS:
        return _finish(g, EdgeLabeling.on(g, _WHEEL_GOLDENS[k]))
    expected = (11 * k + 1, 9 * k + 2, 2 * k * (12 * k + 1))
    try:
        return _finish(g, EdgeLabeling.on(g, _wheel_from_tables(k)), expected)
    except ConstructionError:
        from .solver import SearchLimits, exists_labeling_with_colors
        found = exists_labeling_with_colors(g, 3, SearchLimits(max_edges=g.size)).witness
        if found is None:
            raise
        return _finish(g, found)


# ---- coconut trees ------------------------------------------------------------

def path_labels(q: int) -> list[int]:
    """Labels e_1..e_q of a path with q edges giving 3 colors (q >= 2).

    One end edge gets a label equal to an interior sum, so the two end
    colors plus the two alternating interior sums collapse to three.
    """
    out = []
    for i in range(1, q + 1):
        if q % 2:
            out.append((q + 1) // 2 + (i - 1) // 2 if i % 2 else (q + 1) // 2 - i // 2)
        else:
            out.append(q // 2 - (i - 1) // 2 if i % 2 else q // 2 + i // 2)
    return out


def label_coconut(m: int, t: int) -> Construction:
    """CT(m,t) with t+2 colors.

    Path edge e_i gets (i+1)/2 for odd i and m - i/2 for even i, the star
    edges v_m x_j get m+j-1.  For t = 1 the tree is a path, where that
    rule gives four colors, so :func:`path_labels` is used instead.
    """
    g = coconut_tree(m, t)
    if t == 1:
        labels = path_labels(m)
        return _finish(g, EdgeLabeling.on(g, labels), {labels[0], m, m + 1})
    path_part = [(i + 1) // 2 if i % 2 else m - i // 2 for i in range(1, m)]
    labels = path_part + [m + j for j in range(t)]
    hub = (m + 1) // 2 + t * m + t * (t - 1) // 2
    expected = {1, hub} | set(range(m, m + t))
    return _finish(g, EdgeLabeling.on(g, labels), expected)


# ---- complete bipartite graphs --------------------------------------------------

def kpq_color_count(p: int, q: int) -> int:
    """χ_la(K_{p,q}) for 1 <= p <= q, (p,q) != (1,1)."""
    if p > q:
        p, q = q, p
    if p == 1:
        return q + 1
    if q > p and (q - p) % 2 == 0:
        return 2
    return 3


def _kpq_four_rows(q: int) -> list[list[int]]:
    """4 x q matrix (q odd) with constant columns and two row sums."""
    a = [
        [2 * j - 1 for j in range(1, q + 1)],
        [4 * q - 2 * (j - 1) for j in range(1, q + 1)],
        [2 * j for j in range(1, q + 1)],
        [4 * q - 1 - 2 * (j - 1) for j in range(1, q + 1)],
    ]
    if q % 4 == 3:
        c = (3 * q + 3) // 4 - 1
        a[0][c], a[1][c] = a[1][c], a[0][c]
    else:
        c = (3 * q + 5) // 4 - 1
        a[0][c], a[1][c] = a[1][c], a[0][c]
        a[0][0], a[2][0] = a[2][0], a[0][0]
        a[1][0], a[3][0] = a[3][0], a[1][0]
    return a


def _kpq_mixed(even: int, odd: int) -> list[list[int]]:
    """even x odd matrix for K_{even,odd} with three colors."""
    if even == 4:
        return _kpq_four_rows(odd)
    top = magic_rectangle(3, odd).as_lists()
    bottom = magic_rectangle(even - 3, odd, base=3 * odd + 1).as_lists()
    return top + bottom


def label_kpq(p: int, q: int) -> Construction:
    """K_{p,q} (p <= q) with χ_la(K_{p,q}) colors; rows are part A, columns part B."""
    if not 1 <= p <= q:
        raise ValueError("K_{p,q} needs 1 <= p <= q")
    if (p, q) == (1, 1):
        raise ValueError("K_{1,1} has no local antimagic labeling")
    if p == 1:
        rows = [list(range(1, q + 1))]
    elif p == 2:
        if q % 2 == 0 and q > 2:
            rows = magic_rectangle(2, q).as_lists()
        else:
            # complementary columns: constant column sums, unequal rows
            rows = [list(range(1, q + 1)), [2 * q + 1 - j for j in range(1, q + 1)]]
    elif (q - p) % 2 == 0 and q > p:
        rows = magic_rectangle(p, q).as_lists()
    elif p == q and p % 2 == 0:
        left = magic_rectangle(p, 2).as_lists()
        right = magic_rectangle(p, p - 2, base=2 * p + 1).as_lists()
        rows = [x + y for x, y in zip(left, right)]
    elif p == q:
        rows = shift_column_up(siamese_square(p), p // 2).as_lists()
    elif p % 2 == 0:
        rows = _kpq_mixed(p, q)
    else:
        rows = [list(c) for c in zip(*_kpq_mixed(q, p))]
    out = _from_matrix(rows)
    if out.graph != complete_bipartite(p, q):
        raise ConstructionError("matrix does not describe K_{p,q}")
    if out.color_count != kpq_color_count(p, q):
        raise ConstructionError(f"K_{p},{q} got {out.color_count} colors")
    return out


# ---- graphs with χ_la = 2 ------------------------------------------------------

_CHI2_ELEVEN = [
    [1, 3, 4, 5, 6, 8, 13, None],
    [None, 12, None, 10, 9, 7, 2, None],
    [14, None, 11, None, None, None, None, 15],
]
_CHI2_THIRTEEN = [
    [None, 2, 18, 4, 16, 6, 14, None, None, 10],
    [1, None, 3, 17, 5, 15, 7, 13, 9, None],
    [20, 19, None, None, None, None, None, 8, 12, 11],
]


def _chi2_one_mod_six(s: int) -> list[list[int | None]]:
    """Order 6s+1, s >= 3: 3 x (6s-2) matrix, every column sums to 12s-3."""
    w, tot = 6 * s - 2, 12 * s - 3
    rows: list[list[int | None]] = [[None] * w for _ in range(3)]

    def put(row, k, val):
        rows[row][k - 1] = val

    for k in list(range(2, 4 * s - 1, 2)) + [6 * s - 2]:
        put(0, k, k)
    for k in range(3, 4 * s, 2):
        put(0, k, tot - k)
    for k in [1] + list(range(2 * s - 1, 6 * s - 2, 2)):
        put(1, k, k)
    for k in range(2 * s, 6 * s - 3, 2):
        put(1, k, tot - k)
    put(2, 1, 12 * s - 4)
    for k in list(range(3, 2 * s - 2, 2)) + list(range(4 * s, 6 * s - 3, 2)):
        put(2, k, k)
    for k in list(range(2, 2 * s - 1, 2)) + list(range(4 * s + 1, 6 * s - 2, 2)) + [6 * s - 2]:
        put(2, k, tot - k)
    return rows


def _chi2_three_mod_six(s: int) -> list[list[int | None]]:
    """Order 6s+3, s >= 1: three 3 x 2s blocks with swaps in columns j = 2, 3 (mod 4)."""
    w = 2 * s
    blocks = [
        [list(range(1, w + 1)), [None] * w, list(range(12 * s, 10 * s, -1))],
        [list(range(10 * s, 8 * s, -1)), list(range(2 * s + 1, 4 * s + 1)), [None] * w],
        [[None] * w, list(range(8 * s, 6 * s, -1)), list(range(4 * s + 1, 6 * s + 1))],
    ]
    swapped_rows = [(0, 2), (0, 1), (1, 2)]
    for block, (x, y) in zip(blocks, swapped_rows):
        for j in range(2, w + 1):
            if j % 4 in (2, 3):
                block[x][j - 1], block[y][j - 1] = block[y][j - 1], block[x][j - 1]
    return [blocks[0][i] + blocks[1][i] + blocks[2][i] for i in range(3)]


def _chi2_five_mod_six(s: int) -> list[list[int | None]]:
    """Order 6s+5, s >= 2: 3 x (6s+2) matrix, one column of degree 1.

    Rows 1 and 2 follow the assignment lists; each remaining column gets
    the single row-3 entry that brings its sum to 12s+3.
    """
    w, tot = 6 * s + 2, 12 * s + 3
    rows: list[list[int | None]] = [[None] * w for _ in range(3)]
    for k in list(range(2, 4 * s + 3, 2)) + [6 * s]:
        rows[0][k - 1] = k
    for k in range(3, 4 * s + 2, 2):
        rows[0][k - 1] = tot - k
    for k in [1] + list(range(2 * s + 1, 6 * s + 2, 2)):
        rows[1][k - 1] = k
    for k in range(2 * s, 6 * s - 1, 2):
        rows[1][k - 1] = tot - k
    rows[2][w - 1] = tot
    for j in range(w - 1):
        present = [rows[i][j] for i in (0, 1) if rows[i][j] is not None]
        if len(present) == 1:
            rows[2][j] = tot - present[0]
    return rows


def chi2_graph(n: int) -> Construction:
    """A graph of order n with a 2-color local antimagic labeling."""
    if n < 3:
        raise ValueError("order must be at least 3")
    if n in (3, 4, 5, 7):
        raise ValueError(f"no graph of order {n} has local antimagic chromatic number 2")
    if n % 2 == 0:
        return label_kpq(2, n - 2)
    if n == 11:
        rows = _CHI2_ELEVEN
    elif n == 13:
        rows = _CHI2_THIRTEEN
    elif n % 6 == 1:
        rows = _chi2_one_mod_six((n - 1) // 6)
    elif n % 6 == 3:
        rows = _chi2_three_mod_six((n - 3) // 6)
    else:
        rows = _chi2_five_mod_six((n - 5) // 6)
    out = _from_matrix(rows)
    if out.color_count != 2 or out.graph.order != n:
        raise ConstructionError(f"order {n}: got {out.color_count} colors on {out.graph.order} vertices")
    return out


def label_star(t: int) -> Construction:
    """K(1,t) labeled 1..t: the center plus t distinct leaf colors."""
    g = star(t)
    return _finish(g, EdgeLabeling.on(g, range(1, t + 1)))
