"""Edge labelings, labeling matrices, the local antimagic verifier and lower bounds."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from .graphs import Graph, make_graph

Cell = int | None


@dataclass(frozen=True)
class EdgeLabeling:
    """Labels in canonical edge order together with the induced vertex sums."""

    labels: tuple[int, ...]
    sums: tuple[int, ...] = field(compare=False)

    @classmethod
    def on(cls, graph: Graph, labels: Sequence[int]) -> "EdgeLabeling":
        labels = tuple(int(x) for x in labels)
        if len(labels) != graph.size:
            raise ValueError(f"expected {graph.size} labels, got {len(labels)}")
        return cls(labels, induced_sums(graph, labels))


def induced_sums(graph: Graph, labels: Sequence[int]) -> tuple[int, ...]:
    sums = [0] * graph.order
    for (u, v), lab in zip(graph.edges, labels):
        sums[u] += lab
        sums[v] += lab
    return tuple(sums)


@dataclass(frozen=True)
class VerificationReport:
    valid: bool
    color_count: int
    classes: dict[int, tuple[int, ...]]
    first_violation: str | None = None

    @property
    def colors(self) -> tuple[int, ...]:
        return tuple(sorted(self.classes))


def verify_local_antimagic(graph: Graph, f: EdgeLabeling | Sequence[int]) -> VerificationReport:
    """Check that f is a bijection onto 1..|E| with distinct sums on every edge.

    Sums are always recomputed from the labels; a cached ``f.sums`` that
    disagrees trips an assertion.
    """
    labels = tuple(f.labels) if isinstance(f, EdgeLabeling) else tuple(f)
    if len(labels) != graph.size:
        raise ValueError(f"labeling has {len(labels)} labels but the graph has {graph.size} edges")
    sums = induced_sums(graph, labels)
    if __debug__ and isinstance(f, EdgeLabeling):
        assert f.sums == sums, "cached vertex sums disagree with the labels"
    q = graph.size
    assert sum(sums) == 2 * sum(labels), "handshake identity violated"

    classes: dict[int, list[int]] = {}
    for v, s in enumerate(sums):
        classes.setdefault(s, []).append(v)
    frozen = {s: tuple(vs) for s, vs in classes.items()}

    violation = None
    if sorted(labels) != list(range(1, q + 1)):
        bad = sorted(set(range(1, q + 1)) - set(labels))
        violation = f"labels are not a permutation of 1..{q} (missing {bad[:5]})"
    else:
        for u, v in graph.edges:
            if sums[u] == sums[v]:
                violation = (f"adjacent {graph.vertex_name(u)} and {graph.vertex_name(v)} "
                             f"share the sum {sums[u]}")
                break
    return VerificationReport(violation is None, len(frozen), frozen, violation)


def _require_connected(graph: Graph):
    if not graph.is_connected():
        raise ValueError("graph must be connected")


def pendant_lower_bound(graph: Graph) -> int:
    """Number of degree-1 vertices plus one; distinct pendants need distinct labels."""
    _require_connected(graph)
    if graph.order == 2:
        raise ValueError("K_2 has no local antimagic labeling")
    return sum(1 for d in graph.degrees if d == 1) + 1


class TwoColorTarget(NamedTuple):
    """Part sizes X > Y and the sums x < y they would need in a 2-coloring."""

    X: int
    Y: int
    x: int
    y: int


def two_color_certificate_check(graph: Graph) -> list[TwoColorTarget]:
    """All (X, Y, x, y) with xX = yY = q(q+1)/2 allowed by the bipartition.

    In a 2-coloring of a connected graph the color classes are the two
    sides of the bipartition, so at most one candidate exists.  An empty
    list proves that at least 3 colors are needed.
    """
    _require_connected(graph)
    parts = graph.bipartition()
    if parts is None:
        return []
    big, small = sorted((len(parts[0]), len(parts[1])), reverse=True)
    if big == small:
        return []
    total = graph.size * (graph.size + 1) // 2
    if total % big or total % small:
        return []
    return [TwoColorTarget(big, small, total // big, total // small)]


def chromatic_number(graph: Graph) -> int:
    """Exact chromatic number by backtracking, for graphs with at most 16 vertices."""
    n = graph.order
    if n > 16:
        raise ValueError("chromatic_number supports at most 16 vertices")
    if n == 0:
        return 0
    if graph.size == 0:
        return 1
    order = sorted(range(n), key=lambda v: -graph.degrees[v])
    nbrs = graph.neighbors

    def colorable(k: int) -> bool:
        color = [-1] * n

        def place(i: int) -> bool:
            if i == n:
                return True
            v = order[i]
            used = {color[w] for w in nbrs[v] if color[w] >= 0}
            top = max(color) + 1
            for c in range(min(k, top + 1)):
                if c not in used:
                    color[v] = c
                    if place(i + 1):
                        return True
            color[v] = -1
            return False

        return place(0)

    k = 2
    while not colorable(k):
        k += 1
    return k


@dataclass(frozen=True)
class LabelingMatrix:
    """A grid of labels with ``None`` as the hole marker.

    With ``bordered=True`` the grid is the tripartite form for K(1,q,r):
    row 0 holds the u–w labels, column 0 the u–v labels, the rest the
    v–w labels, and cell (0, 0) is a hole.
    """

    cells: tuple[tuple[Cell, ...], ...]
    bordered: bool = False

    def __post_init__(self):
        if self.cells and len({len(r) for r in self.cells}) != 1:
            raise ValueError("matrix rows must have equal length")
        vals = self.entries()
        if len(vals) != len(set(vals)):
            raise ValueError("matrix entries must be pairwise distinct")

    @classmethod
    def of(cls, rows: Sequence[Sequence[Cell]], bordered: bool = False) -> "LabelingMatrix":
        return cls(tuple(tuple(None if x is None else int(x) for x in r) for r in rows), bordered)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.cells), (len(self.cells[0]) if self.cells else 0)

    def entries(self) -> list[int]:
        return [x for r in self.cells for x in r if x is not None]

    def transpose(self) -> "LabelingMatrix":
        return LabelingMatrix(tuple(zip(*self.cells)), self.bordered)

    def as_lists(self) -> list[list[Cell]]:
        return [list(r) for r in self.cells]


class MatrixSums(NamedTuple):
    rows: tuple[int, ...]
    columns: tuple[int, ...]
    hub: int | None


def matrix_sums(m: LabelingMatrix) -> MatrixSums:
    rows = tuple(sum(x for x in r if x is not None) for r in m.cells)
    cols = tuple(sum(x for x in c if x is not None) for c in zip(*m.cells))
    hub = rows[0] + cols[0] if m.bordered else None
    return MatrixSums(rows, cols, hub)


def validate_tripartite_properties(m: LabelingMatrix) -> bool:
    """Check that a bordered matrix encodes a 3-coloring of K(1,q,r).

    Entries must be exactly 1..q+r+qr, rows 2..q+1 must share one sum
    different from the hub sum, and columns 2..r+1 one sum different from
    both.
    """
    h, w = m.shape
    if h < 2 or w < 2 or m.cells[0][0] is not None:
        return False
    if any(x is None for i, r in enumerate(m.cells) for j, x in enumerate(r) if (i, j) != (0, 0)):
        return False
    q, r = h - 1, w - 1
    if sorted(m.entries()) != list(range(1, q + r + q * r + 1)):
        return False
    rows, cols, hub = matrix_sums(m)
    row_vals, col_vals = set(rows[1:]), set(cols[1:])
    if len(row_vals) != 1 or len(col_vals) != 1:
        return False
    row_sum, col_sum = row_vals.pop(), col_vals.pop()
    return len({hub, row_sum, col_sum}) == 3


def graph_from_labeling_matrix(m: LabelingMatrix, mode: str = "bipartite") -> tuple[Graph, EdgeLabeling]:
    """Turn a labeling matrix into its graph and labeling.

    Bipartite mode: rows become vertices ``a`` (indices first), columns
    vertices ``b``, and every non-hole cell an edge.  Tripartite mode
    reads a bordered matrix as K(1,q,r) with u=0, v_i=1..q, w_j=q+1..q+r.
    """
    h, w = m.shape
    vals = m.entries()
    if sorted(vals) != list(range(1, len(vals) + 1)):
        raise ValueError(f"matrix entries are not a permutation of 1..{len(vals)}")
    pairs: dict[tuple[int, int], int] = {}
    if mode == "bipartite":
        for i, row in enumerate(m.cells):
            if all(x is None for x in row):
                raise ValueError(f"row {i + 1} is empty (isolated vertex)")
        for j in range(w):
            if all(m.cells[i][j] is None for i in range(h)):
                raise ValueError(f"column {j + 1} is empty (isolated vertex)")
        for i, row in enumerate(m.cells):
            for j, x in enumerate(row):
                if x is not None:
                    pairs[(i, h + j)] = x
        roles = ["a"] * h + ["b"] * w
        order = h + w
    elif mode == "tripartite":
        if not validate_shape_tripartite(m):
            raise ValueError("tripartite mode needs a bordered matrix with only the (1,1) cell empty")
        q, r = h - 1, w - 1
        for i in range(h):
            for j in range(w):
                if (i, j) == (0, 0):
                    continue
                if i == 0:
                    pairs[(0, q + j)] = m.cells[i][j]
                elif j == 0:
                    pairs[(0, i)] = m.cells[i][j]
                else:
                    pairs[(i, q + j)] = m.cells[i][j]
        roles = ["u"] + ["v"] * q + ["w"] * r
        order = 1 + q + r
    else:
        raise ValueError(f"unknown mode {mode!r}")
    graph = make_graph(order, pairs, roles)
    labeling = EdgeLabeling.on(graph, [pairs[e] for e in graph.edges])
    return graph, labeling


def validate_shape_tripartite(m: LabelingMatrix) -> bool:
    h, w = m.shape
    if h < 2 or w < 2:
        return False
    return all((x is None) == ((i, j) == (0, 0)) for i, r in enumerate(m.cells) for j, x in enumerate(r))
