"""Small simple graphs with a canonical edge order, plus the named families."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """A finite simple undirected graph on vertices ``0..order-1``.

    ``edges`` is strictly sorted with ``u < v`` in every pair; labelings
    refer to edges by their position in this tuple.  ``roles`` optionally
    tags every vertex (``"hub"``, ``"rim"``, ...) and only affects naming.
    """

    order: int
    edges: tuple[Edge, ...]
    roles: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be non-negative")
        prev = None
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < v < self.order):
                raise ValueError(f"edge ({u}, {v}) is not a canonical pair below order {self.order}")
            if prev is not None and (u, v) <= prev:
                raise ValueError("edges must be strictly sorted and free of duplicates")
            prev = (u, v)
        if self.roles is not None and len(self.roles) != self.order:
            raise ValueError("roles must tag every vertex")

    @property
    def size(self) -> int:
        return len(self.edges)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Edge indices incident to each vertex."""
        inc: list[list[int]] = [[] for _ in range(self.order)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            inc[v].append(i)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def neighbors(self) -> tuple[frozenset[int], ...]:
        nb: list[set[int]] = [set() for _ in range(self.order)]
        for u, v in self.edges:
            nb[u].add(v)
            nb[v].add(u)
        return tuple(frozenset(s) for s in nb)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(x) for x in self.incidence)

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    def is_connected(self) -> bool:
        if self.order == 0:
            return False
        seen = {0}
        todo = deque([0])
        while todo:
            x = todo.popleft()
            for y in self.neighbors[x]:
                if y not in seen:
                    seen.add(y)
                    todo.append(y)
        return len(seen) == self.order

    def bipartition(self) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
        """Two colour classes of a proper 2-colouring, or None if there is none.

        The class containing vertex 0 of each component comes first.
        """
        side = [-1] * self.order
        for start in range(self.order):
            if side[start] >= 0:
                continue
            side[start] = 0
            todo = deque([start])
            while todo:
                x = todo.popleft()
                for y in self.neighbors[x]:
                    if side[y] < 0:
                        side[y] = 1 - side[x]
                        todo.append(y)
                    elif side[y] == side[x]:
                        return None
        first = tuple(v for v in range(self.order) if side[v] == 0)
        second = tuple(v for v in range(self.order) if side[v] == 1)
        return first, second

    def vertex_name(self, v: int) -> str:
        """1-based human name such as ``u_3``; untagged vertices are ``v_{i+1}``."""
        if self.roles is None:
            return f"v_{v + 1}"
        role = self.roles[v]
        same = [w for w in range(self.order) if self.roles[w] == role]
        if len(same) == 1:
            return role
        return f"{role}_{same.index(v) + 1}"


def make_graph(order: int, edges: Iterable[Sequence[int]], roles: Sequence[str] | None = None) -> Graph:
    """Normalize pairs to ``u < v``, sort them and build a Graph.

    Loops, duplicates (after normalization) and out-of-range endpoints are
    rejected with ValueError.
    """
    seen = set()
    norm = []
    for pair in edges:
        u, v = (int(x) for x in pair)
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if u > v:
            u, v = v, u
        if u < 0 or v >= order:
            raise ValueError(f"edge ({u}, {v}) out of range for order {order}")
        if (u, v) in seen:
            raise ValueError(f"duplicate edge ({u}, {v})")
        seen.add((u, v))
        norm.append((u, v))
    norm.sort()
    return Graph(order, tuple(norm), None if roles is None else tuple(roles))


def _need(cond: bool, msg: str):
    if not cond:
        raise ValueError(msg)


def path(m: int) -> Graph:
    """P_m on m vertices."""
    _need(m >= 2, "path needs m >= 2 vertices")
    return make_graph(m, [(i, i + 1) for i in range(m - 1)], ["v"] * m)


def cycle(m: int) -> Graph:
    _need(m >= 3, "cycle needs m >= 3 vertices")
    return make_graph(m, [(i, (i + 1) % m) for i in range(m)], ["v"] * m)


def star(t: int) -> Graph:
    """K(1,t): center 0, leaves 1..t."""
    _need(t >= 1, "star needs t >= 1 leaves")
    return make_graph(t + 1, [(0, j) for j in range(1, t + 1)], ["c"] + ["x"] * t)


def wheel(n: int) -> Graph:
    """W_n: rim u_1..u_n at indices 0..n-1 and the hub last."""
    _need(n >= 3, "wheel needs a rim of n >= 3 vertices")
    rim = [(i, (i + 1) % n) for i in range(n)]
    spokes = [(i, n) for i in range(n)]
    return make_graph(n + 1, rim + spokes, ["u"] * n + ["v"])


def complete_bipartite(p: int, q: int) -> Graph:
    """K_{p,q} with part A at 0..p-1 and part B at p..p+q-1."""
    _need(p >= 1 and q >= 1, "complete bipartite graph needs p, q >= 1")
    edges = [(i, p + j) for i in range(p) for j in range(q)]
    return make_graph(p + q, edges, ["a"] * p + ["b"] * q)


def complete_tripartite(p: int, q: int, r: int) -> Graph:
    """K(p,q,r) with parts u (size p), v (size q), w (size r) in that order."""
    _need(1 <= p <= q <= r and q >= 2, "complete tripartite graph needs 1 <= p <= q <= r and q >= 2")
    parts = [range(0, p), range(p, p + q), range(p + q, p + q + r)]
    edges = [(a, b) for i in range(3) for j in range(i + 1, 3) for a in parts[i] for b in parts[j]]
    return make_graph(p + q + r, edges, ["u"] * p + ["v"] * q + ["w"] * r)


def coconut_tree(m: int, t: int) -> Graph:
    """CT(m,t): path v_1..v_m (indices 0..m-1) with t leaves x_j hung on v_m."""
    _need(m >= 2 and t >= 1, "coconut tree needs m >= 2 and t >= 1")
    edges = [(i, i + 1) for i in range(m - 1)] + [(m - 1, m + j) for j in range(t)]
    return make_graph(m + t, edges, ["v"] * m + ["x"] * t)


FAMILIES = {
    "path": path,
    "cycle": cycle,
    "star": star,
    "wheel": wheel,
    "complete_bipartite": complete_bipartite,
    "complete_tripartite": complete_tripartite,
    "coconut_tree": coconut_tree,
}


def family(kind: str, *params: int) -> Graph:
    """Build a named family member, e.g. ``family("wheel", 4)``."""
    try:
        build = FAMILIES[kind]
    except KeyError:
        raise ValueError(f"unknown family {kind!r}; choose from {sorted(FAMILIES)}") from None
    return build(*params)


def join_empty(g: Graph, n: int) -> Graph:
    """G joined with n new pairwise non-adjacent vertices (G ∨ O_n).

    Old vertices keep their indices; the new ones follow them.
    """
    _need(n >= 1, "join needs n >= 1 new vertices")
    m = g.order
    edges = list(g.edges) + [(u, m + j) for u in range(m) for j in range(n)]
    old_roles = list(g.roles) if g.roles is not None else ["g"] * m
    return make_graph(m + n, edges, old_roles + ["o"] * n)
