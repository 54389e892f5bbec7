"""Exact search for local antimagic labelings with few colors.

The generic search assigns labels edge by edge (high-degree edges first)
and prunes as soon as a finished vertex clashes with a finished neighbor,
more than ``c`` distinct sums appear, or an unfinished vertex can no longer
reach any of the already fixed sums.  Two colors get a dedicated search:
the two sums are forced by the bipartition, so each vertex just has to hit
a known target.
"""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .graphs import Graph
from .labeling import (
    EdgeLabeling,
    chromatic_number,
    pendant_lower_bound,
    two_color_certificate_check,
    verify_local_antimagic,
)


@dataclass(frozen=True)
class SearchLimits:
    """Budgets for one search; ``None`` means unlimited."""

    max_edges: int = 12
    time_budget: float | None = 600.0
    node_budget: int | None = None
    workers: int = 1

    def __post_init__(self):
        if self.max_edges < 1 or self.workers < 1:
            raise ValueError("max_edges and workers must be positive")
        if self.time_budget is not None and self.time_budget <= 0:
            raise ValueError("time_budget must be positive")
        if self.node_budget is not None and self.node_budget <= 0:
            raise ValueError("node_budget must be positive")


@dataclass(frozen=True)
class SearchOutcome:
    """Result of a feasibility search for at most ``c`` colors.

    ``exhausted`` is True when the search space was fully explored (or a
    witness was found), i.e. when the answer is definitive.
    """

    witness: EdgeLabeling | None
    exhausted: bool
    nodes: int = 0
    gated: bool = False

    @property
    def feasible(self) -> bool | None:
        if self.witness is not None:
            return True
        return False if self.exhausted else None


@dataclass(frozen=True)
class ChiLaCertificate:
    """Bracket ``lower <= χ_la <= upper`` with a witness for ``upper``."""

    lower: int
    upper: int | None
    witness: EdgeLabeling | None
    exhausted: bool

    @property
    def value(self) -> int | None:
        return self.lower if self.upper == self.lower else None


class _BudgetHit(Exception):
    pass


class _Budget:
    def __init__(self, limits: SearchLimits):
        self.limits = limits
        self.nodes = 0
        self.deadline = None if limits.time_budget is None else time.monotonic() + limits.time_budget

    def tick(self):
        self.nodes += 1
        if self.limits.node_budget is not None and self.nodes > self.limits.node_budget:
            raise _BudgetHit
        if self.deadline is not None and self.nodes % 1024 == 0 and time.monotonic() > self.deadline:
            raise _BudgetHit


def _require_connected(graph: Graph):
    if not graph.is_connected():
        raise ValueError("graph must be connected")


def edge_order(graph: Graph) -> list[int]:
    """Edge indices by decreasing endpoint degree sum, then canonical index."""
    deg = graph.degrees
    return sorted(range(graph.size), key=lambda i: (-(deg[graph.edges[i][0]] + deg[graph.edges[i][1]]), i))


def _generic_search(graph: Graph, c: int, budget: _Budget, first_label: int | None = None) -> list[int] | None:
    q, n = graph.size, graph.order
    order = edge_order(graph)
    ends = graph.edges
    nbrs = graph.neighbors
    remaining = list(graph.degrees)
    partial = [0] * n
    labels = [0] * q
    used = [False] * (q + 2)
    color_use: dict[int, int] = {}

    def reachable(v: int) -> bool:
        # with c colors fixed, v must still be able to land on one of them
        r = remaining[v]
        if r == 0 or len(color_use) < c:
            return True
        free = [x for x in range(1, q + 1) if not used[x]]
        lo = partial[v] + sum(free[:r])
        hi = partial[v] + sum(free[-r:])
        return any(lo <= s <= hi for s in color_use)

    def finish(v: int) -> bool:
        s = partial[v]
        for w in nbrs[v]:
            if remaining[w] == 0 and partial[w] == s:
                return False
        if s not in color_use and len(color_use) >= c:
            return False
        return True

    def step(pos: int) -> bool:
        if pos == q:
            return True
        e = order[pos]
        u, v = ends[e]
        candidates = range(1, q + 1) if pos or first_label is None else (first_label,)
        for lab in candidates:
            if used[lab]:
                continue
            budget.tick()
            used[lab] = True
            labels[e] = lab
            partial[u] += lab
            partial[v] += lab
            remaining[u] -= 1
            remaining[v] -= 1
            done = []
            ok = True
            for x in (u, v):
                if remaining[x] == 0:
                    if finish(x):
                        color_use[partial[x]] = color_use.get(partial[x], 0) + 1
                        done.append(x)
                    else:
                        ok = False
                        break
            if ok:
                ok = reachable(u) and reachable(v)
            if ok and step(pos + 1):
                return True
            for x in done:
                s = partial[x]
                color_use[s] -= 1
                if not color_use[s]:
                    del color_use[s]
            remaining[u] += 1
            remaining[v] += 1
            partial[u] -= lab
            partial[v] -= lab
            used[lab] = False
        return False

    return list(labels) if step(0) else None


def _two_color_search(graph: Graph, budget: _Budget) -> list[int] | None:
    """Hit the forced sums: the larger side gets x, the smaller side y."""
    targets = two_color_certificate_check(graph)
    if not targets:
        return None
    t = targets[0]
    first, second = graph.bipartition()
    big = first if len(first) == t.X else second
    q = graph.size
    need = [t.y] * graph.order
    for v in big:
        need[v] = t.x
    open_edges = [list(inc) for inc in graph.incidence]
    labels = [0] * q
    free = set(range(1, q + 1))

    def feasible(v: int) -> bool:
        r = len(open_edges[v])
        if r == 0:
            return need[v] == 0
        pool = sorted(free)
        return sum(pool[:r]) <= need[v] <= sum(pool[-r:]) if len(pool) >= r else False

    def combos(r: int, total: int, pool: list[int], start: int = 0):
        if r == 0:
            if total == 0:
                yield ()
            return
        for i in range(start, len(pool) - r + 1):
            x = pool[i]
            if x * r + r * (r - 1) // 2 > total:
                break
            if sum(pool[-(r - 1):]) + x < total if r > 1 else x < total:
                continue
            for rest in combos(r - 1, total - x, pool, i + 1):
                yield (x,) + rest

    def step() -> bool:
        pending = [v for v in range(graph.order) if open_edges[v]]
        if not pending:
            return True
        v = min(pending, key=lambda x: (len(open_edges[x]), x))
        edges = list(open_edges[v])
        pool = sorted(free)
        for combo in combos(len(edges), need[v], pool):
            for perm in itertools.permutations(combo):
                budget.tick()
                others = []
                for e, lab in zip(edges, perm):
                    a, b = graph.edges[e]
                    w = b if a == v else a
                    labels[e] = lab
                    free.discard(lab)
                    need[v] -= lab
                    need[w] -= lab
                    open_edges[v].remove(e)
                    open_edges[w].remove(e)
                    others.append(w)
                if all(feasible(w) for w in set(others)) and step():
                    return True
                for e, lab, w in zip(edges, perm, others):
                    free.add(lab)
                    need[v] += lab
                    need[w] += lab
                    open_edges[v].append(e)
                    open_edges[w].append(e)
                for x in {v, *others}:
                    open_edges[x].sort()
        return False

    return list(labels) if step() else None


def _solve_branch(args) -> tuple[list[int] | None, bool, int]:
    graph, c, limits, first_label = args
    budget = _Budget(limits)
    try:
        return _generic_search(graph, c, budget, first_label), True, budget.nodes
    except _BudgetHit:
        return None, False, budget.nodes


def exists_labeling_with_colors(graph: Graph, c: int, limits: SearchLimits | None = None) -> SearchOutcome:
    """Search for a local antimagic labeling with at most c colors."""
    limits = limits or SearchLimits()
    _require_connected(graph)
    if c < 2:
        raise ValueError("at least 2 colors are needed")
    if graph.size > limits.max_edges:
        raise ValueError(f"{graph.size} edges exceed the search budget of {limits.max_edges}")
    if c == 2:
        if not two_color_certificate_check(graph):
            return SearchOutcome(None, True, 0, gated=True)
        budget = _Budget(limits)
        try:
            found = _two_color_search(graph, budget)
        except _BudgetHit:
            return SearchOutcome(None, False, budget.nodes)
        return _outcome(graph, found, c, budget.nodes)

    if limits.workers > 1:
        tasks = [(graph, c, limits, lab) for lab in range(1, graph.size + 1)]
        with ProcessPoolExecutor(max_workers=limits.workers) as pool:
            results = list(pool.map(_solve_branch, tasks))
        nodes = sum(r[2] for r in results)
        found = next((r[0] for r in results if r[0] is not None), None)
        if found is None and not all(r[1] for r in results):
            return SearchOutcome(None, False, nodes)
        return _outcome(graph, found, c, nodes)

    found, finished, nodes = _solve_branch((graph, c, limits, None))
    if not finished:
        return SearchOutcome(None, False, nodes)
    return _outcome(graph, found, c, nodes)


def _outcome(graph: Graph, found: list[int] | None, c: int, nodes: int) -> SearchOutcome:
    if found is None:
        return SearchOutcome(None, True, nodes)
    labeling = EdgeLabeling.on(graph, found)
    report = verify_local_antimagic(graph, labeling)
    if not report.valid or report.color_count > c:
        raise AssertionError("search returned a labeling that does not verify")
    return SearchOutcome(labeling, True, nodes)


def lower_bound(graph: Graph) -> int:
    """max(χ(G), pendant bound, 3 when no 2-coloring can exist)."""
    bound = max(2, chromatic_number(graph), pendant_lower_bound(graph))
    if bound == 2 and not two_color_certificate_check(graph):
        bound = 3
    return bound


def exact_chi_la(graph: Graph, limits: SearchLimits | None = None) -> ChiLaCertificate:
    """χ_la(G) by trying c = lower bound, lower bound + 1, ... until a labeling appears."""
    limits = limits or SearchLimits()
    _require_connected(graph)
    if graph.order == 2:
        raise ValueError("K_2 has no local antimagic labeling")
    if graph.size > limits.max_edges:
        raise ValueError(f"{graph.size} edges exceed the search budget of {limits.max_edges}")
    low = lower_bound(graph)
    proven = low
    all_done = True
    for c in range(low, graph.order + 1):
        out = exists_labeling_with_colors(graph, c, limits)
        if out.witness is not None:
            count = verify_local_antimagic(graph, out.witness).color_count
            return ChiLaCertificate(proven, count, out.witness, all_done)
        if out.exhausted and all_done:
            proven = c + 1
        else:
            all_done = False
    return ChiLaCertificate(proven, None, None, all_done)


def exhaustive_min_colors(graph: Graph) -> int | None:
    """Unpruned reference: minimum color count over all |E|! labelings (None if none is valid)."""
    q = graph.size
    best = None
    edges = graph.edges
    for perm in itertools.permutations(range(1, q + 1)):
        sums = [0] * graph.order
        for (u, v), lab in zip(edges, perm):
            sums[u] += lab
            sums[v] += lab
        if any(sums[u] == sums[v] for u, v in edges):
            continue
        k = len(set(sums))
        if best is None or k < best:
            best = k
    return best


# ---- enumeration of small connected graphs ----------------------------------------

def _refine(n: int, adj: list[int]) -> list[int]:
    color = [bin(adj[v]).count("1") for v in range(n)]
    while True:
        sig = [(color[v], tuple(sorted(color[w] for w in range(n) if adj[v] >> w & 1))) for v in range(n)]
        keys = sorted(set(sig))
        new = [keys.index(s) for s in sig]
        if len(set(new)) == len(set(color)):
            return new
        color = new


def canonical_form(n: int, edges) -> tuple[tuple[int, int], ...]:
    """Lexicographically least edge list over relabelings that respect color refinement."""
    adj = [0] * n
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    color = _refine(n, adj)
    cells = [[v for v in range(n) if color[v] == c] for c in sorted(set(color))]
    best = None
    for parts in itertools.product(*(itertools.permutations(cell) for cell in cells)):
        order = [v for part in parts for v in part]
        pos = {v: i for i, v in enumerate(order)}
        form = tuple(sorted(tuple(sorted((pos[u], pos[v]))) for u, v in edges))
        if best is None or form < best:
            best = form
    return best


def connected_graphs(n: int, max_edges: int | None = None) -> list[Graph]:
    """All connected graphs of order n up to isomorphism (optionally with few edges)."""
    if n < 1 or n > 8:
        raise ValueError("built-in enumeration supports orders 1..8")
    top = n * (n - 1) // 2 if max_edges is None else min(max_edges, n * (n - 1) // 2)
    pairs = list(itertools.combinations(range(n), 2))
    layer = {()}
    found = []
    for e in range(top + 1):
        for form in sorted(layer):
            g = Graph(n, form)
            if g.is_connected():
                found.append(g)
        if e == top:
            break
        nxt = set()
        for form in layer:
            present = set(form)
            for p in pairs:
                if p not in present:
                    nxt.add(canonical_form(n, form + (p,)))
        layer = nxt
    return found


@dataclass
class ScanReport:
    order: int
    colors: int
    total: int = 0
    gated_out: int = 0
    searched: int = 0
    undecided: int = 0
    found: list[tuple[Graph, EdgeLabeling]] = field(default_factory=list)

    @property
    def complete(self) -> bool:
        return self.undecided == 0


def scan_order(n: int, c: int, limits: SearchLimits | None = None, graphs: list[Graph] | None = None) -> ScanReport:
    """Which connected graphs of order n admit a labeling with at most c colors."""
    limits = limits or SearchLimits(max_edges=n * (n - 1) // 2)
    if graphs is None:
        if n > 7:
            raise ValueError("built-in scan supports n <= 7; pass a graph list for larger orders")
        graphs = connected_graphs(n)
    report = ScanReport(n, c)
    for g in graphs:
        if g.order != n or not g.is_connected():
            continue
        report.total += 1
        if g.order == 2:
            report.gated_out += 1
            continue
        if c == 2 and not two_color_certificate_check(g):
            report.gated_out += 1
            continue
        if c < lower_bound(g):
            report.gated_out += 1
            continue
        report.searched += 1
        out = exists_labeling_with_colors(g, c, limits)
        if out.witness is not None:
            report.found.append((g, out.witness))
        elif not out.exhausted:
            report.undecided += 1
    return report
