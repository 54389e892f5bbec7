"""JSON documents for graphs, labelings and matrices, DOT export and graph6 input."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Iterable

import networkx as nx

from .graphs import Graph, make_graph
from .labeling import EdgeLabeling, LabelingMatrix


class DocumentError(ValueError):
    """A JSON document is malformed or inconsistent."""


def graph_to_doc(g: Graph) -> dict[str, Any]:
    doc: dict[str, Any] = {"order": g.order, "edges": [list(e) for e in g.edges]}
    if g.roles is not None:
        roles: dict[str, list[int]] = {}
        for v, role in enumerate(g.roles):
            roles.setdefault(role, []).append(v)
        doc["roles"] = roles
    return doc


def graph_from_doc(doc: Any) -> Graph:
    if not isinstance(doc, dict) or "order" not in doc or "edges" not in doc:
        raise DocumentError("graph document needs 'order' and 'edges'")
    order = doc["order"]
    if not isinstance(order, int) or order < 0:
        raise DocumentError("'order' must be a non-negative integer")
    roles = None
    if doc.get("roles") is not None:
        tags: list[str | None] = [None] * order
        try:
            for role, members in doc["roles"].items():
                for v in members:
                    tags[v] = role
        except (AttributeError, TypeError, IndexError) as exc:
            raise DocumentError(f"bad 'roles' entry: {exc}") from None
        if any(t is None for t in tags):
            raise DocumentError("'roles' must tag every vertex exactly once")
        roles = tags
    try:
        return make_graph(order, doc["edges"], roles)
    except (TypeError, ValueError) as exc:
        raise DocumentError(f"bad 'edges': {exc}") from None


def labeling_to_doc(g: Graph, f: EdgeLabeling, matrix: LabelingMatrix | None = None) -> dict[str, Any]:
    doc: dict[str, Any] = {"graph": graph_to_doc(g), "labels": list(f.labels)}
    if matrix is not None:
        doc["matrix"] = matrix_to_doc(matrix)
    return doc


def labeling_from_doc(doc: Any) -> tuple[Graph, EdgeLabeling]:
    """Read a labeling document.  Label values are not checked here; that is the verifier's job."""
    if not isinstance(doc, dict) or "graph" not in doc or "labels" not in doc:
        raise DocumentError("labeling document needs 'graph' and 'labels'")
    g = graph_from_doc(doc["graph"])
    labels = doc["labels"]
    if not isinstance(labels, list) or not all(isinstance(x, int) for x in labels):
        raise DocumentError("'labels' must be a list of integers")
    if len(labels) != g.size:
        raise DocumentError(f"{len(labels)} labels for {g.size} edges")
    return g, EdgeLabeling.on(g, labels)


def matrix_to_doc(m: LabelingMatrix) -> list[list[int | None]]:
    return m.as_lists()


def matrix_from_doc(rows: Any, bordered: bool = False) -> LabelingMatrix:
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise DocumentError("matrix must be a list of rows")
    if not all(x is None or isinstance(x, int) for r in rows for x in r):
        raise DocumentError("matrix cells must be integers or null")
    try:
        return LabelingMatrix.of(rows, bordered)
    except ValueError as exc:
        raise DocumentError(str(exc)) from None


def read_json(path: str | Path) -> Any:
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path}: not valid JSON ({exc.msg} at line {exc.lineno})") from None


def write_json(path: str | Path, doc: Any):
    Path(path).write_text(json.dumps(doc, indent=1) + "\n")


def to_dot(g: Graph, f: EdgeLabeling | None = None) -> str:
    """Plain DOT text; edges carry their labels and vertices their sums when f is given."""
    lines = ["graph G {"]
    for v in range(g.order):
        name = g.vertex_name(v)
        text = name if f is None else f"{name}\\n{f.sums[v]}"
        lines.append(f'  {v} [label="{text}"];')
    for i, (u, v) in enumerate(g.edges):
        attr = "" if f is None else f' [label="{f.labels[i]}"]'
        lines.append(f"  {u} -- {v}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def graphs_from_graph6(lines: Iterable[str]) -> list[Graph]:
    """Parse graph6 lines; blank lines and ``>>graph6<<`` headers are skipped."""
    out = []
    for line in lines:
        line = line.strip()
        if line.startswith(">>graph6<<"):
            line = line[len(">>graph6<<"):]
        if not line:
            continue
        try:
            h = nx.from_graph6_bytes(line.encode("ascii"))
        except (nx.NetworkXError, ValueError, IndexError) as exc:
            raise DocumentError(f"bad graph6 line {line!r}: {exc}") from None
        out.append(make_graph(h.number_of_nodes(), h.edges()))
    return out


def graph_to_graph6(g: Graph) -> str:
    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from(g.edges)
    return nx.to_graph6_bytes(h, header=False).decode("ascii").strip()
